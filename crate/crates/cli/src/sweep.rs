//! Parallel one-axis parameter sweeps with a per-value summary.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use rayon::prelude::*;

use crate::config::{set_system_key, RunConfig};
use magnomech_core::spectra::{
    drift_eigenvalues, find_amplification_bands, sweep_spectrum, SpectrumTable,
};

/// One axis of `[system]` keys and the values to visit.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// A `[system]` config key, e.g. `kappa_2_over_2pi_MHz`.
    pub axis: String,
    pub values: Vec<f64>,
}

/// Spectrum summary at one axis value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    /// Peak `|t_p|^2` over the grid; NaN if every row diverged.
    pub max_abs_tp_sq: f64,
    /// Offset (units of `omega_b`) of that peak.
    pub argmax: f64,
    /// Bands above the threshold.
    pub band_count: usize,
    /// Largest group delay (s), if any row had one.
    pub max_tau_g: Option<f64>,
    /// Largest drift eigenvalue real part (rad/s).
    pub max_re_eig: f64,
    pub stable: bool,
    pub divergent_rows: usize,
}

/// Full spectrum plus its summary at one axis value.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub row: SweepRow,
    pub table: SpectrumTable,
}

/// Runs the spectrum at every axis value in parallel. Point order follows
/// `spec.values`, so repeated runs are byte-identical.
pub fn run_sweep(base: &RunConfig, spec: &SweepSpec, threshold: f64) -> Result<Vec<SweepPoint>> {
    {
        let mut probe = base.clone();
        if !set_system_key(&mut probe, &spec.axis, 0.0) {
            bail!("unknown sweep axis `{}`; expected a [system] key", spec.axis);
        }
    }
    if spec.values.is_empty() {
        bail!("sweep needs at least one value");
    }
    spec.values
        .par_iter()
        .map(|&value| -> Result<SweepPoint> {
            let mut cfg = base.clone();
            set_system_key(&mut cfg, &spec.axis, value);
            let wp = cfg.working_point()?;
            let table = sweep_spectrum(
                &cfg.grid,
                &wp.params,
                &wp.det,
                wp.g_eff,
                wp.eps_pr,
                cfg.mode,
            )?;
            let mut max_abs_tp_sq = f64::NAN;
            let mut argmax = f64::NAN;
            let mut max_tau_g: Option<f64> = None;
            let mut divergent_rows = 0usize;
            for row in &table.rows {
                if row.divergent {
                    divergent_rows += 1;
                }
                if let Some(t) = row.t_p {
                    let y = t.norm_sqr();
                    if !(y <= max_abs_tp_sq) {
                        max_abs_tp_sq = y;
                        argmax = row.delta_over_omega_b;
                    }
                }
                if let Some(tau) = row.tau_g {
                    max_tau_g = Some(match max_tau_g {
                        Some(best) => best.max(tau),
                        None => tau,
                    });
                }
            }
            let bands = find_amplification_bands(&table, threshold);
            let report = drift_eigenvalues(&wp.params, &wp.det, wp.g_eff);
            Ok(SweepPoint {
                row: SweepRow {
                    value,
                    max_abs_tp_sq,
                    argmax,
                    band_count: bands.len(),
                    max_tau_g,
                    max_re_eig: report.max_real_part,
                    stable: report.stable,
                    divergent_rows,
                },
                table,
            })
        })
        .collect()
}

/// Summary table as CSV.
pub fn sweep_csv(axis: &str, points: &[SweepPoint]) -> String {
    let mut out = format!(
        "{axis},max_abs_tp_sq,argmax_delta_over_omega_b,band_count,max_tau_g,\
         max_re_eig_rad_per_s,stable,divergent_rows\n"
    );
    for p in points {
        let r = &p.row;
        let _ = write!(out, "{},{},{},{}", r.value, r.max_abs_tp_sq, r.argmax, r.band_count);
        out.push(',');
        if let Some(tau) = r.max_tau_g {
            let _ = write!(out, "{tau}");
        }
        let _ = writeln!(
            out,
            ",{},{},{}",
            r.max_re_eig,
            if r.stable { 1 } else { 0 },
            r.divergent_rows
        );
    }
    out
}
