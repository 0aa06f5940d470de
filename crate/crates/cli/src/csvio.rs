//! Deterministic CSV rendering. Floats use the shortest round-trip
//! representation, lines end in a single newline, and missing values are
//! empty fields, so identical runs produce byte-identical files.

use std::fmt::Write as _;

use magnomech_core::spectra::{SpectrumTable, StabilityReport};
use magnomech_core::steady::SteadyState;

/// Spectrum column order; fixed interface, do not reorder.
pub const SPECTRUM_HEADER: &str =
    "delta_over_omega_b,re_tp,im_tp,abs_tp_sq,re_quad,im_quad,phi_t,tau_g,divergent";

fn push_opt(out: &mut String, v: Option<f64>) {
    if let Some(v) = v {
        let _ = write!(out, "{v}");
    }
}

/// Renders a spectrum table. Divergent rows keep only the offset and the
/// flag; every value field is empty.
pub fn spectrum_csv(table: &SpectrumTable) -> String {
    let mut out = String::with_capacity(64 * (table.rows.len() + 1));
    out.push_str(SPECTRUM_HEADER);
    out.push('\n');
    for row in &table.rows {
        let _ = write!(out, "{}", row.delta_over_omega_b);
        out.push(',');
        push_opt(&mut out, row.t_p.map(|t| t.re));
        out.push(',');
        push_opt(&mut out, row.t_p.map(|t| t.im));
        out.push(',');
        push_opt(&mut out, row.t_p.map(|t| t.norm_sqr()));
        out.push(',');
        push_opt(&mut out, row.eps_out.map(|q| q.re));
        out.push(',');
        push_opt(&mut out, row.eps_out.map(|q| q.im));
        out.push(',');
        push_opt(&mut out, row.phi);
        out.push(',');
        push_opt(&mut out, row.tau_g);
        out.push(',');
        let _ = write!(out, "{}", if row.divergent { 1 } else { 0 });
        out.push('\n');
    }
    out
}

/// Steady-state branches with their closure residuals, ascending
/// occupation.
pub fn steady_csv(states: &[SteadyState], residuals: &[f64]) -> String {
    let mut out = String::from(
        "branch,occupation,re_a1,im_a1,re_a2,im_a2,re_m,im_m,re_b,im_b,\
         re_g_eff,im_g_eff,delta_m_eff_rad_per_s,residual\n",
    );
    for (k, (s, r)) in states.iter().zip(residuals).enumerate() {
        let _ = writeln!(
            out,
            "{k},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            s.occupation,
            s.a1.re,
            s.a1.im,
            s.a2.re,
            s.a2.im,
            s.m.re,
            s.m.im,
            s.b.re,
            s.b.im,
            s.g_eff.re,
            s.g_eff.im,
            s.delta_m_eff,
            r
        );
    }
    out
}

/// Drift-matrix eigenvalues, one per row.
pub fn eigen_csv(report: &StabilityReport) -> String {
    let mut out = String::from("index,re_rad_per_s,im_rad_per_s\n");
    for (k, ev) in report.eigenvalues.iter().enumerate() {
        let _ = writeln!(out, "{k},{},{}", ev.re, ev.im);
    }
    out
}
