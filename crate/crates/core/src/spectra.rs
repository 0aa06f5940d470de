//! Transmission spectra over a detuning grid: unwrapped phase, group
//! delay, amplification bands, and drift-matrix stability.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::linalg::Mat4;
use crate::params::{Detunings, SystemParams};
use crate::response::{drift_matrix, output_field, response_general, response_resonant};
use crate::roots::polyroots;
use crate::{math, Error};

/// Fewest grid points a sweep accepts.
pub const MIN_GRID_POINTS: usize = 9;

/// Uniform probe grid in units of `omega_b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// First probe-pump offset, `delta / omega_b`.
    pub start: f64,
    /// Last probe-pump offset, `delta / omega_b`.
    pub stop: f64,
    /// Number of points, at least [`MIN_GRID_POINTS`].
    pub points: usize,
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err(Error::BadGrid("bounds must be finite"));
        }
        if !(self.stop > self.start) {
            return Err(Error::BadGrid("stop must exceed start"));
        }
        if self.points < MIN_GRID_POINTS {
            return Err(Error::GridTooSmall {
                points: self.points,
                min: MIN_GRID_POINTS,
            });
        }
        Ok(())
    }

    /// Grid value at index `k`.
    pub fn at(&self, k: usize) -> f64 {
        self.start + (self.stop - self.start) * (k as f64) / ((self.points - 1) as f64)
    }

    /// Spacing in units of `omega_b`.
    pub fn step(&self) -> f64 {
        (self.stop - self.start) / ((self.points - 1) as f64)
    }
}

/// Which solver evaluates each grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResponseMode {
    /// Closed form; only valid with every pump detuning at `omega_b`.
    Resonant,
    /// 4x4 sideband solve, valid for any detunings.
    General,
}

/// One grid point of a spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRow {
    /// Probe-pump offset in units of `omega_b`.
    pub delta_over_omega_b: f64,
    /// Transmission `t_p`; `None` at a pole.
    pub t_p: Option<Complex64>,
    /// Output quadrature `eps_out`; `None` at a pole.
    pub eps_out: Option<Complex64>,
    /// Unwrapped phase of `eps_out` (rad); `None` at a pole.
    pub phi: Option<f64>,
    /// Group delay (s); `None` where no stencil applies.
    pub tau_g: Option<f64>,
    /// True when the response diverged here.
    pub divergent: bool,
}

/// Spectrum over a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub rows: Vec<SpectrumRow>,
    pub grid: GridSpec,
    /// Phonon frequency used to scale the grid (rad/s).
    pub omega_b: f64,
}

/// Contiguous run of grid points with `|t_p|^2` above a threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Band {
    /// First offset of the run (units of `omega_b`).
    pub lo: f64,
    /// Last offset of the run.
    pub hi: f64,
    /// Offset of the run's maximum.
    pub center: f64,
    /// Peak `|t_p|^2` inside the run.
    pub height: f64,
    /// `hi - lo`.
    pub width: f64,
}

/// Eigenvalues of the drift matrix with summary flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityReport {
    /// Drift-matrix eigenvalues (rad/s), unordered.
    pub eigenvalues: [Complex64; 4],
    /// Largest eigenvalue real part (rad/s).
    pub max_real_part: f64,
    /// True when every eigenvalue decays.
    pub stable: bool,
    /// Smallest pairwise eigenvalue distance (rad/s); zero at an
    /// exceptional-point coalescence.
    pub ep_gap: f64,
}

/// Sweeps the probe response over `grid`, then fills phase and delay.
///
/// Pole errors become divergent rows; any other solver error aborts.
pub fn sweep_spectrum(
    grid: &GridSpec,
    p: &SystemParams,
    det: &Detunings,
    g_eff: Complex64,
    eps_pr: f64,
    mode: ResponseMode,
) -> Result<SpectrumTable, Error> {
    grid.validate()?;
    p.validate()?;
    if !(eps_pr > 0.0) {
        return Err(Error::NegativeDrive("eps_pr"));
    }
    let mut rows = Vec::with_capacity(grid.points);
    for k in 0..grid.points {
        let x = grid.at(k);
        let delta = x * p.omega_b;
        let resp = match mode {
            ResponseMode::Resonant => response_resonant(p, delta - p.omega_b, g_eff, eps_pr),
            ResponseMode::General => response_general(p, det, delta, g_eff, eps_pr),
        };
        let row = match resp {
            Ok(r) => {
                let out = output_field(p.kappa_1, r.a1, eps_pr)?;
                SpectrumRow {
                    delta_over_omega_b: x,
                    t_p: Some(out.t_p),
                    eps_out: Some(out.eps_out),
                    phi: None,
                    tau_g: None,
                    divergent: false,
                }
            }
            Err(Error::Pole { .. }) => SpectrumRow {
                delta_over_omega_b: x,
                t_p: None,
                eps_out: None,
                phi: None,
                tau_g: None,
                divergent: true,
            },
            Err(e) => return Err(e),
        };
        rows.push(row);
    }
    let mut table = SpectrumTable {
        rows,
        grid: *grid,
        omega_b: p.omega_b,
    };
    unwrap_phase(&mut table);
    group_delay(&mut table)?;
    Ok(table)
}

fn wrap_to_pi(mut d: f64) -> f64 {
    let tau = 2.0 * core::f64::consts::PI;
    while d > core::f64::consts::PI {
        d -= tau;
    }
    while d <= -core::f64::consts::PI {
        d += tau;
    }
    d
}

/// Maximal runs of non-divergent rows, as inclusive index ranges.
fn segments(rows: &[SpectrumRow]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, row) in rows.iter().enumerate() {
        match (row.divergent, start) {
            (false, None) => start = Some(k),
            (true, Some(s)) => {
                out.push((s, k - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, rows.len() - 1));
    }
    out
}

/// Fills `phi` with the unwrapped phase of `eps_out`.
///
/// Each divergence-free segment unwraps independently, anchored at the
/// principal value of its first row; consecutive differences are folded
/// into (-pi, pi].
pub fn unwrap_phase(table: &mut SpectrumTable) {
    for (s, e) in segments(&table.rows) {
        let mut prev = match table.rows[s].eps_out {
            Some(q) => q.arg(),
            None => continue,
        };
        table.rows[s].phi = Some(prev);
        for k in (s + 1)..=e {
            let raw = table.rows[k].eps_out.map(|q| q.arg()).unwrap_or(prev);
            let phi = prev + wrap_to_pi(raw - prev);
            table.rows[k].phi = Some(phi);
            prev = phi;
        }
    }
}

/// Fills `tau_g = d phi / d omega_pr` (s) by second-order differences.
///
/// Central stencils in segment interiors; one-sided stencils only at the
/// table boundary. Rows next to a divergent gap and segments shorter than
/// three points keep `tau_g = None`.
pub fn group_delay(table: &mut SpectrumTable) -> Result<(), Error> {
    let n = table.rows.len();
    if n < 3 {
        return Err(Error::GridTooSmall { points: n, min: 3 });
    }
    let h = table.rows[1].delta_over_omega_b - table.rows[0].delta_over_omega_b;
    if !(h > 0.0) {
        return Err(Error::NonuniformGrid);
    }
    for k in 1..n {
        let d = table.rows[k].delta_over_omega_b - table.rows[k - 1].delta_over_omega_b;
        if math::abs(d - h) > 1e-9 * h {
            return Err(Error::NonuniformGrid);
        }
    }
    let h_omega = h * table.omega_b;

    let phi = |rows: &[SpectrumRow], k: usize| rows[k].phi.unwrap();
    for (s, e) in segments(&table.rows) {
        if e - s + 1 < 3 {
            continue;
        }
        for k in s..=e {
            let tau = if k == s {
                if s == 0 {
                    let rows = &table.rows;
                    Some(
                        (-3.0 * phi(rows, s) + 4.0 * phi(rows, s + 1) - phi(rows, s + 2))
                            / (2.0 * h_omega),
                    )
                } else {
                    None
                }
            } else if k == e {
                if e == n - 1 {
                    let rows = &table.rows;
                    Some(
                        (3.0 * phi(rows, e) - 4.0 * phi(rows, e - 1) + phi(rows, e - 2))
                            / (2.0 * h_omega),
                    )
                } else {
                    None
                }
            } else {
                let rows = &table.rows;
                Some((phi(rows, k + 1) - phi(rows, k - 1)) / (2.0 * h_omega))
            };
            table.rows[k].tau_g = tau;
        }
    }
    Ok(())
}

/// Contiguous runs with `|t_p|^2 > threshold`. Divergent rows terminate
/// a run.
pub fn find_amplification_bands(table: &SpectrumTable, threshold: f64) -> Vec<Band> {
    let mut bands = Vec::new();
    let mut run: Option<Band> = None;
    for row in &table.rows {
        let above = row
            .t_p
            .map(|t| t.norm_sqr() > threshold)
            .unwrap_or(false);
        if above {
            let y = row.t_p.unwrap().norm_sqr();
            let x = row.delta_over_omega_b;
            run = Some(match run {
                None => Band {
                    lo: x,
                    hi: x,
                    center: x,
                    height: y,
                    width: 0.0,
                },
                Some(mut b) => {
                    b.hi = x;
                    if y > b.height {
                        b.height = y;
                        b.center = x;
                    }
                    b.width = b.hi - b.lo;
                    b
                }
            });
        } else if let Some(b) = run.take() {
            bands.push(b);
        }
    }
    if let Some(b) = run {
        bands.push(b);
    }
    bands
}

fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let z = Complex64::new(0.0, 0.0);
    let mut out = [[z; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            let mut acc = z;
            for k in 0..4 {
                acc += a[r][k] * b[k][c];
            }
            out[r][c] = acc;
        }
    }
    out
}

fn trace(a: &Mat4) -> Complex64 {
    a[0][0] + a[1][1] + a[2][2] + a[3][3]
}

/// Eigenvalues and stability flags of the drift matrix.
///
/// A matrix with zero off-diagonal entries is read off exactly; otherwise
/// the characteristic polynomial comes from the Faddeev-LeVerrier
/// recurrence on a magnitude-scaled copy.
pub fn drift_eigenvalues(
    p: &SystemParams,
    det: &Detunings,
    g_eff: Complex64,
) -> StabilityReport {
    let m = drift_matrix(p, det, g_eff);

    let mut off = 0.0f64;
    let mut scale = 0.0f64;
    for r in 0..4 {
        for c in 0..4 {
            scale = scale.max(m[r][c].norm());
            if r != c {
                off = off.max(m[r][c].norm());
            }
        }
    }

    let eigenvalues: [Complex64; 4] = if off == 0.0 {
        [m[0][0], m[1][1], m[2][2], m[3][3]]
    } else {
        let inv = 1.0 / scale;
        let mut ms = m;
        for r in 0..4 {
            for c in 0..4 {
                ms[r][c] *= inv;
            }
        }
        // Faddeev-LeVerrier: char poly lambda^4 - c1 l^3 - c2 l^2 - c3 l - c4.
        let mut bmat = ms;
        let c1 = trace(&bmat);
        let mut coeffs_hi = [c1, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)];
        for step in 1..4 {
            let mut shifted = bmat;
            for d in 0..4 {
                shifted[d][d] -= coeffs_hi[step - 1];
            }
            bmat = mat_mul(&ms, &shifted);
            coeffs_hi[step] = trace(&bmat) / ((step + 1) as f64);
        }
        let coeffs = [
            -coeffs_hi[3],
            -coeffs_hi[2],
            -coeffs_hi[1],
            -coeffs_hi[0],
            Complex64::new(1.0, 0.0),
        ];
        let roots = polyroots(&coeffs);
        [
            roots[0] * scale,
            roots[1] * scale,
            roots[2] * scale,
            roots[3] * scale,
        ]
    };

    let mut max_real_part = f64::NEG_INFINITY;
    for ev in &eigenvalues {
        max_real_part = max_real_part.max(ev.re);
    }
    let mut ep_gap = f64::INFINITY;
    for i in 0..4 {
        for j in (i + 1)..4 {
            ep_gap = ep_gap.min((eigenvalues[i] - eigenvalues[j]).norm());
        }
    }
    StabilityReport {
        eigenvalues,
        max_real_part,
        stable: max_real_part < 0.0,
        ep_gap,
    }
}
