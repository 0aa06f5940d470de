//! Steady-state working points of the driven four-mode system.
//!
//! The magnon occupation `x = |m_s|^2` solves a real cubic once both
//! cavities are folded into the magnon equation; each accepted root is
//! back-substituted into the coupled-mode relations.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::params::{Detunings, DriveConfig, SystemParams};
use crate::roots::polyroots;
use crate::Error;

/// Residual ceiling for a trustworthy working point.
pub const STEADY_RESIDUAL_MAX: f64 = 1e-9;

/// Complex-root rejection: `|Im x| < IM_TOL * (1 + |x|)`.
const IM_TOL: f64 = 1e-9;

/// One self-consistent working point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    /// Probed cavity amplitude.
    pub a1: Complex64,
    /// Gain cavity amplitude.
    pub a2: Complex64,
    /// Magnon amplitude.
    pub m: Complex64,
    /// Phonon amplitude.
    pub b: Complex64,
    /// Magnon occupation `|m_s|^2`, the accepted cubic root.
    pub occupation: f64,
    /// Linearized magnomechanical coupling `G = g_2 m_s`.
    pub g_eff: Complex64,
    /// Mechanically shifted magnon detuning (rad/s).
    pub delta_m_eff: f64,
}

/// Cavity chain folded into the magnon equation.
struct Chain {
    /// `i Delta_a2 + kappa_2`.
    d2: Complex64,
    /// `i Delta_a1 + kappa_1 + J^2 / d2`.
    d12: Complex64,
    /// Self-energy `g_1^2 / d12` entering the magnon denominator.
    sigma: Complex64,
}

fn chain(p: &SystemParams, det: &Detunings) -> Result<Chain, Error> {
    let d2 = Complex64::new(p.kappa_2, det.delta_a2);
    if d2.norm() == 0.0 {
        return Err(Error::SingularConfiguration);
    }
    let d12 = Complex64::new(p.kappa_1, det.delta_a1) + p.j * p.j / d2;
    if d12.norm() == 0.0 {
        return Err(Error::SingularConfiguration);
    }
    Ok(Chain {
        d2,
        d12,
        sigma: p.g_1 * p.g_1 / d12,
    })
}

/// Strength of the mechanical spring shift: `delta_m_eff = delta_m - eta x`.
fn eta(p: &SystemParams) -> f64 {
    2.0 * p.g_2 * p.g_2 * p.omega_b / (p.omega_b * p.omega_b + p.kappa_b * p.kappa_b)
}

/// Mechanically shifted magnon detuning at occupation `x` (rad/s).
pub fn effective_detuning(p: &SystemParams, det: &Detunings, occupation: f64) -> f64 {
    det.delta_m - eta(p) * occupation
}

/// Linearized magnomechanical coupling `G = g_2 m_s`.
pub fn effective_coupling(g_2: f64, m: Complex64) -> Complex64 {
    g_2 * m
}

fn build_state(p: &SystemParams, det: &Detunings, ch: &Chain, rabi: f64, x: f64) -> SteadyState {
    let delta_m_eff = det.delta_m - eta(p) * x;
    let m = rabi / Complex64::new(p.kappa_m + ch.sigma.re, delta_m_eff + ch.sigma.im);
    let a1 = -Complex64::i() * p.g_1 * m / ch.d12;
    let a2 = -Complex64::i() * p.j * a1 / ch.d2;
    let b = -Complex64::i() * p.g_2 * x / Complex64::new(p.kappa_b, p.omega_b);
    SteadyState {
        a1,
        a2,
        m,
        b,
        occupation: x,
        g_eff: effective_coupling(p.g_2, m),
        delta_m_eff,
    }
}

/// All self-consistent working points, ascending in magnon occupation.
///
/// Zero drive gives the single dark state. With `g_2 = 0` the occupation
/// is the unique linear-response value; otherwise the occupation cubic is
/// solved and every nonnegative real root (with multiplicity) is kept.
pub fn solve_steady_state(
    p: &SystemParams,
    det: &Detunings,
    drive: &DriveConfig,
) -> Result<Vec<SteadyState>, Error> {
    p.validate()?;
    if drive.rabi < 0.0 {
        return Err(Error::NegativeDrive("rabi"));
    }
    if drive.rabi == 0.0 {
        let zero = Complex64::new(0.0, 0.0);
        return Ok(alloc::vec![SteadyState {
            a1: zero,
            a2: zero,
            m: zero,
            b: zero,
            occupation: 0.0,
            g_eff: zero,
            delta_m_eff: det.delta_m,
        }]);
    }

    let ch = chain(p, det)?;
    let e = eta(p);
    let dm = det.delta_m + ch.sigma.im;
    let km = p.kappa_m + ch.sigma.re;

    if e == 0.0 {
        let den = km * km + dm * dm;
        if den == 0.0 {
            return Err(Error::NoSteadyState);
        }
        let x = drive.rabi * drive.rabi / den;
        return Ok(alloc::vec![build_state(p, det, &ch, drive.rabi, x)]);
    }

    let coeffs = [
        Complex64::new(-drive.rabi * drive.rabi, 0.0),
        Complex64::new(km * km + dm * dm, 0.0),
        Complex64::new(-2.0 * e * dm, 0.0),
        Complex64::new(e * e, 0.0),
    ];
    let mut xs: Vec<f64> = polyroots(&coeffs)
        .into_iter()
        .filter(|r| crate::math::abs(r.im) < IM_TOL * (1.0 + r.norm()) && r.re > 0.0)
        .map(|r| r.re)
        .collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if xs.is_empty() {
        return Err(Error::NoSteadyState);
    }
    Ok(xs
        .into_iter()
        .map(|x| build_state(p, det, &ch, drive.rabi, x))
        .collect())
}

/// Worst norm-relative error of the four steady relations.
///
/// The shifted magnon detuning is recomputed from the phonon amplitude, so
/// this checks the closure of the nonlinear system, not the solver's own
/// bookkeeping.
pub fn residual(
    p: &SystemParams,
    det: &Detunings,
    drive: &DriveConfig,
    s: &SteadyState,
) -> f64 {
    let i = Complex64::i();
    let delta_m_eff = det.delta_m + 2.0 * p.g_2 * s.b.re;

    let rhs_a1 = -(i * p.g_1 * s.m + i * p.j * s.a2) / Complex64::new(p.kappa_1, det.delta_a1);
    let rhs_a2 = -i * p.j * s.a1 / Complex64::new(p.kappa_2, det.delta_a2);
    let rhs_m = (drive.rabi - i * p.g_1 * s.a1) / Complex64::new(p.kappa_m, delta_m_eff);
    let rhs_b = -i * p.g_2 * s.m.norm_sqr() / Complex64::new(p.kappa_b, p.omega_b);

    let rel = |lhs: Complex64, rhs: Complex64| (lhs - rhs).norm() / (1.0 + rhs.norm());
    rel(s.a1, rhs_a1)
        .max(rel(s.a2, rhs_a2))
        .max(rel(s.m, rhs_m))
        .max(rel(s.b, rhs_b))
}
