//! Linear probe response of the four coupled modes about a working point.
//!
//! Two equivalent solvers: a closed form valid when every mode sits on the
//! common resonance (all pump detunings equal to `omega_b`), and a general
//! 4x4 solve in the sideband basis. Both hand back the probe-frequency
//! amplitudes; the transmitted field follows from input-output theory.

use num_complex::Complex64;

use crate::linalg::{self, Mat4, Vec4};
use crate::params::{Detunings, SystemParams};
use crate::Error;

/// Condition-number ceiling; larger means the response is treated as a pole.
pub const POLE_COND_MAX: f64 = 1e14;

/// Probe-frequency amplitudes of the four modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponseAmplitudes {
    /// Probed cavity sideband amplitude `a_1+`.
    pub a1: Complex64,
    /// Gain cavity sideband amplitude `a_2+`.
    pub a2: Complex64,
    /// Magnon sideband amplitude `m_+`.
    pub m: Complex64,
    /// Phonon sideband amplitude `b_+`.
    pub b: Complex64,
}

/// Transmitted probe field at the first cavity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutputField {
    /// Output quadrature `eps_out = 2 kappa_1 a_1+ / eps_pr`.
    pub eps_out: Complex64,
    /// Transmission coefficient `t_p = 1 - eps_out`.
    pub t_p: Complex64,
}

/// Closed-form response on the common resonance.
///
/// `lambda = delta - omega_b` is the offset of the probe-pump beat from
/// the phonon sideband (rad/s). Valid when
/// `Delta_a1 = Delta_a2 = delta_m_eff = omega_b`.
pub fn response_resonant(
    p: &SystemParams,
    lambda: f64,
    g_eff: Complex64,
    eps_pr: f64,
) -> Result<ResponseAmplitudes, Error> {
    p.validate()?;
    let il = Complex64::new(0.0, lambda);
    let inner = Complex64::new(p.kappa_b, 0.0) - il;
    let mech = Complex64::new(p.kappa_m, 0.0) - il + g_eff.norm_sqr() / inner;
    let hop = Complex64::new(p.kappa_2, 0.0) - il;

    let mut den = Complex64::new(p.kappa_1, 0.0) - il;
    let mut scale = den.norm();
    let hop_term = p.j * p.j / hop;
    den += hop_term;
    scale += hop_term.norm();
    let mag_term = if p.g_1 != 0.0 {
        if mech.norm() == 0.0 {
            return Err(Error::Pole {
                delta: lambda + p.omega_b,
                cond: f64::INFINITY,
            });
        }
        p.g_1 * p.g_1 / mech
    } else {
        Complex64::new(0.0, 0.0)
    };
    den += mag_term;
    scale += mag_term.norm();

    if den.norm() * POLE_COND_MAX <= scale {
        let cond = if den.norm() == 0.0 {
            f64::INFINITY
        } else {
            scale / den.norm()
        };
        return Err(Error::Pole {
            delta: lambda + p.omega_b,
            cond,
        });
    }

    let a1 = eps_pr / den;
    let a2 = -Complex64::i() * p.j * a1 / hop;
    let m = if p.g_1 != 0.0 {
        -Complex64::i() * p.g_1 * a1 / mech
    } else {
        Complex64::new(0.0, 0.0)
    };
    let b = -Complex64::i() * g_eff.conj() * m / inner;
    Ok(ResponseAmplitudes { a1, a2, m, b })
}

/// Coefficient matrix of the sideband system at probe-pump offset `delta`.
///
/// Row order (a1, a2, m, b); equals `i delta I + M` with `M` the drift
/// matrix of [`drift_matrix`].
fn sideband_matrix(
    p: &SystemParams,
    det: &Detunings,
    delta: f64,
    g_eff: Complex64,
) -> Mat4 {
    let mut a = drift_matrix(p, det, g_eff);
    for k in 0..4 {
        a[k][k] += Complex64::new(0.0, delta);
    }
    a
}

/// General response at probe-pump offset `delta` (rad/s), for arbitrary
/// detunings and a complex working-point coupling.
pub fn response_general(
    p: &SystemParams,
    det: &Detunings,
    delta: f64,
    g_eff: Complex64,
    eps_pr: f64,
) -> Result<ResponseAmplitudes, Error> {
    p.validate()?;
    let a = sideband_matrix(p, det, delta, g_eff);
    let cond = linalg::cond_inf(&a);
    if !(cond < POLE_COND_MAX) {
        return Err(Error::Pole { delta, cond });
    }
    let rhs: Vec4 = [
        Complex64::new(-eps_pr, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
    ];
    let x = linalg::solve(&a, &rhs).ok_or(Error::Pole {
        delta,
        cond: f64::INFINITY,
    })?;
    Ok(ResponseAmplitudes {
        a1: x[0],
        a2: x[1],
        m: x[2],
        b: x[3],
    })
}

/// Transmitted probe field from the first-cavity amplitude.
pub fn output_field(kappa_1: f64, a1: Complex64, eps_pr: f64) -> Result<OutputField, Error> {
    if !(eps_pr > 0.0) {
        return Err(Error::NegativeDrive("eps_pr"));
    }
    if !(kappa_1 > 0.0) {
        return Err(Error::NonpositiveRate("kappa_1"));
    }
    let eps_out = 2.0 * kappa_1 * a1 / eps_pr;
    Ok(OutputField {
        eps_out,
        t_p: Complex64::new(1.0, 0.0) - eps_out,
    })
}

/// Drift matrix of the fluctuation system, row order (a1, a2, m, b).
///
/// The sideband coefficient matrix at offset `delta` is
/// `i delta I + M`; eigenvalues of `M` with positive real part mark an
/// unstable working point.
pub fn drift_matrix(p: &SystemParams, det: &Detunings, g_eff: Complex64) -> Mat4 {
    let i = Complex64::i();
    let z = Complex64::new(0.0, 0.0);
    [
        [
            -i * det.delta_a1 - p.kappa_1,
            -i * p.j,
            -i * p.g_1,
            z,
        ],
        [-i * p.j, -i * det.delta_a2 - p.kappa_2, z, z],
        [-i * p.g_1, z, -i * det.delta_m_eff - p.kappa_m, -i * g_eff],
        [z, z, -i * g_eff.conj(), -i * p.omega_b - p.kappa_b],
    ]
}
