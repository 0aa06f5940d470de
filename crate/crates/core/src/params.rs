//! System rates, drive parameters, and detuning bookkeeping.
//!
//! Everything here is in angular units (rad/s). Conversion from tabulated
//! `omega/2pi` values belongs to the caller.

use crate::math;
use crate::Error;

/// Reduced Planck constant (J s).
pub const HBAR: f64 = 1.0546e-34;

/// Gyromagnetic ratio of the spin ensemble (rad s^-1 T^-1).
pub const GYRO: f64 = 2.0 * core::f64::consts::PI * 28e9;

/// Kerr ratio below which the linearized model is considered valid.
pub const KERR_RATIO_WEAK: f64 = 0.1;

/// Mode frequencies, damping rates, and couplings (all rad/s).
///
/// `kappa_2` is signed: a negative value models the gain cavity. Every
/// other rate is a positive half width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Probed (passive) cavity frequency.
    pub omega_a1: f64,
    /// Gain cavity frequency.
    pub omega_a2: f64,
    /// Magnon frequency.
    pub omega_m: f64,
    /// Phonon frequency.
    pub omega_b: f64,
    /// Probed cavity decay rate, positive.
    pub kappa_1: f64,
    /// Gain cavity rate, signed; negative means net gain.
    pub kappa_2: f64,
    /// Magnon decay rate, positive.
    pub kappa_m: f64,
    /// Phonon decay rate, positive.
    pub kappa_b: f64,
    /// Photon hopping rate between the cavities.
    pub j: f64,
    /// Cavity-magnon coupling.
    pub g_1: f64,
    /// Single-magnon magnomechanical coupling.
    pub g_2: f64,
    /// Magnon Kerr coefficient.
    pub k_kerr: f64,
}

impl SystemParams {
    /// Rejects rates whose sign the model cannot absorb.
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.omega_b > 0.0) {
            return Err(Error::NonpositiveRate("omega_b"));
        }
        if !(self.kappa_1 > 0.0) {
            return Err(Error::NonpositiveRate("kappa_1"));
        }
        if !(self.kappa_m > 0.0) {
            return Err(Error::NonpositiveRate("kappa_m"));
        }
        if !(self.kappa_b > 0.0) {
            return Err(Error::NonpositiveRate("kappa_b"));
        }
        if self.kappa_2 == 0.0 || !self.kappa_2.is_finite() {
            return Err(Error::NonpositiveRate("kappa_2"));
        }
        if !(self.j >= 0.0) {
            return Err(Error::NegativeDrive("j"));
        }
        if !(self.g_1 >= 0.0) {
            return Err(Error::NegativeDrive("g_1"));
        }
        if !(self.g_2 >= 0.0) {
            return Err(Error::NegativeDrive("g_2"));
        }
        if !(self.k_kerr >= 0.0) {
            return Err(Error::NegativeDrive("k_kerr"));
        }
        Ok(())
    }
}

/// Pump and probe tones (rad/s) with their amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveConfig {
    /// Pump (drive) frequency applied to the magnon mode.
    pub omega_pu: f64,
    /// Probe frequency applied to the first cavity.
    pub omega_pr: f64,
    /// Pump Rabi rate Omega (rad/s), nonnegative.
    pub rabi: f64,
    /// Probe field amplitude epsilon_pr (rad/s), positive for spectra.
    pub eps_pr: f64,
}

/// Detunings of every mode from the pump, plus the probe-pump offset
/// (all rad/s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Detunings {
    /// `omega_a1 - omega_pu`.
    pub delta_a1: f64,
    /// `omega_a2 - omega_pu`.
    pub delta_a2: f64,
    /// Bare magnon detuning `omega_m - omega_pu`.
    pub delta_m: f64,
    /// Kerr-shifted magnon detuning; equals `delta_m` until a working
    /// point fixes the shift.
    pub delta_m_eff: f64,
    /// Probe-pump offset `omega_pr - omega_pu`.
    pub delta: f64,
}

impl Detunings {
    /// Beat offset from the phonon sideband, `delta - omega_b`.
    pub fn lambda(&self, omega_b: f64) -> f64 {
        self.delta - omega_b
    }
}

/// Detunings implied by the mode frequencies and the two tones.
pub fn compute_detunings(params: &SystemParams, drive: &DriveConfig) -> Detunings {
    let delta_m = params.omega_m - drive.omega_pu;
    Detunings {
        delta_a1: params.omega_a1 - drive.omega_pu,
        delta_a2: params.omega_a2 - drive.omega_pu,
        delta_m,
        delta_m_eff: delta_m,
        delta: drive.omega_pr - drive.omega_pu,
    }
}

/// Ferrimagnetic sphere used to count the driven spins.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereGeometry {
    /// Sphere diameter (m).
    pub diameter: f64,
    /// Net spin density (m^-3).
    pub spin_density: f64,
}

/// Spin-count summary for a sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinCount {
    /// Sphere volume (m^3).
    pub volume: f64,
    /// Number of spins `rho V`.
    pub n_spins: f64,
    /// Total spin `(5/2) rho V` for spin-5/2 ions.
    pub total_spin: f64,
}

/// Volume, spin number, and total spin of a sphere.
pub fn spin_count(geom: &SphereGeometry) -> Result<SpinCount, Error> {
    if !(geom.diameter > 0.0) {
        return Err(Error::NonpositiveRate("diameter"));
    }
    if !(geom.spin_density > 0.0) {
        return Err(Error::NonpositiveRate("spin_density"));
    }
    let r = geom.diameter / 2.0;
    let volume = 4.0 / 3.0 * core::f64::consts::PI * r * r * r;
    let n_spins = geom.spin_density * volume;
    Ok(SpinCount {
        volume,
        n_spins,
        total_spin: 2.5 * n_spins,
    })
}

/// Pump Rabi rate `Omega = (sqrt(5)/4) gyro sqrt(N) B0` (rad/s).
pub fn rabi_frequency(b0: f64, n_spins: f64) -> Result<f64, Error> {
    if b0 < 0.0 {
        return Err(Error::NegativeDrive("b0"));
    }
    if !(n_spins > 0.0) {
        return Err(Error::NonpositiveRate("n_spins"));
    }
    Ok(math::sqrt(5.0) / 4.0 * GYRO * math::sqrt(n_spins) * b0)
}

/// Probe amplitude `epsilon_pr = sqrt(2 kappa_1 P / (hbar omega_pr))` (rad/s).
pub fn probe_amplitude(power: f64, kappa_1: f64, omega_pr: f64) -> Result<f64, Error> {
    if power < 0.0 {
        return Err(Error::NegativeDrive("power"));
    }
    if !(kappa_1 > 0.0) {
        return Err(Error::NonpositiveRate("kappa_1"));
    }
    if !(omega_pr > 0.0) {
        return Err(Error::NonpositiveRate("omega_pr"));
    }
    Ok(math::sqrt(2.0 * kappa_1 * power / (HBAR * omega_pr)))
}

/// Ratio of the Kerr shift `K |m|^3` to the drive `Omega`.
///
/// The linearization is trustworthy while this stays below
/// [`KERR_RATIO_WEAK`]. Zero Kerr coefficient or zero magnon amplitude
/// gives 0; a nonzero shift with zero drive has no meaningful scale.
pub fn kerr_validity(k_kerr: f64, m_abs: f64, rabi: f64) -> Result<f64, Error> {
    if rabi < 0.0 {
        return Err(Error::NegativeDrive("rabi"));
    }
    let shift = math::abs(k_kerr) * m_abs * m_abs * m_abs;
    if shift == 0.0 {
        return Ok(0.0);
    }
    if rabi == 0.0 {
        return Err(Error::KerrUndefined);
    }
    Ok(shift / rabi)
}
