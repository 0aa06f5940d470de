//! Frozen-value checks for the drive and sphere helpers.
//!
//! Reference numbers were evaluated independently (double precision, same
//! formulas) and are pinned here to the last digit.

use magnomech_core::params::{
    compute_detunings, probe_amplitude, rabi_frequency, spin_count, DriveConfig, SphereGeometry,
    SystemParams, GYRO, HBAR,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TAU: f64 = core::f64::consts::TAU;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

#[test]
fn physical_constants() {
    assert_eq!(HBAR, 1.0546e-34);
    assert!(rel(GYRO, TAU * 28e9) < 1e-15);
}

/// 250 um YIG sphere at 4.22e27 spins per m^3.
#[test]
fn sphere_chain_frozen() {
    let geom = SphereGeometry {
        diameter: 250e-6,
        spin_density: 4.22e27,
    };
    let s = spin_count(&geom).unwrap();
    assert!(rel(s.volume, 8.18123086872342e-12) < 1e-12);
    assert!(rel(s.n_spins, 3.4524794266012828e16) < 1e-12);
    assert!(rel(s.total_spin, 8.631198566503206e16) < 1e-12);
}

#[test]
fn total_spin_is_five_halves_density_volume() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5f3e);
    for _ in 0..100_000 {
        let geom = SphereGeometry {
            diameter: rng.gen_range(1e-6..1e-2),
            spin_density: rng.gen_range(1e24..1e29),
        };
        let s = spin_count(&geom).unwrap();
        assert!(rel(s.total_spin, 2.5 * geom.spin_density * s.volume) < 1e-12);
        assert!(rel(s.n_spins, geom.spin_density * s.volume) < 1e-12);
    }
    assert!(spin_count(&SphereGeometry {
        diameter: 0.0,
        spin_density: 4.22e27
    })
    .is_err());
}

/// Rabi rate for the sphere above at a 3.9 nT drive amplitude.
#[test]
fn rabi_frequency_frozen() {
    let n = 3.4524794266012828e16;
    let omega = rabi_frequency(3.9e-9, n).unwrap();
    assert!(rel(omega, 71267753174.42693) < 1e-12);
    // Coarse magnitude check at a rounded spin count.
    let omega_round = rabi_frequency(3.9e-9, 3.45e16).unwrap();
    assert!(rel(omega_round, 7.1e10) < 5e-3);

    assert_eq!(rabi_frequency(0.0, n).unwrap(), 0.0);
    assert!(rabi_frequency(-1e-9, n).is_err());
    // Square-root scaling in the spin count: quadrupling doubles the rate.
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a2b);
    for _ in 0..1000 {
        let n = rng.gen_range(1e10..1e20);
        let b0 = rng.gen_range(0.0..1e-6);
        let one = rabi_frequency(b0, n).unwrap();
        let four = rabi_frequency(b0, 4.0 * n).unwrap();
        assert!(rel(four, 2.0 * one) < 1e-12 || (one == 0.0 && four == 0.0));
    }
}

/// 1 fW probe into a 2pi*2 MHz cavity line at 2pi*10.01 GHz.
#[test]
fn probe_amplitude_frozen() {
    let eps = probe_amplitude(1e-15, TAU * 2e6, TAU * 10.01e9).unwrap();
    assert!(rel(eps, 61555813.25327557) < 1e-12);

    assert_eq!(probe_amplitude(0.0, TAU * 2e6, TAU * 10.01e9).unwrap(), 0.0);
    assert!(probe_amplitude(-1e-15, TAU * 2e6, TAU * 10.01e9).is_err());
    assert!(probe_amplitude(1e-15, TAU * 2e6, 0.0).is_err());
    // Square-root scaling in power.
    let mut rng = ChaCha8Rng::seed_from_u64(0x3c4d);
    for _ in 0..1000 {
        let p = rng.gen_range(1e-18..1e-9);
        let one = probe_amplitude(p, TAU * 2e6, TAU * 10.01e9).unwrap();
        let four = probe_amplitude(4.0 * p, TAU * 2e6, TAU * 10.01e9).unwrap();
        assert!(rel(four, 2.0 * one) < 1e-12);
    }
}

#[test]
fn detunings_follow_the_two_tones() {
    let mhz = TAU * 1e6;
    let p = SystemParams {
        omega_a1: 10_000.0 * mhz,
        omega_a2: 10_000.0 * mhz,
        omega_m: 10_000.0 * mhz,
        omega_b: 10.0 * mhz,
        kappa_1: 2.0 * mhz,
        kappa_2: -1.0 * mhz,
        kappa_m: 0.1 * mhz,
        kappa_b: 1e-4 * mhz,
        j: 2.0 * mhz,
        g_1: 1.0 * mhz,
        g_2: 0.0,
        k_kerr: 0.0,
    };
    p.validate().unwrap();
    let drive = DriveConfig {
        omega_pu: 9_990.0 * mhz,
        omega_pr: 10_001.0 * mhz,
        rabi: 0.0,
        eps_pr: 1.0,
    };
    let det = compute_detunings(&p, &drive);
    assert!(rel(det.delta_a1, 10.0 * mhz) < 1e-12);
    assert!(rel(det.delta_a2, 10.0 * mhz) < 1e-12);
    assert!(rel(det.delta_m, 10.0 * mhz) < 1e-12);
    assert_eq!(det.delta_m, det.delta_m_eff);
    assert!(rel(det.delta, 11.0 * mhz) < 1e-12);
    // Probe sits one cavity linewidth above the sideband.
    assert!(rel(det.lambda(p.omega_b), 1.0 * mhz) < 1e-12);
}

#[test]
fn validate_rejects_nonpositive_rates() {
    let mhz = TAU * 1e6;
    let good = SystemParams {
        omega_a1: 10_000.0 * mhz,
        omega_a2: 10_000.0 * mhz,
        omega_m: 10_000.0 * mhz,
        omega_b: 10.0 * mhz,
        kappa_1: 2.0 * mhz,
        kappa_2: -1.0 * mhz,
        kappa_m: 0.1 * mhz,
        kappa_b: 1e-4 * mhz,
        j: 0.0,
        g_1: 0.0,
        g_2: 0.0,
        k_kerr: 0.0,
    };
    good.validate().unwrap();

    let mut bad = good;
    bad.kappa_1 = 0.0;
    assert!(bad.validate().is_err());
    bad = good;
    bad.omega_b = -1.0;
    assert!(bad.validate().is_err());
    bad = good;
    bad.j = -1.0 * mhz;
    assert!(bad.validate().is_err());
    // Gain is a sign, not an error.
    bad = good;
    bad.kappa_2 = -5.0 * mhz;
    assert!(bad.validate().is_ok());
}
