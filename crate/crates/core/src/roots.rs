//! Simultaneous-iteration root finding for low-degree complex polynomials.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::math;

/// Horner evaluation; `coeffs` run from the constant term up.
fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn eval_deriv(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, &c) in coeffs.iter().enumerate().skip(1).rev() {
        acc = acc * z + c * (k as f64);
    }
    acc
}

/// All complex roots of the polynomial with coefficients `coeffs`
/// (constant term first, leading coefficient last and nonzero).
///
/// Weierstrass simultaneous iteration on a rescaled variable, finished by
/// a few Newton steps per root. Intended for degree <= 4; roots are
/// returned in no particular order.
pub(crate) fn polyroots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    debug_assert!(n >= 1 && coeffs[n].norm() > 0.0);
    if n == 1 {
        return alloc::vec![-coeffs[0] / coeffs[1]];
    }

    // Monic form.
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|&c| c / lead).collect();

    // Rescale z = s w so the iterate magnitudes are O(1).
    let mut s: f64 = 0.0;
    for k in 0..n {
        let m = monic[k].norm();
        if m > 0.0 {
            s = s.max(math::powf(m, 1.0 / ((n - k) as f64)));
        }
    }
    if s == 0.0 {
        return alloc::vec![Complex64::new(0.0, 0.0); n];
    }
    let mut scaled: Vec<Complex64> = Vec::with_capacity(n + 1);
    for (k, &c) in monic.iter().enumerate() {
        scaled.push(c * math::powf(s, (k as f64) - (n as f64)));
    }

    let seed = Complex64::new(0.4, 0.9);
    let mut w: Vec<Complex64> = Vec::with_capacity(n);
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        acc *= seed;
        w.push(acc);
    }

    for _ in 0..200 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= w[i] - w[j];
                }
            }
            if denom.norm() == 0.0 {
                // Collided iterates; nudge apart and retry next pass.
                w[i] += Complex64::new(1e-8, 1e-8);
                moved = f64::INFINITY;
                continue;
            }
            let step = eval(&scaled, w[i]) / denom;
            w[i] -= step;
            moved = moved.max(step.norm() / (1.0 + w[i].norm()));
        }
        if moved <= 1e-15 {
            break;
        }
    }

    // Multiple roots converge linearly under Newton (factor (m-1)/m), so
    // give the polish enough iterations to reach the conditioning floor.
    for wi in w.iter_mut() {
        for _ in 0..24 {
            let d = eval_deriv(&scaled, *wi);
            if d.norm() < 1e-300 {
                break;
            }
            let step = eval(&scaled, *wi) / d;
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            if step.norm() <= 1e-15 * (1.0 + wi.norm()) {
                *wi -= step;
                break;
            }
            *wi -= step;
        }
    }

    w.into_iter().map(|wi| wi * s).collect()
}
