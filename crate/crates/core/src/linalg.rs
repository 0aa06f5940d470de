//! Dense 4x4 complex linear algebra: LU solve, inverse, condition number.

use num_complex::Complex64;

pub(crate) type Mat4 = [[Complex64; 4]; 4];
pub(crate) type Vec4 = [Complex64; 4];

/// Row-pivoted LU factorization in place. Returns the pivot permutation,
/// or `None` when a pivot column is exactly zero.
fn factor(a: &mut Mat4) -> Option<[usize; 4]> {
    let mut perm = [0usize, 1, 2, 3];
    for col in 0..4 {
        let mut best = col;
        let mut best_mag = a[col][col].norm();
        for row in (col + 1)..4 {
            let mag = a[row][col].norm();
            if mag > best_mag {
                best = row;
                best_mag = mag;
            }
        }
        if best_mag == 0.0 {
            return None;
        }
        if best != col {
            a.swap(col, best);
            perm.swap(col, best);
        }
        let pivot = a[col][col];
        for row in (col + 1)..4 {
            let factor = a[row][col] / pivot;
            a[row][col] = factor;
            for k in (col + 1)..4 {
                let sub = factor * a[col][k];
                a[row][k] -= sub;
            }
        }
    }
    Some(perm)
}

fn substitute(lu: &Mat4, perm: &[usize; 4], b: &Vec4) -> Vec4 {
    let mut y = [Complex64::new(0.0, 0.0); 4];
    for row in 0..4 {
        let mut acc = b[perm[row]];
        for k in 0..row {
            acc -= lu[row][k] * y[k];
        }
        y[row] = acc;
    }
    let mut x = [Complex64::new(0.0, 0.0); 4];
    for row in (0..4).rev() {
        let mut acc = y[row];
        for k in (row + 1)..4 {
            acc -= lu[row][k] * x[k];
        }
        x[row] = acc / lu[row][row];
    }
    x
}

/// Solves `a x = b`. `None` when the matrix is exactly singular.
pub(crate) fn solve(a: &Mat4, b: &Vec4) -> Option<Vec4> {
    let mut lu = *a;
    let perm = factor(&mut lu)?;
    Some(substitute(&lu, &perm, b))
}

/// Matrix inverse by solving against the identity columns.
pub(crate) fn invert(a: &Mat4) -> Option<Mat4> {
    let mut lu = *a;
    let perm = factor(&mut lu)?;
    let mut inv = [[Complex64::new(0.0, 0.0); 4]; 4];
    for col in 0..4 {
        let mut e = [Complex64::new(0.0, 0.0); 4];
        e[col] = Complex64::new(1.0, 0.0);
        let x = substitute(&lu, &perm, &e);
        for row in 0..4 {
            inv[row][col] = x[row];
        }
    }
    Some(inv)
}

/// Max row sum of entry magnitudes.
pub(crate) fn norm_inf(a: &Mat4) -> f64 {
    let mut best = 0.0f64;
    for row in a {
        let sum: f64 = row.iter().map(|c| c.norm()).sum();
        best = best.max(sum);
    }
    best
}

/// Infinity-norm condition estimate; infinite for singular matrices.
pub(crate) fn cond_inf(a: &Mat4) -> f64 {
    match invert(a) {
        Some(inv) => norm_inf(a) * norm_inf(&inv),
        None => f64::INFINITY,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn solve_matches_known_solution() {
        // Diagonally dominant complex matrix with a chosen solution.
        let a: Mat4 = [
            [c(4.0, 1.0), c(0.5, 0.0), c(0.0, -0.2), c(0.1, 0.1)],
            [c(0.0, 0.3), c(-5.0, 2.0), c(0.4, 0.0), c(0.0, 0.0)],
            [c(0.2, 0.0), c(0.0, 0.1), c(3.0, -1.0), c(0.5, 0.2)],
            [c(0.0, 0.0), c(0.3, -0.3), c(0.0, 0.4), c(6.0, 0.5)],
        ];
        let x_true: Vec4 = [c(1.0, -2.0), c(0.5, 0.5), c(-3.0, 0.0), c(0.0, 1.0)];
        let mut b = [c(0.0, 0.0); 4];
        for row in 0..4 {
            for col in 0..4 {
                b[row] += a[row][col] * x_true[col];
            }
        }
        let x = solve(&a, &b).unwrap();
        for k in 0..4 {
            assert!((x[k] - x_true[k]).norm() < 1e-13, "x[{k}] = {}", x[k]);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a: Mat4 = [
            [c(2.0, 0.0), c(1.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(1.0, -1.0), c(3.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0, 0.0), c(4.0, 0.0), c(1.0, 0.5)],
            [c(0.0, 0.0), c(0.0, 0.0), c(1.0, -0.5), c(5.0, 0.0)],
        ];
        let inv = invert(&a).unwrap();
        for row in 0..4 {
            for col in 0..4 {
                let mut acc = c(0.0, 0.0);
                for k in 0..4 {
                    acc += a[row][k] * inv[k][col];
                }
                let expect = if row == col { 1.0 } else { 0.0 };
                assert!(
                    (acc - c(expect, 0.0)).norm() < 1e-13,
                    "(A A^-1)[{row}][{col}] = {acc}"
                );
            }
        }
    }

    #[test]
    fn singular_matrix_detected() {
        let a: Mat4 = [
            [c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(2.0, 0.0), c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ];
        assert!(solve(&a, &[c(1.0, 0.0); 4]).is_none());
        assert_eq!(cond_inf(&a), f64::INFINITY);
    }

    #[test]
    fn identity_condition_is_one() {
        let mut a = [[c(0.0, 0.0); 4]; 4];
        for k in 0..4 {
            a[k][k] = c(1.0, 0.0);
        }
        assert_eq!(cond_inf(&a), 1.0);
    }
}
