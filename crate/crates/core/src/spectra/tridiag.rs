//! Eigenvalues of a real symmetric tridiagonal matrix by implicit-shift QL.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Iteration cap per eigenvalue.
pub const MAX_SWEEPS: usize = 50;

/// All eigenvalues of the symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal, in ascending order.
///
/// Uses QL sweeps with Wilkinson-style implicit shifts; an eigenvalue that
/// needs more than [`MAX_SWEEPS`] sweeps is reported as an error.
pub fn tridiagonal_eigenvalues(diag: &[f64], offdiag: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if offdiag.len() + 1 != n.max(1) || (n == 0 && !offdiag.is_empty()) {
        return Err(Error::TridiagonalShape {
            diag: n,
            offdiag: offdiag.len(),
        });
    }
    let mut d = diag.to_vec();
    let mut e = Vec::with_capacity(n);
    e.extend_from_slice(offdiag);
    e.push(0.0);

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = libm::fabs(d[m]) + libm::fabs(d[m + 1]);
                if libm::fabs(e[m]) + dd == dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(Error::NoConvergence(l));
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = libm::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + libm::copysign(r, g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = libm::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use approx::assert_abs_diff_eq;

    #[test]
    fn one_by_one() {
        assert_eq!(tridiagonal_eigenvalues(&[3.5], &[]).unwrap(), vec![3.5]);
    }

    #[test]
    fn two_by_two() {
        let ev = tridiagonal_eigenvalues(&[0.0, 0.0], &[1.0]).unwrap();
        assert_abs_diff_eq!(ev[0], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(ev[1], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn empty_and_shape_errors() {
        assert!(tridiagonal_eigenvalues(&[], &[]).unwrap().is_empty());
        assert!(matches!(
            tridiagonal_eigenvalues(&[1.0, 2.0], &[]),
            Err(Error::TridiagonalShape {
                diag: 2,
                offdiag: 0
            })
        ));
        assert!(tridiagonal_eigenvalues(&[1.0], &[1.0]).is_err());
    }

    #[test]
    fn free_chain_closed_form() {
        // diag 0, offdiag 1: eigenvalues 2 cos(kπ/(n+1))
        let n = 24;
        let ev = tridiagonal_eigenvalues(&vec![0.0; n], &vec![1.0; n - 1]).unwrap();
        for (k, v) in ev.iter().enumerate() {
            let exact = -2.0 * libm::cos((k + 1) as f64 * core::f64::consts::PI / (n + 1) as f64);
            assert_abs_diff_eq!(*v, exact, epsilon = 1e-13);
        }
    }

    #[test]
    fn already_diagonal() {
        let ev = tridiagonal_eigenvalues(&[3.0, -1.0, 2.0], &[0.0, 0.0]).unwrap();
        assert_eq!(ev, vec![-1.0, 2.0, 3.0]);
    }
}
