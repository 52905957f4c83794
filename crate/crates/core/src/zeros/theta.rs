//! Riemann–Siegel theta function and Gram points.

use core::f64::consts::PI;

use crate::{Error, Result};

/// Smallest height at which the asymptotic theta series is used.
pub const THETA_MIN_HEIGHT: f64 = 10.0;

/// θ(t) = (t/2)ln(t/2π) − t/2 − π/8 + 1/(48t) + 7/(5760t³) + 31/(80640t⁵).
///
/// The first omitted term is 127/(430080 t⁷), so the truncation error is
/// below 3·10⁻¹¹ for every `t ≥ 10`.
pub fn rs_theta(t: f64) -> Result<f64> {
    check_height(t)?;
    Ok(theta_unchecked(t))
}

pub(crate) fn check_height(t: f64) -> Result<()> {
    if t >= THETA_MIN_HEIGHT && t.is_finite() {
        Ok(())
    } else {
        Err(Error::HeightBelowRange {
            t,
            min: THETA_MIN_HEIGHT,
        })
    }
}

#[inline]
pub(crate) fn theta_unchecked(t: f64) -> f64 {
    let r = 1.0 / t;
    let r2 = r * r;
    0.5 * t * libm::log(t / (2.0 * PI)) - 0.5 * t - PI / 8.0
        + r * (1.0 / 48.0 + r2 * (7.0 / 5760.0 + r2 * (31.0 / 80640.0)))
}

/// dθ/dt from the same truncated series.
#[inline]
pub(crate) fn theta_derivative(t: f64) -> f64 {
    let r2 = 1.0 / (t * t);
    0.5 * libm::log(t / (2.0 * PI))
        - r2 * (1.0 / 48.0 + r2 * (21.0 / 5760.0 + r2 * (155.0 / 80640.0)))
}

/// The Gram point g_n, i.e. the solution of θ(g_n) = nπ, for n ≥ 0.
///
/// θ is convex and increasing above 2π, so Newton's method started to the
/// right of the root decreases monotonically onto it.
pub fn gram_point(n: u64) -> f64 {
    let target = n as f64 * PI;
    let mut t =
        (2.0 * PI * core::f64::consts::E * core::f64::consts::E).max(2.0 * target + PI / 4.0) + 1.0;
    for _ in 0..200 {
        let step = (theta_unchecked(t) - target) / theta_derivative(t);
        t -= step;
        if libm::fabs(step) <= 1e-13 * t {
            break;
        }
    }
    t
}

/// Newton refinement of g_n from a nearby starting point (used when walking
/// consecutive Gram points).
pub(crate) fn gram_point_from(n: u64, guess: f64) -> f64 {
    let target = n as f64 * PI;
    let mut t = guess.max(THETA_MIN_HEIGHT);
    for _ in 0..100 {
        let step = (theta_unchecked(t) - target) / theta_derivative(t);
        t -= step;
        if libm::fabs(step) <= 1e-13 * t {
            return t;
        }
    }
    gram_point(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn theta_at_100_matches_log_gamma_value() {
        // arg Γ(1/4 + 50i) − 50 ln π, 30-digit evaluation
        assert_abs_diff_eq!(
            rs_theta(100.0).unwrap(),
            87.972_165_231_787_2,
            epsilon = 1e-9
        );
    }

    #[test]
    fn rejects_low_heights() {
        assert!(matches!(
            rs_theta(9.99),
            Err(Error::HeightBelowRange { .. })
        ));
        assert!(rs_theta(f64::NAN).is_err());
        assert!(rs_theta(10.0).is_ok());
    }

    #[test]
    fn first_gram_point() {
        let g0 = gram_point(0);
        assert_abs_diff_eq!(g0, 17.845_599_5, epsilon = 1e-6);
        assert_abs_diff_eq!(rs_theta(g0).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn theta_strictly_increasing() {
        let mut t = 10.0;
        while t < 5000.0 {
            assert!(theta_unchecked(t + 1.0) > theta_unchecked(t));
            t += 7.3;
        }
    }

    #[test]
    fn gram_walk_matches_direct() {
        let mut g = gram_point(0);
        for n in 1..200u64 {
            g = gram_point_from(n, g + PI / theta_derivative(g));
            assert_abs_diff_eq!(g, gram_point(n), epsilon = 1e-9);
        }
    }
}
