//! Independent reference evaluators used to cross-check the Riemann–Siegel
//! path: Euler–Maclaurin summation for ζ(1/2 + it) and a Stirling-series
//! log-Gamma for θ(t). Nothing here shares code with [`super::riemann_siegel`].

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::sum::NeumaierSum;

/// Number of Bernoulli correction terms in the Euler–Maclaurin tail.
const EM_BERNOULLI_TERMS: usize = 8;

/// B_{2k} / (2k)! for k = 1..=8.
const EM_COEFFS: [f64; EM_BERNOULLI_TERMS] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
];

/// B_{2k} / (2k (2k − 1)) for the Stirling series.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// ζ(1/2 + it) by Euler–Maclaurin summation with N = ⌈10 + |t|⌉ direct terms
/// and eight Bernoulli corrections.
///
/// The direct sum is accumulated with compensated summation. With this N the
/// ratio of successive correction terms is below 1/39, which puts the
/// truncation error far below 10⁻¹² for |t| ≤ 10⁴.
pub fn reference_zeta_half_line(t: f64) -> Complex64 {
    let s = Complex64::new(0.5, t);
    let n_terms = libm::ceil(10.0 + libm::fabs(t)) as u64;
    let nf = n_terms as f64;

    let mut re = NeumaierSum::new();
    let mut im = NeumaierSum::new();
    for k in 1..n_terms {
        let kf = k as f64;
        let mag = 1.0 / libm::sqrt(kf);
        let phase = -t * libm::log(kf);
        re.add(mag * libm::cos(phase));
        im.add(mag * libm::sin(phase));
    }
    let direct = Complex64::new(re.value(), im.value());

    let ln_n = libm::log(nf);
    let n_pow_neg_s = (-s * ln_n).exp();
    let one = Complex64::new(1.0, 0.0);
    let integral = n_pow_neg_s * nf / (s - one);
    let half = 0.5 * n_pow_neg_s;

    // term_k = B_{2k}/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}
    let mut rising = s;
    let mut power = n_pow_neg_s / nf;
    let mut tail = Complex64::new(0.0, 0.0);
    for (k, coeff) in EM_COEFFS.iter().enumerate() {
        tail += rising * power * *coeff;
        let a = 2.0 * k as f64 + 1.0;
        rising = rising * (s + a) * (s + (a + 1.0));
        power /= nf * nf;
    }

    direct + integral + half + tail
}

/// ln Γ(z) for Re z > 0, on the branch continuous from the positive real axis.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    const SHIFT: usize = 10;
    let mut shift_logs = Complex64::new(0.0, 0.0);
    let mut w = z;
    for _ in 0..SHIFT {
        shift_logs += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING_COEFFS {
        series += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * libm::log(2.0 * PI) + series - shift_logs
}

/// θ(t) = arg Γ(1/4 + it/2) − (t/2) ln π, from [`ln_gamma`].
pub fn reference_theta(t: f64) -> f64 {
    ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * libm::log(PI)
}

/// Hardy's `Z(t)` from the reference evaluators only.
pub fn reference_z(t: f64) -> f64 {
    (Complex64::from_polar(1.0, reference_theta(t)) * reference_zeta_half_line(t)).re
}

/// Zeros of [`reference_z`] in `[lo, hi]`, located by a uniform sign sweep
/// with the given step and refined by bisection to machine resolution.
///
/// Pairs of zeros closer than `step` can be missed; callers compare counts.
pub fn reference_zeros_in(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let mut out = Vec::new();
    if !(hi > lo) || !(step > 0.0) {
        return out;
    }
    let steps = libm::ceil((hi - lo) / step) as usize;
    let mut a = lo;
    let mut za = reference_z(a);
    for i in 1..=steps {
        let b = if i == steps { hi } else { lo + i as f64 * step };
        let zb = reference_z(b);
        if za == 0.0 {
            out.push(a);
        } else if za * zb < 0.0 {
            out.push(bisect(a, b, za));
        }
        a = b;
        za = zb;
    }
    out
}

fn bisect(mut a: f64, mut b: f64, mut za: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let zm = reference_z(m);
        if zm == 0.0 {
            return m;
        }
        if (zm < 0.0) == (za < 0.0) {
            a = m;
            za = zm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn zeta_at_one_half() {
        let z = reference_zeta_half_line(0.0);
        assert_abs_diff_eq!(z.re, -1.460_354_508_809_586_8, epsilon = 1e-12);
        assert_abs_diff_eq!(z.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn vanishes_at_first_zero() {
        assert!(reference_zeta_half_line(14.134_725_141_734_693).norm() < 1e-8);
    }

    #[test]
    fn schwarz_reflection() {
        for t in [3.0, 17.5, 250.0, 1234.5] {
            let a = reference_zeta_half_line(t);
            let b = reference_zeta_half_line(-t);
            assert_abs_diff_eq!(a.re, b.re, epsilon = 1e-12);
            assert_abs_diff_eq!(a.im, -b.im, epsilon = 1e-12);
        }
    }

    #[test]
    fn reference_theta_matches_series_value() {
        assert_abs_diff_eq!(
            reference_theta(100.0),
            87.972_165_231_787_2,
            epsilon = 1e-10
        );
    }

    #[test]
    fn ln_gamma_real_axis() {
        // ln Γ(5) = ln 24, ln Γ(1/2) = ln √π
        assert_abs_diff_eq!(
            ln_gamma(Complex64::new(5.0, 0.0)).re,
            libm::log(24.0),
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(
            ln_gamma(Complex64::new(0.5, 0.0)).re,
            0.5 * libm::log(PI),
            epsilon = 1e-13
        );
    }

    #[test]
    fn hardy_z_is_real() {
        for t in [20.0, 300.0, 4000.0] {
            let v = Complex64::from_polar(1.0, reference_theta(t)) * reference_zeta_half_line(t);
            assert!(libm::fabs(v.im) < 1e-9, "t={t} im={}", v.im);
        }
    }

    #[test]
    fn sweep_finds_first_zeros() {
        let zs = reference_zeros_in(10.0, 26.0, 0.05);
        assert_eq!(zs.len(), 3);
        assert_abs_diff_eq!(zs[0], 14.134_725_141_734_693, epsilon = 1e-10);
        assert_abs_diff_eq!(zs[1], 21.022_039_638_771_556, epsilon = 1e-10);
        assert_abs_diff_eq!(zs[2], 25.010_857_580_145_69, epsilon = 1e-10);
    }
}
