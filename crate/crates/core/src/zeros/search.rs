//! Gram-block zero search.
//!
//! Gram points g_n (θ(g_n) = nπ) split the critical line into intervals that
//! usually hold one zero each. A Gram point is *good* when (−1)ⁿ Z(g_n) > 0;
//! between consecutive good points g_j < g_k there are exactly k − j zeros
//! (Rosser's rule, which has no exceptions below t ≈ 6.8·10⁶). Intervals of a
//! block are trisected until the block's sign changes account for all of its
//! zeros, and each sign change is then refined by bisection.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::eta::{eta_z, POLISH_HEIGHT};
use super::riemann_siegel::{z_unchecked, DEFAULT_CORRECTION_TERMS, MAX_CORRECTION_TERMS};
use super::table::{ZeroSource, ZeroTable};
use super::theta::{
    gram_point, gram_point_from, theta_derivative, theta_unchecked, THETA_MIN_HEIGHT,
};
use crate::{Error, Result};

/// Desk-scale guardrail on both the zero count and the height limit.
pub const MAX_LIMIT: f64 = 1e6;

/// How far [`find_zeros`] searches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ZeroLimit {
    /// The first `n` zeros.
    Count(usize),
    /// Every zero with height ≤ the given value.
    MaxHeight(f64),
}

/// Tuning knobs for [`find_zeros`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    /// Riemann–Siegel remainder order, 0..=4.
    pub correction_terms: usize,
    /// Final bracket half-width.
    pub tolerance: f64,
    /// Maximum trisection depth inside one Gram block.
    pub max_depth: u32,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            correction_terms: DEFAULT_CORRECTION_TERMS,
            tolerance: 1e-9,
            max_depth: 20,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Sample {
    t: f64,
    z: f64,
}

/// Locates the first zeros of ζ on the critical line.
///
/// Each returned height is the midpoint of a bracket of half-width at most
/// `options.tolerance` across which `Z` changes sign. Above
/// [`POLISH_HEIGHT`] the bracket is certified with the Riemann–Siegel `Z`;
/// below it with [`eta_z`], whose accuracy does not depend on the height.
pub fn find_zeros(limit: ZeroLimit, options: &SearchOptions) -> Result<ZeroTable> {
    if options.correction_terms > MAX_CORRECTION_TERMS {
        return Err(Error::CorrectionTerms(options.correction_terms));
    }
    match limit {
        ZeroLimit::Count(n) if n as f64 > MAX_LIMIT => return Err(Error::LimitTooLarge(n as f64)),
        ZeroLimit::MaxHeight(t) if !(t <= MAX_LIMIT) => return Err(Error::LimitTooLarge(t)),
        _ => {}
    }
    let done = |count: usize, t: f64| match limit {
        ZeroLimit::Count(n) => count >= n,
        ZeroLimit::MaxHeight(tmax) => t >= tmax,
    };

    let z = |t: f64| z_unchecked(t, options.correction_terms);
    let mut heights: Vec<f64> = Vec::new();

    // The block walk starts at t = 10 standing in for g_{-1} ≈ 9.67.
    let mut block_start_index: i64 = -1;
    let mut block: Vec<Sample> = alloc::vec![Sample {
        t: THETA_MIN_HEIGHT,
        z: z(THETA_MIN_HEIGHT),
    }];
    let mut n: u64 = 0;
    let mut g = gram_point(0);

    if !done(0, THETA_MIN_HEIGHT) {
        loop {
            let sample = Sample { t: g, z: z(g) };
            block.push(sample);
            let good = if n.is_multiple_of(2) {
                sample.z > 0.0
            } else {
                sample.z < 0.0
            };
            if good {
                let expected = (n as i64 - block_start_index) as usize;
                let brackets = bracket_block(&block, expected, options.max_depth, &z);
                if brackets.len() != expected {
                    return Err(Error::MissedZero {
                        found: heights.len() + brackets.len(),
                        expected: n as i64 + 1,
                        height: g,
                    });
                }
                for (lo, hi) in brackets {
                    heights.push(refine(lo, hi, options, &z)?);
                }
                check_count(heights.len(), g)?;
                if done(heights.len(), g) {
                    break;
                }
                block_start_index = n as i64;
                block.clear();
                block.push(sample);
            }
            n += 1;
            g = gram_point_from(n, g + PI / theta_derivative(g));
        }
    }

    match limit {
        ZeroLimit::Count(k) => heights.truncate(k),
        ZeroLimit::MaxHeight(tmax) => {
            let keep = heights.partition_point(|&h| h <= tmax);
            heights.truncate(keep);
        }
    }
    ZeroTable::new(heights, ZeroSource::Computed, options.tolerance)
}

/// Count check at a good Gram point g_n, where the smooth count θ/π + 1 is
/// the integer n + 1.
fn check_count(found: usize, g: f64) -> Result<()> {
    let expected = libm::round(theta_unchecked(g) / PI + 1.0) as i64;
    if (found as i64 - expected).abs() > 1 {
        return Err(Error::MissedZero {
            found,
            expected,
            height: g,
        });
    }
    Ok(())
}

/// Upper bound on segments examined inside one Gram block.
const MAX_BLOCK_SEGMENTS: usize = 1 << 16;

/// Sign-change brackets inside one Gram block.
///
/// While the block shows fewer sign changes than it holds zeros, every
/// segment is trisected (an interval with a sign change may still hide a
/// further pair). Stops at `max_depth` levels or [`MAX_BLOCK_SEGMENTS`].
fn bracket_block<F: Fn(f64) -> f64>(
    block: &[Sample],
    expected: usize,
    max_depth: u32,
    z: &F,
) -> Vec<(Sample, Sample)> {
    let mut segments: Vec<(Sample, Sample)> = block.windows(2).map(|w| (w[0], w[1])).collect();
    let changes = |segs: &[(Sample, Sample)]| segs.iter().filter(|(a, b)| a.z * b.z < 0.0).count();

    let mut depth = 0;
    while changes(&segments) < expected
        && depth < max_depth
        && segments.len() * 3 <= MAX_BLOCK_SEGMENTS
    {
        let mut next = Vec::with_capacity(segments.len() * 3);
        for &(a, b) in &segments {
            let h = (b.t - a.t) / 3.0;
            let p = Sample {
                t: a.t + h,
                z: z(a.t + h),
            };
            let q = Sample {
                t: a.t + 2.0 * h,
                z: z(a.t + 2.0 * h),
            };
            next.extend([(a, p), (p, q), (q, b)]);
        }
        segments = next;
        depth += 1;
    }
    segments
        .into_iter()
        .filter(|(a, b)| a.z * b.z < 0.0)
        .collect()
}

fn refine<F: Fn(f64) -> f64>(
    lo: Sample,
    hi: Sample,
    options: &SearchOptions,
    z: &F,
) -> Result<f64> {
    let (a, b) = bisect(lo, hi, options.tolerance, z);
    let mid = 0.5 * (a.t + b.t);
    if mid >= POLISH_HEIGHT {
        return Ok(mid);
    }
    // The Riemann–Siegel zero sits within a few 10⁻⁶ of the true one here.
    const WIDEN: f64 = 1e-4;
    let candidates = [
        ((a.t - WIDEN).max(lo.t), (b.t + WIDEN).min(hi.t)),
        (lo.t, hi.t),
    ];
    for (l, h) in candidates {
        let sl = Sample { t: l, z: eta_z(l) };
        let sh = Sample { t: h, z: eta_z(h) };
        if sl.z * sh.z < 0.0 {
            let (a, b) = bisect(sl, sh, options.tolerance, &eta_z);
            return Ok(0.5 * (a.t + b.t));
        }
    }
    Err(Error::Uncertified(mid))
}

fn bisect<F: Fn(f64) -> f64>(mut a: Sample, mut b: Sample, tol: f64, z: &F) -> (Sample, Sample) {
    while b.t - a.t > 2.0 * tol {
        let t = 0.5 * (a.t + b.t);
        if t <= a.t || t >= b.t {
            break;
        }
        let m = Sample { t, z: z(t) };
        if (m.z < 0.0) == (a.z < 0.0) && m.z != 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn first_three_zeros() {
        let zs = find_zeros(ZeroLimit::Count(3), &SearchOptions::default()).unwrap();
        let h = zs.heights();
        assert_eq!(h.len(), 3);
        assert_abs_diff_eq!(h[0], 14.134_725_141_734_693, epsilon = 1e-8);
        assert_abs_diff_eq!(h[1], 21.022_039_638_771_556, epsilon = 1e-8);
        assert_abs_diff_eq!(h[2], 25.010_857_580_145_69, epsilon = 1e-8);
        assert_eq!(zs.source(), ZeroSource::Computed);
        assert_eq!(zs.abs_error_bound(), 1e-9);
    }

    #[test]
    fn twenty_nine_zeros_below_100() {
        let zs = find_zeros(ZeroLimit::MaxHeight(100.0), &SearchOptions::default()).unwrap();
        assert_eq!(zs.len(), 29);
    }

    #[test]
    fn empty_below_first_zero() {
        let zs = find_zeros(ZeroLimit::MaxHeight(12.0), &SearchOptions::default()).unwrap();
        assert!(zs.is_empty());
        let zs = find_zeros(ZeroLimit::Count(0), &SearchOptions::default()).unwrap();
        assert!(zs.is_empty());
    }

    #[test]
    fn guardrails() {
        let o = SearchOptions::default();
        assert!(matches!(
            find_zeros(ZeroLimit::Count(2_000_000), &o),
            Err(Error::LimitTooLarge(_))
        ));
        assert!(matches!(
            find_zeros(ZeroLimit::MaxHeight(2e6), &o),
            Err(Error::LimitTooLarge(_))
        ));
        let bad = SearchOptions {
            correction_terms: 7,
            ..o
        };
        assert_eq!(
            find_zeros(ZeroLimit::Count(1), &bad),
            Err(Error::CorrectionTerms(7))
        );
    }

    #[test]
    fn handles_gram_violations() {
        // The first Gram law violation is at g_126 ≈ 282.45.
        let zs = find_zeros(ZeroLimit::MaxHeight(300.0), &SearchOptions::default()).unwrap();
        let h = zs.heights();
        assert_eq!(h.len(), 138);
        assert!(h.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn gram_interval_with_three_zeros() {
        // The Gram block [2667.23, 2670.34] has one interval holding three
        // zeros (2668.29, 2668.66, 2669.25) and two empty ones.
        let zs = find_zeros(ZeroLimit::MaxHeight(2671.0), &SearchOptions::default()).unwrap();
        assert_eq!(zs.len(), 2149);
        assert_abs_diff_eq!(zs.heights()[2145], 2_668.291_859_037_21, epsilon = 1e-8);
        assert_abs_diff_eq!(zs.heights()[2146], 2_668.663_651_401_29, epsilon = 1e-8);
    }

    #[test]
    fn rs_certifies_above_polish_height() {
        let zs = find_zeros(ZeroLimit::MaxHeight(400.0), &SearchOptions::default()).unwrap();
        let tol = zs.abs_error_bound();
        for &t in zs.heights().iter().filter(|&&t| t >= POLISH_HEIGHT) {
            let a = z_unchecked(t - tol, 4);
            let b = z_unchecked(t + tol, 4);
            assert!(a * b <= 0.0, "t={t}");
        }
        for &t in zs.heights().iter().filter(|&&t| t < POLISH_HEIGHT) {
            assert!(eta_z(t - tol) * eta_z(t + tol) <= 0.0, "t={t}");
        }
    }
}
