//! Exactly known Dirac spectra used to calibrate the dimension estimator.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::Spectrum;
use crate::{Error, Result};

const MIN_LEVELS: usize = 10;

fn check_levels(what: &'static str, n_max: usize) -> Result<()> {
    if n_max < MIN_LEVELS {
        return Err(Error::TooSmall {
            what,
            min: MIN_LEVELS,
            got: n_max,
        });
    }
    Ok(())
}

/// Dirac operator on the unit circle with antiperiodic spin structure:
/// |eigenvalues| k + 1/2 for k = 0..n_max, each twice.
pub fn circle_dirac(n_max: usize) -> Result<Spectrum> {
    check_levels("circle n_max", n_max)?;
    let values = (0..n_max).map(|k| k as f64 + 0.5).collect();
    Spectrum::new(values, alloc::vec![2; n_max], format!("circle:{n_max}"))
}

/// Flat torus ℝᵈ/2πℤᵈ: |k| for lattice vectors 0 < |k|∞ ≤ n_max, grouped by
/// value. The zero mode is excluded.
pub fn torus_dirac(d: usize, n_max: usize) -> Result<Spectrum> {
    if !(1..=3).contains(&d) {
        return Err(Error::TorusDimension(d));
    }
    if n_max == 0 {
        return Err(Error::TooSmall {
            what: "torus n_max",
            min: 1,
            got: 0,
        });
    }
    let n = n_max as i64;
    let side = 2 * n + 1;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    let cells = (side as u64).pow(d as u32);
    let mut k = [0i64; 3];
    for idx in 0..cells {
        let mut rem = idx;
        let mut norm2 = 0u64;
        for slot in k.iter_mut().take(d) {
            *slot = (rem % side as u64) as i64 - n;
            rem /= side as u64;
            norm2 += (*slot * *slot) as u64;
        }
        if norm2 > 0 {
            *counts.entry(norm2).or_insert(0) += 1;
        }
    }
    let (values, mults): (Vec<f64>, Vec<u64>) = counts
        .into_iter()
        .map(|(n2, m)| (libm::sqrt(n2 as f64), m))
        .unzip();
    Spectrum::new(values, mults, format!("torus:{d}:{n_max}"))
}

/// Round unit 2-sphere: |eigenvalues| n = 1..=n_max with multiplicity 2n.
pub fn sphere_dirac(n_max: usize) -> Result<Spectrum> {
    check_levels("sphere n_max", n_max)?;
    let values = (1..=n_max).map(|n| n as f64).collect();
    let mults = (1..=n_max as u64).map(|n| 2 * n).collect();
    Spectrum::new(values, mults, format!("sphere:{n_max}"))
}
