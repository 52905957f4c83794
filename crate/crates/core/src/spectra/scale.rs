use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::{E, PI};

use super::Spectrum;
use crate::zeros::{rs_theta, ZeroTable};
use crate::{Error, Result};

/// u_j = (t_j / 2π) ln(t_j / 2π), which tends to unit mean spacing.
///
/// The map is strictly increasing for t > 2π/e; heights at or below that are
/// rejected.
pub fn scale_zeros(zeros: &ZeroTable) -> Result<Spectrum> {
    scale_heights(zeros.heights(), format!("riemann:{}", zeros.len()))
}

pub(crate) fn scale_heights(heights: &[f64], label: alloc::string::String) -> Result<Spectrum> {
    let min = 2.0 * PI / E;
    let values = heights
        .iter()
        .map(|&t| {
            if t > min {
                let x = t / (2.0 * PI);
                Ok(x * libm::log(x))
            } else {
                Err(Error::NotScalable(t))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Spectrum::simple(values, label)
}

/// Alternative unfolding u_j = θ(t_j)/π + 1, the smooth zero count at t_j.
///
/// This has unit mean spacing at every height, unlike [`scale_zeros`] whose
/// spacing is ≈ 1 + 1/ln(t/2π). It exists for sensitivity checks.
pub fn scale_zeros_smooth_count(zeros: &ZeroTable) -> Result<Spectrum> {
    let values = zeros
        .heights()
        .iter()
        .map(|&t| rs_theta(t).map(|th| th / PI + 1.0))
        .collect::<Result<Vec<_>>>()?;
    Spectrum::simple(values, format!("riemann-smooth:{}", zeros.len()))
}
