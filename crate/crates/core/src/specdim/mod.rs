//! Heat-kernel trace and spectral dimension of a point spectrum.
//!
//! For a spectrum of |D| with values u_k and multiplicities m_k,
//!
//! ```text
//! Z(Λ)   = s · Σ m_k exp(−u_k²/Λ²)             (s = 2 when ±u_k are both counted)
//! D_s(Λ) = d ln Z / d ln Λ = (2/Z) · s · Σ m_k (u_k²/Λ²) exp(−u_k²/Λ²)
//! ```
//!
//! `Z` grows like Λᵈ on a d-dimensional manifold, so `D_s` is taken with a
//! positive sign. The symmetry factor `s` and any common multiplicity cancel
//! in `D_s`.

mod curve;
mod plateau;

pub use curve::{
    dimension_curve, DimensionCurve, LambdaGrid, DEFAULT_GRID_POINTS, MIN_GRID_POINTS,
};
pub use plateau::{detect_plateau, plateau_growth, GrowthEntry, PlateauParams, PlateauReport};

use crate::spectra::Spectrum;
use crate::sum::NeumaierSum;
use crate::{Error, Result};

fn check_cutoff(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::Cutoff(lambda))
    }
}

/// Z(Λ) = s·Σ m_k exp(−u_k²/Λ²), s = 2 if `symmetrize`.
///
/// Terms are accumulated with compensated summation in index order. Terms
/// that underflow contribute zero.
pub fn heat_trace(spec: &Spectrum, lambda: f64, symmetrize: bool) -> Result<f64> {
    check_cutoff(lambda)?;
    let inv = 1.0 / (lambda * lambda);
    let sum: NeumaierSum = spec
        .values()
        .iter()
        .zip(spec.multiplicities())
        .map(|(&u, &m)| m as f64 * libm::exp(-u * u * inv))
        .collect();
    Ok(symmetry_factor(symmetrize) * sum.value())
}

/// ln Z(Λ), evaluated without underflow by factoring out the smallest term.
pub fn ln_heat_trace(spec: &Spectrum, lambda: f64, symmetrize: bool) -> Result<f64> {
    check_cutoff(lambda)?;
    let (x0, w, _) = shifted_sums(spec, lambda);
    Ok(libm::log(symmetry_factor(symmetrize)) + libm::log(w) - x0)
}

/// D_s(Λ) = d ln Z / d ln Λ in closed form.
///
/// Evaluated as 2·Σ w_k x_k / Σ w_k with x_k = u_k²/Λ² and weights
/// w_k = m_k exp(−(x_k − x_min)), so tiny Λ does not underflow.
pub fn spectral_dimension(spec: &Spectrum, lambda: f64) -> Result<f64> {
    check_cutoff(lambda)?;
    let (_, w, wx) = shifted_sums(spec, lambda);
    Ok(2.0 * wx / w)
}

fn symmetry_factor(symmetrize: bool) -> f64 {
    if symmetrize {
        2.0
    } else {
        1.0
    }
}

/// (x_min, Σ w_k, Σ w_k x_k).
fn shifted_sums(spec: &Spectrum, lambda: f64) -> (f64, f64, f64) {
    let inv = 1.0 / (lambda * lambda);
    let u0 = spec.min_value();
    let x0 = u0 * u0 * inv;
    let mut w = NeumaierSum::new();
    let mut wx = NeumaierSum::new();
    for (&u, &m) in spec.values().iter().zip(spec.multiplicities()) {
        let x = u * u * inv;
        let wk = m as f64 * libm::exp(-(x - x0));
        w.add(wk);
        wx.add(wk * x);
    }
    (x0, w.value(), wx.value())
}
