use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{heat_trace, spectral_dimension};
use crate::spectra::Spectrum;
use crate::{Error, Result};

/// Fewest points accepted on a Λ grid.
pub const MIN_GRID_POINTS: usize = 16;

/// Points on the default grid.
pub const DEFAULT_GRID_POINTS: usize = 200;

/// Log-spaced cutoff grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaGrid {
    /// Smallest Λ.
    pub min: f64,
    /// Largest Λ.
    pub max: f64,
    /// Number of points, at least [`MIN_GRID_POINTS`].
    pub points: usize,
}

impl LambdaGrid {
    /// Validated grid.
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self> {
        if !(min > 0.0 && min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::Grid(format!("need 0 < min < max, got {min}..{max}")));
        }
        if points < MIN_GRID_POINTS {
            return Err(Error::Grid(format!(
                "need at least {MIN_GRID_POINTS} points, got {points}"
            )));
        }
        Ok(Self { min, max, points })
    }

    /// [u_min/10, 10·u_max] with [`DEFAULT_GRID_POINTS`] points.
    pub fn for_spectrum(spec: &Spectrum) -> Self {
        Self {
            min: spec.min_value() / 10.0,
            max: spec.max_value() * 10.0,
            points: DEFAULT_GRID_POINTS,
        }
    }

    /// The grid values; the first and last are exactly `min` and `max`.
    pub fn values(&self) -> Vec<f64> {
        let lo = libm::log(self.min);
        let step = (libm::log(self.max) - lo) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| match i {
                0 => self.min,
                i if i == self.points - 1 => self.max,
                i => libm::exp(lo + i as f64 * step),
            })
            .collect()
    }
}

/// Sampled heat trace and spectral dimension over a Λ grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionCurve {
    /// Cutoffs, strictly increasing.
    pub lambdas: Vec<f64>,
    /// Z(Λ) at each cutoff.
    pub traces: Vec<f64>,
    /// D_s(Λ) at each cutoff.
    pub dims: Vec<f64>,
    /// Whether ±u were both counted in Z.
    pub symmetrized: bool,
    /// Label of the source spectrum.
    pub spectrum_label: String,
    /// Total multiplicity of the source spectrum.
    pub total_multiplicity: u64,
    /// Smallest eigenvalue of the source spectrum.
    pub u_min: f64,
    /// Largest eigenvalue of the source spectrum.
    pub u_max: f64,
}

impl DimensionCurve {
    /// Cutoff above which the finite spectrum saturates the trace (u_max/3).
    pub fn saturation_lambda(&self) -> f64 {
        self.u_max / 3.0
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    /// True for a curve with no points.
    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    /// Checks the structural invariants: equal lengths, strictly increasing
    /// cutoffs and traces, traces bounded by s·total multiplicity, and
    /// non-negative dimensions.
    pub fn check(&self) -> Result<()> {
        let n = self.lambdas.len();
        if self.traces.len() != n || self.dims.len() != n {
            return Err(Error::Grid(String::from("curve columns differ in length")));
        }
        let cap = if self.symmetrized { 2.0 } else { 1.0 } * self.total_multiplicity as f64;
        for i in 0..n {
            if !(self.lambdas[i] > 0.0) || (i > 0 && self.lambdas[i] <= self.lambdas[i - 1]) {
                return Err(Error::Grid(format!(
                    "cutoffs not strictly increasing at {i}"
                )));
            }
            if !(self.traces[i] > 0.0 && self.traces[i] <= cap * (1.0 + 1e-12)) {
                return Err(Error::Grid(format!("trace out of range at {i}")));
            }
            if i > 0 && self.traces[i] <= self.traces[i - 1] {
                return Err(Error::Grid(format!("trace not increasing at {i}")));
            }
            if !(self.dims[i] >= 0.0) {
                return Err(Error::Grid(format!("negative dimension at {i}")));
            }
        }
        Ok(())
    }
}

/// Evaluates Z and D_s of `spec` on every point of `grid`.
pub fn dimension_curve(
    spec: &Spectrum,
    grid: &LambdaGrid,
    symmetrize: bool,
) -> Result<DimensionCurve> {
    let grid = LambdaGrid::new(grid.min, grid.max, grid.points)?;
    let lambdas = grid.values();
    let mut traces = Vec::with_capacity(lambdas.len());
    let mut dims = Vec::with_capacity(lambdas.len());
    for &l in &lambdas {
        traces.push(heat_trace(spec, l, symmetrize)?);
        dims.push(spectral_dimension(spec, l)?);
    }
    Ok(DimensionCurve {
        lambdas,
        traces,
        dims,
        symmetrized: symmetrize,
        spectrum_label: String::from(spec.label()),
        total_multiplicity: spec.total_multiplicity(),
        u_min: spec.min_value(),
        u_max: spec.max_value(),
    })
}
