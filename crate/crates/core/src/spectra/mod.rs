//! Point spectra of |D| and their generators.

mod baseline;
mod ensemble;
mod scale;
mod tridiag;

pub use baseline::{circle_dirac, sphere_dirac, torus_dirac};
pub use ensemble::{
    gue_spectrum, poisson_spectrum, sample_spectrum, semicircle_cdf, EnsembleConfig, EnsembleKind,
    RNG_NAME,
};
pub use scale::{scale_zeros, scale_zeros_smooth_count};
pub use tridiag::{tridiagonal_eigenvalues, MAX_SWEEPS};

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Ordered eigenvalues of |D| with integer multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    multiplicities: Vec<u64>,
    label: String,
}

impl Spectrum {
    /// Validates strictly increasing positive values and multiplicities ≥ 1.
    pub fn new(
        values: Vec<f64>,
        multiplicities: Vec<u64>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if values.len() != multiplicities.len() {
            return Err(Error::InvalidSpectrum {
                index: values.len().min(multiplicities.len()),
                reason: "values and multiplicities differ in length",
            });
        }
        if values.is_empty() {
            return Err(Error::InvalidSpectrum {
                index: 0,
                reason: "spectrum is empty",
            });
        }
        for (i, (&v, &m)) in values.iter().zip(&multiplicities).enumerate() {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidSpectrum {
                    index: i,
                    reason: "values must be positive and finite",
                });
            }
            if m == 0 {
                return Err(Error::InvalidSpectrum {
                    index: i,
                    reason: "multiplicity must be at least 1",
                });
            }
            if i > 0 && v <= values[i - 1] {
                return Err(Error::InvalidSpectrum {
                    index: i,
                    reason: "values must be strictly increasing",
                });
            }
        }
        Ok(Self {
            values,
            multiplicities,
            label: label.into(),
        })
    }

    /// Spectrum with every multiplicity equal to one.
    pub fn simple(values: Vec<f64>, label: impl Into<String>) -> Result<Self> {
        let ones = alloc::vec![1; values.len()];
        Self::new(values, ones, label)
    }

    /// Distinct eigenvalues, ascending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Multiplicity of each value.
    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// Short description, e.g. `riemann:10000`.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Replaces the label.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Number of distinct values.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; spectra are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Σ multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    /// Smallest eigenvalue.
    pub fn min_value(&self) -> f64 {
        self.values[0]
    }

    /// Largest eigenvalue.
    pub fn max_value(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// Spectrum with every value multiplied by `c > 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(
            self.values.iter().map(|v| v * c).collect(),
            self.multiplicities.clone(),
            self.label.clone(),
        )
    }
}
