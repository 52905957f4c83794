//! Random comparison spectra: GUE via the Hermite β = 2 tridiagonal model and
//! uncorrelated Poisson levels.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use super::tridiag::tridiagonal_eigenvalues;
use super::Spectrum;
use crate::{Error, Result};

/// Generator recorded in output metadata: `ChaCha8Rng::seed_from_u64` driving
/// `rand_distr` 0.5 `StandardNormal` (ziggurat) and `Exp1`.
pub const RNG_NAME: &str = "chacha8-seed_from_u64/rand_distr-0.5";

/// Spacing used to separate values that coincide after unfolding.
const COLLISION_SPLIT: f64 = 1e-12;

/// Which random spectrum to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleKind {
    /// Gaussian unitary ensemble, unfolded to unit mean spacing.
    Gue,
    /// Cumulative sums of unit-mean exponential gaps.
    Poisson,
}

impl EnsembleKind {
    fn name(self) -> &'static str {
        match self {
            Self::Gue => "gue",
            Self::Poisson => "poisson",
        }
    }
}

/// Size, seed and kind of a random spectrum. The seed fully determines it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnsembleConfig {
    /// Number of levels (matrix dimension for GUE), at least 2.
    pub size: usize,
    /// 64-bit seed.
    pub seed: u64,
    /// Ensemble.
    pub kind: EnsembleKind,
}

impl EnsembleConfig {
    fn validate(&self, expected: EnsembleKind) -> Result<()> {
        if self.kind != expected {
            return Err(Error::EnsembleMismatch {
                expected: expected.name(),
            });
        }
        if self.size < 2 {
            return Err(Error::TooSmall {
                what: "ensemble size",
                min: 2,
                got: self.size,
            });
        }
        Ok(())
    }

    fn label(&self) -> String {
        format!("{}:{}:{}", self.kind.name(), self.size, self.seed)
    }
}

/// Draws the spectrum described by `config`.
pub fn sample_spectrum(config: &EnsembleConfig) -> Result<Spectrum> {
    match config.kind {
        EnsembleKind::Gue => gue_spectrum(config),
        EnsembleKind::Poisson => poisson_spectrum(config),
    }
}

/// Poisson levels: partial sums of i.i.d. Exp(1) gaps.
pub fn poisson_spectrum(config: &EnsembleConfig) -> Result<Spectrum> {
    config.validate(EnsembleKind::Poisson)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut level = 0.0;
    let values = (0..config.size)
        .map(|_| {
            let gap: f64 = rng.sample(Exp1);
            level += gap;
            level
        })
        .collect::<Vec<_>>();
    // Exp1 can return exactly 0 with negligible probability.
    let (values, perturbed) = separate(values);
    Spectrum::simple(values, annotate(config.label(), perturbed))
}

/// Integrated semicircle law on [−2, 2], scaled to `n` levels:
/// n·[1/2 + x√(4 − x²)/(4π) + arcsin(x/2)/π]. Arguments outside the support
/// are clamped.
pub fn semicircle_cdf(x: f64, n: usize) -> f64 {
    let x = x.clamp(-2.0, 2.0);
    n as f64 * (0.5 + x * libm::sqrt(4.0 - x * x) / (4.0 * PI) + libm::asin(0.5 * x) / PI)
}

/// GUE levels unfolded to unit mean spacing.
///
/// Samples the Dumitriu–Edelman tridiagonal model for β = 2 (diagonal
/// N(0, 1), off-diagonal χ_{2(N−k)}/√2 with χ drawn as a root sum of squared
/// normals), diagonalises it, rescales to the semicircle on [−2, 2] and maps
/// each eigenvalue through [`semicircle_cdf`]. Values that collide after
/// unfolding are split by 10⁻¹²; the number of such adjustments is appended
/// to the label.
pub fn gue_spectrum(config: &EnsembleConfig) -> Result<Spectrum> {
    config.validate(EnsembleKind::Gue)?;
    let n = config.size;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let diag: Vec<f64> = (0..n)
        .map(|_| rng.sample::<f64, _>(StandardNormal))
        .collect();
    let offdiag: Vec<f64> = (1..n)
        .map(|k| {
            let dof = 2 * (n - k);
            let sum_sq: f64 = (0..dof)
                .map(|_| {
                    let g: f64 = rng.sample(StandardNormal);
                    g * g
                })
                .sum();
            libm::sqrt(0.5 * sum_sq)
        })
        .collect();

    let eigenvalues = tridiagonal_eigenvalues(&diag, &offdiag)?;
    let scale = 1.0 / libm::sqrt(n as f64);
    let unfolded = eigenvalues
        .iter()
        .map(|&l| semicircle_cdf(l * scale, n))
        .collect();
    let (values, perturbed) = separate(unfolded);
    Spectrum::simple(values, annotate(config.label(), perturbed))
}

fn annotate(label: String, perturbed: usize) -> String {
    if perturbed == 0 {
        label
    } else {
        format!("{label};perturbed={perturbed}")
    }
}

/// Makes a non-decreasing sequence strictly increasing and positive.
///
/// Runs of equal values are spread symmetrically about their common value in
/// steps of [`COLLISION_SPLIT`]; anything still not above its predecessor
/// (or not above zero) is lifted to predecessor + step.
fn separate(mut values: Vec<f64>) -> (Vec<f64>, usize) {
    let mut perturbed = 0;
    let mut i = 0;
    while i < values.len() {
        let mut j = i + 1;
        while j < values.len() && values[j] == values[i] {
            j += 1;
        }
        let run = j - i;
        if run > 1 {
            let base = values[i];
            let centre = (run - 1) as f64 / 2.0;
            for (k, v) in values[i..j].iter_mut().enumerate() {
                *v = base + (k as f64 - centre) * COLLISION_SPLIT;
            }
            perturbed += run;
        }
        i = j;
    }
    let mut prev = 0.0;
    for v in values.iter_mut() {
        if *v <= prev {
            *v = prev + COLLISION_SPLIT;
            perturbed += 1;
        }
        prev = *v;
    }
    (values, perturbed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use approx::assert_abs_diff_eq;

    fn gue(size: usize, seed: u64) -> EnsembleConfig {
        EnsembleConfig {
            size,
            seed,
            kind: EnsembleKind::Gue,
        }
    }

    fn poisson(size: usize, seed: u64) -> EnsembleConfig {
        EnsembleConfig {
            size,
            seed,
            kind: EnsembleKind::Poisson,
        }
    }

    #[test]
    fn semicircle_cdf_landmarks() {
        assert_abs_diff_eq!(semicircle_cdf(0.0, 100), 50.0, epsilon = 1e-12);
        assert_abs_diff_eq!(semicircle_cdf(2.0, 100), 100.0, epsilon = 1e-12);
        assert_abs_diff_eq!(semicircle_cdf(-2.0, 100), 0.0, epsilon = 1e-12);
        assert_eq!(semicircle_cdf(7.0, 10), semicircle_cdf(2.0, 10));
    }

    #[test]
    fn semicircle_cdf_derivative_is_density() {
        for x in [-1.5, -0.3, 0.0, 0.8, 1.9] {
            let h = 1e-6;
            let fd = (semicircle_cdf(x + h, 1) - semicircle_cdf(x - h, 1)) / (2.0 * h);
            let rho = libm::sqrt(4.0 - x * x) / (2.0 * PI);
            assert_abs_diff_eq!(fd, rho, epsilon = 1e-8);
        }
    }

    #[test]
    fn poisson_mean_gap() {
        let s = poisson_spectrum(&poisson(10_000, 7)).unwrap();
        let mean = s.max_value() / s.len() as f64;
        assert!((0.97..=1.03).contains(&mean), "{mean}");
    }

    #[test]
    fn seeds_are_deterministic_and_distinct() {
        let a = poisson_spectrum(&poisson(100, 1)).unwrap();
        assert_eq!(a, poisson_spectrum(&poisson(100, 1)).unwrap());
        assert_ne!(
            a.values()[0],
            poisson_spectrum(&poisson(100, 2)).unwrap().values()[0]
        );

        let g = gue_spectrum(&gue(200, 3)).unwrap();
        assert_eq!(g, gue_spectrum(&gue(200, 3)).unwrap());
        assert_ne!(g, gue_spectrum(&gue(200, 4)).unwrap());
    }

    #[test]
    fn gue_unfolded_range() {
        let n = 500;
        let s = gue_spectrum(&gue(n, 11)).unwrap();
        assert_eq!(s.len(), n);
        assert!(s.values().iter().all(|&v| v > 0.0 && v <= n as f64));
        assert!(s.label().starts_with("gue:500:11"));
    }

    #[test]
    fn config_checks() {
        assert!(matches!(
            gue_spectrum(&poisson(10, 1)),
            Err(Error::EnsembleMismatch { .. })
        ));
        assert!(matches!(
            poisson_spectrum(&gue(10, 1)),
            Err(Error::EnsembleMismatch { .. })
        ));
        assert!(matches!(
            gue_spectrum(&gue(1, 1)),
            Err(Error::TooSmall { .. })
        ));
        assert!(sample_spectrum(&poisson(5, 1)).is_ok());
    }

    #[test]
    fn separation_is_symmetric_and_positive() {
        let (v, k) = separate(vec![0.0, 1.0, 1.0, 1.0, 2.0]);
        assert_eq!(k, 4);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(v[0] > 0.0);
        assert_abs_diff_eq!(v[2], 1.0, epsilon = 0.0);
        assert_abs_diff_eq!(v[1], 1.0 - 1e-12, epsilon = 1e-20);
        let (v, k) = separate(vec![0.5, 1.5]);
        assert_eq!((v, k), (vec![0.5, 1.5], 0));
    }
}
