//! Detection of the flat middle region of a dimension curve.

use alloc::format;
use alloc::vec::Vec;

use super::curve::{dimension_curve, DimensionCurve, LambdaGrid};
use crate::spectra::scale_zeros;
use crate::sum::compensated_sum;
use crate::zeros::ZeroTable;
use crate::{Error, Result};

/// Detector settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateauParams {
    /// Largest accepted |dD_s / d ln Λ| inside the window.
    pub slope_tol: f64,
    /// Narrowest accepted window, in e-folds of Λ.
    pub min_width_efolds: f64,
    /// Ignore cutoffs above u_max/3, where a finite spectrum saturates.
    pub exclude_saturation: bool,
}

impl Default for PlateauParams {
    fn default() -> Self {
        Self {
            slope_tol: 0.05,
            min_width_efolds: 1.0,
            exclude_saturation: true,
        }
    }
}

/// The detected flat window, or `found = false` with zeroed fields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateauReport {
    /// Lower window edge.
    pub lambda_lo: f64,
    /// Upper window edge.
    pub lambda_hi: f64,
    /// Mean D_s over the window's grid points.
    pub mean_dim: f64,
    /// Population standard deviation of D_s over the window.
    pub std_dim: f64,
    /// ln(lambda_hi / lambda_lo).
    pub width_efolds: f64,
    /// Whether any window qualified.
    pub found: bool,
}

impl PlateauReport {
    /// The empty report.
    pub const NOT_FOUND: PlateauReport = PlateauReport {
        lambda_lo: 0.0,
        lambda_hi: 0.0,
        mean_dim: 0.0,
        std_dim: 0.0,
        width_efolds: 0.0,
        found: false,
    };
}

/// Local slope dD_s/d ln Λ at every grid point: central differences inside,
/// one-sided at the two ends.
fn local_slopes(curve: &DimensionCurve) -> Vec<f64> {
    let n = curve.len();
    let ln: Vec<f64> = curve.lambdas.iter().map(|&l| libm::log(l)).collect();
    (0..n)
        .map(|i| {
            let (a, b) = match i {
                0 => (0, 1.min(n - 1)),
                i if i == n - 1 => (i - 1, i),
                i => (i - 1, i + 1),
            };
            if a == b {
                0.0
            } else {
                (curve.dims[b] - curve.dims[a]) / (ln[b] - ln[a])
            }
        })
        .collect()
}

/// Finds the widest run of grid points whose local slope stays within
/// `slope_tol` and that spans at least `min_width_efolds`.
///
/// Ties on width go to the smaller standard deviation, then to the smaller
/// lower edge. With `exclude_saturation`, points above u_max/3 never qualify.
pub fn detect_plateau(curve: &DimensionCurve, params: &PlateauParams) -> PlateauReport {
    let n = curve.len();
    if n < 2 {
        return PlateauReport::NOT_FOUND;
    }
    let slopes = local_slopes(curve);
    let cap = curve.saturation_lambda();
    let eligible = |i: usize| {
        libm::fabs(slopes[i]) <= params.slope_tol
            && (!params.exclude_saturation || curve.lambdas[i] <= cap)
    };

    let mut best = PlateauReport::NOT_FOUND;
    let mut i = 0;
    while i < n {
        if !eligible(i) {
            i += 1;
            continue;
        }
        let mut j = i;
        while j + 1 < n && eligible(j + 1) {
            j += 1;
        }
        let width = libm::log(curve.lambdas[j] / curve.lambdas[i]);
        if j > i && width >= params.min_width_efolds {
            let window = &curve.dims[i..=j];
            let count = window.len() as f64;
            let mean = compensated_sum(window.iter().copied()) / count;
            let var = compensated_sum(window.iter().map(|d| (d - mean) * (d - mean))) / count;
            let candidate = PlateauReport {
                lambda_lo: curve.lambdas[i],
                lambda_hi: curve.lambdas[j],
                mean_dim: mean,
                std_dim: libm::sqrt(var),
                width_efolds: width,
                found: true,
            };
            if better(&candidate, &best) {
                best = candidate;
            }
        }
        i = j + 1;
    }
    best
}

fn better(a: &PlateauReport, b: &PlateauReport) -> bool {
    if !b.found {
        return true;
    }
    let tie = 1e-12 * a.width_efolds.max(b.width_efolds);
    if a.width_efolds > b.width_efolds + tie {
        return true;
    }
    if a.width_efolds < b.width_efolds - tie {
        return false;
    }
    if a.std_dim != b.std_dim {
        return a.std_dim < b.std_dim;
    }
    a.lambda_lo < b.lambda_lo
}

/// One prefix of a plateau-growth study.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthEntry {
    /// Number of zeros used.
    pub size: usize,
    /// Dimension curve of the rescaled prefix.
    pub curve: DimensionCurve,
    /// Detected plateau.
    pub report: PlateauReport,
}

/// Runs rescaling, curve evaluation and plateau detection on each prefix of
/// `zeros`.
///
/// All prefixes share one grid: `grid` if given, otherwise the default grid
/// of the largest prefix.
pub fn plateau_growth(
    zeros: &ZeroTable,
    prefix_sizes: &[usize],
    grid: Option<LambdaGrid>,
    params: &PlateauParams,
    symmetrize: bool,
) -> Result<Vec<GrowthEntry>> {
    for (k, &n) in prefix_sizes.iter().enumerate() {
        if n == 0 || n > zeros.len() {
            return Err(Error::Prefix(format!(
                "prefix {n} outside 1..={}",
                zeros.len()
            )));
        }
        if k > 0 && n <= prefix_sizes[k - 1] {
            return Err(Error::Prefix(format!(
                "prefix sizes must ascend, got {n} after {}",
                prefix_sizes[k - 1]
            )));
        }
    }
    let Some(&largest) = prefix_sizes.last() else {
        return Ok(Vec::new());
    };
    let grid = match grid {
        Some(g) => g,
        None => LambdaGrid::for_spectrum(&scale_zeros(&zeros.prefix(largest))?),
    };
    prefix_sizes
        .iter()
        .map(|&n| {
            let spec = scale_zeros(&zeros.prefix(n))?;
            let curve = dimension_curve(&spec, &grid, symmetrize)?;
            let report = detect_plateau(&curve, params);
            Ok(GrowthEntry {
                size: n,
                curve,
                report,
            })
        })
        .collect()
}
