//! Pointwise comparison of two dimension curves on their common Λ range.

use std::fmt::Write as _;

use zetadim_core::specdim::{detect_plateau, DimensionCurve, PlateauParams, PlateauReport};

use crate::error::{Error, Result};

/// Minimum overlap of the two Λ ranges, in e-folds.
pub const MIN_OVERLAP_EFOLDS: f64 = 1.0;

/// Result of [`compare_curves`].
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    /// Label of the first curve.
    pub label_a: String,
    /// Label of the second curve.
    pub label_b: String,
    /// Rows `(lambda, dim_a, dim_b)` at the first curve's cutoffs inside the
    /// overlap.
    pub rows: Vec<(f64, f64, f64)>,
    /// Largest |dim_a − dim_b| over the rows.
    pub max_abs_diff: f64,
    /// Plateau of the first curve.
    pub plateau_a: PlateauReport,
    /// Plateau of the second curve.
    pub plateau_b: PlateauReport,
}

impl Comparison {
    /// mean_dim(a) − mean_dim(b) when both plateaus were found.
    pub fn plateau_diff(&self) -> Option<f64> {
        (self.plateau_a.found && self.plateau_b.found)
            .then_some(self.plateau_a.mean_dim - self.plateau_b.mean_dim)
    }

    /// CSV with summary comments and columns `lambda,dim_a,dim_b,diff`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# a={} b={}", self.label_a, self.label_b).unwrap();
        writeln!(
            out,
            "# points={} max_abs_diff={}",
            self.rows.len(),
            self.max_abs_diff
        )
        .unwrap();
        let plateau = |p: &PlateauReport| {
            if p.found {
                format!("{}", p.mean_dim)
            } else {
                "none".to_string()
            }
        };
        writeln!(
            out,
            "# plateau_a={} plateau_b={} plateau_diff={}",
            plateau(&self.plateau_a),
            plateau(&self.plateau_b),
            self.plateau_diff()
                .map_or_else(|| "none".to_string(), |d| d.to_string())
        )
        .unwrap();
        out.push_str("lambda,dim_a,dim_b,diff\n");
        for &(l, a, b) in &self.rows {
            writeln!(out, "{l},{a},{b},{}", a - b).unwrap();
        }
        out
    }
}

/// Aligns `b` to the cutoffs of `a` inside their common range by linear
/// interpolation in ln Λ, and reports the differences and both plateaus.
pub fn compare_curves(
    a: &DimensionCurve,
    b: &DimensionCurve,
    params: &PlateauParams,
) -> Result<Comparison> {
    let range = |c: &DimensionCurve| match (c.lambdas.first(), c.lambdas.last()) {
        (Some(&lo), Some(&hi)) => Ok((lo, hi)),
        _ => Err(Error::Invalid(format!(
            "curve {} is empty",
            c.spectrum_label
        ))),
    };
    let (a_lo, a_hi) = range(a)?;
    let (b_lo, b_hi) = range(b)?;
    let (lo, hi) = (a_lo.max(b_lo), a_hi.min(b_hi));
    let overlap = if hi > lo { (hi / lo).ln() } else { 0.0 };
    if overlap < MIN_OVERLAP_EFOLDS {
        return Err(Error::Invalid(format!(
            "cutoff ranges overlap by {overlap:.3} e-folds, need {MIN_OVERLAP_EFOLDS}"
        )));
    }
    let rows: Vec<(f64, f64, f64)> = a
        .lambdas
        .iter()
        .zip(&a.dims)
        .filter(|(&l, _)| l >= lo && l <= hi)
        .map(|(&l, &d)| (l, d, interpolate(b, l)))
        .collect();
    let max_abs_diff = rows
        .iter()
        .map(|(_, x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Ok(Comparison {
        label_a: a.spectrum_label.clone(),
        label_b: b.spectrum_label.clone(),
        rows,
        max_abs_diff,
        plateau_a: detect_plateau(a, params),
        plateau_b: detect_plateau(b, params),
    })
}

/// D_s of `c` at `lambda`, linear in ln Λ between grid points. `lambda` must
/// lie inside the grid.
fn interpolate(c: &DimensionCurve, lambda: f64) -> f64 {
    let i = c.lambdas.partition_point(|&l| l < lambda);
    if i < c.lambdas.len() && c.lambdas[i] == lambda {
        return c.dims[i];
    }
    let (l0, l1) = (c.lambdas[i - 1], c.lambdas[i]);
    let w = (lambda / l0).ln() / (l1 / l0).ln();
    c.dims[i - 1] * (1.0 - w) + c.dims[i] * w
}
