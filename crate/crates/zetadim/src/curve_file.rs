//! Dimension-curve CSV and the single-row plateau report.
//!
//! A curve file starts with
//!
//! ```text
//! # spectrum=<label> symmetrize=<bool> n=<count>
//! # u_min=<value> u_max=<value>
//! # key=value            (run configuration, any number of lines)
//! lambda,heat_trace,spectral_dimension
//! ```
//!
//! followed by one row per cutoff. Every float is printed in its shortest
//! round-trip form, so reading a file back reproduces the curve exactly.

use std::fmt::Write as _;

use zetadim_core::specdim::{DimensionCurve, PlateauReport};

use crate::error::{Error, Result};
use crate::meta::Metadata;

/// Header row of a curve file.
pub const CURVE_HEADER: &str = "lambda,heat_trace,spectral_dimension";
/// Header row of a plateau report.
pub const PLATEAU_HEADER: &str = "lambda_lo,lambda_hi,mean_dim,std_dim,width_efolds,found";

/// Serialises a curve with its run configuration.
pub fn format_curve(curve: &DimensionCurve, config: &Metadata) -> String {
    let mut out = String::with_capacity(64 * curve.len() + 256);
    writeln!(
        out,
        "# spectrum={} symmetrize={} n={}",
        curve.spectrum_label, curve.symmetrized, curve.total_multiplicity
    )
    .unwrap();
    writeln!(out, "# u_min={} u_max={}", curve.u_min, curve.u_max).unwrap();
    config.write_comments(&mut out);
    writeln!(out, "{CURVE_HEADER}").unwrap();
    for ((l, z), d) in curve.lambdas.iter().zip(&curve.traces).zip(&curve.dims) {
        writeln!(out, "{l},{z:e},{d}").unwrap();
    }
    out
}

/// Parses a curve file, returning the curve and its configuration lines.
pub fn parse_curve(text: &str) -> Result<(DimensionCurve, Metadata)> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (n1, first) = lines
        .next()
        .ok_or_else(|| Error::Invalid("empty curve file".into()))?;
    let (label, symmetrized, total) = parse_identity(first).ok_or_else(|| {
        Error::parse(
            n1,
            "expected '# spectrum=<label> symmetrize=<bool> n=<count>'",
        )
    })?;
    let (n2, second) = lines.next().unwrap_or((2, ""));
    let (u_min, u_max) =
        parse_range(second).ok_or_else(|| Error::parse(n2, "expected '# u_min=<x> u_max=<y>'"))?;

    let mut config = Metadata::new();
    let mut curve = DimensionCurve {
        lambdas: Vec::new(),
        traces: Vec::new(),
        dims: Vec::new(),
        symmetrized,
        spectrum_label: label,
        total_multiplicity: total,
        u_min,
        u_max,
    };
    let mut header_seen = false;
    for (line_no, line) in lines {
        if line.is_empty() {
            continue;
        }
        if !header_seen {
            if line == CURVE_HEADER {
                header_seen = true;
            } else {
                let (k, v) = Metadata::parse_comment(line).ok_or_else(|| {
                    Error::parse(line_no, "expected '# key=value' or the column header")
                })?;
                config.push(&k, v);
            }
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let parsed: Option<Vec<f64>> = (fields.len() == 3)
            .then(|| fields.iter().map(|f| f.parse().ok()).collect())
            .flatten();
        let row = parsed.ok_or_else(|| Error::parse(line_no, "expected three numbers"))?;
        curve.lambdas.push(row[0]);
        curve.traces.push(row[1]);
        curve.dims.push(row[2]);
    }
    if !header_seen {
        return Err(Error::Invalid(format!(
            "curve file has no {CURVE_HEADER:?} header"
        )));
    }
    curve.check()?;
    Ok((curve, config))
}

fn parse_identity(line: &str) -> Option<(String, bool, u64)> {
    let rest = line.strip_prefix("# spectrum=")?;
    let (label, rest) = rest.rsplit_once(" symmetrize=")?;
    let (sym, n) = rest.split_once(" n=")?;
    Some((label.to_string(), sym.parse().ok()?, n.parse().ok()?))
}

fn parse_range(line: &str) -> Option<(f64, f64)> {
    let rest = line.strip_prefix("# u_min=")?;
    let (lo, hi) = rest.split_once(" u_max=")?;
    Some((lo.parse().ok()?, hi.parse().ok()?))
}

/// The plateau report as a header plus one data row.
pub fn format_plateau(report: &PlateauReport) -> String {
    format!(
        "{PLATEAU_HEADER}\n{},{},{},{},{},{}\n",
        report.lambda_lo,
        report.lambda_hi,
        report.mean_dim,
        report.std_dim,
        report.width_efolds,
        report.found
    )
}

/// Parses the output of [`format_plateau`].
pub fn parse_plateau(text: &str) -> Result<PlateauReport> {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    if lines.next() != Some(PLATEAU_HEADER) {
        return Err(Error::Invalid(format!(
            "expected header {PLATEAU_HEADER:?}"
        )));
    }
    let row = lines
        .next()
        .ok_or_else(|| Error::Invalid("plateau report has no row".into()))?;
    let f: Vec<&str> = row.split(',').collect();
    let bad = || Error::Invalid(format!("bad plateau row {row:?}"));
    if f.len() != 6 {
        return Err(bad());
    }
    let num = |i: usize| f[i].parse::<f64>().map_err(|_| bad());
    Ok(PlateauReport {
        lambda_lo: num(0)?,
        lambda_hi: num(1)?,
        mean_dim: num(2)?,
        std_dim: num(3)?,
        width_efolds: num(4)?,
        found: f[5].parse().map_err(|_| bad())?,
    })
}
