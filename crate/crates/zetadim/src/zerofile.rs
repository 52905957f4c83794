//! Plain-text zero tables: one decimal height per line, optionally preceded
//! by `# offset <decimal>` which is added to every value.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use zetadim_core::zeros::{ZeroSource, ZeroTable, MIN_ZERO_HEIGHT};

use crate::error::{Error, Result};

/// Parses a zero file.
///
/// The error bound of the result is half a unit in the last printed decimal
/// place, taken over all lines. Blank lines are skipped; `#` lines other than
/// a leading offset header are rejected.
pub fn parse_zero_file(text: &str) -> Result<ZeroTable> {
    let mut offset = 0.0;
    let mut heights: Vec<f64> = Vec::new();
    let mut bound: f64 = 0.0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let value = rest
                .trim()
                .strip_prefix("offset")
                .filter(|_| heights.is_empty() && offset == 0.0)
                .ok_or_else(|| {
                    Error::parse(
                        line_no,
                        "only a leading '# offset <decimal>' header is allowed",
                    )
                })?;
            offset =
                parse_decimal(value.trim()).ok_or_else(|| Error::parse(line_no, "bad offset"))?;
            continue;
        }
        let value = parse_decimal(line)
            .ok_or_else(|| Error::parse(line_no, format!("not a decimal: {line:?}")))?;
        let t = offset + value;
        if !(t > MIN_ZERO_HEIGHT) {
            return Err(Error::parse(
                line_no,
                format!("height {t} is not above {MIN_ZERO_HEIGHT}"),
            ));
        }
        if let Some(&prev) = heights.last() {
            if t <= prev {
                return Err(Error::parse(
                    line_no,
                    format!("height {t} does not exceed previous {prev}"),
                ));
            }
        }
        bound = bound.max(half_last_place(line));
        heights.push(t);
    }
    if heights.is_empty() {
        return Err(Error::Invalid("zero file has no heights".into()));
    }
    Ok(ZeroTable::new(heights, ZeroSource::Imported, bound)?)
}

/// Reads and parses a zero file from disk.
pub fn import_zero_file(path: &Path) -> Result<ZeroTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_zero_file(&text)
}

/// Serialises heights with the shortest representation that reads back to
/// the same `f64`.
pub fn format_zero_file(table: &ZeroTable) -> String {
    let mut out = String::with_capacity(table.len() * 20);
    for t in table.heights() {
        writeln!(out, "{t}").unwrap();
    }
    out
}

fn parse_decimal(s: &str) -> Option<f64> {
    let ok = !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'))
        && s.chars().any(|c| c.is_ascii_digit());
    s.parse::<f64>().ok().filter(|v| ok && v.is_finite())
}

/// Half a unit in the last decimal place of a plain decimal, e.g. 5e-7 for
/// "14.134725".
fn half_last_place(s: &str) -> f64 {
    let mantissa = s.split(['e', 'E']).next().unwrap_or(s);
    let exponent: i32 = s
        .split_once(['e', 'E'])
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    let decimals = mantissa.split_once('.').map_or(0, |(_, frac)| frac.len()) as i32;
    0.5 * 10f64.powi(exponent - decimals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_entries() {
        let z = parse_zero_file("14.134725\n21.022040\n").unwrap();
        assert_eq!(z.heights(), &[14.134725, 21.02204]);
        assert_eq!(z.source(), ZeroSource::Imported);
        assert!((z.abs_error_bound() - 5e-7).abs() < 1e-20);
    }

    #[test]
    fn offset_header() {
        let z = parse_zero_file("# offset 1000\n0.5\n1.5\n").unwrap();
        assert_eq!(z.heights(), &[1000.5, 1001.5]);
        assert_eq!(z.abs_error_bound(), 0.05);
    }

    #[test]
    fn non_monotone_names_line() {
        let err = parse_zero_file("21.0\n14.1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().starts_with("line 2"));
    }

    #[test]
    fn garbage_names_line() {
        let err = parse_zero_file("14.5\n\n2x1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(matches!(
            parse_zero_file("inf\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_zero_file("14.5\n# offset 3\n20\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_zero_file(""), Err(Error::Invalid(_))));
    }

    #[test]
    fn roundtrip_is_exact() {
        let heights = vec![14.134725141734693, 21.022039638771555, 1e5 + 1.0 / 3.0];
        let table = ZeroTable::new(heights.clone(), ZeroSource::Computed, 1e-9).unwrap();
        assert_eq!(
            parse_zero_file(&format_zero_file(&table))
                .unwrap()
                .heights(),
            &heights[..]
        );
    }

    #[test]
    fn last_place() {
        assert_eq!(half_last_place("14"), 0.5);
        assert!((half_last_place("1.25e2") - 0.5).abs() < 1e-15);
    }
}
