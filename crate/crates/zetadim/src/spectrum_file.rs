//! Spectrum CSV: optional `# label=<label>` line, then the header
//! `value,multiplicity` and one row per distinct value.

use std::fmt::Write as _;

use zetadim_core::spectra::Spectrum;

use crate::error::{Error, Result};
use crate::meta::Metadata;

/// Header row of a spectrum file.
pub const SPECTRUM_HEADER: &str = "value,multiplicity";

/// Serialises a spectrum; values round-trip exactly.
pub fn format_spectrum(spec: &Spectrum) -> String {
    let mut out = format!("# label={}\n{SPECTRUM_HEADER}\n", spec.label());
    for (v, m) in spec.values().iter().zip(spec.multiplicities()) {
        writeln!(out, "{v},{m}").unwrap();
    }
    out
}

/// Parses a spectrum file. Without a label comment, `default_label` is used.
pub fn parse_spectrum(text: &str, default_label: &str) -> Result<Spectrum> {
    let mut label = None;
    let mut header_seen = false;
    let mut values = Vec::new();
    let mut mults = Vec::new();
    let mut first_row = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if let Some((k, v)) = Metadata::parse_comment(line) {
                if k == "label" {
                    label = Some(v);
                }
            }
            continue;
        }
        if !header_seen {
            if line != SPECTRUM_HEADER {
                return Err(Error::parse(
                    line_no,
                    format!("expected header {SPECTRUM_HEADER:?}"),
                ));
            }
            header_seen = true;
            first_row = line_no + 1;
            continue;
        }
        let (v, m) = line
            .split_once(',')
            .ok_or_else(|| Error::parse(line_no, "expected value,multiplicity"))?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| Error::parse(line_no, "bad value"))?;
        let m: u64 = m
            .trim()
            .parse()
            .map_err(|_| Error::parse(line_no, "bad multiplicity"))?;
        if let Some(&prev) = values.last() {
            if v <= prev {
                return Err(Error::parse(line_no, "values must be strictly increasing"));
            }
        }
        values.push(v);
        mults.push(m);
    }
    if !header_seen {
        return Err(Error::Invalid("spectrum file has no header".into()));
    }
    Spectrum::new(
        values,
        mults,
        label.unwrap_or_else(|| default_label.to_string()),
    )
    .map_err(|e| match e {
        zetadim_core::Error::InvalidSpectrum { index, reason } => {
            Error::parse(first_row + index, reason)
        }
        other => other.into(),
    })
}
