//! `# key=value` comment metadata carried by every emitted file.

use std::fmt::Write as _;

/// Ordered key/value pairs. Keys and values must not contain newlines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Metadata(Vec<(String, String)>);

impl Metadata {
    /// Empty metadata.
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a pair, builder style.
    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.push(key, value);
        self
    }

    /// Appends a pair.
    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.0.push((key.to_string(), value.to_string()));
    }

    /// First value stored under `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// All pairs in insertion order.
    pub fn pairs(&self) -> &[(String, String)] {
        &self.0
    }

    pub(crate) fn write_comments(&self, out: &mut String) {
        for (k, v) in &self.0 {
            writeln!(out, "# {k}={v}").unwrap();
        }
    }

    /// Parses a `# key=value` line; `None` for anything else.
    pub(crate) fn parse_comment(line: &str) -> Option<(String, String)> {
        let (k, v) = line.strip_prefix('#')?.trim_start().split_once('=')?;
        (!k.is_empty() && !k.contains(' ')).then(|| (k.to_string(), v.to_string()))
    }
}
