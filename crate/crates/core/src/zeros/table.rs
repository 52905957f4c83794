use alloc::vec::Vec;

use crate::{Error, Result};

/// Height of the first nontrivial zero rounded down; tables never go lower.
pub const MIN_ZERO_HEIGHT: f64 = 14.0;

/// Where a [`ZeroTable`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSource {
    /// Located by [`find_zeros`](super::find_zeros).
    Computed,
    /// Read from an external table.
    Imported,
}

/// Ordered positive zero heights t_j with ζ(1/2 + i t_j) = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    heights: Vec<f64>,
    source: ZeroSource,
    abs_error_bound: f64,
}

impl ZeroTable {
    /// Validates and wraps a list of heights.
    ///
    /// Heights must be finite, above 14 and strictly increasing with
    /// consecutive gaps larger than `abs_error_bound`.
    pub fn new(heights: Vec<f64>, source: ZeroSource, abs_error_bound: f64) -> Result<Self> {
        for (i, &t) in heights.iter().enumerate() {
            if !t.is_finite() || t <= MIN_ZERO_HEIGHT {
                return Err(Error::InvalidZeroTable {
                    index: i,
                    reason: "height must be finite and above 14",
                });
            }
            if i > 0 {
                let gap = t - heights[i - 1];
                if gap <= 0.0 {
                    return Err(Error::InvalidZeroTable {
                        index: i,
                        reason: "heights must be strictly increasing",
                    });
                }
                if gap <= abs_error_bound {
                    return Err(Error::InvalidZeroTable {
                        index: i,
                        reason: "duplicate height within the error bound",
                    });
                }
            }
        }
        Ok(Self {
            heights,
            source,
            abs_error_bound,
        })
    }

    /// Heights in increasing order.
    pub fn heights(&self) -> &[f64] {
        &self.heights
    }

    /// Provenance of the heights.
    pub fn source(&self) -> ZeroSource {
        self.source
    }

    /// Guaranteed half-width of the bracket around each height.
    pub fn abs_error_bound(&self) -> f64 {
        self.abs_error_bound
    }

    /// Number of zeros.
    pub fn len(&self) -> usize {
        self.heights.len()
    }

    /// True when the table holds no zeros.
    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// The first `n` zeros (all of them if `n` exceeds the length).
    pub fn prefix(&self, n: usize) -> ZeroTable {
        ZeroTable {
            heights: self.heights[..n.min(self.heights.len())].to_vec(),
            source: self.source,
            abs_error_bound: self.abs_error_bound,
        }
    }

    /// Number of heights ≤ `t`.
    pub fn count_up_to(&self, t: f64) -> usize {
        self.heights.partition_point(|&h| h <= t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn accepts_sorted_heights() {
        let z = ZeroTable::new(vec![14.1, 21.0], ZeroSource::Imported, 1e-6).unwrap();
        assert_eq!(z.len(), 2);
        assert_eq!(z.count_up_to(21.0), 2);
        assert_eq!(z.count_up_to(20.0), 1);
    }

    #[test]
    fn rejects_invariant_violations() {
        let e = ZeroTable::new(vec![21.0, 14.1], ZeroSource::Imported, 0.0).unwrap_err();
        assert!(matches!(e, Error::InvalidZeroTable { index: 1, .. }));
        let e = ZeroTable::new(vec![13.0], ZeroSource::Imported, 0.0).unwrap_err();
        assert!(matches!(e, Error::InvalidZeroTable { index: 0, .. }));
        let e = ZeroTable::new(vec![20.0, 20.0 + 1e-9], ZeroSource::Computed, 1e-8).unwrap_err();
        assert!(matches!(e, Error::InvalidZeroTable { index: 1, .. }));
    }
}
