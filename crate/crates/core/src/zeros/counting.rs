use core::f64::consts::PI;

use super::table::ZeroTable;
use super::theta::rs_theta;
use crate::Result;

/// Comparison of a zero table against the smooth counting law at height T.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountingReport {
    /// Height T.
    pub t: f64,
    /// Zeros in the supplied table with height ≤ T, if a table was given.
    pub found: Option<usize>,
    /// θ(T)/π + 1.
    pub smooth_estimate: f64,
    /// Asymptotic zero density ln(T/2π) / 2π.
    pub density_at_t: f64,
}

impl CountingReport {
    /// found − smooth_estimate, when a table was supplied.
    pub fn fluctuation(&self) -> Option<f64> {
        self.found.map(|n| n as f64 - self.smooth_estimate)
    }
}

/// Smooth zero count and density at `t` (≥ 10), optionally against a table.
pub fn count_estimate(t: f64, table: Option<&ZeroTable>) -> Result<CountingReport> {
    let theta = rs_theta(t)?;
    Ok(CountingReport {
        t,
        found: table.map(|z| z.count_up_to(t)),
        smooth_estimate: theta / PI + 1.0,
        density_at_t: libm::log(t / (2.0 * PI)) / (2.0 * PI),
    })
}
