//! Nontrivial zeta zeros on the critical line.
//!
//! [`find_zeros`] brackets zeros of Hardy's `Z` between Gram points using the
//! Riemann–Siegel formula, and [`reference`] provides an Euler–Maclaurin
//! evaluator that shares no code with it.

mod counting;
mod eta;
pub mod reference;
mod riemann_siegel;
mod rs_coefficients;
mod search;
mod table;
mod theta;

pub use counting::{count_estimate, CountingReport};
pub use eta::{eta_z, eta_zeta_half_line, POLISH_HEIGHT};
pub use reference::{reference_zeros_in, reference_zeta_half_line};
pub use riemann_siegel::{rs_z, DEFAULT_CORRECTION_TERMS, MAX_CORRECTION_TERMS};
pub use search::{find_zeros, SearchOptions, ZeroLimit, MAX_LIMIT};
pub use table::{ZeroSource, ZeroTable, MIN_ZERO_HEIGHT};
pub use theta::{gram_point, rs_theta, THETA_MIN_HEIGHT};
