use alloc::string::String;

/// Errors reported by the numerical core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A height is below the range where an asymptotic expansion is valid.
    #[error("height {t} is below the supported minimum {min}")]
    HeightBelowRange {
        /// Offending height.
        t: f64,
        /// Smallest accepted height.
        min: f64,
    },
    /// Remainder expansion order outside `0..=4`.
    #[error("correction_terms must be in 0..=4, got {0}")]
    CorrectionTerms(usize),
    /// A zero search limit exceeds the desk-scale guardrail.
    #[error("zero search limit {0} exceeds the guardrail of 1e6")]
    LimitTooLarge(f64),
    /// The zero count disagrees with the smooth counting law.
    #[error(
        "missed zero: found {found} zeros up to t = {height}, counting law expects {expected}"
    )]
    MissedZero {
        /// Zeros located up to `height`.
        found: usize,
        /// Rounded smooth count at `height`.
        expected: i64,
        /// Height at which the count was checked.
        height: f64,
    },
    /// A refined zero could not be bracketed by a sign change.
    #[error("zero near t = {0} could not be certified by a sign change")]
    Uncertified(f64),
    /// A zero table violates its invariants.
    #[error("invalid zero table at entry {index}: {reason}")]
    InvalidZeroTable {
        /// Zero-based index of the first offending entry.
        index: usize,
        /// Which invariant failed.
        reason: &'static str,
    },
    /// A spectrum violates its invariants.
    #[error("invalid spectrum at entry {index}: {reason}")]
    InvalidSpectrum {
        /// Zero-based index of the first offending entry.
        index: usize,
        /// Which invariant failed.
        reason: &'static str,
    },
    /// A height is too small for the monotone unit-spacing rescaling.
    #[error("height {0} is not above 2π/e; rescaling would not be monotone")]
    NotScalable(f64),
    /// A size parameter is below its minimum.
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        /// Parameter name.
        what: &'static str,
        /// Smallest accepted value.
        min: usize,
        /// Supplied value.
        got: usize,
    },
    /// Torus dimension outside `1..=3`.
    #[error("torus dimension must be 1, 2 or 3, got {0}")]
    TorusDimension(usize),
    /// Diagonal / off-diagonal length mismatch.
    #[error("off-diagonal length {offdiag} does not match diagonal length {diag}")]
    TridiagonalShape {
        /// Diagonal length.
        diag: usize,
        /// Off-diagonal length.
        offdiag: usize,
    },
    /// QL iteration did not converge.
    #[error("tridiagonal QL iteration did not converge for eigenvalue {0}")]
    NoConvergence(usize),
    /// The ensemble kind does not match the requested sampler.
    #[error("ensemble mismatch: expected {expected}")]
    EnsembleMismatch {
        /// Ensemble the sampler produces.
        expected: &'static str,
    },
    /// A cutoff Λ that is not strictly positive and finite.
    #[error("cutoff must be positive and finite, got {0}")]
    Cutoff(f64),
    /// A Λ grid that cannot be log-spaced.
    #[error("invalid grid: {0}")]
    Grid(String),
    /// Prefix sizes that are not ascending or exceed the table.
    #[error("invalid prefix sizes: {0}")]
    Prefix(String),
}

/// Result alias for the core crate.
pub type Result<T> = core::result::Result<T, Error>;
