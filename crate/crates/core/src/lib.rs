//! Numerical core for studying the spectral dimension of the Riemann zeros.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised in three layers:
//!
//! - [`zeros`]: the Riemann–Siegel `Z` function, Gram-block zero search,
//!   an independent Euler–Maclaurin reference evaluator and the smooth
//!   zero-counting law.
//! - [`spectra`]: the [`Spectrum`](spectra::Spectrum) type, the unit-spacing
//!   rescaling of zero heights, exact geometric baselines (circle, torus,
//!   sphere) and random-matrix / Poisson surrogates.
//! - [`specdim`]: the heat trace `Tr exp(-D²/Λ²)`, its logarithmic
//!   derivative, dimension curves and plateau detection.
//!
//! Everything here is a pure function of its inputs; IO and file formats
//! live in the `zetadim` crate.

#![no_std]
#![deny(missing_docs)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod sum;

pub mod specdim;
pub mod spectra;
pub mod zeros;

pub use error::{Error, Result};
