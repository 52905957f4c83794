//! File formats, zero cache and command-line front end for `zetadim-core`.

#![deny(missing_docs)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cache;
pub mod cli;
pub mod compare;
pub mod curve_file;
mod error;
pub mod meta;
pub mod spec_lang;
pub mod spectrum_file;
pub mod svg;
pub mod zerofile;

pub use error::{Error, Result};
pub use zetadim_core as core;
