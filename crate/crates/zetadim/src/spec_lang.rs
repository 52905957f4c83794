//! Spectrum descriptors accepted by the command line.
//!
//! ```text
//! riemann:N            first N computed zeros, u = (t/2π) ln(t/2π)
//! riemann-smooth:N     first N computed zeros, u = θ(t)/π + 1
//! zerofile:PATH        an imported zero table, rescaled like riemann:N
//! circle:N | sphere:N  Dirac ladders
//! torus:D:N            flat torus of dimension D
//! gue:N:SEED           unfolded GUE levels
//! poisson:N:SEED       Poisson levels
//! PATH                 a spectrum CSV file
//! ```

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use zetadim_core::spectra::{
    circle_dirac, sample_spectrum, scale_zeros, scale_zeros_smooth_count, sphere_dirac,
    torus_dirac, EnsembleConfig, EnsembleKind, Spectrum, RNG_NAME,
};
use zetadim_core::zeros::{SearchOptions, ZeroLimit, DEFAULT_CORRECTION_TERMS};

use crate::cache::ZeroCache;
use crate::error::{Error, Result};
use crate::meta::Metadata;
use crate::spectrum_file::parse_spectrum;
use crate::zerofile::import_zero_file;

/// A parsed spectrum descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumSpec {
    /// First N computed zeros with the standard rescaling.
    Riemann(usize),
    /// First N computed zeros unfolded by the smooth zero count.
    RiemannSmooth(usize),
    /// Zero table read from a file.
    ZeroFile(PathBuf),
    /// Circle Dirac ladder.
    Circle(usize),
    /// Torus of dimension `d` with cutoff `n`.
    Torus {
        /// Dimension.
        d: usize,
        /// Lattice cutoff.
        n: usize,
    },
    /// Round 2-sphere ladder.
    Sphere(usize),
    /// Random levels.
    Ensemble(EnsembleConfig),
    /// Spectrum CSV file.
    File(PathBuf),
}

impl FromStr for SpectrumSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::Invalid(format!("invalid spectrum {s:?}: {what}"));
        let int = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| bad("expected a non-negative integer"))
        };
        let Some((kind, rest)) = s.split_once(':') else {
            return Ok(Self::File(s.into()));
        };
        let args: Vec<&str> = rest.split(':').collect();
        let arity = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(bad(&format!("{kind} takes {n} argument(s)")))
            }
        };
        match kind {
            "riemann" => arity(1).and_then(|_| Ok(Self::Riemann(int(args[0])?))),
            "riemann-smooth" => arity(1).and_then(|_| Ok(Self::RiemannSmooth(int(args[0])?))),
            "zerofile" if !rest.is_empty() => Ok(Self::ZeroFile(rest.into())),
            "circle" => arity(1).and_then(|_| Ok(Self::Circle(int(args[0])?))),
            "sphere" => arity(1).and_then(|_| Ok(Self::Sphere(int(args[0])?))),
            "torus" => arity(2).and_then(|_| {
                Ok(Self::Torus {
                    d: int(args[0])?,
                    n: int(args[1])?,
                })
            }),
            "gue" | "poisson" => arity(2).and_then(|_| {
                Ok(Self::Ensemble(EnsembleConfig {
                    size: int(args[0])?,
                    seed: args[1].parse().map_err(|_| bad("expected a 64-bit seed"))?,
                    kind: if kind == "gue" {
                        EnsembleKind::Gue
                    } else {
                        EnsembleKind::Poisson
                    },
                }))
            }),
            _ => Ok(Self::File(s.into())),
        }
    }
}

impl SpectrumSpec {
    /// Builds the spectrum, computing or loading zeros through `cache`.
    pub fn build(&self, cache: &ZeroCache) -> Result<Spectrum> {
        Ok(match self {
            Self::Riemann(n) | Self::RiemannSmooth(n) => {
                if *n == 0 {
                    return Err(Error::Invalid("riemann needs at least one zero".into()));
                }
                let zeros = cache.zeros(ZeroLimit::Count(*n))?;
                if matches!(self, Self::Riemann(_)) {
                    scale_zeros(&zeros)?
                } else {
                    scale_zeros_smooth_count(&zeros)?
                }
            }
            Self::ZeroFile(path) => {
                let zeros = import_zero_file(path)?;
                scale_zeros(&zeros)?.with_label(format!("zerofile:{}", zeros.len()))
            }
            Self::Circle(n) => circle_dirac(*n)?,
            Self::Torus { d, n } => torus_dirac(*d, *n)?,
            Self::Sphere(n) => sphere_dirac(*n)?,
            Self::Ensemble(cfg) => sample_spectrum(cfg)?,
            Self::File(path) => {
                let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
                parse_spectrum(&text, "file")?
            }
        })
    }

    /// Generation settings worth recording next to results. File paths are
    /// left out so outputs do not depend on where inputs live.
    pub fn provenance(&self) -> Metadata {
        let search = SearchOptions::default();
        match self {
            Self::Riemann(_) | Self::RiemannSmooth(_) => Metadata::new()
                .with("zeros", "riemann-siegel")
                .with("correction_terms", DEFAULT_CORRECTION_TERMS)
                .with("zero_tolerance", search.tolerance)
                .with(
                    "unfolding",
                    if matches!(self, Self::Riemann(_)) {
                        "t/2pi*ln(t/2pi)"
                    } else {
                        "theta/pi+1"
                    },
                ),
            Self::ZeroFile(_) => Metadata::new()
                .with("zeros", "imported")
                .with("unfolding", "t/2pi*ln(t/2pi)"),
            Self::Ensemble(_) => Metadata::new().with("rng", RNG_NAME),
            Self::File(_) => Metadata::new().with("source", "file"),
            _ => Metadata::new(),
        }
    }
}
