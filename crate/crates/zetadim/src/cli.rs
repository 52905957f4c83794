//! Command-line definitions and their execution.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use zetadim_core::specdim::{
    detect_plateau, dimension_curve, plateau_growth, DimensionCurve, LambdaGrid, PlateauParams,
    PlateauReport,
};
use zetadim_core::spectra::scale_zeros;
use zetadim_core::zeros::reference_zeros_in;
use zetadim_core::zeros::ZeroLimit;

use crate::cache::ZeroCache;
use crate::compare::compare_curves;
use crate::curve_file::{format_curve, format_plateau, parse_curve, PLATEAU_HEADER};
use crate::error::{Error, Result};
use crate::meta::Metadata;
use crate::spec_lang::SpectrumSpec;
use crate::svg::{render_svg, Series};
use crate::zerofile::{format_zero_file, import_zero_file};

/// Exit status when a plateau search finds nothing.
pub const EXIT_NO_PLATEAU: i32 = 3;
/// Largest deviation `zeros check` accepts.
pub const CHECK_TOLERANCE: f64 = 1e-6;

/// Spectral dimension of Riemann zeros and reference spectra.
#[derive(Debug, Parser)]
#[command(name = "zetadim", version)]
pub struct Cli {
    /// Zero cache directory [env: ZETADIM_CACHE, default: ./.zetadim-cache].
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Command to run.
    #[command(subcommand)]
    pub command: Command,
}

/// Top-level commands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute, import or verify zeta zeros.
    #[command(subcommand)]
    Zeros(ZerosCommand),
    /// Write the heat trace and spectral dimension of a spectrum as CSV.
    Dim(DimArgs),
    /// Detect the plateau of a curve file.
    Plateau(PlateauArgs),
    /// Compare two curve files on their common cutoff range.
    Compare(CompareArgs),
    /// Overlay the curves of several zero counts in one SVG.
    Figure(FigureArgs),
}

/// `zeros` subcommands.
#[derive(Debug, Subcommand)]
pub enum ZerosCommand {
    /// Compute zeros on the critical line.
    Compute(ComputeArgs),
    /// Validate a zero file and store it in the cache.
    Import {
        /// Zero file to read.
        #[arg(long)]
        file: PathBuf,
    },
    /// Compare computed zeros with the independent reference evaluator.
    Check {
        /// Number of zeros to check.
        #[arg(long)]
        count: usize,
        /// Sign-sweep step of the reference search.
        #[arg(long, default_value_t = 0.05)]
        step: f64,
    },
}

/// Arguments of `zeros compute`.
#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Number of zeros.
    #[arg(long, required_unless_present = "tmax", conflicts_with = "tmax")]
    pub count: Option<usize>,
    /// Largest height.
    #[arg(long)]
    pub tmax: Option<f64>,
    /// Output file [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Plateau detector flags shared by several commands.
#[derive(Debug, Args, Clone, Copy)]
pub struct DetectorArgs {
    /// Largest |dD_s/d ln Λ| inside a plateau.
    #[arg(long, default_value_t = PlateauParams::default().slope_tol)]
    pub slope_tol: f64,
    /// Smallest plateau width in e-folds of Λ.
    #[arg(long, default_value_t = PlateauParams::default().min_width_efolds)]
    pub min_width: f64,
    /// Also search cutoffs above u_max/3.
    #[arg(long)]
    pub include_saturation: bool,
}

impl DetectorArgs {
    fn params(&self) -> PlateauParams {
        PlateauParams {
            slope_tol: self.slope_tol,
            min_width_efolds: self.min_width,
            exclude_saturation: !self.include_saturation,
        }
    }
}

/// Arguments of `dim`.
#[derive(Debug, Args)]
pub struct DimArgs {
    /// riemann:N | riemann-smooth:N | zerofile:PATH | circle:N | torus:D:N |
    /// sphere:N | gue:N:SEED | poisson:N:SEED | PATH
    #[arg(long)]
    pub spectrum: String,
    /// Cutoff grid lo:hi:points [default: u_min/10 : 10·u_max : 200].
    #[arg(long)]
    pub grid: Option<String>,
    /// Count each value once instead of ±u.
    #[arg(long)]
    pub no_symmetrize: bool,
    /// Curve CSV [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also render the curve as SVG.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

/// Arguments of `plateau`.
#[derive(Debug, Args)]
pub struct PlateauArgs {
    /// Curve CSV written by `dim`.
    #[arg(long)]
    pub curve: PathBuf,
    /// Plateau detector settings.
    #[command(flatten)]
    pub detector: DetectorArgs,
}

/// Arguments of `compare`.
#[derive(Debug, Args)]
pub struct CompareArgs {
    /// First curve CSV.
    #[arg(long)]
    pub a: PathBuf,
    /// Second curve CSV.
    #[arg(long)]
    pub b: PathBuf,
    /// Comparison CSV [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Plateau detector settings.
    #[command(flatten)]
    pub detector: DetectorArgs,
}

/// Arguments of `figure`.
#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Ascending zero counts, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
    pub counts: Vec<usize>,
    /// Shared cutoff grid lo:hi:points [default: from the largest count].
    #[arg(long)]
    pub grid: Option<String>,
    /// Count each value once instead of ±u.
    #[arg(long)]
    pub no_symmetrize: bool,
    /// SVG output.
    #[arg(long)]
    pub out: PathBuf,
    /// Plateau detector settings.
    #[command(flatten)]
    pub detector: DetectorArgs,
}

/// Parses `lo:hi:points`.
pub fn parse_grid(s: &str) -> Result<LambdaGrid> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || Error::Invalid(format!("invalid grid {s:?}, expected lo:hi:points"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo = parts[0].parse().map_err(|_| bad())?;
    let hi = parts[1].parse().map_err(|_| bad())?;
    let points = parts[2].parse().map_err(|_| bad())?;
    Ok(LambdaGrid::new(lo, hi, points)?)
}

fn grid_text(g: &LambdaGrid) -> String {
    format!("{}:{}:{}", g.min, g.max, g.points)
}

fn tool() -> String {
    format!("zetadim {}", env!("CARGO_PKG_VERSION"))
}

fn detector_meta(meta: &mut Metadata, p: &PlateauParams) {
    meta.push("slope_tol", p.slope_tol);
    meta.push("min_width_efolds", p.min_width_efolds);
    meta.push("exclude_saturation", p.exclude_saturation);
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Error::io("<stdout>", e)),
    }
}

fn read_curve(path: &Path) -> Result<(DimensionCurve, Metadata)> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_curve(&text).map_err(|e| match e {
        Error::Parse { line, reason } => {
            Error::Invalid(format!("{}: line {line}: {reason}", path.display()))
        }
        other => other,
    })
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: Cli) -> Result<i32> {
    let cache = ZeroCache::resolve(cli.cache_dir.as_deref());
    match cli.command {
        Command::Zeros(cmd) => zeros(cmd, &cache),
        Command::Dim(args) => dim(args, &cache),
        Command::Plateau(args) => plateau(args),
        Command::Compare(args) => compare(args),
        Command::Figure(args) => figure(args, &cache),
    }
}

fn zeros(cmd: ZerosCommand, cache: &ZeroCache) -> Result<i32> {
    match cmd {
        ZerosCommand::Compute(args) => {
            let limit = match (args.count, args.tmax) {
                (Some(n), None) => ZeroLimit::Count(n),
                (None, Some(t)) => ZeroLimit::MaxHeight(t),
                _ => {
                    return Err(Error::Invalid(
                        "give exactly one of --count and --tmax".into(),
                    ))
                }
            };
            let table = cache.zeros(limit)?;
            write_output(args.out.as_deref(), &format_zero_file(&table))?;
            if let Some(last) = table.heights().last() {
                eprintln!("{} zeros, last at {last}", table.len());
            }
            Ok(0)
        }
        ZerosCommand::Import { file } => {
            let table = import_zero_file(&file).map_err(|e| match e {
                Error::Parse { line, reason } => {
                    Error::Invalid(format!("{}: line {line}: {reason}", file.display()))
                }
                other => other,
            })?;
            let stored = cache.store_imported(&table)?;
            println!(
                "imported {} zeros, abs_error_bound={}, stored as {}",
                table.len(),
                table.abs_error_bound(),
                stored
                    .file_name()
                    .and_then(|n| n.to_str())
                    .unwrap_or_default()
            );
            Ok(0)
        }
        ZerosCommand::Check { count, step } => {
            if count == 0 || !(step > 0.0) {
                return Err(Error::Invalid(
                    "check needs --count ≥ 1 and --step > 0".into(),
                ));
            }
            let table = cache.zeros(ZeroLimit::Count(count))?;
            let h = table.heights();
            let oracle = reference_zeros_in(10.0, h[h.len() - 1] + 1e-4, step);
            let max_dev = h
                .iter()
                .zip(&oracle)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            println!(
                "count={} oracle_count={} max_abs_deviation={max_dev:e} tolerance={CHECK_TOLERANCE:e}",
                h.len(),
                oracle.len()
            );
            if oracle.len() != h.len() || !(max_dev <= CHECK_TOLERANCE) {
                return Err(Error::Invalid(
                    "computed zeros disagree with the reference evaluator".into(),
                ));
            }
            Ok(0)
        }
    }
}

fn dim(args: DimArgs, cache: &ZeroCache) -> Result<i32> {
    let spec_desc: SpectrumSpec = args.spectrum.parse()?;
    let spectrum = spec_desc.build(cache)?;
    let grid = match &args.grid {
        Some(g) => parse_grid(g)?,
        None => LambdaGrid::for_spectrum(&spectrum),
    };
    let curve = dimension_curve(&spectrum, &grid, !args.no_symmetrize)?;
    let mut meta = Metadata::new().with("tool", tool());
    for (k, v) in spec_desc.provenance().pairs() {
        meta.push(k, v);
    }
    meta.push("grid", grid_text(&grid));
    meta.push("grid_spacing", "log");
    write_output(args.out.as_deref(), &format_curve(&curve, &meta))?;
    if let Some(svg_path) = &args.svg {
        let params = PlateauParams::default();
        let report = detect_plateau(&curve, &params);
        detector_meta(&mut meta, &params);
        let title = format!("Spectral dimension of {}", curve.spectrum_label);
        let svg = render_svg(
            &[Series {
                curve: &curve,
                plateau: Some(&report),
            }],
            &title,
            &meta,
        );
        fs::write(svg_path, svg).map_err(|e| Error::io(svg_path, e))?;
    }
    Ok(0)
}

fn plateau(args: PlateauArgs) -> Result<i32> {
    let (curve, _) = read_curve(&args.curve)?;
    let params = args.detector.params();
    let report = detect_plateau(&curve, &params);
    let mut meta = Metadata::new().with("curve", &curve.spectrum_label);
    detector_meta(&mut meta, &params);
    let mut out = String::new();
    meta.write_comments(&mut out);
    out.push_str(&format_plateau(&report));
    write_output(None, &out)?;
    Ok(if report.found { 0 } else { EXIT_NO_PLATEAU })
}

fn compare(args: CompareArgs) -> Result<i32> {
    let (a, _) = read_curve(&args.a)?;
    let (b, _) = read_curve(&args.b)?;
    let params = args.detector.params();
    let cmp = compare_curves(&a, &b, &params)?;
    let mut out = String::new();
    let mut meta = Metadata::new().with("tool", tool());
    detector_meta(&mut meta, &params);
    meta.write_comments(&mut out);
    out.push_str(&cmp.to_csv());
    write_output(args.out.as_deref(), &out)?;
    Ok(0)
}

/// Header of the table printed by `figure`.
pub const FIGURE_HEADER: &str = "n,lambda_lo,lambda_hi,mean_dim,std_dim,width_efolds,found";

fn figure(args: FigureArgs, cache: &ZeroCache) -> Result<i32> {
    let largest = *args
        .counts
        .iter()
        .max()
        .ok_or_else(|| Error::Invalid("no counts given".into()))?;
    let zeros = cache.zeros(ZeroLimit::Count(largest))?;
    let grid = match &args.grid {
        Some(g) => parse_grid(g)?,
        None => LambdaGrid::for_spectrum(&scale_zeros(&zeros)?),
    };
    let params = args.detector.params();
    let growth = plateau_growth(
        &zeros,
        &args.counts,
        Some(grid),
        &params,
        !args.no_symmetrize,
    )?;

    let mut meta = Metadata::new().with("tool", tool());
    for (k, v) in SpectrumSpec::Riemann(largest).provenance().pairs() {
        meta.push(k, v);
    }
    meta.push(
        "counts",
        args.counts
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    meta.push("grid", grid_text(&grid));
    meta.push("symmetrize", !args.no_symmetrize);
    detector_meta(&mut meta, &params);

    let series: Vec<Series> = growth
        .iter()
        .map(|g| Series {
            curve: &g.curve,
            plateau: Some(&g.report),
        })
        .collect();
    let svg = render_svg(&series, "Spectral dimension of rescaled zeta zeros", &meta);
    fs::write(&args.out, svg).map_err(|e| Error::io(&args.out, e))?;

    let mut table = String::new();
    meta.write_comments(&mut table);
    table.push_str(FIGURE_HEADER);
    table.push('\n');
    for g in &growth {
        let row = format_plateau(&g.report);
        let data = row.lines().nth(1).unwrap_or_default();
        table.push_str(&format!("{},{data}\n", g.size));
    }
    write_output(None, &table)?;
    Ok(0)
}

/// Parses a `figure` table row back into its count and report.
pub fn parse_figure_row(row: &str) -> Option<(usize, PlateauReport)> {
    let (n, rest) = row.split_once(',')?;
    let report = crate::curve_file::parse_plateau(&format!("{PLATEAU_HEADER}\n{rest}\n")).ok()?;
    Some((n.parse().ok()?, report))
}
