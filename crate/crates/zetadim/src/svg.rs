//! Static SVG plot of one or more dimension curves: log Λ on x, D_s on y.
//!
//! Only `svg`, `g`, `line`, `polyline` and `text` elements are emitted.
//! Coordinates are printed with two decimals, so output is byte-stable.

use std::fmt::Write as _;

use zetadim_core::specdim::{DimensionCurve, PlateauReport};

use crate::meta::Metadata;

const WIDTH: f64 = 760.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 200.0;
const TOP: f64 = 36.0;
const BOTTOM: f64 = 52.0;
const COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

/// Upper end of the D_s axis; larger values are drawn clipped to it.
pub const Y_MAX: f64 = 4.0;

/// A curve to draw, with an optional plateau marker.
#[derive(Debug, Clone, Copy)]
pub struct Series<'a> {
    /// Curve data.
    pub curve: &'a DimensionCurve,
    /// Plateau drawn as a dashed segment when found.
    pub plateau: Option<&'a PlateauReport>,
}

/// Mapping between data and pixel coordinates of the plot area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    ln_lo: f64,
    ln_hi: f64,
}

impl Frame {
    /// Frame spanning the cutoff range `[lo, hi]`.
    pub fn new(lo: f64, hi: f64) -> Self {
        let (ln_lo, ln_hi) = (lo.ln(), hi.ln());
        let ln_hi = if ln_hi > ln_lo { ln_hi } else { ln_lo + 1.0 };
        Self { ln_lo, ln_hi }
    }

    fn plot_width() -> f64 {
        WIDTH - LEFT - RIGHT
    }

    fn plot_height() -> f64 {
        HEIGHT - TOP - BOTTOM
    }

    /// Pixel x of a cutoff.
    pub fn x(&self, lambda: f64) -> f64 {
        LEFT + (lambda.ln() - self.ln_lo) / (self.ln_hi - self.ln_lo) * Self::plot_width()
    }

    /// Pixel y of a dimension, clipped to `[0, Y_MAX]`.
    pub fn y(&self, dim: f64) -> f64 {
        TOP + (1.0 - dim.clamp(0.0, Y_MAX) / Y_MAX) * Self::plot_height()
    }

    /// Dimension at pixel y, the inverse of [`Frame::y`] inside the axis.
    pub fn dim_at(&self, y: f64) -> f64 {
        (1.0 - (y - TOP) / Self::plot_height()) * Y_MAX
    }

    /// Cutoff at pixel x, the inverse of [`Frame::x`].
    pub fn lambda_at(&self, x: f64) -> f64 {
        (self.ln_lo + (x - LEFT) / Self::plot_width() * (self.ln_hi - self.ln_lo)).exp()
    }
}

/// Frame covering the cutoffs of every series.
pub fn frame_for(series: &[Series]) -> Frame {
    let lo = series
        .iter()
        .filter_map(|s| s.curve.lambdas.first())
        .fold(f64::INFINITY, |a, &b| a.min(b));
    let hi = series
        .iter()
        .filter_map(|s| s.curve.lambdas.last())
        .fold(0.0, |a: f64, &b| a.max(b));
    if lo.is_finite() && hi > 0.0 {
        Frame::new(lo, hi)
    } else {
        Frame::new(1.0, 10.0)
    }
}

/// Renders the series into an SVG document. `config` is recorded in a
/// leading XML comment.
pub fn render_svg(series: &[Series], title: &str, config: &Metadata) -> String {
    let frame = frame_for(series);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    for (k, v) in config.pairs() {
        writeln!(out, "<!-- {}={} -->", comment_safe(k), comment_safe(v)).unwrap();
    }
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">"
    )
    .unwrap();
    axes(&mut out, &frame, title);
    for (i, s) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let points: Vec<String> = s
            .curve
            .lambdas
            .iter()
            .zip(&s.curve.dims)
            .map(|(&l, &d)| format!("{:.2},{:.2}", frame.x(l), frame.y(d)))
            .collect();
        writeln!(
            out,
            "<g class=\"series\"><polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>",
            points.join(" ")
        )
        .unwrap();
        if let Some(p) = s.plateau.filter(|p| p.found) {
            let y = frame.y(p.mean_dim);
            writeln!(
                out,
                "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"{color}\" stroke-width=\"3\" \
                 stroke-dasharray=\"6 3\" opacity=\"0.6\"/>",
                frame.x(p.lambda_lo),
                frame.x(p.lambda_hi)
            )
            .unwrap();
        }
        out.push_str("</g>\n");
    }
    legend(&mut out, series);
    out.push_str("</svg>\n");
    out
}

fn axes(out: &mut String, frame: &Frame, title: &str) {
    let (x0, x1) = (LEFT, WIDTH - RIGHT);
    let (y0, y1) = (TOP, HEIGHT - BOTTOM);
    out.push_str("<g class=\"axes\" stroke=\"#000\">\n");
    writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y1}\" x2=\"{x1}\" y2=\"{y1}\"/>"
    )
    .unwrap();
    writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\"/>"
    )
    .unwrap();
    let first = (frame.ln_lo / std::f64::consts::LN_10).ceil() as i32;
    let last = (frame.ln_hi / std::f64::consts::LN_10 + 1e-9).floor() as i32;
    for k in first..=last {
        let x = frame.x(10f64.powi(k)).min(x1);
        writeln!(
            out,
            "<line x1=\"{x:.2}\" y1=\"{y1}\" x2=\"{x:.2}\" y2=\"{:.2}\"/>",
            y1 + 5.0
        )
        .unwrap();
        writeln!(
            out,
            "<text x=\"{x:.2}\" y=\"{:.2}\" text-anchor=\"middle\" stroke=\"none\">1e{k}</text>",
            y1 + 18.0
        )
        .unwrap();
    }
    for d in 0..=Y_MAX as i32 {
        let y = frame.y(d as f64);
        writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{x0}\" y2=\"{y:.2}\"/>",
            x0 - 5.0
        )
        .unwrap();
        writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\" stroke=\"none\">{d}</text>",
            x0 - 8.0,
            y + 4.0
        )
        .unwrap();
    }
    out.push_str("</g>\n");
    writeln!(
        out,
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">\u{39b}</text>",
        (x0 + x1) / 2.0,
        HEIGHT - 12.0
    )
    .unwrap();
    writeln!(
        out,
        "<text x=\"16\" y=\"{:.2}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.2})\">D_s</text>",
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    )
    .unwrap();
    writeln!(
        out,
        "<text x=\"{:.2}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>",
        (x0 + x1) / 2.0,
        escape(title)
    )
    .unwrap();
}

fn legend(out: &mut String, series: &[Series]) {
    let x = WIDTH - RIGHT + 16.0;
    out.push_str("<g class=\"legend\">\n");
    for (i, s) in series.iter().enumerate() {
        let y = TOP + 10.0 + 20.0 * i as f64;
        let color = COLORS[i % COLORS.len()];
        writeln!(
            out,
            "<line x1=\"{x:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>",
            x + 20.0
        )
        .unwrap();
        let mut text = escape(&s.curve.spectrum_label);
        if let Some(p) = s.plateau.filter(|p| p.found) {
            write!(text, " ({:.3})", p.mean_dim).unwrap();
        }
        writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\">{text}</text>",
            x + 26.0,
            y + 4.0
        )
        .unwrap();
    }
    out.push_str("</g>\n");
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn comment_safe(s: &str) -> String {
    s.replace("--", "- -")
}

/// Vertex lists of every polyline in a document produced by [`render_svg`].
pub fn polyline_points(svg: &str) -> Vec<Vec<(f64, f64)>> {
    svg.match_indices("<polyline")
        .filter_map(|(i, _)| {
            let rest = &svg[i..];
            let start = rest.find("points=\"")? + 8;
            let end = start + rest[start..].find('"')?;
            rest[start..end]
                .split_whitespace()
                .map(|p| {
                    let (x, y) = p.split_once(',')?;
                    Some((x.parse().ok()?, y.parse().ok()?))
                })
                .collect()
        })
        .collect()
}
