//! Deterministic SVG scatter plots for 2-dimensional embeddings.

use crate::error::{Error, Result};
use crate::pipeline::Embedding;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 640.0;
const MARGIN: f64 = 60.0;

/// Affine viewport transform with equal units-per-pixel on both axes, so
/// plotted distances stay faithful to embedded distances.
#[derive(Debug, Clone, Copy)]
pub struct PlotLayout {
    x_min: f64,
    y_max: f64,
    scale: f64,
}

impl PlotLayout {
    pub fn fit(points: &[[f64; 2]]) -> PlotLayout {
        let mut x_min = f64::INFINITY;
        let mut x_max = f64::NEG_INFINITY;
        let mut y_min = f64::INFINITY;
        let mut y_max = f64::NEG_INFINITY;
        for p in points {
            x_min = x_min.min(p[0]);
            x_max = x_max.max(p[0]);
            y_min = y_min.min(p[1]);
            y_max = y_max.max(p[1]);
        }
        let span = (x_max - x_min).max(y_max - y_min).max(1e-9);
        let pad = 0.08 * span;
        // center the data in a square viewport
        let cx = 0.5 * (x_min + x_max);
        let cy = 0.5 * (y_min + y_max);
        let half = 0.5 * span + pad;
        let scale = (WIDTH - 2.0 * MARGIN) / (2.0 * half);
        PlotLayout { x_min: cx - half, y_max: cy + half, scale }
    }

    /// Map data coordinates to pixel coordinates (y axis flipped).
    pub fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (MARGIN + (x - self.x_min) * self.scale, MARGIN + (self.y_max - y) * self.scale)
    }

    fn data_x(&self, px: f64) -> f64 {
        self.x_min + (px - MARGIN) / self.scale
    }

    fn data_y(&self, py: f64) -> f64 {
        self.y_max - (py - MARGIN) / self.scale
    }
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" { "0.00".to_string() } else { s }
}

fn tick_step(span: f64) -> f64 {
    let raw = span / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let step = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    step * mag
}

/// Render a labeled scatter plot of a 2-dimensional embedding.
///
/// Output is byte-deterministic for identical input.
pub fn render_svg(embedding: &Embedding, labels: &[String]) -> Result<String> {
    if embedding.dims() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: embedding.dims() });
    }
    let points: Vec<[f64; 2]> =
        embedding.coords.iter().map(|r| [r[0], r[1]]).collect();
    let layout = PlotLayout::fit(&points);

    let mut out = String::new();
    out.push_str(&format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str("<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\"/>\n");
    out.push_str(&format!(
        "<rect x=\"{m}\" y=\"{m}\" width=\"{w}\" height=\"{h}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n",
        m = MARGIN,
        w = WIDTH - 2.0 * MARGIN,
        h = HEIGHT - 2.0 * MARGIN
    ));

    // axis ticks, chosen on round data values
    let x_lo = layout.data_x(MARGIN);
    let x_hi = layout.data_x(WIDTH - MARGIN);
    let y_lo = layout.data_y(HEIGHT - MARGIN);
    let y_hi = layout.data_y(MARGIN);
    let step = tick_step(x_hi - x_lo);
    let mut t = (x_lo / step).ceil() * step;
    while t <= x_hi + 1e-12 * step.abs() {
        let (px, _) = layout.map(t, 0.0);
        out.push_str(&format!(
            "<line x1=\"{x}\" y1=\"{y0}\" x2=\"{x}\" y2=\"{y1}\" stroke=\"black\" stroke-width=\"1\"/>\n",
            x = fmt(px),
            y0 = fmt(HEIGHT - MARGIN),
            y1 = fmt(HEIGHT - MARGIN + 6.0)
        ));
        out.push_str(&format!(
            "<text x=\"{x}\" y=\"{y}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{v}</text>\n",
            x = fmt(px),
            y = fmt(HEIGHT - MARGIN + 20.0),
            v = fmt(t)
        ));
        t += step;
    }
    let mut t = (y_lo / step).ceil() * step;
    while t <= y_hi + 1e-12 * step.abs() {
        let (_, py) = layout.map(0.0, t);
        out.push_str(&format!(
            "<line x1=\"{x0}\" y1=\"{y}\" x2=\"{x1}\" y2=\"{y}\" stroke=\"black\" stroke-width=\"1\"/>\n",
            x0 = fmt(MARGIN - 6.0),
            x1 = fmt(MARGIN),
            y = fmt(py)
        ));
        out.push_str(&format!(
            "<text x=\"{x}\" y=\"{y}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">{v}</text>\n",
            x = fmt(MARGIN - 10.0),
            y = fmt(py + 4.0),
            v = fmt(t)
        ));
        t += step;
    }

    for (p, label) in points.iter().zip(labels) {
        let (px, py) = layout.map(p[0], p[1]);
        out.push_str(&format!(
            "<circle cx=\"{x}\" cy=\"{y}\" r=\"4\" fill=\"steelblue\"/>\n",
            x = fmt(px),
            y = fmt(py)
        ));
        out.push_str(&format!(
            "<text x=\"{x}\" y=\"{y}\" font-family=\"sans-serif\" font-size=\"13\">{label}</text>\n",
            x = fmt(px + 7.0),
            y = fmt(py - 7.0)
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Render and write to `path`.
pub fn emit_svg(
    embedding: &Embedding,
    labels: &[String],
    path: &std::path::Path,
) -> Result<()> {
    let svg = render_svg(embedding, labels)?;
    std::fs::write(path, svg)
        .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}
