use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use super::{AggregateRow, ReportError};
use crate::algorithm::AlgorithmId;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 160.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;
const TICKS: usize = 5;

fn color(algorithm: AlgorithmId) -> &'static str {
    match algorithm {
        AlgorithmId::Merge => "#1f77b4",
        AlgorithmId::Quick => "#ff7f0e",
        AlgorithmId::Counting => "#2ca02c",
        AlgorithmId::Radix => "#d62728",
        AlgorithmId::Qr => "#9467bd",
    }
}

fn label(algorithm: AlgorithmId) -> &'static str {
    match algorithm {
        AlgorithmId::Merge => "Merge Sort",
        AlgorithmId::Quick => "Quicksort",
        AlgorithmId::Counting => "Counting Sort",
        AlgorithmId::Radix => "Radix Sort",
        AlgorithmId::Qr => "QR Sort",
    }
}

/// Widens a degenerate `[lo, hi]` interval so it can be mapped to pixels.
fn pad(lo: f64, hi: f64) -> (f64, f64) {
    if hi > lo {
        (lo, hi)
    } else {
        (lo - 1.0, hi + 1.0)
    }
}

/// SVG line chart of `ln(mean units)` against `n`, one polyline per
/// algorithm. Rows with a non-finite log are left out.
pub fn render_svg(rows: &[AggregateRow]) -> Result<String, ReportError> {
    let mut series: BTreeMap<AlgorithmId, Vec<(f64, f64)>> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.ln_mean_units.is_finite()) {
        series
            .entry(r.algorithm)
            .or_default()
            .push((r.n as f64, r.ln_mean_units));
    }
    if series.is_empty() {
        return Err(ReportError::Empty);
    }
    for pts in series.values_mut() {
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    }

    let all = series.values().flatten();
    let (x_lo, x_hi) = pad(
        all.clone().map(|p| p.0).fold(f64::INFINITY, f64::min),
        all.clone().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max),
    );
    let (y_lo, y_hi) = pad(
        all.clone()
            .map(|p| p.1)
            .fold(f64::INFINITY, f64::min)
            .floor(),
        all.map(|p| p.1).fold(f64::NEG_INFINITY, f64::max).ceil(),
    );

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let py = |y: f64| TOP + (y_hi - y) / (y_hi - y_lo) * plot_h;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );

    for i in 0..=TICKS {
        let t = i as f64 / TICKS as f64;
        let x = x_lo + t * (x_hi - x_lo);
        let y = y_lo + t * (y_hi - y_lo);
        let (gx, gy) = (px(x), py(y));
        let _ = writeln!(
            s,
            r#"<line x1="{gx:.2}" y1="{:.2}" x2="{gx:.2}" y2="{:.2}" stroke="black"/><text x="{gx:.2}" y="{:.2}" text-anchor="middle">{x:.0}</text>"#,
            TOP + plot_h,
            TOP + plot_h + 5.0,
            TOP + plot_h + 20.0
        );
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{gy:.2}" x2="{LEFT}" y2="{gy:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{y:.2}</text>"#,
            LEFT - 5.0,
            LEFT - 8.0,
            gy + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">array length n</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text transform="translate(20 {:.2}) rotate(-90)" text-anchor="middle">ln(mean computational units)</text>"#,
        TOP + plot_h / 2.0
    );

    for (i, (algorithm, pts)) in series.iter().enumerate() {
        let c = color(*algorithm);
        let points: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline data-algorithm="{algorithm}" fill="none" stroke="{c}" stroke-width="1.5" points="{}"/>"#,
            points.join(" ")
        );
        let ly = TOP + 10.0 + 20.0 * i as f64;
        let lx = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            s,
            r#"<g class="legend"><line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{c}" stroke-width="2"/><text x="{}" y="{}">{}</text></g>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0,
            label(*algorithm)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn render_plot(rows: &[AggregateRow], path: &Path) -> Result<(), ReportError> {
    let svg = render_svg(rows)?;
    std::fs::write(path, svg).map_err(|source| ReportError::Io {
        path: path.to_path_buf(),
        source,
    })
}
