//! SVG and ASCII drawings of layouts and grid path families.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::layout::GridLayout;
use crate::tree::Tree;
use crate::vptepg::EpgModel;

/// Pixels per grid unit in SVG output.
pub const UNIT_PX: i64 = 20;
const MARGIN_PX: i64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

pub fn render(tree: &Tree, layout: &GridLayout, format: RenderFormat) -> String {
    match format {
        RenderFormat::Svg => svg(tree, layout),
        RenderFormat::Ascii => ascii(tree, layout),
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// SVG at true coordinates, y pointing up, every vertex named.
pub fn svg(tree: &Tree, layout: &GridLayout) -> String {
    let (lo, hi) = layout.bounds();
    let sx = |x: i64| MARGIN_PX + (x - lo.x) * UNIT_PX;
    let sy = |y: i64| MARGIN_PX + (hi.y - y) * UNIT_PX;
    let width = 2 * MARGIN_PX + (hi.x - lo.x) * UNIT_PX;
    let height = 2 * MARGIN_PX + (hi.y - lo.y) * UNIT_PX;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    out.push_str("<g stroke=\"black\" stroke-width=\"2\">\n");
    for (u, v) in tree.edges() {
        let (a, b) = (layout.point(u), layout.point(v));
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            sx(a.x),
            sy(a.y),
            sx(b.x),
            sy(b.y)
        );
    }
    out.push_str("</g>\n<g fill=\"white\" stroke=\"black\">\n");
    for p in layout.coords() {
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="5"/>"#, sx(p.x), sy(p.y));
    }
    out.push_str("</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n");
    for (v, p) in layout.coords().iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}">{}</text>"#,
            sx(p.x) + 6,
            sy(p.y) - 6,
            escape(&tree.display_name(v))
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Text drawing on the compacted grid: only rows and columns holding a
/// vertex are kept, columns three characters apart and rows two.
pub fn ascii(tree: &Tree, layout: &GridLayout) -> String {
    let xs: Vec<i64> = layout
        .coords()
        .iter()
        .map(|p| p.x)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let ys: Vec<i64> = layout
        .coords()
        .iter()
        .map(|p| p.y)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let col = |x: i64| 3 * xs.binary_search(&x).expect("vertex column");
    // Highest y on the first line.
    let row = |y: i64| 2 * (ys.len() - 1 - ys.binary_search(&y).expect("vertex row"));
    let width = 3 * xs.len().saturating_sub(1) + 1;
    let height = 2 * ys.len().saturating_sub(1) + 1;
    let mut grid = vec![vec![' '; width]; height];

    for (u, v) in tree.edges() {
        let (a, b) = (layout.point(u), layout.point(v));
        if a.y == b.y {
            let r = row(a.y);
            let (c0, c1) = (col(a.x).min(col(b.x)), col(a.x).max(col(b.x)));
            for c in grid[r].iter_mut().take(c1).skip(c0 + 1) {
                *c = '-';
            }
        } else if a.x == b.x {
            let c = col(a.x);
            let (r0, r1) = (row(a.y).min(row(b.y)), row(a.y).max(row(b.y)));
            for line in grid.iter_mut().take(r1).skip(r0 + 1) {
                line[c] = if line[c] == '-' { '+' } else { '|' };
            }
        }
    }
    for p in layout.coords() {
        grid[row(p.y)][col(p.x)] = 'o';
    }
    grid.into_iter()
        .map(|line| {
            let s: String = line.into_iter().collect();
            format!("{}\n", s.trim_end())
        })
        .collect()
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Grid paths as colored polylines. Each path is nudged by a small
/// per-path offset so overlapping segments stay distinguishable.
pub fn epg_svg(model: &EpgModel) -> String {
    const PX: f64 = 10.0;
    let pts = model.paths().iter().flatten();
    let min_x = pts.clone().map(|p| p.x).min().unwrap_or(0);
    let max_x = pts.clone().map(|p| p.x).max().unwrap_or(0);
    let min_y = pts.clone().map(|p| p.y).min().unwrap_or(0);
    let max_y = pts.map(|p| p.y).max().unwrap_or(0);
    let margin = MARGIN_PX as f64;
    let width = 2.0 * margin + (max_x - min_x) as f64 * PX;
    let height = 2.0 * margin + (max_y - min_y) as f64 * PX;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    out.push_str("<g fill=\"none\" stroke-width=\"2\">\n");
    for (i, path) in model.paths().iter().enumerate() {
        let shift = ((i % 5) as f64 - 2.0) * 1.5;
        let points: Vec<String> = path
            .iter()
            .map(|p| {
                let x = margin + (p.x - min_x) as f64 * PX + shift;
                let y = margin + (max_y - p.y) as f64 * PX + shift;
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline stroke="{}" points="{}"/>"#,
            PALETTE[i % PALETTE.len()],
            points.join(" ")
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
