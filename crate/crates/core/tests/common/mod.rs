#![allow(dead_code)]

use std::f64::consts::PI;

/// Independent area oracle: places the 2n vertices from scratch and sums
/// the shoelace terms. Shares no code with the library.
pub fn oracle_area(values: &[f64], aux: f64) -> f64 {
    let n = values.len();
    let mut pts = Vec::with_capacity(2 * n);
    for (k, &r) in values.iter().enumerate() {
        let main = PI / 2.0 - (2 * k) as f64 * PI / n as f64;
        let side = PI / 2.0 - (2 * k + 1) as f64 * PI / n as f64;
        pts.push((r * main.cos(), r * main.sin()));
        pts.push((aux * side.cos(), aux * side.sin()));
    }
    let mut twice = 0.0;
    for i in 0..pts.len() {
        let (x0, y0) = pts[i];
        let (x1, y1) = pts[(i + 1) % pts.len()];
        twice += x0 * y1 - x1 * y0;
    }
    twice.abs() / 2.0
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300) || (a - b).abs() <= tol * 1e-3
}

pub struct PathInfo {
    pub class: String,
    pub points: Vec<(f64, f64)>,
    pub closed: bool,
    pub stroke: String,
    pub dash: Option<String>,
}

/// Parses `M x,y L x,y ... Z` path data.
pub fn parse_path(d: &str) -> (Vec<(f64, f64)>, bool) {
    let closed = d.trim_end().ends_with('Z');
    let pts = d
        .split(['M', 'L', 'Z'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|p| {
            let (x, y) = p.split_once(',').expect("x,y pair");
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect();
    (pts, closed)
}

pub fn has_class(node: &roxmltree::Node, class: &str) -> bool {
    node.attribute("class")
        .map(|c| c.split_whitespace().any(|t| t == class))
        .unwrap_or(false)
}

pub fn count_class(doc: &roxmltree::Document, tag: &str, class: &str) -> usize {
    doc.descendants()
        .filter(|n| n.has_tag_name(tag) && has_class(n, class))
        .count()
}

pub fn polygons(doc: &roxmltree::Document) -> Vec<PathInfo> {
    doc.descendants()
        .filter(|n| n.has_tag_name("path") && has_class(n, "polygon"))
        .map(|n| {
            let (points, closed) = parse_path(n.attribute("d").unwrap());
            PathInfo {
                class: n.attribute("class").unwrap().to_string(),
                points,
                closed,
                stroke: n.attribute("stroke").unwrap_or_default().to_string(),
                dash: n.attribute("stroke-dasharray").map(str::to_string),
            }
        })
        .collect()
}
