//! Deterministic SVG output for single, pairwise and weighted origami plots.
//!
//! Element classes are stable so downstream tools can pick the chart apart:
//! `grid-ring`, `axis-main`, `axis-aux`, `polygon-1`/`polygon-2`, `marker`,
//! `tick-label`, `axis-tip-label`, `attribute-label`, `legend-entry` and
//! `title`.

mod options;

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write;

pub use options::{
    AxisType, LineType, OptionsPatch, PointSymbol, RenderOptions, Rgba, SeriesStyle, DASH,
    MIN_CANVAS, PRIMARY, SECONDARY,
};

use crate::error::{OrigamiError, Result};
use crate::geometry::{
    apply_weights, build_polygon, AuxiliaryConfig, Dataset, PolygonGeometry, WeightVector,
};

/// Plot radius as a fraction of the shorter canvas edge.
pub const RADIUS_FRACTION: f64 = 0.38;
/// Attribute label distance as a multiple of the plot radius.
pub const LABEL_FRACTION: f64 = 1.08;
/// Thinnest stroke used for grid rings and axes.
pub const MIN_GRID_STROKE: f64 = 0.25;
/// Base font size in pixels, scaled by the `*cex` options.
pub const BASE_FONT: f64 = 12.0;
const MARKER_RADIUS: f64 = 3.0;
const PX_PER_INCH: f64 = 96.0;

/// Pixel frame of a chart with `n` attributes.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub center: (f64, f64),
    pub radius: f64,
    pub label_radius: f64,
    /// Unit vector of each main axis in SVG coordinates (y grows downward).
    pub directions: Vec<(f64, f64)>,
}

impl Frame {
    /// Pixel position of a point `fraction` of the way out along `angle`
    /// (math convention, counter-clockwise from +x).
    pub fn point(&self, angle: f64, fraction: f64) -> (f64, f64) {
        let r = self.radius * fraction;
        (
            self.center.0 + r * angle.cos(),
            self.center.1 - r * angle.sin(),
        )
    }
}

/// Main axis `k` points at `pi/2 - 2*pi*k/n`, i.e. the first axis straight
/// up and the rest clockwise.
pub fn layout(n: usize, opts: &RenderOptions) -> Result<Frame> {
    if n < crate::geometry::MIN_ATTRIBUTES {
        return Err(OrigamiError::TooFewAttributes { found: n });
    }
    if opts.width < MIN_CANVAS || opts.height < MIN_CANVAS {
        return Err(OrigamiError::CanvasTooSmall {
            width: opts.width,
            height: opts.height,
        });
    }
    let (w, h) = (opts.width as f64, opts.height as f64);
    let radius = RADIUS_FRACTION * w.min(h);
    let directions = (0..n)
        .map(|k| {
            let a = main_angle(k, n);
            (a.cos(), -a.sin())
        })
        .collect();
    Ok(Frame {
        center: (w / 2.0, h / 2.0),
        radius,
        label_radius: LABEL_FRACTION * radius,
        directions,
    })
}

fn main_angle(k: usize, n: usize) -> f64 {
    FRAC_PI_2 - 2.0 * PI * k as f64 / n as f64
}

fn aux_angle(k: usize, n: usize) -> f64 {
    FRAC_PI_2 - (2 * k + 1) as f64 * PI / n as f64
}

/// Maps data values to a fraction of the plot radius.
#[derive(Debug, Clone, Copy)]
struct RadialScale {
    floor: f64,
    scale_max: f64,
}

impl RadialScale {
    fn new(scale_max: f64, opts: &RenderOptions) -> Self {
        let floor = if opts.center_zero {
            0.0
        } else {
            scale_max / opts.segments as f64
        };
        Self { floor, scale_max }
    }

    fn fraction(&self, v: f64) -> f64 {
        if self.floor == 0.0 {
            v / self.scale_max
        } else {
            ((v - self.floor) / (self.scale_max - self.floor)).max(0.0)
        }
    }

    /// Value shown at grid ring `j` of `seg`.
    fn ring_value(&self, j: u32, seg: u32) -> f64 {
        self.floor + (self.scale_max - self.floor) * j as f64 / seg as f64
    }
}

/// Pixel coordinates of every polygon vertex, in vertex order.
pub fn polygon_pixels(
    frame: &Frame,
    pg: &PolygonGeometry,
    scale_max: f64,
    opts: &RenderOptions,
) -> Vec<(f64, f64)> {
    let scale = RadialScale::new(scale_max, opts);
    pg.vertices()
        .iter()
        .map(|v| frame.point(v.angle, scale.fraction(v.radius)))
        .collect()
}

struct Series<'a> {
    label: String,
    polygon: PolygonGeometry,
    style: SeriesStyle,
    dash: Option<&'static str>,
    extra_class: Option<&'a str>,
}

/// Origami plot of one object.
pub fn render_single(
    ds: &Dataset,
    object: &str,
    aux: AuxiliaryConfig,
    opts: &RenderOptions,
) -> Result<String> {
    prepare(ds, aux, opts)?;
    let i = ds.object_index(object)?;
    let series = Series {
        label: ds.object_names()[i].clone(),
        polygon: build_polygon(&ds.values()[i], aux)?,
        style: opts.primary,
        dash: opts.line_type.dasharray(),
        extra_class: None,
    };
    Chart::new(ds, opts)?.render(&[series], false)
}

/// Two objects on shared axes: `object1` in the primary style, drawn first,
/// and `object2` in the secondary style on top.
pub fn render_pairwise(
    ds: &Dataset,
    object1: &str,
    object2: &str,
    aux: AuxiliaryConfig,
    opts: &RenderOptions,
) -> Result<String> {
    prepare(ds, aux, opts)?;
    let i = ds.object_index(object1)?;
    let j = ds.object_index(object2)?;
    if i == j {
        return Err(OrigamiError::SameObject(ds.object_names()[i].clone()));
    }
    let dash = opts.line_type.dasharray();
    let series = [
        Series {
            label: ds.object_names()[i].clone(),
            polygon: build_polygon(&ds.values()[i], aux)?,
            style: opts.primary,
            dash,
            extra_class: None,
        },
        Series {
            label: ds.object_names()[j].clone(),
            polygon: build_polygon(&ds.values()[j], aux)?,
            style: opts.secondary,
            dash,
            extra_class: None,
        },
    ];
    Chart::new(ds, opts)?.render(&series, true)
}

/// Unweighted polygon in the primary style plus the weighted polygon in the
/// secondary style with a dashed outline. Both share the auxiliary radius.
pub fn render_weighted(
    ds: &Dataset,
    object: &str,
    wv: &WeightVector,
    aux: AuxiliaryConfig,
    opts: &RenderOptions,
) -> Result<String> {
    prepare(ds, aux, opts)?;
    let i = ds.object_index(object)?;
    let values = &ds.values()[i];
    let weighted = apply_weights(values, wv)?;
    let name = &ds.object_names()[i];
    let series = [
        Series {
            label: name.clone(),
            polygon: build_polygon(values, aux)?,
            style: opts.primary,
            dash: opts.line_type.dasharray(),
            extra_class: None,
        },
        Series {
            label: format!("{name} (weighted)"),
            polygon: build_polygon(&weighted, aux)?,
            style: opts.secondary,
            dash: Some(DASH),
            extra_class: Some("weighted"),
        },
    ];
    Chart::new(ds, opts)?.render(&series, true)
}

fn prepare(ds: &Dataset, aux: AuxiliaryConfig, opts: &RenderOptions) -> Result<()> {
    opts.validate()?;
    aux.check_against(ds.scale_max())?;
    if !opts.center_zero && aux.value() < ds.scale_max() / opts.segments as f64 {
        log::warn!(
            "auxiliary value {} is below the chart floor {}; auxiliary points collapse to the centre",
            aux.value(),
            ds.scale_max() / opts.segments as f64
        );
    }
    Ok(())
}

struct Chart<'a> {
    attributes: &'a [String],
    scale_max: f64,
    opts: &'a RenderOptions,
    frame: Frame,
    scale: RadialScale,
}

impl<'a> Chart<'a> {
    fn new(ds: &'a Dataset, opts: &'a RenderOptions) -> Result<Self> {
        Ok(Self {
            attributes: ds.attribute_names(),
            scale_max: ds.scale_max(),
            opts,
            frame: layout(ds.n_attributes(), opts)?,
            scale: RadialScale::new(ds.scale_max(), opts),
        })
    }

    fn n(&self) -> usize {
        self.attributes.len()
    }

    fn render(&self, series: &[Series], legend: bool) -> Result<String> {
        let o = self.opts;
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif">"#,
            w = o.width,
            h = o.height
        );
        if let Some(density) = o.hatch_density {
            self.hatch_defs(&mut s, series, density);
        }
        let _ = writeln!(
            s,
            r##"<rect class="background" x="0" y="0" width="{}" height="{}" fill="#FFFFFF"/>"##,
            o.width, o.height
        );
        self.grid(&mut s);
        self.axes(&mut s);
        self.polygons(&mut s, series);
        self.markers(&mut s, series);
        self.tick_labels(&mut s);
        self.attribute_labels(&mut s);
        if legend {
            self.legend(&mut s, series);
        }
        if !o.title.is_empty() {
            let _ = writeln!(
                s,
                r#"<text class="title" x="{}" y="24" text-anchor="middle" font-size="{}" font-weight="bold">{}</text>"#,
                num(o.width as f64 / 2.0),
                num(BASE_FONT * 1.4),
                escape(&o.title)
            );
        }
        s.push_str("</svg>\n");
        Ok(s)
    }

    fn grid_stroke(&self) -> String {
        let o = self.opts;
        let mut attrs = format!(
            r#"stroke="{}" stroke-width="{}""#,
            o.grid_color.hex(),
            num(o.grid_line_width.max(MIN_GRID_STROKE))
        );
        push_opacity(&mut attrs, "stroke-opacity", o.grid_color.a);
        attrs
    }

    fn grid(&self, s: &mut String) {
        let stroke = self.grid_stroke();
        let dash = dash_attr(self.opts.grid_line_type.dasharray());
        let seg = self.opts.segments;
        s.push_str("<g class=\"grid\">\n");
        for j in 1..=seg {
            let frac = j as f64 / seg as f64;
            let pts: Vec<String> = (0..self.n())
                .map(|k| pair(self.frame.point(main_angle(k, self.n()), frac)))
                .collect();
            let _ = writeln!(
                s,
                r#"<polygon class="grid-ring" points="{}" fill="none" {stroke}{dash}/>"#,
                pts.join(" ")
            );
        }
        s.push_str("</g>\n");
    }

    fn axes(&self, s: &mut String) {
        let stroke = self.grid_stroke();
        let (cx, cy) = self.frame.center;
        s.push_str("<g class=\"axes\">\n");
        for k in 0..self.n() {
            let (x, y) = self.frame.point(main_angle(k, self.n()), 1.0);
            let _ = writeln!(
                s,
                r#"<line class="axis-main" x1="{}" y1="{}" x2="{}" y2="{}" {stroke}/>"#,
                num(cx),
                num(cy),
                num(x),
                num(y)
            );
        }
        for k in 0..self.n() {
            let (x, y) = self.frame.point(aux_angle(k, self.n()), 1.0);
            let _ = writeln!(
                s,
                r#"<line class="axis-aux" x1="{}" y1="{}" x2="{}" y2="{}" {stroke} stroke-dasharray="{DASH}"/>"#,
                num(cx),
                num(cy),
                num(x),
                num(y)
            );
        }
        s.push_str("</g>\n");
    }

    fn hatch_defs(&self, s: &mut String, series: &[Series], density: f64) {
        let spacing = PX_PER_INCH / density;
        s.push_str("<defs>\n");
        for (i, ser) in series.iter().enumerate() {
            let _ = writeln!(
                s,
                r#"<pattern id="hatch-{}" patternUnits="userSpaceOnUse" width="{sp}" height="{sp}" patternTransform="rotate({})"><line x1="0" y1="{half}" x2="{sp}" y2="{half}" stroke="{}" stroke-width="1"/></pattern>"#,
                i + 1,
                num(-self.opts.hatch_angle),
                ser.style.stroke.hex(),
                sp = num(spacing),
                half = num(spacing / 2.0),
            );
        }
        s.push_str("</defs>\n");
    }

    fn polygons(&self, s: &mut String, series: &[Series]) {
        s.push_str("<g class=\"polygons\">\n");
        for (i, ser) in series.iter().enumerate() {
            let pts = polygon_pixels(&self.frame, &ser.polygon, self.scale_max, self.opts);
            let mut d = String::new();
            for (j, p) in pts.iter().enumerate() {
                d.push_str(if j == 0 { "M" } else { " L" });
                d.push_str(&pair(*p));
            }
            d.push_str(" Z");

            let fill = if self.opts.hatch_density.is_some() {
                format!(r#"fill="url(#hatch-{})""#, i + 1)
            } else {
                let mut f = format!(r#"fill="{}""#, ser.style.fill.hex());
                push_opacity(&mut f, "fill-opacity", ser.style.fill.a);
                f
            };
            let mut stroke = format!(
                r#"stroke="{}" stroke-width="{}""#,
                ser.style.stroke.hex(),
                num(self.opts.line_width)
            );
            push_opacity(&mut stroke, "stroke-opacity", ser.style.stroke.a);
            let class = match ser.extra_class {
                Some(extra) => format!("polygon polygon-{} {extra}", i + 1),
                None => format!("polygon polygon-{}", i + 1),
            };
            let _ = writeln!(
                s,
                r#"<path class="{class}" data-object="{}" d="{d}" {fill} {stroke}{} stroke-linejoin="round"/>"#,
                escape(&ser.label),
                dash_attr(ser.dash)
            );
        }
        s.push_str("</g>\n");
    }

    fn markers(&self, s: &mut String, series: &[Series]) {
        if self.opts.point_symbol == PointSymbol::None {
            return;
        }
        s.push_str("<g class=\"markers\">\n");
        for (i, ser) in series.iter().enumerate() {
            let pts = polygon_pixels(&self.frame, &ser.polygon, self.scale_max, self.opts);
            let colour = ser.style.stroke;
            let mut fill = format!(r#"fill="{}""#, colour.hex());
            push_opacity(&mut fill, "fill-opacity", colour.a);
            for p in pts.iter().step_by(2) {
                let _ = writeln!(
                    s,
                    r#"<circle class="marker marker-{}" cx="{}" cy="{}" r="{}" {fill}/>"#,
                    i + 1,
                    num(p.0),
                    num(p.1),
                    num(MARKER_RADIUS * self.opts.line_width.max(1.0))
                );
            }
        }
        s.push_str("</g>\n");
    }

    fn label_fill(&self) -> String {
        let c = self.opts.axis_label_color;
        let mut f = format!(r#"fill="{}""#, c.hex());
        push_opacity(&mut f, "fill-opacity", c.a);
        f
    }

    fn tick_labels(&self, s: &mut String) {
        let o = self.opts;
        if o.axis_type == AxisType::None {
            return;
        }
        let fill = self.label_fill();
        s.push_str("<g class=\"axis-labels\">\n");
        if o.axis_type.center_labels() {
            let size = num(BASE_FONT * o.center_label_cex.unwrap_or(1.0));
            for j in 0..=o.segments {
                let text = match &o.axis_labels {
                    Some(labels) => labels[j as usize].clone(),
                    None => format_value(self.scale.ring_value(j, o.segments)),
                };
                let (x, y) = self.frame.point(FRAC_PI_2, j as f64 / o.segments as f64);
                let _ = writeln!(
                    s,
                    r#"<text class="tick-label" x="{}" y="{}" text-anchor="end" dominant-baseline="middle" font-size="{size}" {fill}>{}</text>"#,
                    num(x - 4.0),
                    num(y),
                    escape(&text)
                );
            }
        }
        if o.axis_type.around_labels() {
            let size = num(BASE_FONT * o.around_label_cex.unwrap_or(1.0));
            let text = format_value(self.scale_max);
            for k in 0..self.n() {
                let (x, y) = self.frame.point(main_angle(k, self.n()), 1.0);
                let _ = writeln!(
                    s,
                    r#"<text class="axis-tip-label" x="{}" y="{}" dx="4" dy="-4" font-size="{size}" {fill}>{}</text>"#,
                    num(x),
                    num(y),
                    escape(&text)
                );
            }
        }
        s.push_str("</g>\n");
    }

    fn attribute_labels(&self, s: &mut String) {
        let size = num(BASE_FONT * self.opts.label_cex);
        let label_frac = self.frame.label_radius / self.frame.radius;
        s.push_str("<g class=\"attribute-labels\">\n");
        for (k, name) in self.attributes.iter().enumerate() {
            let (dx, dy) = self.frame.directions[k];
            let (x, y) = self.frame.point(main_angle(k, self.n()), label_frac);
            let anchor = if dx > 0.1 {
                "start"
            } else if dx < -0.1 {
                "end"
            } else {
                "middle"
            };
            let baseline = if dy < -0.1 {
                "auto"
            } else if dy > 0.1 {
                "hanging"
            } else {
                "middle"
            };
            let _ = writeln!(
                s,
                r##"<text class="attribute-label" x="{}" y="{}" text-anchor="{anchor}" dominant-baseline="{baseline}" font-size="{size}" fill="#000000">{}</text>"##,
                num(x),
                num(y),
                escape(name)
            );
        }
        s.push_str("</g>\n");
    }

    fn legend(&self, s: &mut String, series: &[Series]) {
        let right = self.opts.width as f64 - 10.0;
        let size = num(BASE_FONT);
        s.push_str("<g class=\"legend\">\n");
        for (i, ser) in series.iter().enumerate() {
            let y = 20.0 + 18.0 * i as f64;
            let _ = writeln!(
                s,
                r##"<g class="legend-entry legend-{}"><line x1="{}" y1="{y}" x2="{right}" y2="{y}" stroke="{}" stroke-width="2"{}/><text x="{}" y="{y}" text-anchor="end" dominant-baseline="middle" font-size="{size}" fill="#000000">{}</text></g>"##,
                i + 1,
                num(right - 24.0),
                ser.style.stroke.hex(),
                dash_attr(ser.dash),
                num(right - 30.0),
                escape(&ser.label),
                y = num(y),
                right = num(right),
            );
        }
        s.push_str("</g>\n");
    }
}

fn push_opacity(attrs: &mut String, name: &str, alpha: f64) {
    if alpha < 1.0 {
        let _ = write!(attrs, r#" {name}="{}""#, num(alpha));
    }
}

fn dash_attr(dash: Option<&str>) -> String {
    dash.map(|d| format!(r#" stroke-dasharray="{d}""#))
        .unwrap_or_default()
}

/// Shortest decimal that round-trips, so pixel coordinates survive parsing
/// bit for bit.
fn num(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        v.to_string()
    }
}

fn pair((x, y): (f64, f64)) -> String {
    format!("{},{}", num(x), num(y))
}

/// Axis-label formatting: at most four decimals, trailing zeros dropped.
fn format_value(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}
