//! Chart styling options.
//!
//! Option names on the wire (`axistype`, `seg`, `pty`, `cglcol`, ...) follow
//! the argument names of the original R package so that existing scripts
//! translate one to one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{OrigamiError, Result};

/// Minimum canvas edge in pixels.
pub const MIN_CANVAS: u32 = 100;

/// RGBA colour with components in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rgba {
    pub r: f64,
    pub g: f64,
    pub b: f64,
    pub a: f64,
}

impl Rgba {
    pub const fn new(r: f64, g: f64, b: f64, a: f64) -> Self {
        Self { r, g, b, a }
    }

    fn byte(c: f64) -> u8 {
        (c * 255.0).round() as u8
    }

    /// `#RRGGBB`, each byte `round(c * 255)`. Alpha is carried separately
    /// as an SVG opacity attribute.
    pub fn hex(&self) -> String {
        format!(
            "#{:02X}{:02X}{:02X}",
            Self::byte(self.r),
            Self::byte(self.g),
            Self::byte(self.b)
        )
    }

    fn validate(&self, option: &'static str) -> Result<()> {
        if [self.r, self.g, self.b, self.a]
            .iter()
            .all(|c| c.is_finite() && (0.0..=1.0).contains(c))
        {
            Ok(())
        } else {
            Err(OrigamiError::InvalidOption {
                option,
                reason: format!("colour components must lie in [0, 1], got {self}"),
            })
        }
    }
}

impl fmt::Display for Rgba {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rgb({},{},{},{})", self.r, self.g, self.b, self.a)
    }
}

/// Accepts `rgb(r,g,b)`, `rgb(r,g,b,a)` with unit-range components, or
/// `#RRGGBB` / `#RRGGBBAA`.
impl FromStr for Rgba {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(hex) = s.strip_prefix('#') {
            if !(hex.len() == 6 || hex.len() == 8) || !hex.is_ascii() {
                return Err(format!("bad hex colour {s:?}"));
            }
            let mut parts = (0..hex.len())
                .step_by(2)
                .map(|i| u8::from_str_radix(&hex[i..i + 2], 16).map(|b| b as f64 / 255.0));
            let mut next = || {
                parts
                    .next()
                    .transpose()
                    .map_err(|_| format!("bad hex colour {s:?}"))
            };
            let r = next()?.unwrap_or(0.0);
            let g = next()?.unwrap_or(0.0);
            let b = next()?.unwrap_or(0.0);
            let a = next()?.unwrap_or(1.0);
            return Ok(Rgba::new(r, g, b, a));
        }
        let inner = s
            .strip_prefix("rgba(")
            .or_else(|| s.strip_prefix("rgb("))
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| format!("expected rgb(r,g,b[,a]) or #RRGGBB, got {s:?}"))?;
        let comps = inner
            .split(',')
            .map(|c| c.trim().parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| format!("bad colour component in {s:?}: {e}"))?;
        match comps[..] {
            [r, g, b] => Ok(Rgba::new(r, g, b, 1.0)),
            [r, g, b, a] => Ok(Rgba::new(r, g, b, a)),
            _ => Err(format!("expected 3 or 4 components in {s:?}")),
        }
    }
}

/// Stroke and fill colour of one data polygon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesStyle {
    pub stroke: Rgba,
    pub fill: Rgba,
}

pub const PRIMARY: SeriesStyle = SeriesStyle {
    stroke: Rgba::new(0.2, 0.5, 0.5, 1.0),
    fill: Rgba::new(0.2, 0.5, 0.5, 0.1),
};

pub const SECONDARY: SeriesStyle = SeriesStyle {
    stroke: Rgba::new(0.6, 0.3, 0.3, 1.0),
    fill: Rgba::new(0.6, 0.3, 0.3, 0.1),
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisType {
    None,
    Center,
    Around,
    Both,
}

impl AxisType {
    pub fn center_labels(self) -> bool {
        matches!(self, AxisType::Center | AxisType::Both)
    }

    pub fn around_labels(self) -> bool {
        matches!(self, AxisType::Around | AxisType::Both)
    }
}

impl TryFrom<u32> for AxisType {
    type Error = OrigamiError;

    fn try_from(code: u32) -> Result<Self> {
        Ok(match code {
            0 => AxisType::None,
            1 => AxisType::Center,
            2 => AxisType::Around,
            3 => AxisType::Both,
            other => return Err(OrigamiError::UnsupportedAxisType(other)),
        })
    }
}

/// Point symbol. Only the R codes 16 (filled circle) and 32 (blank) exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointSymbol {
    Marker,
    None,
}

impl TryFrom<u32> for PointSymbol {
    type Error = OrigamiError;

    fn try_from(code: u32) -> Result<Self> {
        match code {
            16 => Ok(PointSymbol::Marker),
            32 => Ok(PointSymbol::None),
            other => Err(OrigamiError::UnsupportedSymbol(other)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineType {
    Solid,
    Dashed,
    Dotted,
}

impl LineType {
    pub fn dasharray(self) -> Option<&'static str> {
        match self {
            LineType::Solid => None,
            LineType::Dashed => Some(DASH),
            LineType::Dotted => Some("2 4"),
        }
    }
}

/// Dash pattern for auxiliary axes and weighted polygons.
pub const DASH: &str = "6 4";

impl TryFrom<u32> for LineType {
    type Error = OrigamiError;

    fn try_from(code: u32) -> Result<Self> {
        match code {
            1 => Ok(LineType::Solid),
            2 => Ok(LineType::Dashed),
            3 => Ok(LineType::Dotted),
            other => Err(OrigamiError::UnsupportedLineType(other)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// `axistype`
    pub axis_type: AxisType,
    /// `seg`: number of grid rings.
    pub segments: u32,
    /// `pty`
    pub point_symbol: PointSymbol,
    /// `plty`: line type of the primary data polygon.
    pub line_type: LineType,
    /// `plwd`
    pub line_width: f64,
    /// `pdensity`: hatch lines per inch; `None` fills with translucent colour.
    pub hatch_density: Option<f64>,
    /// `pangle`, degrees counter-clockwise.
    pub hatch_angle: f64,
    /// `cglty`
    pub grid_line_type: LineType,
    /// `cglwd`, as given. The renderer never draws thinner than
    /// [`MIN_GRID_STROKE`](crate::render::MIN_GRID_STROKE).
    pub grid_line_width: f64,
    /// `cglcol`
    pub grid_color: Rgba,
    /// `axislabcol`
    pub axis_label_color: Rgba,
    pub title: String,
    /// `centerzero`: when false the centre stands for `scale_max / seg`.
    pub center_zero: bool,
    /// `vlcex`
    pub label_cex: f64,
    /// `calcex`
    pub center_label_cex: Option<f64>,
    /// `palcex`
    pub around_label_cex: Option<f64>,
    /// `caxislabels`; generated from the value range when absent.
    pub axis_labels: Option<Vec<String>>,
    /// `pcol`/`pfcol` (also `pcol1`/`pfcol1`).
    pub primary: SeriesStyle,
    /// `pcol2`/`pfcol2`.
    pub secondary: SeriesStyle,
    pub width: u32,
    pub height: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            axis_type: AxisType::Center,
            segments: 4,
            point_symbol: PointSymbol::Marker,
            line_type: LineType::Solid,
            line_width: 1.0,
            hatch_density: None,
            hatch_angle: 45.0,
            grid_line_type: LineType::Solid,
            grid_line_width: 0.1,
            grid_color: Rgba::new(0.0, 0.0, 0.0, 1.0),
            axis_label_color: Rgba::new(128.0 / 255.0, 128.0 / 255.0, 128.0 / 255.0, 1.0),
            title: String::new(),
            center_zero: true,
            label_cex: 1.0,
            center_label_cex: None,
            around_label_cex: None,
            axis_labels: None,
            primary: PRIMARY,
            secondary: SECONDARY,
            width: 600,
            height: 600,
        }
    }
}

fn invalid(option: &'static str, reason: impl Into<String>) -> OrigamiError {
    OrigamiError::InvalidOption {
        option,
        reason: reason.into(),
    }
}

fn non_negative(option: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(invalid(
            option,
            format!("must be a non-negative number, got {v}"),
        ))
    }
}

fn positive(option: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(invalid(
            option,
            format!("must be a positive number, got {v}"),
        ))
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        if self.width < MIN_CANVAS || self.height < MIN_CANVAS {
            return Err(OrigamiError::CanvasTooSmall {
                width: self.width,
                height: self.height,
            });
        }
        if self.segments == 0 {
            return Err(invalid("seg", "must be at least 1"));
        }
        if !self.center_zero && self.segments < 2 {
            return Err(invalid("seg", "centerzero=false needs at least 2 segments"));
        }
        non_negative("plwd", self.line_width)?;
        non_negative("cglwd", self.grid_line_width)?;
        if let Some(d) = self.hatch_density {
            positive("pdensity", d)?;
        }
        if !self.hatch_angle.is_finite() {
            return Err(invalid("pangle", "must be finite"));
        }
        positive("vlcex", self.label_cex)?;
        if let Some(c) = self.center_label_cex {
            positive("calcex", c)?;
        }
        if let Some(c) = self.around_label_cex {
            positive("palcex", c)?;
        }
        if let Some(labels) = &self.axis_labels {
            if labels.len() != self.segments as usize + 1 {
                return Err(invalid(
                    "caxislabels",
                    format!(
                        "expected seg + 1 = {} labels, got {}",
                        self.segments + 1,
                        labels.len()
                    ),
                ));
            }
        }
        self.grid_color.validate("cglcol")?;
        self.axis_label_color.validate("axislabcol")?;
        self.primary.stroke.validate("pcol")?;
        self.primary.fill.validate("pfcol")?;
        self.secondary.stroke.validate("pcol2")?;
        self.secondary.fill.validate("pfcol2")?;
        Ok(())
    }
}

/// Partial options as supplied by a caller. Unset fields keep the value of
/// the options the patch is applied to.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsPatch {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axistype: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seg: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pty: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plty: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plwd: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pdensity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pangle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cglty: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cglwd: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cglcol: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axislabcol: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centerzero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vlcex: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub calcex: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub palcex: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caxislabels: Option<Vec<String>>,
    #[serde(alias = "pcol1", skip_serializing_if = "Option::is_none")]
    pub pcol: Option<String>,
    #[serde(alias = "pfcol1", skip_serializing_if = "Option::is_none")]
    pub pfcol: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pcol2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pfcol2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height: Option<u32>,
}

fn colour(option: &'static str, text: &str) -> Result<Rgba> {
    text.parse()
        .map_err(|reason: String| invalid(option, reason))
}

impl OptionsPatch {
    /// Overlays the patch on `base` and validates the result.
    pub fn apply(&self, base: &RenderOptions) -> Result<RenderOptions> {
        let mut o = base.clone();
        if let Some(v) = self.axistype {
            o.axis_type = v.try_into()?;
        }
        if let Some(v) = self.seg {
            o.segments = v;
        }
        if let Some(v) = self.pty {
            o.point_symbol = v.try_into()?;
        }
        if let Some(v) = self.plty {
            o.line_type = v.try_into()?;
        }
        if let Some(v) = self.plwd {
            o.line_width = v;
        }
        if let Some(v) = self.pdensity {
            o.hatch_density = Some(v);
        }
        if let Some(v) = self.pangle {
            o.hatch_angle = v;
        }
        if let Some(v) = self.cglty {
            o.grid_line_type = v.try_into()?;
        }
        if let Some(v) = self.cglwd {
            o.grid_line_width = v;
        }
        if let Some(v) = &self.cglcol {
            o.grid_color = colour("cglcol", v)?;
        }
        if let Some(v) = &self.axislabcol {
            o.axis_label_color = colour("axislabcol", v)?;
        }
        if let Some(v) = &self.title {
            o.title = v.clone();
        }
        if let Some(v) = self.centerzero {
            o.center_zero = v;
        }
        if let Some(v) = self.vlcex {
            o.label_cex = v;
        }
        if let Some(v) = self.calcex {
            o.center_label_cex = Some(v);
        }
        if let Some(v) = self.palcex {
            o.around_label_cex = Some(v);
        }
        if let Some(v) = &self.caxislabels {
            o.axis_labels = Some(v.clone());
        }
        if let Some(v) = &self.pcol {
            o.primary.stroke = colour("pcol", v)?;
        }
        if let Some(v) = &self.pfcol {
            o.primary.fill = colour("pfcol", v)?;
        }
        if let Some(v) = &self.pcol2 {
            o.secondary.stroke = colour("pcol2", v)?;
        }
        if let Some(v) = &self.pfcol2 {
            o.secondary.fill = colour("pfcol2", v)?;
        }
        if let Some(v) = self.width {
            o.width = v;
        }
        if let Some(v) = self.height {
            o.height = v;
        }
        o.validate()?;
        Ok(o)
    }
}
