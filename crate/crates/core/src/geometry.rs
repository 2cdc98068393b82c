//! Origami polygon construction and area computation.
//!
//! An origami polygon interleaves the `n` main axes (one per attribute) with
//! `n` auxiliary axes that bisect each neighbouring pair. Every auxiliary
//! point sits at the same radius, so each main point only ever connects to
//! two auxiliary points and the enclosed area becomes
//!
//! ```text
//! area = aux * sin(pi / n) * sum(values)
//! ```
//!
//! which does not depend on the order of the attributes. The shoelace
//! formula over the Cartesian vertex cycle is kept alongside as an
//! independent check of that closed form.

use std::collections::HashSet;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{NameKind, OrigamiError, Result};

/// Smallest number of attributes an origami plot accepts.
pub const MIN_ATTRIBUTES: usize = 3;

/// Absolute tolerance on `sum(weights) == 1`.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// A validated object x attribute matrix.
///
/// Row `i` holds the attribute values of object `i`. Every value is finite
/// and lies in `[0, scale_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    object_names: Vec<String>,
    attribute_names: Vec<String>,
    values: Vec<Vec<f64>>,
    scale_max: f64,
}

impl Dataset {
    /// Validates a fully populated matrix. Non-finite cells are reported as
    /// missing, exactly as a `None` cell would be in [`validate_dataset`].
    pub fn new(
        object_names: Vec<String>,
        attribute_names: Vec<String>,
        values: Vec<Vec<f64>>,
        scale_max: f64,
    ) -> Result<Self> {
        let cells: Vec<Vec<Option<f64>>> = values
            .into_iter()
            .map(|row| row.into_iter().map(Some).collect())
            .collect();
        validate_dataset(object_names, attribute_names, &cells, scale_max)
    }

    pub fn object_names(&self) -> &[String] {
        &self.object_names
    }

    pub fn attribute_names(&self) -> &[String] {
        &self.attribute_names
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn scale_max(&self) -> f64 {
        self.scale_max
    }

    pub fn n_objects(&self) -> usize {
        self.object_names.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.attribute_names.len()
    }

    /// Position of `name`, ignoring surrounding whitespace on the query.
    pub fn object_index(&self, name: &str) -> Result<usize> {
        let wanted = name.trim();
        self.object_names
            .iter()
            .position(|n| n == wanted)
            .ok_or_else(|| OrigamiError::UnknownObject {
                name: wanted.to_string(),
                available: self.object_names.clone(),
            })
    }

    /// Attribute values of the named object.
    pub fn row(&self, name: &str) -> Result<&[f64]> {
        let i = self.object_index(name)?;
        Ok(&self.values[i])
    }

    /// Smallest cell in the matrix.
    pub fn min_value(&self) -> f64 {
        self.values
            .iter()
            .flatten()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

/// Checks names, completeness and range, and builds a [`Dataset`].
///
/// Names are trimmed of surrounding whitespace. Row and column positions in
/// errors are zero-based.
pub fn validate_dataset(
    object_names: Vec<String>,
    attribute_names: Vec<String>,
    cells: &[Vec<Option<f64>>],
    scale_max: f64,
) -> Result<Dataset> {
    if !(scale_max.is_finite() && scale_max > 0.0) {
        return Err(OrigamiError::InvalidScaleMax(scale_max));
    }
    let object_names = clean_names(object_names, NameKind::Object)?;
    let attribute_names = clean_names(attribute_names, NameKind::Attribute)?;
    if attribute_names.len() < MIN_ATTRIBUTES {
        return Err(OrigamiError::TooFewAttributes {
            found: attribute_names.len(),
        });
    }
    if object_names.is_empty() {
        return Err(OrigamiError::NoObjects);
    }
    if cells.len() != object_names.len() {
        return Err(OrigamiError::LengthMismatch {
            expected: object_names.len(),
            found: cells.len(),
        });
    }

    let n = attribute_names.len();
    let mut values = Vec::with_capacity(cells.len());
    for (row, raw) in cells.iter().enumerate() {
        if raw.len() != n {
            return Err(OrigamiError::LengthMismatch {
                expected: n,
                found: raw.len(),
            });
        }
        let mut parsed = Vec::with_capacity(n);
        for (column, cell) in raw.iter().enumerate() {
            let value = match cell {
                Some(v) if v.is_finite() => *v,
                _ => {
                    return Err(OrigamiError::MissingValue {
                        row,
                        column,
                        object: object_names[row].clone(),
                        attribute: attribute_names[column].clone(),
                    })
                }
            };
            if !(0.0..=scale_max).contains(&value) {
                return Err(OrigamiError::OutOfRange {
                    row,
                    column,
                    object: object_names[row].clone(),
                    attribute: attribute_names[column].clone(),
                    value,
                    scale_max,
                });
            }
            parsed.push(value);
        }
        values.push(parsed);
    }

    Ok(Dataset {
        object_names,
        attribute_names,
        values,
        scale_max,
    })
}

fn clean_names(names: Vec<String>, kind: NameKind) -> Result<Vec<String>> {
    let mut seen = HashSet::with_capacity(names.len());
    let mut out = Vec::with_capacity(names.len());
    for (index, name) in names.into_iter().enumerate() {
        let name = name.trim().to_string();
        if name.is_empty() {
            return Err(OrigamiError::EmptyName { kind, index });
        }
        if !seen.insert(name.clone()) {
            return Err(OrigamiError::DuplicateName { kind, name });
        }
        out.push(name);
    }
    Ok(out)
}

/// Radius shared by every auxiliary point, in the same units as the data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxiliaryConfig {
    aux_value: f64,
}

impl AuxiliaryConfig {
    pub fn new(aux_value: f64) -> Result<Self> {
        if aux_value.is_finite() && aux_value > 0.0 {
            Ok(Self { aux_value })
        } else {
            Err(OrigamiError::NonPositiveAux(aux_value))
        }
    }

    /// Like [`AuxiliaryConfig::new`] but also requires `aux_value <= scale_max`.
    pub fn for_dataset(aux_value: f64, ds: &Dataset) -> Result<Self> {
        let aux = Self::new(aux_value)?;
        aux.check_against(ds.scale_max())?;
        Ok(aux)
    }

    pub fn value(&self) -> f64 {
        self.aux_value
    }

    pub(crate) fn check_against(&self, scale_max: f64) -> Result<()> {
        if self.aux_value > scale_max {
            Err(OrigamiError::AuxOutOfRange {
                aux: self.aux_value,
                scale_max,
            })
        } else {
            Ok(())
        }
    }
}

/// Half of the smallest value in the dataset.
///
/// A zero minimum would collapse every auxiliary point onto the centre, so
/// the caller has to pick the radius explicitly in that case.
pub fn default_aux(ds: &Dataset) -> Result<AuxiliaryConfig> {
    let min = ds.min_value();
    if min <= 0.0 {
        return Err(OrigamiError::AuxiliaryUnspecified);
    }
    AuxiliaryConfig::new(min / 2.0)
}

/// Uses `explicit` when given, otherwise [`default_aux`].
pub fn resolve_aux(ds: &Dataset, explicit: Option<f64>) -> Result<AuxiliaryConfig> {
    match explicit {
        Some(v) => AuxiliaryConfig::for_dataset(v, ds),
        None => default_aux(ds),
    }
}

/// User weights together with their max-standardized scale factors.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
    standardized: Vec<f64>,
}

impl WeightVector {
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `weights[k] / max(weights)`; the largest weight maps to exactly 1.
    pub fn standardized(&self) -> &[f64] {
        &self.standardized
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// Validates a weight vector for a dataset with `n_attributes` columns.
///
/// Checks run in order: positivity, sum, then length.
pub fn standardize_weights(weights: &[f64], n_attributes: usize) -> Result<WeightVector> {
    if let Some((index, &value)) = weights
        .iter()
        .enumerate()
        .find(|(_, w)| !(w.is_finite() && **w > 0.0))
    {
        return Err(OrigamiError::NonPositiveWeight { index, value });
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        return Err(OrigamiError::WeightSumViolation { sum });
    }
    if weights.len() != n_attributes {
        return Err(OrigamiError::LengthMismatch {
            expected: n_attributes,
            found: weights.len(),
        });
    }
    let max = weights.iter().copied().fold(f64::MIN, f64::max);
    Ok(WeightVector {
        weights: weights.to_vec(),
        standardized: weights.iter().map(|w| w / max).collect(),
    })
}

/// Scales each value by its standardized weight.
pub fn apply_weights(values: &[f64], wv: &WeightVector) -> Result<Vec<f64>> {
    if values.len() != wv.len() {
        return Err(OrigamiError::LengthMismatch {
            expected: wv.len(),
            found: values.len(),
        });
    }
    Ok(values
        .iter()
        .zip(wv.standardized())
        .map(|(v, s)| v * s)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Main(usize),
    Auxiliary(usize),
}

/// One polygon vertex in polar form. Angles are measured counter-clockwise
/// from the positive x axis, so `pi/2` points straight up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vertex {
    pub kind: VertexKind,
    pub angle: f64,
    pub radius: f64,
}

impl Vertex {
    pub fn to_cartesian(&self) -> (f64, f64) {
        (
            self.radius * self.angle.cos(),
            self.radius * self.angle.sin(),
        )
    }
}

/// The `2n` vertices of an origami polygon, alternating main and auxiliary.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonGeometry {
    vertices: Vec<Vertex>,
    aux_value: f64,
}

impl PolygonGeometry {
    /// Number of attributes (half the vertex count).
    pub fn n(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn aux_value(&self) -> f64 {
        self.aux_value
    }

    pub fn main_vertices(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.iter().step_by(2)
    }

    pub fn cartesian(&self) -> Vec<(f64, f64)> {
        self.vertices.iter().map(Vertex::to_cartesian).collect()
    }
}

/// Angle of vertex `i` out of `2n`: first main axis at 12 o'clock, then
/// clockwise in steps of `pi / n`.
pub fn vertex_angle(i: usize, n: usize) -> f64 {
    FRAC_PI_2 - (i as f64) * PI / (n as f64)
}

fn check_radii(values: &[f64]) -> Result<()> {
    if values.len() < MIN_ATTRIBUTES {
        return Err(OrigamiError::TooFewAttributes {
            found: values.len(),
        });
    }
    match values
        .iter()
        .enumerate()
        .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
    {
        Some((index, &value)) => Err(OrigamiError::NegativeRadius { index, value }),
        None => Ok(()),
    }
}

pub fn build_polygon(values: &[f64], aux: AuxiliaryConfig) -> Result<PolygonGeometry> {
    check_radii(values)?;
    let n = values.len();
    let a = aux.value();
    let vertices = values
        .iter()
        .enumerate()
        .flat_map(|(k, &r)| {
            [
                Vertex {
                    kind: VertexKind::Main(k),
                    angle: vertex_angle(2 * k, n),
                    radius: r,
                },
                Vertex {
                    kind: VertexKind::Auxiliary(k),
                    angle: vertex_angle(2 * k + 1, n),
                    radius: a,
                },
            ]
        })
        .collect();
    Ok(PolygonGeometry {
        vertices,
        aux_value: a,
    })
}

/// Absolute shoelace area over the Cartesian vertex cycle.
pub fn polygon_area_shoelace(pg: &PolygonGeometry) -> f64 {
    let pts = pg.cartesian();
    let twice: f64 = pts
        .iter()
        .zip(pts.iter().cycle().skip(1))
        .map(|((x0, y0), (x1, y1))| x0 * y1 - x1 * y0)
        .sum();
    twice.abs() / 2.0
}

/// `aux * sin(pi/n) * sum(values)`.
pub fn polygon_area_closed_form(values: &[f64], aux_value: f64) -> Result<f64> {
    check_radii(values)?;
    let aux = AuxiliaryConfig::new(aux_value)?;
    Ok(closed_form_unchecked(values, aux.value()))
}

fn closed_form_unchecked(values: &[f64], aux_value: f64) -> f64 {
    let n = values.len() as f64;
    aux_value * (PI / n).sin() * values.iter().sum::<f64>()
}

/// Area of the polygon with every attribute at `scale_max`.
pub fn max_polygon_area(n: usize, aux_value: f64, scale_max: f64) -> f64 {
    let nf = n as f64;
    aux_value * (PI / nf).sin() * nf * scale_max
}

#[derive(Debug, Clone, PartialEq)]
pub struct AreaEntry {
    pub object: String,
    pub raw_area: f64,
    pub normalized_area: f64,
}

/// Per-object areas, in dataset order.
#[derive(Debug, Clone, PartialEq)]
pub struct AreaReport {
    pub aux_value: f64,
    pub scale_max: f64,
    pub entries: Vec<AreaEntry>,
}

impl AreaReport {
    pub fn get(&self, object: &str) -> Option<&AreaEntry> {
        let wanted = object.trim();
        self.entries.iter().find(|e| e.object == wanted)
    }
}

/// Raw and normalized area of one row. The normalized area divides by the
/// all-maximum polygon built with the same auxiliary radius, so it reduces
/// to `mean(values) / scale_max`.
pub fn row_areas(values: &[f64], aux: AuxiliaryConfig, scale_max: f64) -> Result<(f64, f64)> {
    let raw = polygon_area_closed_form(values, aux.value())?;
    let max = max_polygon_area(values.len(), aux.value(), scale_max);
    Ok((raw, (raw / max).clamp(0.0, 1.0)))
}

pub fn area_calculation(ds: &Dataset, aux: AuxiliaryConfig) -> Result<AreaReport> {
    aux.check_against(ds.scale_max())?;
    let entries = ds
        .object_names()
        .iter()
        .zip(ds.values())
        .map(|(name, row)| {
            let (raw_area, normalized_area) = row_areas(row, aux, ds.scale_max())?;
            Ok(AreaEntry {
                object: name.clone(),
                raw_area,
                normalized_area,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AreaReport {
        aux_value: aux.value(),
        scale_max: ds.scale_max(),
        entries,
    })
}

/// Area of a plain radar polygon through the main points only. Unlike the
/// origami area it depends on the attribute order.
pub fn radar_polygon_area(values: &[f64]) -> Result<f64> {
    check_radii(values)?;
    let n = values.len();
    let adjacent: f64 = (0..n).map(|k| values[k] * values[(k + 1) % n]).sum();
    Ok(0.5 * (2.0 * PI / n as f64).sin() * adjacent)
}
