//! Origami plots: a radar-chart alternative whose enclosed area does not
//! depend on the order of the attributes.
//!
//! Each attribute axis is flanked by auxiliary axes carrying a point at a
//! fixed radius, so the polygon area is linear in the attribute values.
//! The crate builds the polygons and their areas ([`geometry`]), reads and
//! writes CSV ([`data`]), renders SVG ([`render`]) and exposes both as a
//! command-line tool ([`cli`]) and a JSON render service ([`api`]).
//!
//! "Snowflake plot" is an alias for the same chart.

pub mod api;
pub mod cli;
pub mod data;
pub mod error;
pub mod geometry;
pub mod render;

pub use data::{embedded_example, parse_csv, read_dataset, write_area_report, RawTable};
pub use error::{OrigamiError, Result};
pub use geometry::{
    apply_weights, area_calculation, build_polygon, default_aux, polygon_area_closed_form,
    polygon_area_shoelace, radar_polygon_area, standardize_weights, validate_dataset, AreaEntry,
    AreaReport, AuxiliaryConfig, Dataset, PolygonGeometry, Vertex, VertexKind, WeightVector,
};
pub use render::{render_pairwise, render_single, render_weighted, RenderOptions};
