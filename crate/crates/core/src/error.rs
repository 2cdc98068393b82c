use thiserror::Error;

/// Errors raised while validating inputs, building geometry or rendering.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrigamiError {
    #[error("missing or non-finite value at row {row} ({object}), column {column} ({attribute})")]
    MissingValue {
        row: usize,
        column: usize,
        object: String,
        attribute: String,
    },
    #[error("non-numeric cell {text:?} at row {row}, column {column}")]
    NonNumericCell {
        row: usize,
        column: usize,
        text: String,
    },
    #[error("value {value} at row {row} ({object}), column {column} ({attribute}) is outside [0, {scale_max}]")]
    OutOfRange {
        row: usize,
        column: usize,
        object: String,
        attribute: String,
        value: f64,
        scale_max: f64,
    },
    #[error("radius {value} at position {index} is negative or non-finite")]
    NegativeRadius { index: usize, value: f64 },
    #[error("at least 3 attributes are required, found {found}")]
    TooFewAttributes { found: usize },
    #[error("dataset has no objects")]
    NoObjects,
    #[error("duplicate {kind} name {name:?}")]
    DuplicateName { kind: NameKind, name: String },
    #[error("empty {kind} name at position {index}")]
    EmptyName { kind: NameKind, index: usize },
    #[error("scale maximum must be positive and finite, got {0}")]
    InvalidScaleMax(f64),
    #[error("dataset minimum is 0; an auxiliary value must be specified explicitly")]
    AuxiliaryUnspecified,
    #[error("auxiliary value must be positive and finite, got {0}")]
    NonPositiveAux(f64),
    #[error("auxiliary value {aux} exceeds the scale maximum {scale_max}")]
    AuxOutOfRange { aux: f64, scale_max: f64 },
    #[error("weight {value} at position {index} is not positive")]
    NonPositiveWeight { index: usize, value: f64 },
    #[error("weights sum to {sum}, expected 1")]
    WeightSumViolation { sum: f64 },
    #[error("expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("unknown object {name:?}; available objects: {}", available.join(", "))]
    UnknownObject {
        name: String,
        available: Vec<String>,
    },
    #[error("pairwise comparison needs two different objects, got {0:?} twice")]
    SameObject(String),
    #[error("unsupported point symbol {0}; use 16 (filled circle) or 32 (none)")]
    UnsupportedSymbol(u32),
    #[error("unsupported line type {0}; use 1 (solid), 2 (dashed) or 3 (dotted)")]
    UnsupportedLineType(u32),
    #[error("unsupported axis type {0}; use 0, 1, 2 or 3")]
    UnsupportedAxisType(u32),
    #[error("canvas {width}x{height} is smaller than the 100x100 minimum")]
    CanvasTooSmall { width: u32, height: u32 },
    #[error("invalid option {option}: {reason}")]
    InvalidOption {
        option: &'static str,
        reason: String,
    },
    #[error("line {line} has {found} cells, expected {expected}")]
    RaggedRow {
        /// 1-based line in the CSV text; the header is line 1.
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("input has no data rows")]
    EmptyInput,
    #[error("malformed CSV: {0}")]
    Csv(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NameKind {
    Object,
    Attribute,
}

impl std::fmt::Display for NameKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NameKind::Object => "object",
            NameKind::Attribute => "attribute",
        })
    }
}

impl OrigamiError {
    /// Stable machine-readable code, used by the HTTP service.
    pub fn code(&self) -> &'static str {
        match self {
            OrigamiError::MissingValue { .. } => "MISSING_VALUE",
            OrigamiError::NonNumericCell { .. } => "NON_NUMERIC_CELL",
            OrigamiError::OutOfRange { .. } => "OUT_OF_RANGE",
            OrigamiError::NegativeRadius { .. } => "NEGATIVE_RADIUS",
            OrigamiError::TooFewAttributes { .. } => "TOO_FEW_ATTRIBUTES",
            OrigamiError::NoObjects => "NO_OBJECTS",
            OrigamiError::DuplicateName { .. } => "DUPLICATE_NAME",
            OrigamiError::EmptyName { .. } => "EMPTY_NAME",
            OrigamiError::InvalidScaleMax(_) => "INVALID_SCALE_MAX",
            OrigamiError::AuxiliaryUnspecified => "AUX_UNSPECIFIED",
            OrigamiError::NonPositiveAux(_) => "NON_POSITIVE_AUX",
            OrigamiError::AuxOutOfRange { .. } => "AUX_OUT_OF_RANGE",
            OrigamiError::NonPositiveWeight { .. } => "NON_POSITIVE_WEIGHT",
            OrigamiError::WeightSumViolation { .. } => "WEIGHT_SUM",
            OrigamiError::LengthMismatch { .. } => "LENGTH_MISMATCH",
            OrigamiError::UnknownObject { .. } => "UNKNOWN_OBJECT",
            OrigamiError::SameObject(_) => "SAME_OBJECT",
            OrigamiError::UnsupportedSymbol(_) => "UNSUPPORTED_SYMBOL",
            OrigamiError::UnsupportedLineType(_) => "UNSUPPORTED_LINE_TYPE",
            OrigamiError::UnsupportedAxisType(_) => "UNSUPPORTED_AXIS_TYPE",
            OrigamiError::CanvasTooSmall { .. } => "CANVAS_TOO_SMALL",
            OrigamiError::InvalidOption { .. } => "INVALID_OPTION",
            OrigamiError::RaggedRow { .. } => "RAGGED_ROW",
            OrigamiError::EmptyInput => "EMPTY_INPUT",
            OrigamiError::Csv(_) => "MALFORMED_CSV",
        }
    }
}

pub type Result<T, E = OrigamiError> = std::result::Result<T, E>;
