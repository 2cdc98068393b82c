//! CSV input, the bundled example dataset and area-report output.

use crate::error::{OrigamiError, Result};
use crate::geometry::{validate_dataset, AreaReport, Dataset};

/// Unparsed table: header cells plus one `(object name, cells)` pair per row.
///
/// The first header cell (above the object names) is kept but ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct RawTable {
    pub header: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

impl RawTable {
    pub fn attribute_names(&self) -> &[String] {
        self.header.get(1..).unwrap_or(&[])
    }

    /// Parses every cell and validates the result.
    ///
    /// Blank cells and `NA` count as missing. Anything else that does not
    /// parse as a number is a [`OrigamiError::NonNumericCell`].
    pub fn into_dataset(self, scale_max: f64) -> Result<Dataset> {
        let mut names = Vec::with_capacity(self.rows.len());
        let mut cells = Vec::with_capacity(self.rows.len());
        for (row, (name, raw)) in self.rows.into_iter().enumerate() {
            let parsed = raw
                .iter()
                .enumerate()
                .map(|(column, text)| parse_cell(text, row, column))
                .collect::<Result<Vec<_>>>()?;
            names.push(name);
            cells.push(parsed);
        }
        let attributes = self.header.into_iter().skip(1).collect();
        validate_dataset(names, attributes, &cells, scale_max)
    }
}

fn parse_cell(text: &str, row: usize, column: usize) -> Result<Option<f64>> {
    let t = text.trim();
    if t.is_empty() || t == "NA" {
        return Ok(None);
    }
    t.parse::<f64>()
        .map(Some)
        .map_err(|_| OrigamiError::NonNumericCell {
            row,
            column,
            text: text.to_string(),
        })
}

/// Reads comma-separated text with a header row and object names in the
/// first column. Quoted fields follow RFC 4180.
pub fn parse_csv(text: &str) -> Result<RawTable> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());

    let mut records = reader.records();
    let header = match records.next() {
        Some(rec) => rec.map_err(csv_error)?,
        None => return Err(OrigamiError::EmptyInput),
    };
    let header: Vec<String> = header.iter().map(|s| s.trim().to_string()).collect();
    let width = header.len();

    let mut rows = Vec::new();
    for rec in records {
        let rec = rec.map_err(csv_error)?;
        if rec.iter().all(|c| c.trim().is_empty()) {
            continue;
        }
        if rec.len() != width {
            let line = rec.position().map_or(rows.len() + 2, |p| p.line() as usize);
            return Err(OrigamiError::RaggedRow {
                line,
                expected: width.saturating_sub(1),
                found: rec.len().saturating_sub(1),
            });
        }
        let mut cells = rec.iter();
        let name = cells.next().unwrap_or_default().trim().to_string();
        rows.push((name, cells.map(str::to_string).collect()));
    }
    if rows.is_empty() {
        return Err(OrigamiError::EmptyInput);
    }
    Ok(RawTable { header, rows })
}

fn csv_error(e: csv::Error) -> OrigamiError {
    OrigamiError::Csv(e.to_string())
}

/// `parse_csv` followed by validation.
pub fn read_dataset(text: &str, scale_max: f64) -> Result<Dataset> {
    parse_csv(text)?.into_dataset(scale_max)
}

pub const EXAMPLE_ATTRIBUTES: [&str; 5] = [
    "caesarean",
    "maternal",
    "neonatal",
    "hyperstimulation",
    "vaginal",
];

/// SUCRA scores of eight prostaglandin treatments for cervical ripening
/// across five outcomes. Higher is better.
pub const EXAMPLE_ROWS: [(&str, [f64; 5]); 8] = [
    ("Intracervical PGE2", [0.24, 0.93, 0.79, 0.82, 0.23]),
    ("High-dose oral misoprostol", [0.78, 0.68, 0.81, 0.38, 0.43]),
    ("Low-dose oral misoprostol", [0.21, 0.37, 0.80, 0.99, 0.18]),
    ("Titrated oral misoprostol", [0.93, 0.58, 0.44, 0.54, 0.82]),
    (
        "High-dose vaginal misoprostol",
        [0.68, 0.51, 0.25, 0.16, 0.93],
    ),
    (
        "Low-dose vaginal misoprostol",
        [0.69, 0.58, 0.23, 0.33, 0.79],
    ),
    ("Vaginal PGE2", [0.42, 0.61, 0.81, 0.65, 0.65]),
    ("Vaginal PGE2 pessary", [0.55, 0.24, 0.37, 0.63, 0.47]),
];

/// The bundled SUCRA example as a validated dataset (scale 0..1).
pub fn embedded_example() -> Dataset {
    Dataset::new(
        EXAMPLE_ROWS.iter().map(|(n, _)| n.to_string()).collect(),
        EXAMPLE_ATTRIBUTES.iter().map(|s| s.to_string()).collect(),
        EXAMPLE_ROWS.iter().map(|(_, v)| v.to_vec()).collect(),
        1.0,
    )
    .expect("bundled example is valid")
}

/// Serializes a dataset in the layout `parse_csv` reads. Values use the
/// shortest representation that round-trips exactly.
pub fn dataset_to_csv(ds: &Dataset) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let header = std::iter::once("").chain(ds.attribute_names().iter().map(String::as_str));
    w.write_record(header).expect("write to memory");
    for (name, row) in ds.object_names().iter().zip(ds.values()) {
        let mut record = vec![name.clone()];
        record.extend(row.iter().map(|v| v.to_string()));
        w.write_record(&record).expect("write to memory");
    }
    into_string(w)
}

/// `object,raw_area,normalized_area` with six decimals per number.
pub fn write_area_report(report: &AreaReport) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["object", "raw_area", "normalized_area"])
        .expect("write to memory");
    for e in &report.entries {
        w.write_record([
            e.object.as_str(),
            &format!("{:.6}", e.raw_area),
            &format!("{:.6}", e.normalized_area),
        ])
        .expect("write to memory");
    }
    into_string(w)
}

fn into_string(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("flush to memory");
    String::from_utf8(bytes).expect("csv output is utf-8")
}
