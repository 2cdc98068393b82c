//! Stateless JSON render service.
//!
//! | route              | method | body                               |
//! |--------------------|--------|------------------------------------|
//! | `/api/render`      | POST   | [`RenderRequest`] → [`RenderResponse`] |
//! | `/api/example`     | GET    | bundled dataset as [`DatasetPayload`] |
//! | `/api/health`      | GET    | `{"status":"ok","version":...}`    |
//!
//! Every request carries its own dataset; nothing is kept between calls.
//! Errors are `{"code", "message", "detail"}` with a 4xx status.

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::path::PathBuf;

use axum::body::Bytes;
use axum::extract::DefaultBodyLimit;
use axum::http::{header, Method, StatusCode};
use axum::response::{Html, IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use tower_http::cors::{Any, CorsLayer};
use tower_http::services::ServeDir;

use crate::data::embedded_example;
use crate::error::OrigamiError;
use crate::geometry::{
    apply_weights, resolve_aux, row_areas, standardize_weights, validate_dataset, Dataset,
};
use crate::render::{render_pairwise, render_single, render_weighted, OptionsPatch, RenderOptions};

/// Largest accepted request body.
pub const MAX_BODY_BYTES: usize = 5 * 1024 * 1024;

pub const DEFAULT_PORT: u16 = 8080;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Single,
    Pairwise,
    Weighted,
}

/// Dataset as it travels over the wire. `null` cells are missing values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetPayload {
    pub object_names: Vec<String>,
    pub attribute_names: Vec<String>,
    pub values: Vec<Vec<Option<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale_max: Option<f64>,
}

impl DatasetPayload {
    pub fn into_dataset(self) -> Result<Dataset, OrigamiError> {
        validate_dataset(
            self.object_names,
            self.attribute_names,
            &self.values,
            self.scale_max.unwrap_or(1.0),
        )
    }
}

impl From<&Dataset> for DatasetPayload {
    fn from(ds: &Dataset) -> Self {
        Self {
            object_names: ds.object_names().to_vec(),
            attribute_names: ds.attribute_names().to_vec(),
            values: ds
                .values()
                .iter()
                .map(|row| row.iter().copied().map(Some).collect())
                .collect(),
            scale_max: Some(ds.scale_max()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RenderRequest {
    pub mode: Mode,
    pub data: DatasetPayload,
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aux: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<OptionsPatch>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AreaSummary {
    pub raw: f64,
    pub normalized: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weighted_raw: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weighted_normalized: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenderResponse {
    pub svg: String,
    pub areas: BTreeMap<String, AreaSummary>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApiError {
    pub status: StatusCode,
    pub code: String,
    pub message: String,
    pub detail: Value,
}

impl ApiError {
    fn new(status: StatusCode, code: &str, message: impl Into<String>) -> Self {
        Self {
            status,
            code: code.to_string(),
            message: message.into(),
            detail: Value::Null,
        }
    }

    fn bad_request(code: &str, message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, code, message)
    }
}

impl From<OrigamiError> for ApiError {
    fn from(e: OrigamiError) -> Self {
        let detail = match &e {
            OrigamiError::UnknownObject { name, available } => {
                json!({ "name": name, "available": available })
            }
            OrigamiError::MissingValue { row, column, .. }
            | OrigamiError::NonNumericCell { row, column, .. }
            | OrigamiError::OutOfRange { row, column, .. } => {
                json!({ "row": row, "column": column })
            }
            OrigamiError::WeightSumViolation { sum } => json!({ "sum": sum }),
            OrigamiError::NonPositiveWeight { index, .. } => json!({ "index": index }),
            OrigamiError::LengthMismatch { expected, found } => {
                json!({ "expected": expected, "found": found })
            }
            OrigamiError::InvalidOption { option, .. } => json!({ "option": option }),
            _ => Value::Null,
        };
        Self {
            status: StatusCode::BAD_REQUEST,
            code: e.code().to_string(),
            message: e.to_string(),
            detail,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = json!({ "code": self.code, "message": self.message, "detail": self.detail });
        (self.status, Json(body)).into_response()
    }
}

/// Handles one render request. Pure: equal requests give equal responses.
pub fn render_request(req: RenderRequest) -> Result<RenderResponse, ApiError> {
    let expected = match req.mode {
        Mode::Single | Mode::Weighted => 1,
        Mode::Pairwise => 2,
    };
    if req.objects.len() != expected {
        return Err(ApiError::bad_request(
            "ARITY",
            format!(
                "mode {:?} takes {expected} object(s), got {}",
                req.mode,
                req.objects.len()
            ),
        ));
    }
    match (req.mode, &req.weights) {
        (Mode::Weighted, None) => {
            return Err(ApiError::bad_request(
                "MISSING_WEIGHTS",
                "weighted mode needs weights",
            ))
        }
        (Mode::Single | Mode::Pairwise, Some(_)) => {
            return Err(ApiError::bad_request(
                "UNEXPECTED_WEIGHTS",
                "weights are only accepted in weighted mode",
            ))
        }
        _ => {}
    }

    let ds = req.data.into_dataset()?;
    let opts = req
        .options
        .unwrap_or_default()
        .apply(&RenderOptions::default())?;
    let aux = resolve_aux(&ds, req.aux)?;
    let scale_max = ds.scale_max();

    let mut areas = BTreeMap::new();
    let mut summarize = |name: &str| -> Result<(), OrigamiError> {
        let i = ds.object_index(name)?;
        let (raw, normalized) = row_areas(&ds.values()[i], aux, scale_max)?;
        areas.insert(
            ds.object_names()[i].clone(),
            AreaSummary {
                raw,
                normalized,
                weighted_raw: None,
                weighted_normalized: None,
            },
        );
        Ok(())
    };

    let svg = match req.mode {
        Mode::Single => {
            let svg = render_single(&ds, &req.objects[0], aux, &opts)?;
            summarize(&req.objects[0])?;
            svg
        }
        Mode::Pairwise => {
            let svg = render_pairwise(&ds, &req.objects[0], &req.objects[1], aux, &opts)?;
            summarize(&req.objects[0])?;
            summarize(&req.objects[1])?;
            svg
        }
        Mode::Weighted => {
            let weights = req.weights.as_deref().unwrap_or_default();
            let wv = standardize_weights(weights, ds.n_attributes())?;
            let svg = render_weighted(&ds, &req.objects[0], &wv, aux, &opts)?;
            summarize(&req.objects[0])?;
            let i = ds.object_index(&req.objects[0])?;
            let weighted = apply_weights(&ds.values()[i], &wv)?;
            let (raw, normalized) = row_areas(&weighted, aux, scale_max)?;
            if let Some(entry) = areas.get_mut(&ds.object_names()[i]) {
                entry.weighted_raw = Some(raw);
                entry.weighted_normalized = Some(normalized);
            }
            svg
        }
    };
    Ok(RenderResponse { svg, areas })
}

async fn render_handler(body: Bytes) -> Result<Json<RenderResponse>, ApiError> {
    let req: RenderRequest = serde_json::from_slice(&body)
        .map_err(|e| ApiError::bad_request("INVALID_JSON", e.to_string()))?;
    render_request(req).map(Json)
}

async fn example_handler() -> Json<DatasetPayload> {
    Json(DatasetPayload::from(&embedded_example()))
}

async fn health_handler() -> Json<Value> {
    Json(json!({ "status": "ok", "version": env!("CARGO_PKG_VERSION") }))
}

async fn method_not_allowed() -> ApiError {
    ApiError::new(
        StatusCode::METHOD_NOT_ALLOWED,
        "METHOD_NOT_ALLOWED",
        "method not allowed on this route",
    )
}

async fn not_found() -> ApiError {
    ApiError::new(StatusCode::NOT_FOUND, "NOT_FOUND", "no such route")
}

const INDEX_HTML: &str = r#"<!doctype html>
<html><head><meta charset="utf-8"><title>Origami plot service</title></head>
<body>
<h1>Origami plot service</h1>
<p>POST a render request to <code>/api/render</code>; fetch the bundled dataset from
<code>/api/example</code>. Start with <code>--static-dir</code> to serve the web UI here.</p>
</body></html>
"#;

/// Builds the service. With `static_dir`, unmatched paths are served from
/// that directory (the browser front end); otherwise `/` shows a stub page.
pub fn router(static_dir: Option<PathBuf>) -> Router {
    let cors = CorsLayer::new()
        .allow_origin(Any)
        .allow_methods([Method::GET, Method::POST])
        .allow_headers([header::CONTENT_TYPE]);

    let api = Router::new()
        .route(
            "/api/render",
            post(render_handler).fallback(method_not_allowed),
        )
        .route(
            "/api/example",
            get(example_handler).fallback(method_not_allowed),
        )
        .route(
            "/api/health",
            get(health_handler).fallback(method_not_allowed),
        )
        .route("/api/{*rest}", axum::routing::any(not_found))
        .layer(DefaultBodyLimit::max(MAX_BODY_BYTES))
        .layer(cors);

    match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api
            .route("/", get(|| async { Html(INDEX_HTML) }))
            .fallback(not_found),
    }
}

/// Binds `addr` and serves until Ctrl-C.
pub async fn serve(addr: SocketAddr, static_dir: Option<PathBuf>) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    log::info!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(static_dir))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
