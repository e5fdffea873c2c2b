//! HTTP/JSON front end over [`antigram_core::Engine`].
//!
//! | method | path                      | body / query            | response        |
//! |--------|---------------------------|-------------------------|-----------------|
//! | GET    | `/health`                 |                         | `Health`        |
//! | GET    | `/anagrams/{word}`        |                         | `AnagramResult` |
//! | GET    | `/antigrams/{word}`       | `?threshold=R`          | `AntigramReport`|
//! | GET    | `/sim/{w1}/{w2}`          |                         | `SimResponse`   |
//! | POST   | `/eval`                   | `EvalRequest`           | `EvalResponse`  |
//!
//! Errors are returned as an `ErrorBody` with status 400 (bad input),
//! 503 (resource not loaded) or 500.

use std::sync::Arc;

use antigram_core::api::{ErrorBody, ErrorKind, EvalRequest};
use antigram_core::{Engine, Error, DEFAULT_THRESHOLD};
use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use tokio::net::TcpListener;

pub type AppState = Arc<Engine>;

pub fn router(engine: Engine) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/anagrams/{word}", get(anagrams))
        .route("/antigrams/{word}", get(antigrams))
        .route("/sim/{w1}/{w2}", get(sim))
        .route("/eval", post(eval))
        .with_state(Arc::new(engine))
}

/// Serves until `shutdown` resolves.
pub async fn serve<F>(listener: TcpListener, engine: Engine, shutdown: F) -> std::io::Result<()>
where
    F: std::future::Future<Output = ()> + Send + 'static,
{
    axum::serve(listener, router(engine))
        .with_graceful_shutdown(shutdown)
        .await
}

struct ApiError(StatusCode, ErrorBody);

impl From<Error> for ApiError {
    fn from(err: Error) -> Self {
        let (status, kind) = match &err {
            Error::Input(_) | Error::LengthCap { .. } => (StatusCode::BAD_REQUEST, ErrorKind::Input),
            Error::Config(_) => (StatusCode::SERVICE_UNAVAILABLE, ErrorKind::Unavailable),
            Error::Io { .. } | Error::Parse { .. } => (StatusCode::INTERNAL_SERVER_ERROR, ErrorKind::Internal),
        };
        ApiError(
            status,
            ErrorBody {
                kind,
                message: err.to_string(),
            },
        )
    }
}

impl From<JsonRejection> for ApiError {
    fn from(rejection: JsonRejection) -> Self {
        ApiError(
            StatusCode::BAD_REQUEST,
            ErrorBody {
                kind: ErrorKind::Input,
                message: rejection.body_text(),
            },
        )
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(self.1)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

async fn health(State(engine): State<AppState>) -> impl IntoResponse {
    Json(engine.health())
}

async fn anagrams(State(engine): State<AppState>, Path(word): Path<String>) -> ApiResult<antigram_core::AnagramResult> {
    Ok(Json(engine.anagrams(&word)?))
}

#[derive(Debug, Deserialize)]
struct ThresholdQuery {
    threshold: Option<f64>,
}

async fn antigrams(
    State(engine): State<AppState>,
    Path(word): Path<String>,
    Query(q): Query<ThresholdQuery>,
) -> ApiResult<antigram_core::AntigramReport> {
    let threshold = q.threshold.unwrap_or(DEFAULT_THRESHOLD);
    Ok(Json(engine.antigrams(&word, threshold)?))
}

async fn sim(
    State(engine): State<AppState>,
    Path((w1, w2)): Path<(String, String)>,
) -> ApiResult<antigram_core::api::SimResponse> {
    Ok(Json(engine.sim(&w1, &w2)?))
}

async fn eval(
    State(engine): State<AppState>,
    body: Result<Json<EvalRequest>, JsonRejection>,
) -> ApiResult<antigram_core::api::EvalResponse> {
    let Json(request) = body?;
    let response = tokio::task::spawn_blocking(move || engine.eval(&request))
        .await
        .map_err(|e| {
            ApiError(
                StatusCode::INTERNAL_SERVER_ERROR,
                ErrorBody {
                    kind: ErrorKind::Internal,
                    message: e.to_string(),
                },
            )
        })??;
    Ok(Json(response))
}
