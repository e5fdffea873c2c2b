//! JSON bodies exchanged between the HTTP service and its clients.
//!
//! `GET /anagrams/{word}` returns an [`AnagramResult`](crate::AnagramResult)
//! and `GET /antigrams/{word}?threshold=R` an
//! [`AntigramReport`](crate::AntigramReport). The remaining endpoints use the
//! types below. Failures carry an [`ErrorBody`].

use serde::{Deserialize, Serialize};

use crate::antigram::PairScore;
use crate::evaluation::{AntonymReport, Evaluation, GoldRecord};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Health {
    pub status: String,
    pub lexicon_words: Option<usize>,
    pub lexicon_source: Option<String>,
    /// Where similarity scores come from (vector file or score table).
    pub similarity_source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimResponse {
    pub w1: String,
    pub w2: String,
    pub score: PairScore,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRequest {
    pub gold: Vec<GoldRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antonyms: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalResponse {
    pub threshold: f64,
    pub evaluation: Evaluation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antonyms: Option<AntonymReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    /// Bad word, threshold or request body.
    Input,
    /// The service was started without the resource this call needs.
    Unavailable,
    /// The server failed to process a well-formed request.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: ErrorKind,
    pub message: String,
}
