//! Thin async client for `antigram-server`.
//!
//! ```no_run
//! # async fn demo() -> Result<(), antigram_client::ClientError> {
//! let client = antigram_client::Client::new("http://127.0.0.1:7878")?;
//! let report = client.antigrams("sheared", 0.3).await?;
//! for pair in &report.antigram_list {
//!     println!("{} {} {}", pair.c0, pair.c1, pair.score);
//! }
//! # Ok(())
//! # }
//! ```

use antigram_core::api::{ErrorBody, EvalRequest, EvalResponse, Health, SimResponse};
use antigram_core::{AnagramResult, AntigramReport};
use reqwest::{StatusCode, Url};
use serde::de::DeserializeOwned;

#[derive(Debug, thiserror::Error)]
pub enum ClientError {
    #[error("invalid server URL {0:?}")]
    BadUrl(String),

    #[error("request failed: {0}")]
    Transport(#[from] reqwest::Error),

    /// The server answered with an error body.
    #[error("server returned {status}: {}", body.message)]
    Api { status: StatusCode, body: ErrorBody },

    #[error("server returned {status} with an unreadable body: {text}")]
    Unexpected { status: StatusCode, text: String },
}

#[derive(Debug, Clone)]
pub struct Client {
    http: reqwest::Client,
    base: Url,
}

impl Client {
    pub fn new(base: &str) -> Result<Client, ClientError> {
        let base = Url::parse(base).map_err(|_| ClientError::BadUrl(base.to_owned()))?;
        if base.cannot_be_a_base() {
            return Err(ClientError::BadUrl(base.to_string()));
        }
        Ok(Client {
            http: reqwest::Client::new(),
            base,
        })
    }

    /// Base URL with `segments` appended, each percent-encoded.
    fn url(&self, segments: &[&str]) -> Url {
        let mut url = self.base.clone();
        url.path_segments_mut()
            .expect("checked in Client::new")
            .pop_if_empty()
            .extend(segments);
        url
    }

    async fn decode<T: DeserializeOwned>(response: reqwest::Response) -> Result<T, ClientError> {
        let status = response.status();
        if status.is_success() {
            return Ok(response.json().await?);
        }
        let text = response.text().await?;
        match serde_json::from_str::<ErrorBody>(&text) {
            Ok(body) => Err(ClientError::Api { status, body }),
            Err(_) => Err(ClientError::Unexpected { status, text }),
        }
    }

    pub async fn health(&self) -> Result<Health, ClientError> {
        Self::decode(self.http.get(self.url(&["health"])).send().await?).await
    }

    pub async fn anagrams(&self, word: &str) -> Result<AnagramResult, ClientError> {
        Self::decode(self.http.get(self.url(&["anagrams", word])).send().await?).await
    }

    pub async fn antigrams(&self, word: &str, threshold: f64) -> Result<AntigramReport, ClientError> {
        let mut url = self.url(&["antigrams", word]);
        url.query_pairs_mut().append_pair("threshold", &threshold.to_string());
        Self::decode(self.http.get(url).send().await?).await
    }

    pub async fn sim(&self, w1: &str, w2: &str) -> Result<SimResponse, ClientError> {
        Self::decode(self.http.get(self.url(&["sim", w1, w2])).send().await?).await
    }

    pub async fn eval(&self, request: &EvalRequest) -> Result<EvalResponse, ClientError> {
        Self::decode(self.http.post(self.url(&["eval"])).json(request).send().await?).await
    }
}
