//! Runs queries either in-process or against a remote server.

use std::fmt;

use antigram_client::{Client, ClientError};
use antigram_core::api::{ErrorKind, EvalRequest, EvalResponse, SimResponse};
use antigram_core::{AnagramResult, AntigramReport, EmbeddingTable, Engine, Error, Lexicon, ScoreTable};
use tokio::runtime::Runtime;

use crate::args::Cli;

pub const EXIT_IO: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_OOV: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self::new(EXIT_INPUT, message)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Input(_) | Error::LengthCap { .. } => EXIT_INPUT,
            Error::Io { .. } | Error::Parse { .. } | Error::Config(_) => EXIT_IO,
        };
        Failure::new(code, err.to_string())
    }
}

impl From<ClientError> for Failure {
    fn from(err: ClientError) -> Self {
        let code = match &err {
            ClientError::BadUrl(_) => EXIT_INPUT,
            ClientError::Api { body, .. } if body.kind == ErrorKind::Input => EXIT_INPUT,
            _ => EXIT_IO,
        };
        Failure::new(code, err.to_string())
    }
}

/// Which resources a subcommand needs when running locally.
#[derive(Debug, Clone, Copy)]
pub struct Needs {
    pub lexicon: bool,
    pub similarity: bool,
}

pub enum Backend {
    Local(Engine),
    Remote { client: Client, runtime: Runtime },
}

impl Backend {
    pub fn open(cli: &Cli, needs: Needs) -> Result<Backend, Failure> {
        if let Some(url) = &cli.server {
            let runtime = tokio::runtime::Builder::new_current_thread()
                .enable_all()
                .build()
                .map_err(|e| Failure::new(EXIT_IO, format!("cannot start runtime: {e}")))?;
            let client = Client::new(url)?;
            return Ok(Backend::Remote { client, runtime });
        }

        let mut engine = Engine::new();
        if needs.lexicon {
            let path = cli
                .dict
                .as_ref()
                .ok_or_else(|| Failure::input("a word list is required (--dict or ANTIGRAM_DICT)"))?;
            engine = engine.with_lexicon(Lexicon::load(path)?);
        }
        if needs.similarity {
            if let Some(path) = &cli.scores {
                engine = engine.with_similarity(path.display().to_string(), ScoreTable::load(path)?);
            } else if let Some(path) = &cli.embeddings {
                eprintln!("loading vectors from {}", path.display());
                let table = EmbeddingTable::load(path)?;
                engine = engine.with_similarity(path.display().to_string(), table);
            } else {
                return Err(Failure::input(
                    "a vector file (--embeddings or ANTIGRAM_EMBEDDINGS) or --scores is required",
                ));
            }
        }
        Ok(Backend::Local(engine))
    }

    pub fn anagrams(&self, word: &str) -> Result<AnagramResult, Failure> {
        match self {
            Backend::Local(engine) => Ok(engine.anagrams(word)?),
            Backend::Remote { client, runtime } => Ok(runtime.block_on(client.anagrams(word))?),
        }
    }

    pub fn antigrams(&self, word: &str, threshold: f64) -> Result<AntigramReport, Failure> {
        match self {
            Backend::Local(engine) => Ok(engine.antigrams(word, threshold)?),
            Backend::Remote { client, runtime } => Ok(runtime.block_on(client.antigrams(word, threshold))?),
        }
    }

    pub fn sim(&self, w1: &str, w2: &str) -> Result<SimResponse, Failure> {
        match self {
            Backend::Local(engine) => Ok(engine.sim(w1, w2)?),
            Backend::Remote { client, runtime } => Ok(runtime.block_on(client.sim(w1, w2))?),
        }
    }

    pub fn eval(&self, request: &EvalRequest) -> Result<EvalResponse, Failure> {
        match self {
            Backend::Local(engine) => Ok(engine.eval(request)?),
            Backend::Remote { client, runtime } => Ok(runtime.block_on(client.eval(request))?),
        }
    }
}
