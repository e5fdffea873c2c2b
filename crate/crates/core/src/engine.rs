//! Loaded resources plus the query operations run against them.

use std::sync::Arc;

use crate::anagram::{anagrams_of, AnagramResult};
use crate::antigram::{find_antigrams, AntigramReport, PairScore, DEFAULT_THRESHOLD};
use crate::api::{EvalRequest, EvalResponse, Health, SimResponse};
use crate::embeddings::Similarity;
use crate::error::{Error, Result};
use crate::evaluation::{antonym_report, collect_verdicts, evaluate, GoldRecord};
use crate::lexicon::{normalize_word, Lexicon};

/// Rejects thresholds outside `[-1, 1]` (and NaN).
pub fn validate_threshold(threshold: f64) -> Result<f64> {
    if (-1.0..=1.0).contains(&threshold) {
        Ok(threshold)
    } else {
        Err(Error::Input(format!("threshold {threshold} is outside [-1, 1]")))
    }
}

/// A word list and a similarity source, either of which may be absent.
/// Operations needing a missing resource fail with [`Error::Config`].
#[derive(Clone, Default)]
pub struct Engine {
    lexicon: Option<Arc<Lexicon>>,
    similarity: Option<Arc<dyn Similarity>>,
    similarity_source: Option<String>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_lexicon(mut self, lexicon: Lexicon) -> Self {
        self.lexicon = Some(Arc::new(lexicon));
        self
    }

    pub fn with_similarity(mut self, source: impl Into<String>, sim: impl Similarity + 'static) -> Self {
        self.similarity = Some(Arc::new(sim));
        self.similarity_source = Some(source.into());
        self
    }

    pub fn lexicon(&self) -> Result<&Lexicon> {
        self.lexicon
            .as_deref()
            .ok_or_else(|| Error::Config("no word list loaded".into()))
    }

    pub fn similarity(&self) -> Result<&dyn Similarity> {
        self.similarity
            .as_deref()
            .ok_or_else(|| Error::Config("no vector file or score table loaded".into()))
    }

    pub fn health(&self) -> Health {
        Health {
            status: "ok".into(),
            lexicon_words: self.lexicon.as_ref().map(|l| l.word_count()),
            lexicon_source: self.lexicon.as_ref().map(|l| l.id()),
            similarity_source: self.similarity_source.clone(),
        }
    }

    pub fn anagrams(&self, word: &str) -> Result<AnagramResult> {
        anagrams_of(self.lexicon()?, word)
    }

    pub fn antigrams(&self, word: &str, threshold: f64) -> Result<AntigramReport> {
        let threshold = validate_threshold(threshold)?;
        find_antigrams(self.lexicon()?, self.similarity()?, word, threshold)
    }

    /// Scores two words. An out-of-vocabulary word is reported in the score,
    /// not as an error.
    pub fn sim(&self, w1: &str, w2: &str) -> Result<SimResponse> {
        let norm = |w: &str| {
            normalize_word(w).ok_or_else(|| Error::Input(format!("{w:?} is not a single word of letters a-z")))
        };
        let (w1, w2) = (norm(w1)?, norm(w2)?);
        let score = match self.similarity()?.similarity(&w1, &w2) {
            Ok(z) => PairScore::Scored(z),
            Err(u) => PairScore::Unscorable(u),
        };
        Ok(SimResponse { w1, w2, score })
    }

    pub fn eval(&self, request: &EvalRequest) -> Result<EvalResponse> {
        let threshold = validate_threshold(request.threshold.unwrap_or(DEFAULT_THRESHOLD))?;
        // Re-check records: requests may arrive from outside this crate.
        let gold = request
            .gold
            .iter()
            .map(|g| GoldRecord::new(&g.word_a, &g.word_b, g.label).map_err(Error::Input))
            .collect::<Result<Vec<_>>>()?;
        let sim = self.similarity()?;
        let verdicts = collect_verdicts(self.lexicon()?, sim, &gold, threshold)?;
        let evaluation = evaluate(&verdicts, &gold);
        let antonyms = request.antonyms.as_ref().map(|pairs| antonym_report(sim, pairs));
        Ok(EvalResponse {
            threshold,
            evaluation,
            antonyms,
        })
    }
}
