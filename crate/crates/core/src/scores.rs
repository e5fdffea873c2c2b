//! Fixed pairwise scores read from a TSV file.
//!
//! Lets the classifier and metrics run against fixed reference similarity values
//! without a vector file. Each non-comment line is `word_a<TAB>word_b<TAB>score`;
//! pairs are unordered.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use crate::embeddings::{Similarity, SimilarityScore, Unscorable};
use crate::error::{Error, Result};
use crate::lexicon::normalize_word;

#[derive(Debug, Clone, Default)]
pub struct ScoreTable {
    scores: HashMap<(String, String), f64>,
    words: HashSet<String>,
    source_path: PathBuf,
}

fn key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_owned(), b.to_owned())
    } else {
        (b.to_owned(), a.to_owned())
    }
}

impl ScoreTable {
    pub fn load(path: impl AsRef<Path>) -> Result<ScoreTable> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    pub fn parse(text: &str, source: impl Into<PathBuf>) -> Result<ScoreTable> {
        let source = source.into();
        let mut table = ScoreTable {
            source_path: source.clone(),
            ..Default::default()
        };
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
            let [a, b, score] = fields[..] else {
                return Err(Error::parse(
                    &source,
                    line_no,
                    format!("expected 3 tab-separated columns, found {}", fields.len()),
                ));
            };
            let word = |w: &str| {
                normalize_word(w).ok_or_else(|| Error::parse(&source, line_no, format!("invalid word {w:?}")))
            };
            let (a, b) = (word(a)?, word(b)?);
            let score: f64 = score
                .parse()
                .ok()
                .filter(|s: &f64| (-1.0..=1.0).contains(s))
                .ok_or_else(|| Error::parse(&source, line_no, format!("score {score:?} is not a number in [-1, 1]")))?;

            let k = key(&a, &b);
            if let Some(&prev) = table.scores.get(&k) {
                if prev != score {
                    return Err(Error::parse(
                        &source,
                        line_no,
                        format!("conflicting score for ({}, {})", k.0, k.1),
                    ));
                }
            }
            table.scores.insert(k, score);
            table.words.insert(a);
            table.words.insert(b);
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn source_path(&self) -> &Path {
        &self.source_path
    }
}

impl Similarity for ScoreTable {
    fn similarity(&self, a: &str, b: &str) -> std::result::Result<SimilarityScore, Unscorable> {
        let (a, b) = (a.to_lowercase(), b.to_lowercase());
        if let Some(&s) = self.scores.get(&key(&a, &b)) {
            return Ok(SimilarityScore::new(s));
        }
        for w in [&a, &b] {
            if !self.words.contains(w) {
                return Err(Unscorable::Oov { token: w.clone() });
            }
        }
        if a == b {
            return Ok(SimilarityScore::new(1.0));
        }
        Err(Unscorable::UnknownPair { a, b })
    }
}
