//! Scoring system verdicts against labelled gold pairs, and the antonym
//! similarity report.
//!
//! Gold files are tab-separated with three columns, `word_a`, `word_b` and a
//! `yes`/`no` label (case-insensitive). Lines starting with `#` are comments.
//! A pair labelled `yes` must be an anagram pair. Antonym files have two
//! columns.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::antigram::{find_antigrams, AnagramPair, PairScore, Verdict};
use crate::embeddings::Similarity;
use crate::error::{Error, Result};
use crate::lexicon::{normalize_word, signature, Lexicon};

/// A labelled pair with `word_a < word_b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GoldRecord {
    pub word_a: String,
    pub word_b: String,
    /// True when the pair is an antigram.
    pub label: bool,
}

impl GoldRecord {
    /// Normalizes and orders the words. Fails if a word is not normalizable,
    /// the words are equal, or a positive pair is not an anagram pair.
    pub fn new(a: &str, b: &str, label: bool) -> std::result::Result<GoldRecord, String> {
        let norm = |w: &str| normalize_word(w).ok_or_else(|| format!("invalid word {w:?}"));
        let (a, b) = (norm(a)?, norm(b)?);
        if a == b {
            return Err(format!("pair ({a}, {b}) repeats the same word"));
        }
        if label && signature(&a) != signature(&b) {
            return Err(format!("antigram pair ({a}, {b}) is not an anagram pair"));
        }
        let (word_a, word_b) = if a < b { (a, b) } else { (b, a) };
        Ok(GoldRecord { word_a, word_b, label })
    }

    fn key(&self) -> (&str, &str) {
        (&self.word_a, &self.word_b)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldSet {
    pub records: Vec<GoldRecord>,
    /// Repeated lines that were collapsed.
    pub duplicates: usize,
    pub source_path: PathBuf,
}

pub fn load_gold(path: impl AsRef<Path>) -> Result<GoldSet> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_gold(&text, path)
}

pub fn parse_gold(text: &str, source: impl Into<PathBuf>) -> Result<GoldSet> {
    let source = source.into();
    let mut records = Vec::new();
    let mut seen: HashMap<(String, String), bool> = HashMap::new();
    let mut duplicates = 0;

    for (line_no, fields) in data_lines(text) {
        let [a, b, label] = fields[..] else {
            return Err(Error::parse(
                &source,
                line_no,
                format!("expected 3 tab-separated columns, found {}", fields.len()),
            ));
        };
        let label = match label.to_ascii_lowercase().as_str() {
            "yes" => true,
            "no" => false,
            other => {
                return Err(Error::parse(
                    &source,
                    line_no,
                    format!("label must be yes or no, found {other:?}"),
                ))
            }
        };
        let record = GoldRecord::new(a, b, label).map_err(|m| Error::parse(&source, line_no, m))?;
        match seen.get(&(record.word_a.clone(), record.word_b.clone())) {
            Some(&prev) if prev == label => duplicates += 1,
            Some(_) => {
                return Err(Error::parse(
                    &source,
                    line_no,
                    format!("conflicting labels for ({}, {})", record.word_a, record.word_b),
                ))
            }
            None => {
                seen.insert((record.word_a.clone(), record.word_b.clone()), label);
                records.push(record);
            }
        }
    }

    if records.is_empty() {
        return Err(Error::Config(format!("gold file {} has no records", source.display())));
    }
    Ok(GoldSet {
        records,
        duplicates,
        source_path: source,
    })
}

/// Reads a two-column antonym pair file.
pub fn load_antonym_pairs(path: impl AsRef<Path>) -> Result<Vec<(String, String)>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_antonym_pairs(&text, path)
}

pub fn parse_antonym_pairs(text: &str, source: impl Into<PathBuf>) -> Result<Vec<(String, String)>> {
    let source = source.into();
    let mut pairs = Vec::new();
    for (line_no, fields) in data_lines(text) {
        let [a, b] = fields[..] else {
            return Err(Error::parse(
                &source,
                line_no,
                format!("expected 2 tab-separated columns, found {}", fields.len()),
            ));
        };
        let norm =
            |w: &str| normalize_word(w).ok_or_else(|| Error::parse(&source, line_no, format!("invalid word {w:?}")));
        pairs.push((norm(a)?, norm(b)?));
    }
    Ok(pairs)
}

/// Non-blank, non-comment lines split on tabs, with 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((idx + 1, line.split('\t').map(str::trim).collect()))
        }
    })
}

/// Runs the antigram search for every word named in `gold` and merges the
/// resulting pairs, deduplicated and sorted.
pub fn collect_verdicts<S>(lex: &Lexicon, sim: &S, gold: &[GoldRecord], threshold: f64) -> Result<Vec<AnagramPair>>
where
    S: Similarity + ?Sized,
{
    let mut roots: Vec<&str> = gold
        .iter()
        .flat_map(|r| [r.word_a.as_str(), r.word_b.as_str()])
        .collect();
    roots.sort_unstable();
    roots.dedup();

    let mut merged = BTreeMap::new();
    for root in roots {
        for pair in find_antigrams(lex, sim, root, threshold)?.pairs {
            merged.entry((pair.c0.clone(), pair.c1.clone())).or_insert(pair);
        }
    }
    Ok(merged.into_values().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    TruePositive,
    FalsePositive,
    TrueNegative,
    FalseNegative,
    /// The system could not score the pair.
    Indeterminate,
    /// The system produced no verdict for the pair.
    Missing,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRow {
    pub word_a: String,
    pub word_b: String,
    pub gold: bool,
    pub score: Option<PairScore>,
    pub system: Option<Verdict>,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EvalMetrics {
    pub tp: usize,
    pub fp: usize,
    pub tn: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    pub indeterminate: usize,
    pub missing: usize,
    /// `None` when no gold pair received a determinate verdict.
    pub accuracy: Option<f64>,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
}

impl EvalMetrics {
    pub fn determinate(&self) -> usize {
        self.tp + self.fp + self.tn + self.fn_
    }

    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::TruePositive => self.tp += 1,
            Outcome::FalsePositive => self.fp += 1,
            Outcome::TrueNegative => self.tn += 1,
            Outcome::FalseNegative => self.fn_ += 1,
            Outcome::Indeterminate => self.indeterminate += 1,
            Outcome::Missing => self.missing += 1,
        }
    }

    fn finish(&mut self) {
        let ratio = |num: usize, den: usize| (den > 0).then(|| num as f64 / den as f64);
        self.accuracy = ratio(self.tp + self.tn, self.determinate());
        self.precision = ratio(self.tp, self.tp + self.fp);
        self.recall = ratio(self.tp, self.tp + self.fn_);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    /// One row per gold record, in gold order.
    pub rows: Vec<EvalRow>,
    pub metrics: EvalMetrics,
}

/// Joins system verdicts to gold labels by canonical pair.
///
/// Indeterminate and missing pairs are counted separately and left out of
/// accuracy, precision and recall.
pub fn evaluate(verdicts: &[AnagramPair], gold: &[GoldRecord]) -> Evaluation {
    let mut by_pair: HashMap<(&str, &str), &AnagramPair> = HashMap::with_capacity(verdicts.len());
    for v in verdicts {
        let key = if v.c0 <= v.c1 {
            (v.c0.as_str(), v.c1.as_str())
        } else {
            (v.c1.as_str(), v.c0.as_str())
        };
        by_pair.entry(key).or_insert(v);
    }

    let mut metrics = EvalMetrics::default();
    let rows = gold
        .iter()
        .map(|g| {
            let found = by_pair.get(&g.key());
            let outcome = match found.map(|p| p.verdict.is_antigram()) {
                None => Outcome::Missing,
                Some(None) => Outcome::Indeterminate,
                Some(Some(true)) if g.label => Outcome::TruePositive,
                Some(Some(true)) => Outcome::FalsePositive,
                Some(Some(false)) if g.label => Outcome::FalseNegative,
                Some(Some(false)) => Outcome::TrueNegative,
            };
            metrics.record(outcome);
            EvalRow {
                word_a: g.word_a.clone(),
                word_b: g.word_b.clone(),
                gold: g.label,
                score: found.map(|p| p.score.clone()),
                system: found.map(|p| p.verdict),
                outcome,
            }
        })
        .collect();
    metrics.finish();
    Evaluation { rows, metrics }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AntonymRow {
    pub a: String,
    pub b: String,
    pub score: PairScore,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AntonymReport {
    pub rows: Vec<AntonymRow>,
    /// Mean over scored rows; `None` when nothing could be scored.
    pub mean: Option<f64>,
}

impl AntonymReport {
    pub fn scored(&self) -> impl Iterator<Item = f64> + '_ {
        self.rows.iter().filter_map(|r| r.score.value())
    }
}

/// Scores each pair; unscorable pairs are flagged and excluded from the mean.
pub fn antonym_report<S>(sim: &S, pairs: &[(String, String)]) -> AntonymReport
where
    S: Similarity + ?Sized,
{
    let rows: Vec<AntonymRow> = pairs
        .iter()
        .map(|(a, b)| AntonymRow {
            a: a.clone(),
            b: b.clone(),
            score: match sim.similarity(a, b) {
                Ok(z) => PairScore::Scored(z),
                Err(u) => PairScore::Unscorable(u),
            },
        })
        .collect();
    let (sum, n) = rows
        .iter()
        .filter_map(|r| r.score.value())
        .fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
    AntonymReport {
        rows,
        mean: (n > 0).then(|| sum / n as f64),
    }
}
