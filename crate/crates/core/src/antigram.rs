//! Pairwise scoring of an anagram class and the antigram threshold rule.
//!
//! Every unordered pair drawn from the root word and its anagrams is scored,
//! and a pair whose similarity is at or below the threshold is reported as an
//! antigram. Pairs that cannot be scored are kept with an indeterminate
//! verdict and never enter the antigram list.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::anagram::anagrams_of;
use crate::embeddings::{Similarity, SimilarityScore, Unscorable};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;

pub const DEFAULT_THRESHOLD: f64 = 0.3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Antigram,
    NotAntigram,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Antigram => "antigram",
            Verdict::NotAntigram => "not-antigram",
            Verdict::Indeterminate => "indeterminate",
        }
    }

    /// `None` for indeterminate.
    pub fn is_antigram(self) -> Option<bool> {
        match self {
            Verdict::Antigram => Some(true),
            Verdict::NotAntigram => Some(false),
            Verdict::Indeterminate => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairScore {
    Scored(SimilarityScore),
    Unscorable(Unscorable),
}

impl PairScore {
    pub fn value(&self) -> Option<f64> {
        match self {
            PairScore::Scored(s) => Some(s.value()),
            PairScore::Unscorable(_) => None,
        }
    }
}

impl fmt::Display for PairScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairScore::Scored(s) => s.fmt(f),
            PairScore::Unscorable(u) => u.fmt(f),
        }
    }
}

/// A scored unordered pair, stored with `c0 < c1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnagramPair {
    pub c0: String,
    pub c1: String,
    pub score: PairScore,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AntigramReport {
    pub root: String,
    pub threshold: f64,
    pub anagrams: Vec<String>,
    /// Every pair over the root and its anagrams, sorted by `(c0, c1)`.
    pub pairs: Vec<AnagramPair>,
    pub antigram_list: Vec<AnagramPair>,
}

/// Inclusive threshold rule: a score at or below `threshold` is an antigram.
pub fn classify_score(z: SimilarityScore, threshold: f64) -> bool {
    z.value() <= threshold
}

/// Canonical unordered pairs over the distinct entries of `words`, each with
/// its smaller word first, sorted.
pub fn candidate_pairs<S: AsRef<str>>(words: &[S]) -> Vec<(String, String)> {
    let mut sorted: Vec<&str> = words.iter().map(AsRef::as_ref).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut pairs = Vec::with_capacity(sorted.len() * sorted.len().saturating_sub(1) / 2);
    for (i, a) in sorted.iter().enumerate() {
        for b in &sorted[i + 1..] {
            pairs.push((a.to_string(), b.to_string()));
        }
    }
    pairs
}

/// Scores and classifies canonical pairs. Output order follows input order.
pub fn score_pairs<S>(sim: &S, pairs: &[(String, String)], threshold: f64) -> Vec<AnagramPair>
where
    S: Similarity + ?Sized,
{
    pairs
        .par_iter()
        .map(|(c0, c1)| {
            let (score, verdict) = match sim.similarity(c0, c1) {
                Ok(z) if classify_score(z, threshold) => (PairScore::Scored(z), Verdict::Antigram),
                Ok(z) => (PairScore::Scored(z), Verdict::NotAntigram),
                Err(u) => (PairScore::Unscorable(u), Verdict::Indeterminate),
            };
            AnagramPair {
                c0: c0.clone(),
                c1: c1.clone(),
                score,
                verdict,
            }
        })
        .collect()
}

/// Finds the anagrams of `raw`, scores every pair among the root and its
/// anagrams, and collects the pairs scoring at or below `threshold`.
pub fn find_antigrams<S>(lex: &Lexicon, sim: &S, raw: &str, threshold: f64) -> Result<AntigramReport>
where
    S: Similarity + ?Sized,
{
    if threshold.is_nan() {
        return Err(Error::Input("threshold must be a number".into()));
    }
    let result = anagrams_of(lex, raw)?;
    let pairs = if result.anagrams.is_empty() {
        Vec::new()
    } else {
        let mut candidates = result.anagrams.clone();
        candidates.push(result.root.clone());
        score_pairs(sim, &candidate_pairs(&candidates), threshold)
    };
    let antigram_list = pairs
        .iter()
        .filter(|p| p.verdict == Verdict::Antigram)
        .cloned()
        .collect();
    Ok(AntigramReport {
        root: result.root,
        threshold,
        anagrams: result.anagrams,
        pairs,
        antigram_list,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scores::ScoreTable;

    fn lexicon() -> Lexicon {
        Lexicon::from_words(
            ["tip", "pit", "sheared", "adheres", "headers", "termini", "interim"],
            "mem",
        )
        .unwrap()
    }

    fn reference_scores() -> ScoreTable {
        ScoreTable::parse(
            "tip\tpit\t0.28\nsheared\tadheres\t-0.05\nsheared\theaders\t0.23\nadheres\theaders\t-0.04\n",
            "mem",
        )
        .unwrap()
    }

    #[test]
    fn classify_examples() {
        let t = DEFAULT_THRESHOLD;
        assert!(classify_score(SimilarityScore::new(-0.08), t));
        assert!(!classify_score(SimilarityScore::new(0.42), t));
        assert!(classify_score(SimilarityScore::new(0.28), t));
        assert!(classify_score(SimilarityScore::new(0.3), t));
    }

    #[test]
    fn candidate_pairs_are_canonical() {
        let pairs = candidate_pairs(&["sheared", "adheres", "headers", "adheres"]);
        assert_eq!(
            pairs,
            [
                ("adheres".to_string(), "headers".to_string()),
                ("adheres".to_string(), "sheared".to_string()),
                ("headers".to_string(), "sheared".to_string()),
            ]
        );
        assert!(candidate_pairs(&["only"]).is_empty());
    }

    #[test]
    fn sheared_with_reference_scores() {
        let report = find_antigrams(&lexicon(), &reference_scores(), "sheared", DEFAULT_THRESHOLD).unwrap();
        assert_eq!(report.pairs.len(), 3);
        assert_eq!(report.antigram_list.len(), 3);
        let scores: Vec<f64> = report.pairs.iter().map(|p| p.score.value().unwrap()).collect();
        assert_eq!(scores, [-0.04, -0.05, 0.23]);
    }

    #[test]
    fn tip_with_reference_score() {
        let report = find_antigrams(&lexicon(), &reference_scores(), "tip", DEFAULT_THRESHOLD).unwrap();
        assert_eq!(report.pairs.len(), 1);
        assert_eq!(
            (report.antigram_list[0].c0.as_str(), report.antigram_list[0].c1.as_str()),
            ("pit", "tip")
        );
        let report = find_antigrams(&lexicon(), &reference_scores(), "tip", 0.2).unwrap();
        assert_eq!(report.pairs[0].verdict, Verdict::NotAntigram);
        assert!(report.antigram_list.is_empty());
    }

    #[test]
    fn no_anagrams_no_pairs() {
        let report = find_antigrams(&lexicon(), &reference_scores(), "zzzzq", DEFAULT_THRESHOLD).unwrap();
        assert!(report.pairs.is_empty());
        assert!(report.antigram_list.is_empty());
    }

    #[test]
    fn unscorable_pairs_are_indeterminate() {
        let report = find_antigrams(&lexicon(), &reference_scores(), "termini", DEFAULT_THRESHOLD).unwrap();
        assert_eq!(report.pairs.len(), 1);
        let pair = &report.pairs[0];
        assert_eq!(pair.verdict, Verdict::Indeterminate);
        assert_eq!(
            pair.score,
            PairScore::Unscorable(Unscorable::Oov {
                token: "interim".into()
            })
        );
        assert_eq!(pair.score.to_string(), "OOV:interim");
        assert!(report.antigram_list.is_empty());
    }

    #[test]
    fn nan_threshold_rejected() {
        assert!(matches!(
            find_antigrams(&lexicon(), &reference_scores(), "tip", f64::NAN),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn pair_serializes_with_tagged_score() {
        let report = find_antigrams(&lexicon(), &reference_scores(), "tip", DEFAULT_THRESHOLD).unwrap();
        let json = serde_json::to_string(&report.pairs[0]).unwrap();
        assert_eq!(
            json,
            r#"{"c0":"pit","c1":"tip","score":{"scored":0.28},"verdict":"antigram"}"#
        );
        let back: AnagramPair = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report.pairs[0]);
    }
}
