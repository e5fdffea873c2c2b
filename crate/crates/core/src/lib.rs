//! Anagram enumeration over a word list and antigram detection by thresholded
//! cosine similarity of pre-trained word vectors.
//!
//! The pipeline is:
//!
//! 1. [`Lexicon`] ingests a word list and indexes it by [`Signature`]
//!    (the sorted letters of a word).
//! 2. [`anagrams_of`] looks up every lexicon word sharing the root's
//!    signature. [`permutations`] is the literal enumerate-every-arrangement
//!    route, kept as a correctness check for the index.
//! 3. [`find_antigrams`] scores every unordered pair over the root and its
//!    anagrams with a [`Similarity`] source and flags pairs scoring at or
//!    below the threshold.
//! 4. [`evaluate`] joins those verdicts to labelled gold pairs.

pub mod anagram;
pub mod antigram;
pub mod api;
pub mod embeddings;
mod engine;
mod error;
pub mod evaluation;
pub mod lexicon;
pub mod scores;

pub use anagram::{anagrams_by_permutation, anagrams_of, permutation_count, permutations, AnagramResult};
pub use antigram::{
    candidate_pairs, classify_score, find_antigrams, score_pairs, AnagramPair, AntigramReport, PairScore, Verdict,
    DEFAULT_THRESHOLD,
};
pub use embeddings::{EmbeddingTable, Similarity, SimilarityScore, Unscorable};
pub use engine::{validate_threshold, Engine};
pub use error::{Error, Result};
pub use evaluation::{
    antonym_report, collect_verdicts, evaluate, load_antonym_pairs, load_gold, parse_antonym_pairs, parse_gold,
    AntonymReport, AntonymRow, EvalMetrics, EvalRow, Evaluation, GoldRecord, GoldSet, Outcome,
};
pub use lexicon::{normalize_word, signature, Lexicon, Signature};
pub use scores::ScoreTable;
