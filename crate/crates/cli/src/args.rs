use std::path::PathBuf;

use antigram_core::DEFAULT_THRESHOLD;
use clap::{Parser, Subcommand, ValueEnum};

/// Find anagrams of a word and flag anagram pairs that look like antigrams
/// (anagrams with opposite meanings) by their word-vector similarity.
///
/// Exit status: 0 success, 1 I/O or file format problem, 2 bad input,
/// 3 out-of-vocabulary word (`sim`).
#[derive(Debug, Parser)]
#[command(name = "antigram", version)]
pub struct Cli {
    /// Word list, one word per line.
    #[arg(long, global = true, env = "ANTIGRAM_DICT", value_name = "PATH")]
    pub dict: Option<PathBuf>,

    /// Word vector file (GloVe or word2vec text format).
    #[arg(long, global = true, env = "ANTIGRAM_EMBEDDINGS", value_name = "PATH")]
    pub embeddings: Option<PathBuf>,

    /// TSV of fixed pair scores (word_a, word_b, score) used instead of a
    /// vector file.
    #[arg(long, global = true, value_name = "PATH")]
    pub scores: Option<PathBuf>,

    /// Pairs scoring at or below this value are antigrams.
    #[arg(long, global = true, default_value_t = DEFAULT_THRESHOLD, allow_negative_numbers = true)]
    pub threshold: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Send queries to a running antigram-server instead of loading files.
    #[arg(long, global = true, env = "ANTIGRAM_SERVER", value_name = "URL")]
    pub server: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the dictionary anagrams of a word.
    Anagrams { word: String },
    /// Score every pair among a word and its anagrams and flag antigrams.
    Antigrams { word: String },
    /// Cosine similarity of two words.
    Sim { w1: String, w2: String },
    /// Compare system verdicts against a labelled gold file.
    Eval {
        gold: PathBuf,
        /// Two-column TSV of antonym pairs to report similarities for.
        #[arg(long, value_name = "PATH")]
        antonyms: Option<PathBuf>,
    },
}
