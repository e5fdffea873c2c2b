//! Word-list ingestion and the signature index.
//!
//! A [`Lexicon`] is the "is this a real word" oracle for anagram search: a set
//! of normalized words plus an index from each word's [`Signature`] to every
//! word sharing it. Two words are anagrams exactly when their signatures match,
//! so the index answers "which words can these letters spell" in one lookup.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The letters of a word sorted ascending. Equal signatures identify an
/// anagram class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(String);

impl Signature {
    /// Signature of an arbitrary string, normalizing it first.
    pub fn of(raw: &str) -> Option<Signature> {
        normalize_word(raw).map(|w| signature(&w))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Lowercases `raw` and accepts it only if every character is in `[a-z]`.
///
/// Apostrophes, hyphens, digits, whitespace and non-ASCII letters all cause
/// rejection (`None`). The empty string is rejected too.
pub fn normalize_word(raw: &str) -> Option<String> {
    if raw.is_empty() {
        return None;
    }
    let lower = raw.to_lowercase();
    lower.bytes().all(|b| b.is_ascii_lowercase()).then_some(lower)
}

/// Sorted-letter key of an already normalized word.
pub fn signature(word: &str) -> Signature {
    let mut bytes = word.as_bytes().to_vec();
    bytes.sort_unstable();
    // Sorting bytes of an ASCII string keeps it valid UTF-8.
    Signature(String::from_utf8(bytes).expect("normalized words are ASCII"))
}

/// Normalized word set with a signature index.
#[derive(Debug, Clone, PartialEq)]
pub struct Lexicon {
    words: HashSet<String>,
    index: HashMap<Signature, Vec<String>>,
    source_path: PathBuf,
    rejected_lines: usize,
    duplicate_lines: usize,
}

impl Lexicon {
    /// Loads a newline-delimited UTF-8 word list.
    ///
    /// Lines are trimmed (so CRLF endings are fine) and normalized with
    /// [`normalize_word`]. Lines that fail normalization are skipped and
    /// counted; duplicates collapse. A file yielding no usable word is a
    /// configuration error.
    pub fn load(path: impl AsRef<Path>) -> Result<Lexicon> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        let reader = BufReader::new(file);

        let mut builder = Builder::new(path);
        for (idx, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::parse(path, idx + 1, e.to_string()))?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            builder.push(trimmed);
        }
        builder.finish()
    }

    /// Builds a lexicon from in-memory words, applying the same rules as
    /// [`Lexicon::load`].
    pub fn from_words<I, S>(words: I, source: impl Into<PathBuf>) -> Result<Lexicon>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut builder = Builder::new(source);
        for word in words {
            let word = word.as_ref().trim();
            if !word.is_empty() {
                builder.push(word);
            }
        }
        builder.finish()
    }

    /// Membership test; `word` is normalized first, so "Pit" matches "pit".
    pub fn contains(&self, word: &str) -> bool {
        match normalize_word(word) {
            Some(w) => self.words.contains(&w),
            None => false,
        }
    }

    /// All words with signature `sig`, sorted ascending.
    pub fn words_for_signature(&self, sig: &Signature) -> &[String] {
        self.index.get(sig).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }

    /// Number of distinct signatures (anagram classes).
    pub fn class_count(&self) -> usize {
        self.index.len()
    }

    pub fn source_path(&self) -> &Path {
        &self.source_path
    }

    /// Identifier recorded on query results.
    pub fn id(&self) -> String {
        self.source_path.display().to_string()
    }

    /// Non-empty lines that failed normalization.
    pub fn rejected_lines(&self) -> usize {
        self.rejected_lines
    }

    /// Accepted lines that repeated an earlier word.
    pub fn duplicate_lines(&self) -> usize {
        self.duplicate_lines
    }
}

struct Builder {
    source: PathBuf,
    words: HashSet<String>,
    rejected: usize,
    duplicates: usize,
}

impl Builder {
    fn new(source: impl Into<PathBuf>) -> Self {
        Builder {
            source: source.into(),
            words: HashSet::new(),
            rejected: 0,
            duplicates: 0,
        }
    }

    fn push(&mut self, raw: &str) {
        match normalize_word(raw) {
            Some(word) => {
                if !self.words.insert(word) {
                    self.duplicates += 1;
                }
            }
            None => self.rejected += 1,
        }
    }

    fn finish(self) -> Result<Lexicon> {
        if self.words.is_empty() {
            return Err(Error::Config(format!(
                "word list {} contains no usable words",
                self.source.display()
            )));
        }

        let mut index: HashMap<Signature, Vec<String>> = HashMap::new();
        for word in &self.words {
            index.entry(signature(word)).or_default().push(word.clone());
        }
        for class in index.values_mut() {
            class.sort_unstable();
        }

        Ok(Lexicon {
            words: self.words,
            index,
            source_path: self.source,
            rejected_lines: self.rejected,
            duplicate_lines: self.duplicates,
        })
    }
}
