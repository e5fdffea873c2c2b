//! Pre-trained word vectors and cosine similarity.
//!
//! The text vector format has one entry per line: a token followed by its
//! components, space separated. Files in the word2vec text layout start with
//! a `<count> <dimension>` header line; GloVe files have no header. A first
//! line made of exactly two integers is treated as a header, anything else as
//! data.
//!
//! ```text
//! tip 0.1 -0.3 0.25
//! pit 0.2 0.1 -0.5
//! ```
//!
//! Tokens are lowercased on load and on lookup. Vectors are stored as `f64`
//! and their norms are computed once at load time.

use std::collections::HashMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cosine similarity clamped to `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimilarityScore(f64);

impl SimilarityScore {
    /// Wraps a raw cosine value, clamping rounding overshoot into `[-1, 1]`.
    pub fn new(value: f64) -> Self {
        SimilarityScore(value.clamp(-1.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for SimilarityScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.4}", self.0)
    }
}

/// Why a pair could not be scored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Unscorable {
    /// The token has no vector.
    Oov { token: String },
    /// A score table knows both words but has no score for this pair.
    UnknownPair { a: String, b: String },
}

impl fmt::Display for Unscorable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unscorable::Oov { token } => write!(f, "OOV:{token}"),
            Unscorable::UnknownPair { a, b } => write!(f, "NOSCORE:{a}/{b}"),
        }
    }
}

/// A source of pairwise similarity scores.
pub trait Similarity: Send + Sync {
    /// Must be symmetric in its arguments.
    fn similarity(&self, a: &str, b: &str) -> std::result::Result<SimilarityScore, Unscorable>;
}

/// Token to vector map with a fixed dimension. Immutable once built.
#[derive(Debug, Clone)]
pub struct EmbeddingTable {
    dimension: usize,
    rows: HashMap<String, usize>,
    data: Vec<f64>,
    norms: Vec<f64>,
    source_path: PathBuf,
    duplicate_tokens: usize,
    zero_norm_tokens: usize,
}

impl EmbeddingTable {
    /// Reads a text vector file, with or without a count/dimension header.
    ///
    /// Every data line must carry the same number of finite components as
    /// the first one (or as the header says). Repeated tokens keep their first
    /// vector; all-zero vectors are dropped. Both are counted.
    pub fn load(path: impl AsRef<Path>) -> Result<EmbeddingTable> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        let mut reader = BufReader::with_capacity(1 << 20, file);

        let mut builder = TableBuilder::new(path, None);
        let mut line = String::new();
        let mut line_no = 0usize;
        let mut seen_data = false;
        loop {
            line.clear();
            let n = reader
                .read_line(&mut line)
                .map_err(|e| Error::parse(path, line_no + 1, e.to_string()))?;
            if n == 0 {
                break;
            }
            line_no += 1;
            let text = line.trim_end_matches(['\n', '\r']);
            if text.trim().is_empty() {
                continue;
            }

            if !seen_data {
                seen_data = true;
                if let Some(dim) = parse_header(text) {
                    if dim == 0 {
                        return Err(Error::parse(path, line_no, "header declares dimension 0"));
                    }
                    builder.dimension = Some(dim);
                    continue;
                }
            }

            let mut fields = text.split_ascii_whitespace();
            let token = fields.next().expect("line is not blank");
            let mut components = Vec::with_capacity(builder.dimension.unwrap_or(0));
            for field in fields {
                let value: f64 = field
                    .parse()
                    .map_err(|_| Error::parse(path, line_no, format!("non-numeric component {field:?}")))?;
                if !value.is_finite() {
                    return Err(Error::parse(path, line_no, format!("non-finite component {field:?}")));
                }
                components.push(value);
            }
            builder
                .push(token, components)
                .map_err(|message| Error::parse(path, line_no, message))?;
        }
        builder.finish()
    }

    /// Builds a table from in-memory vectors, applying the same rules as
    /// [`EmbeddingTable::load`].
    pub fn from_entries<I, S>(entries: I) -> Result<EmbeddingTable>
    where
        I: IntoIterator<Item = (S, Vec<f64>)>,
        S: AsRef<str>,
    {
        let mut builder = TableBuilder::new("<memory>", None);
        for (idx, (token, vector)) in entries.into_iter().enumerate() {
            if let Some(bad) = vector.iter().find(|v| !v.is_finite()) {
                return Err(Error::parse("<memory>", idx + 1, format!("non-finite component {bad}")));
            }
            builder
                .push(token.as_ref(), vector)
                .map_err(|message| Error::parse("<memory>", idx + 1, message))?;
        }
        builder.finish()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn source_path(&self) -> &Path {
        &self.source_path
    }

    pub fn duplicate_tokens(&self) -> usize {
        self.duplicate_tokens
    }

    pub fn zero_norm_tokens(&self) -> usize {
        self.zero_norm_tokens
    }

    pub fn contains(&self, token: &str) -> bool {
        self.row(token).is_some()
    }

    fn row(&self, token: &str) -> Option<usize> {
        match self.rows.get(token) {
            Some(&row) => Some(row),
            None => self.rows.get(&token.to_lowercase()).copied(),
        }
    }

    fn slice(&self, row: usize) -> &[f64] {
        &self.data[row * self.dimension..(row + 1) * self.dimension]
    }

    /// The stored vector for `token` (case-insensitive).
    pub fn vector(&self, token: &str) -> std::result::Result<&[f64], Unscorable> {
        self.row(token).map(|r| self.slice(r)).ok_or_else(|| Unscorable::Oov {
            token: token.to_lowercase(),
        })
    }

    /// Cosine of the angle between the vectors of `a` and `b`.
    ///
    /// If either token is missing the first missing one is reported.
    pub fn cosine_similarity(&self, a: &str, b: &str) -> std::result::Result<SimilarityScore, Unscorable> {
        let oov = |t: &str| Unscorable::Oov {
            token: t.to_lowercase(),
        };
        let ra = self.row(a).ok_or_else(|| oov(a))?;
        let rb = self.row(b).ok_or_else(|| oov(b))?;
        let dot: f64 = self.slice(ra).iter().zip(self.slice(rb)).map(|(x, y)| x * y).sum();
        Ok(SimilarityScore::new(dot / (self.norms[ra] * self.norms[rb])))
    }
}

impl Similarity for EmbeddingTable {
    fn similarity(&self, a: &str, b: &str) -> std::result::Result<SimilarityScore, Unscorable> {
        self.cosine_similarity(a, b)
    }
}

/// `Some(dimension)` if the line is exactly two unsigned integers.
fn parse_header(line: &str) -> Option<usize> {
    let mut fields = line.split_ascii_whitespace();
    let count = fields.next()?;
    let dim = fields.next()?;
    if fields.next().is_some() {
        return None;
    }
    count.parse::<u64>().ok()?;
    dim.parse::<usize>().ok()
}

struct TableBuilder {
    source: PathBuf,
    dimension: Option<usize>,
    rows: HashMap<String, usize>,
    data: Vec<f64>,
    norms: Vec<f64>,
    duplicates: usize,
    zero_norm: usize,
}

impl TableBuilder {
    fn new(source: impl Into<PathBuf>, dimension: Option<usize>) -> Self {
        TableBuilder {
            source: source.into(),
            dimension,
            rows: HashMap::new(),
            data: Vec::new(),
            norms: Vec::new(),
            duplicates: 0,
            zero_norm: 0,
        }
    }

    fn push(&mut self, token: &str, vector: Vec<f64>) -> std::result::Result<(), String> {
        let dim = match self.dimension {
            Some(d) => d,
            None => {
                if vector.is_empty() {
                    return Err(format!("token {token:?} has no components"));
                }
                self.dimension = Some(vector.len());
                vector.len()
            }
        };
        if vector.len() != dim {
            return Err(format!("expected {dim} components, found {}", vector.len()));
        }

        let token = token.to_lowercase();
        if self.rows.contains_key(&token) {
            self.duplicates += 1;
            return Ok(());
        }
        let norm = vector.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            self.zero_norm += 1;
            return Ok(());
        }
        self.rows.insert(token, self.norms.len());
        self.norms.push(norm);
        self.data.extend_from_slice(&vector);
        Ok(())
    }

    fn finish(self) -> Result<EmbeddingTable> {
        let dimension = match self.dimension {
            Some(d) if !self.rows.is_empty() => d,
            _ => {
                return Err(Error::Config(format!(
                    "vector file {} contains no usable vectors",
                    self.source.display()
                )))
            }
        };
        Ok(EmbeddingTable {
            dimension,
            rows: self.rows,
            data: self.data,
            norms: self.norms,
            source_path: self.source,
            duplicate_tokens: self.duplicates,
            zero_norm_tokens: self.zero_norm,
        })
    }
}
