//! Single-word anagram search.
//!
//! [`anagrams_of`] answers from the lexicon's signature index. [`permutations`]
//! enumerates every distinct arrangement of a word's letters, which is the
//! brute-force route (generate all, keep the dictionary words). The two must
//! agree; the permutation route is factorial and is length-capped.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexicon::{normalize_word, signature, Lexicon};

/// Longest word [`permutations`] will enumerate (9! = 362,880 arrangements).
pub const DEFAULT_PERMUTATION_CAP: usize = 9;

/// The anagram list of a root word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnagramResult {
    pub root: String,
    /// Sorted, deduplicated, never contains `root`.
    pub anagrams: Vec<String>,
    pub lexicon_id: String,
}

/// All distinct arrangements of the letters of `word`, up to
/// [`DEFAULT_PERMUTATION_CAP`] letters.
pub fn permutations(word: &str) -> Result<BTreeSet<String>> {
    permutations_capped(word, DEFAULT_PERMUTATION_CAP)
}

/// [`permutations`] with an explicit length cap.
///
/// Repeated letters do not produce repeated arrangements: walking the
/// lexicographic successor sequence from the sorted letters visits each
/// distinct arrangement exactly once.
pub fn permutations_capped(word: &str, cap: usize) -> Result<BTreeSet<String>> {
    let mut letters: Vec<char> = word.chars().collect();
    if letters.len() > cap {
        return Err(Error::LengthCap {
            len: letters.len(),
            cap,
        });
    }
    letters.sort_unstable();

    let mut out = BTreeSet::new();
    loop {
        out.insert(letters.iter().collect());
        if !next_permutation(&mut letters) {
            break;
        }
    }
    Ok(out)
}

/// Rearranges `items` into the next lexicographically greater arrangement.
/// Returns false (leaving `items` untouched) when it is already the last one.
fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut pivot = items.len() - 1;
    while pivot > 0 && items[pivot - 1] >= items[pivot] {
        pivot -= 1;
    }
    if pivot == 0 {
        return false;
    }
    let mut successor = items.len() - 1;
    while items[successor] <= items[pivot - 1] {
        successor -= 1;
    }
    items.swap(pivot - 1, successor);
    items[pivot..].reverse();
    true
}

/// Number of distinct arrangements of `word`: n! divided by the factorial of
/// each letter's multiplicity.
pub fn permutation_count(word: &str) -> u128 {
    let mut counts = std::collections::BTreeMap::<char, u32>::new();
    for c in word.chars() {
        *counts.entry(c).or_default() += 1;
    }
    let n = word.chars().count() as u32;
    let denom: u128 = counts.values().map(|&m| factorial(m)).product();
    factorial(n) / denom
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

fn normalize_root(raw: &str) -> Result<String> {
    normalize_word(raw).ok_or_else(|| Error::Input(format!("{raw:?} is not a single word of letters a-z")))
}

/// Anagrams of `raw` found in `lex` via the signature index.
///
/// The root does not need to be a lexicon word itself. It is always left out
/// of its own anagram list.
pub fn anagrams_of(lex: &Lexicon, raw: &str) -> Result<AnagramResult> {
    let root = normalize_root(raw)?;
    let anagrams = lex
        .words_for_signature(&signature(&root))
        .iter()
        .filter(|w| **w != root)
        .cloned()
        .collect();
    Ok(AnagramResult {
        root,
        anagrams,
        lexicon_id: lex.id(),
    })
}

/// Anagrams of `raw` by enumerating every arrangement and keeping the ones
/// present in `lex`. Output-equivalent to [`anagrams_of`], but factorial in
/// the word length and subject to [`DEFAULT_PERMUTATION_CAP`].
pub fn anagrams_by_permutation(lex: &Lexicon, raw: &str) -> Result<AnagramResult> {
    let root = normalize_root(raw)?;
    let anagrams = permutations(&root)?
        .into_iter()
        .filter(|p| *p != root && lex.contains(p))
        .collect();
    Ok(AnagramResult {
        root,
        anagrams,
        lexicon_id: lex.id(),
    })
}
