use std::io::Write;
use std::path::PathBuf;

use antigram_core::{normalize_word, signature, Lexicon, Signature};
use proptest::prelude::*;

fn sample_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/words_sample.txt")
}

fn sample() -> Lexicon {
    Lexicon::load(sample_path()).expect("sample word list")
}

#[test]
fn sample_contains_reference_words() {
    let lex = sample();
    for w in [
        "sheared", "adheres", "headers", "pit", "tip", "termini", "interim", "indeed", "denied", "souring", "rousing",
    ] {
        assert!(lex.contains(w), "{w}");
    }
    assert!(lex.contains("Pit"));
    assert!(!lex.contains("tpi"));
    assert!(!lex.contains(""));
}

#[test]
fn sample_signature_classes() {
    let lex = sample();
    assert_eq!(lex.words_for_signature(&signature("pit")), ["pit", "tip"]);
    assert!(lex.words_for_signature(&Signature::of("zzzzq").unwrap()).is_empty());
    let class = lex.words_for_signature(&signature("sheared"));
    for w in ["adheres", "headers", "sheared"] {
        assert!(class.iter().any(|c| c == w), "{w} missing from {class:?}");
    }
    assert!(class.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn every_word_is_in_its_own_class() {
    let lex = sample();
    let mut total = 0;
    for w in lex.words() {
        assert!(lex.words_for_signature(&signature(w)).iter().any(|c| c == w));
        total += 1;
    }
    assert_eq!(total, lex.word_count());
}

#[test]
fn loading_is_idempotent() {
    assert_eq!(sample(), sample());
}

#[test]
fn reload_from_rewritten_file_matches() {
    let lex = sample();
    let mut words: Vec<&str> = lex.words().collect();
    words.sort_unstable();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    for w in words.iter().rev() {
        writeln!(file, "{}", w.to_uppercase()).unwrap();
    }
    let again = Lexicon::load(file.path()).unwrap();
    assert_eq!(again.word_count(), lex.word_count());
    assert_eq!(again.class_count(), lex.class_count());
    for w in words {
        assert_eq!(
            again.words_for_signature(&signature(w)),
            lex.words_for_signature(&signature(w))
        );
    }
}

proptest! {
    #[test]
    fn signature_ignores_letter_order(word in "[a-z]{0,12}", seed in any::<u64>()) {
        let mut letters: Vec<char> = word.chars().collect();
        // Fisher-Yates driven by a simple LCG so the shuffle is reproducible.
        let mut state = seed | 1;
        for i in (1..letters.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            letters.swap(i, j);
        }
        let shuffled: String = letters.into_iter().collect();
        prop_assert_eq!(signature(&shuffled), signature(&word));
    }

    #[test]
    fn signature_preserves_length_and_is_idempotent(word in "[a-z]{0,16}") {
        let sig = signature(&word);
        prop_assert_eq!(sig.len(), word.len());
        prop_assert_eq!(signature(sig.as_str()), sig.clone());
        prop_assert!(sig.as_str().bytes().all(|b| b.is_ascii_lowercase()));
    }

    #[test]
    fn normalization_accepts_only_letters(raw in "\\PC{0,10}") {
        match normalize_word(&raw) {
            Some(w) => {
                prop_assert!(!w.is_empty());
                prop_assert!(w.bytes().all(|b| b.is_ascii_lowercase()));
                prop_assert_eq!(w, raw.to_lowercase());
            }
            None => prop_assert!(raw.is_empty() || !raw.to_lowercase().bytes().all(|b| b.is_ascii_lowercase())),
        }
    }
}
