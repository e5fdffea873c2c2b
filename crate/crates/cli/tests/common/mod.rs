#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

/// The CLI with any ANTIGRAM_* variables from the outer environment removed.
pub fn antigram() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_antigram"));
    for var in ["ANTIGRAM_DICT", "ANTIGRAM_EMBEDDINGS", "ANTIGRAM_SERVER"] {
        cmd.env_remove(var);
    }
    cmd
}

/// Runs the CLI against the sample word list and the reference score table.
pub fn with_fixtures(args: &[&str]) -> Output {
    antigram()
        .args(args)
        .args([
            "--dict",
            &data("words_sample.txt"),
            "--scores",
            &data("reference_scores.tsv"),
        ])
        .output()
        .expect("run antigram")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// `(c0, c1, score, verdict)` rows of `antigrams --format tsv` output.
pub fn tsv_rows(text: &str) -> Vec<(String, String, String, String)> {
    text.lines()
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            assert_eq!(f.len(), 4, "bad row {l:?}");
            (f[0].into(), f[1].into(), f[2].into(), f[3].into())
        })
        .collect()
}
