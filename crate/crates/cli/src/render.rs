//! Output formatting. Scores print with 4 decimals, percentages and the
//! antonym mean with 2.

use std::fmt::Write as _;

use antigram_core::api::{EvalResponse, SimResponse};
use antigram_core::{AnagramPair, AnagramResult, AntigramReport, EvalRow, Outcome, PairScore};
use serde::Serialize;

use crate::args::Format;

fn json_line<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string(value).expect("response types serialize"));
    out.push('\n');
}

pub fn anagrams(result: &AnagramResult, format: Format) -> String {
    let mut out = String::new();
    for word in &result.anagrams {
        match format {
            Format::Text | Format::Tsv => {
                out.push_str(word);
                out.push('\n');
            }
            Format::Jsonl => json_line(&mut out, &serde_json::json!({ "root": result.root, "anagram": word })),
        }
    }
    out
}

pub fn antigrams(report: &AntigramReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Tsv => {
            for p in &report.pairs {
                let _ = writeln!(out, "{}\t{}\t{}\t{}", p.c0, p.c1, p.score, p.verdict);
            }
        }
        Format::Jsonl => report.pairs.iter().for_each(|p| json_line(&mut out, p)),
        Format::Text => {
            let w0 = report.pairs.iter().map(|p| p.c0.len()).max().unwrap_or(0);
            let w1 = report.pairs.iter().map(|p| p.c1.len()).max().unwrap_or(0);
            let cells: Vec<String> = report.pairs.iter().map(|p| p.score.to_string()).collect();
            let ws = cells.iter().map(String::len).max().unwrap_or(0);
            for (AnagramPair { c0, c1, verdict, .. }, score) in report.pairs.iter().zip(&cells) {
                let _ = writeln!(out, "{c0:<w0$}  {c1:<w1$}  {score:>ws$}  {verdict}");
            }
        }
    }
    out
}

pub fn sim(response: &SimResponse, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Jsonl => json_line(&mut out, response),
        Format::Text | Format::Tsv => {
            let _ = writeln!(out, "{}", response.score);
        }
    }
    out
}

fn percent(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{:.2}", v * 100.0),
        None => "undefined".into(),
    }
}

fn yes_no(label: bool) -> &'static str {
    if label {
        "yes"
    } else {
        "no"
    }
}

fn outcome(o: Outcome) -> &'static str {
    match o {
        Outcome::TruePositive => "tp",
        Outcome::FalsePositive => "fp",
        Outcome::TrueNegative => "tn",
        Outcome::FalseNegative => "fn",
        Outcome::Indeterminate => "indeterminate",
        Outcome::Missing => "missing",
    }
}

fn score_cell(score: &Option<PairScore>) -> String {
    score.as_ref().map_or_else(|| "-".into(), |s| s.to_string())
}

fn system_cell(row: &EvalRow) -> &'static str {
    row.system.map_or("-", |v| v.as_str())
}

pub fn eval(response: &EvalResponse, format: Format) -> String {
    let mut out = String::new();
    let ev = &response.evaluation;
    let m = &ev.metrics;
    match format {
        Format::Jsonl => json_line(&mut out, response),
        Format::Tsv => {
            for r in &ev.rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    r.word_a,
                    r.word_b,
                    score_cell(&r.score),
                    system_cell(r),
                    yes_no(r.gold),
                    outcome(r.outcome)
                );
            }
            for (name, v) in [
                ("tp", m.tp),
                ("fp", m.fp),
                ("tn", m.tn),
                ("fn", m.fn_),
                ("indeterminate", m.indeterminate),
                ("missing", m.missing),
            ] {
                let _ = writeln!(out, "{name}\t{v}");
            }
            let _ = writeln!(out, "accuracy\t{}", percent(m.accuracy));
            let _ = writeln!(out, "precision\t{}", percent(m.precision));
            let _ = writeln!(out, "recall\t{}", percent(m.recall));
            if let Some(report) = &response.antonyms {
                for r in &report.rows {
                    let _ = writeln!(out, "antonym\t{}\t{}\t{}", r.a, r.b, r.score);
                }
                let _ = writeln!(
                    out,
                    "mean\t{}",
                    report.mean.map_or("undefined".into(), |v| format!("{v:.2}"))
                );
            }
        }
        Format::Text => {
            let width = ev
                .rows
                .iter()
                .map(|r| r.word_a.len() + r.word_b.len() + 4)
                .max()
                .unwrap_or(4)
                .max(4);
            let cells: Vec<String> = ev.rows.iter().map(|r| score_cell(&r.score)).collect();
            let ws = cells.iter().map(String::len).max().unwrap_or(0).max(8);
            let _ = writeln!(
                out,
                "{:<width$}  {:>ws$}  {:<13}  {:<4}  outcome",
                "pair", "score", "system", "gold"
            );
            for (r, score) in ev.rows.iter().zip(&cells) {
                let pair = format!("({}, {})", r.word_a, r.word_b);
                let _ = writeln!(
                    out,
                    "{pair:<width$}  {score:>ws$}  {:<13}  {:<4}  {}",
                    system_cell(r),
                    yes_no(r.gold),
                    outcome(r.outcome)
                );
            }
            let _ = writeln!(
                out,
                "tp={} fp={} tn={} fn={} indeterminate={} missing={}",
                m.tp, m.fp, m.tn, m.fn_, m.indeterminate, m.missing
            );
            let pct = |v: Option<f64>| match v {
                Some(_) => format!("{}%", percent(v)),
                None => "undefined".into(),
            };
            let _ = writeln!(out, "accuracy {}", pct(m.accuracy));
            let _ = writeln!(out, "precision {}", pct(m.precision));
            let _ = writeln!(out, "recall {}", pct(m.recall));
            if let Some(report) = &response.antonyms {
                let _ = writeln!(out, "\nantonym pair{:width$}score", "", width = 12);
                for r in &report.rows {
                    let pair = format!("{}-{}", r.a, r.b);
                    let _ = writeln!(out, "{pair:<24}{}", r.score);
                }
                let _ = writeln!(
                    out,
                    "mean {}",
                    report.mean.map_or("undefined".into(), |v| format!("{v:.2}"))
                );
            }
        }
    }
    out
}
