mod common;

use std::io::Write;
use std::thread;

use antigram_core::{Engine, Lexicon, ScoreTable};
use common::{antigram, data, stderr, stdout, tsv_rows, with_fixtures};

#[test]
fn anagrams_lists_words() {
    let out = antigram()
        .args(["anagrams", "tip", "--dict", &data("words_sample.txt")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "pit\n");

    let out = antigram()
        .args(["anagrams", "zzzzq", "--dict", &data("words_sample.txt")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
}

#[test]
fn anagrams_jsonl() {
    let out = antigram()
        .args([
            "--format",
            "jsonl",
            "anagrams",
            "Tip",
            "--dict",
            &data("words_sample.txt"),
        ])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "{\"anagram\":\"pit\",\"root\":\"tip\"}\n");
}

#[test]
fn bad_word_exits_2() {
    let out = antigram()
        .args(["anagrams", "don't", "--dict", &data("words_sample.txt")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("don't"));
}

#[test]
fn missing_or_broken_files_exit_1() {
    let out = antigram()
        .args(["anagrams", "tip", "--dict", "/nonexistent/words"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("/nonexistent/words"));

    let mut vectors = tempfile::NamedTempFile::new().unwrap();
    writeln!(vectors, "tip 1 2 3\npit 1 2").unwrap();
    let out = antigram()
        .args(["antigrams", "tip", "--dict", &data("words_sample.txt")])
        .arg("--embeddings")
        .arg(vectors.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains(":2:"), "{}", stderr(&out));
}

#[test]
fn missing_required_paths_exit_2() {
    let out = antigram().args(["anagrams", "tip"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = antigram()
        .args(["antigrams", "tip", "--dict", &data("words_sample.txt")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = antigram().args(["sim", "a", "b"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dict_from_environment_and_flag_override() {
    let out = antigram()
        .env("ANTIGRAM_DICT", data("words_sample.txt"))
        .args(["anagrams", "tip"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "pit\n");

    let out = antigram()
        .env("ANTIGRAM_DICT", "/nonexistent/words")
        .args(["anagrams", "tip", "--dict", &data("words_sample.txt")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn antigram_rows() {
    let out = with_fixtures(&["antigrams", "sheared", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = tsv_rows(&stdout(&out));
    let find = |a: &str, b: &str| rows.iter().find(|r| r.0 == a && r.1 == b).cloned().unwrap();
    assert_eq!(find("adheres", "headers").2, "-0.0400");
    assert_eq!(find("adheres", "sheared").3, "antigram");
    assert_eq!(find("headers", "sheared").3, "antigram");
    assert_eq!(find("hearsed", "sheared").2, "OOV:hearsed");
    assert_eq!(find("hearsed", "sheared").3, "indeterminate");
    // n = 5 words in the class gives 10 pairs.
    assert_eq!(rows.len(), 10);
}

#[test]
fn threshold_flag() {
    let out = with_fixtures(&["antigrams", "tip", "--threshold", "0.2", "--format", "tsv"]);
    assert_eq!(stdout(&out), "pit\ttip\t0.2800\tnot-antigram\n");
    let out = with_fixtures(&["antigrams", "tip", "--threshold", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = with_fixtures(&["antigrams", "zzzzq", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
}

#[test]
fn sim_command() {
    let mut vectors = tempfile::NamedTempFile::new().unwrap();
    writeln!(vectors, "pit 0.3 -1.2 0.5\nup 1 0 0\ndown -1 0 0").unwrap();
    let run = |a: &str, b: &str| {
        antigram()
            .args(["sim", a, b])
            .arg("--embeddings")
            .arg(vectors.path())
            .output()
            .unwrap()
    };
    assert_eq!(stdout(&run("pit", "pit")), "1.0000\n");
    assert_eq!(stdout(&run("up", "down")), "-1.0000\n");
    let out = run("pit", "qzxv");
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("OOV: qzxv"));
}

#[test]
fn eval_perfect_agreement() {
    let dir = tempfile::tempdir().unwrap();
    let gold = dir.path().join("gold.tsv");
    std::fs::write(&gold, "tip\tpit\tyes\nsheared\theaders\tyes\nindeed\tdenied\tno\n").unwrap();
    let out = with_fixtures(&["eval", gold.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("accuracy 100.00%"), "{}", stdout(&out));
}

#[test]
fn eval_rejects_bad_gold() {
    let dir = tempfile::tempdir().unwrap();
    let gold = dir.path().join("gold.tsv");
    std::fs::write(&gold, "cat\tdog\tyes\n").unwrap();
    let out = with_fixtures(&["eval", gold.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains(":1:"));
}

/// Starts a server on an ephemeral port in a background thread.
fn spawn_server() -> String {
    let (tx, rx) = std::sync::mpsc::channel();
    thread::spawn(move || {
        let runtime = tokio::runtime::Runtime::new().unwrap();
        runtime.block_on(async {
            let engine = Engine::new()
                .with_lexicon(Lexicon::load(data("words_sample.txt")).unwrap())
                .with_similarity("reference", ScoreTable::load(data("reference_scores.tsv")).unwrap());
            let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
            tx.send(listener.local_addr().unwrap()).unwrap();
            antigram_server::serve(listener, engine, std::future::pending())
                .await
                .unwrap();
        });
    });
    format!("http://{}", rx.recv().unwrap())
}

#[test]
fn remote_mode_matches_local_mode() {
    let url = spawn_server();
    for args in [
        vec!["antigrams", "sheared", "--format", "tsv"],
        vec!["antigrams", "tip", "--threshold", "0.2"],
        vec!["anagrams", "termini"],
        vec!["sim", "up", "down"],
    ] {
        let local = with_fixtures(&args);
        let remote = antigram().args(&args).args(["--server", &url]).output().unwrap();
        assert_eq!(remote.status.code(), Some(0), "{args:?}: {}", stderr(&remote));
        assert_eq!(stdout(&remote), stdout(&local), "{args:?}");
    }

    let gold = data("reference_gold.tsv");
    let antonyms = data("antonyms.tsv");
    let args = ["eval", gold.as_str(), "--antonyms", antonyms.as_str()];
    let local = with_fixtures(&args);
    let remote = antigram().env("ANTIGRAM_SERVER", &url).args(args).output().unwrap();
    assert_eq!(stdout(&remote), stdout(&local));

    let out = antigram()
        .args(["anagrams", "don't", "--server", &url])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = antigram()
        .args(["sim", "pit", "qzxv", "--server", &url])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unreachable_server_exits_1() {
    let listener = std::net::TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = listener.local_addr().unwrap();
    drop(listener);
    let out = antigram()
        .args(["anagrams", "tip", "--server", &format!("http://{addr}")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
