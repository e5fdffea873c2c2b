use std::path::PathBuf;

use antigram_core::{EmbeddingTable, Engine, Lexicon, ScoreTable};
use clap::Parser;
use tokio::net::TcpListener;
use tracing::info;

/// Serve anagram, antigram and similarity queries over HTTP.
#[derive(Debug, Parser)]
#[command(version)]
struct Args {
    /// Word list, one word per line.
    #[arg(long, env = "ANTIGRAM_DICT")]
    dict: PathBuf,

    /// Word vector file (GloVe or word2vec text format).
    #[arg(long, env = "ANTIGRAM_EMBEDDINGS", conflicts_with = "scores")]
    embeddings: Option<PathBuf>,

    /// TSV of fixed pair scores used instead of a vector file.
    #[arg(long)]
    scores: Option<PathBuf>,

    #[arg(long, env = "ANTIGRAM_LISTEN", default_value = "127.0.0.1:7878")]
    listen: String,
}

fn load(args: &Args) -> antigram_core::Result<Engine> {
    let lexicon = Lexicon::load(&args.dict)?;
    info!(
        words = lexicon.word_count(),
        rejected = lexicon.rejected_lines(),
        "loaded word list {}",
        args.dict.display()
    );
    let mut engine = Engine::new().with_lexicon(lexicon);
    if let Some(path) = &args.scores {
        let table = ScoreTable::load(path)?;
        info!(pairs = table.len(), "loaded score table {}", path.display());
        engine = engine.with_similarity(path.display().to_string(), table);
    } else if let Some(path) = &args.embeddings {
        let table = EmbeddingTable::load(path)?;
        info!(
            tokens = table.len(),
            dimension = table.dimension(),
            duplicates = table.duplicate_tokens(),
            zero_norm = table.zero_norm_tokens(),
            "loaded vectors {}",
            path.display()
        );
        engine = engine.with_similarity(path.display().to_string(), table);
    }
    Ok(engine)
}

#[tokio::main]
async fn main() {
    tracing_subscriber::fmt()
        .with_env_filter(tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| "info".into()))
        .with_writer(std::io::stderr)
        .init();

    let args = Args::parse();
    let engine = match tokio::task::spawn_blocking(move || load(&args).map(|e| (e, args))).await {
        Ok(Ok(loaded)) => loaded,
        Ok(Err(err)) => {
            eprintln!("antigram-server: {err}");
            std::process::exit(1);
        }
        Err(err) => panic!("loader panicked: {err}"),
    };
    let (engine, args) = engine;

    let listener = match TcpListener::bind(&args.listen).await {
        Ok(l) => l,
        Err(err) => {
            eprintln!("antigram-server: cannot bind {}: {err}", args.listen);
            std::process::exit(1);
        }
    };
    info!("listening on {}", listener.local_addr().expect("bound socket"));

    let shutdown = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    if let Err(err) = antigram_server::serve(listener, engine, shutdown).await {
        eprintln!("antigram-server: {err}");
        std::process::exit(1);
    }
}
