mod args;
mod backend;
mod render;

use std::io::Write;
use std::process::ExitCode;

use antigram_core::api::EvalRequest;
use antigram_core::{load_antonym_pairs, load_gold, validate_threshold, PairScore, Unscorable};
use clap::Parser;

use crate::args::{Cli, Command};
use crate::backend::{Backend, Failure, Needs, EXIT_OOV};

fn run(cli: &Cli) -> Result<String, Failure> {
    validate_threshold(cli.threshold)?;
    let needs = match cli.command {
        Command::Anagrams { .. } => Needs {
            lexicon: true,
            similarity: false,
        },
        Command::Antigrams { .. } | Command::Eval { .. } => Needs {
            lexicon: true,
            similarity: true,
        },
        Command::Sim { .. } => Needs {
            lexicon: false,
            similarity: true,
        },
    };

    match &cli.command {
        Command::Anagrams { word } => {
            let backend = Backend::open(cli, needs)?;
            Ok(render::anagrams(&backend.anagrams(word)?, cli.format))
        }
        Command::Antigrams { word } => {
            let backend = Backend::open(cli, needs)?;
            Ok(render::antigrams(&backend.antigrams(word, cli.threshold)?, cli.format))
        }
        Command::Sim { w1, w2 } => {
            let backend = Backend::open(cli, needs)?;
            let response = backend.sim(w1, w2)?;
            if let PairScore::Unscorable(u) = &response.score {
                let message = match u {
                    Unscorable::Oov { token } => format!("OOV: {token}"),
                    other => other.to_string(),
                };
                return Err(Failure::new(EXIT_OOV, message));
            }
            Ok(render::sim(&response, cli.format))
        }
        Command::Eval { gold, antonyms } => {
            // Read inputs before loading anything large.
            let gold = load_gold(gold)?;
            if gold.duplicates > 0 {
                eprintln!(
                    "{}: collapsed {} duplicate pair(s)",
                    gold.source_path.display(),
                    gold.duplicates
                );
            }
            let antonyms = antonyms.as_ref().map(load_antonym_pairs).transpose()?;
            let request = EvalRequest {
                gold: gold.records,
                antonyms,
                threshold: Some(cli.threshold),
            };
            let backend = Backend::open(cli, needs)?;
            Ok(render::eval(&backend.eval(&request)?, cli.format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(output.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(backend::EXIT_IO);
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("antigram: {failure}");
            ExitCode::from(failure.code)
        }
    }
}
