use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use qudit_magic::{commands, Cli, CliError};

fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("QUDIT_MAGIC_THREADS") {
        let n: usize = v.parse().map_err(|_| {
            CliError::Usage(format!(
                "QUDIT_MAGIC_THREADS must be a positive integer, got {v:?}"
            ))
        })?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = configure_threads()
        .and_then(|_| commands::run(&cli))
        .and_then(|mut a| {
            a.manifest.wall_clock_seconds = Some(start.elapsed().as_secs_f64());
            let text = a.render(cli.format)?;
            match &cli.out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(a.passed)
        });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("qudit-magic: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("qudit-magic: {e}");
            ExitCode::from(2)
        }
    }
}
