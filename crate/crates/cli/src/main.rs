use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ddperm_cli::{run, Cli, EXIT_PARSE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("ddperm: cannot configure thread pool: {e}");
            return ExitCode::from(EXIT_PARSE as u8);
        }
    }
    match run(&cli) {
        Ok(doc) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(doc.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_PARSE as u8);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("ddperm: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
