use std::io::{self, Write};
use std::process::ExitCode;

use cayley_core::cli::{run, Cli, Outcome};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let outcome = match run(&cli, &mut out) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("cayley: {e}");
            e.outcome()
        }
    };
    if out.flush().is_err() {
        return Outcome::Usage.into();
    }
    outcome.into()
}
