use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use jaco_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    // Print whatever was produced, even if a later step failed.
    if let Err(e) = std::io::stdout().lock().write_all(out.as_bytes()) {
        eprintln!("jaco: {e}");
        return ExitCode::from(1);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("jaco: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
