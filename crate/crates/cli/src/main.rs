use clap::Parser;
use cli::{run, write_artifacts, Cli};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(&args).and_then(|a| write_artifacts(&a)) {
        Ok(stdout) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(stdout.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
