use std::io;
use std::process::ExitCode;

use clap::Parser;
use spantruss_cli::args::Cli;
use spantruss_cli::commands;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SPANTRUSS_LOG", "warn")).init();
    let cli = Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    match commands::run(&cli.command, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
