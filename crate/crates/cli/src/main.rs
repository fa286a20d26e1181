use clap::error::ErrorKind;
use clap::Parser as _;
use constrec_cli::cli::Cli;
use constrec_cli::{run, UsageError};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run::dispatch(cli.command) {
        Ok(code) => ExitCode::from(code.clamp(0, 255) as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = if e.downcast_ref::<UsageError>().is_some() {
                64u8
            } else if e
                .chain()
                .any(|c| c.downcast_ref::<std::io::Error>().is_some())
            {
                74
            } else {
                70
            };
            ExitCode::from(code)
        }
    }
}
