use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use qedvac_cli::{args::Cli, run};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            let mut cmd = Cli::command();
            cmd.build();
            let sub = std::env::args().nth(1).unwrap_or_default();
            let usage = match cmd.find_subcommand_mut(&sub) {
                Some(s) => s.render_usage(),
                None => cmd.render_usage(),
            };
            eprintln!("\n{usage}");
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
