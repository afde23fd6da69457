use std::process::ExitCode;

use clap::Parser;
use ecs_cli::error::ExitStatus;
use ecs_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { ExitStatus::InputError.code() as u8 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.json));
            ExitCode::from(out.status.code() as u8)
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": e.to_string(), "exit_code": e.exit_status().code() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_status().code() as u8)
        }
    }
}
