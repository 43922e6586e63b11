mod args;
mod commands;
mod input;

use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command};

fn print(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Command::Detect(a) = &cli.command {
        if let Some(n) = a.threads {
            if let Err(e) = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global()
            {
                eprintln!("warning: {e}");
            }
        }
    }
    match commands::run(&cli.command) {
        Ok(out) => {
            if cli.report {
                print(&json!({"status": "ok", "payload": out.payload, "warnings": out.warnings}));
            } else {
                print(&out.payload);
                for w in &out.warnings {
                    eprintln!("warning: {w}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            print(
                &json!({"status": "error", "code": e.code(), "message": e.to_string(), "warnings": []}),
            );
            ExitCode::from(1)
        }
    }
}
