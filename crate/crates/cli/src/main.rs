use std::process::ExitCode;

use clap::Parser;

use penta5_cli::{run, Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                if let Some(first) = report.results.iter().find(|r| r.status == "fail") {
                    eprintln!("first failure: {}", first.id);
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", e.render());
            ExitCode::from(e.exit_code())
        }
    }
}
