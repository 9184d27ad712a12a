mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Format};
use report::RunReport;

fn wants_json(raw: &[String]) -> bool {
    raw.windows(2).any(|w| w[0] == "--format" && w[1] == "json")
        || raw.iter().any(|a| a == "--format=json")
}

/// Writes the report, ignoring a closed pipe on the other end.
fn emit(mut stream: impl Write, text: &str) {
    let _ = stream.write_all(text.as_bytes()).and_then(|()| stream.flush());
}

fn main() -> ExitCode {
    let raw: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&raw) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) if wants_json(&raw) => {
            let rendered = e.to_string();
            let message = rendered
                .lines()
                .take_while(|line| !line.starts_with("Usage:"))
                .map(str::trim)
                .filter(|line| !line.is_empty())
                .collect::<Vec<_>>()
                .join(" ")
                .trim_start_matches("error: ")
                .to_string();
            emit(std::io::stdout(), &format!("{}\n", RunReport::error("usage", Vec::new(), message).to_json()));
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };

    let report = commands::execute(&cli.command, &cli.global);
    match cli.global.format {
        Format::Json => emit(std::io::stdout(), &format!("{}\n", report.to_json())),
        Format::Text if report.outcome == report::Outcome::Error => emit(std::io::stderr(), &report.to_text()),
        Format::Text => emit(std::io::stdout(), &report.to_text()),
    }
    ExitCode::from(report.outcome.exit_code() as u8)
}
