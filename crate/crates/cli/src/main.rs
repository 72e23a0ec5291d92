use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use msection_cli::args::{Cli, Format};
use msection_cli::report::render_table;
use msection_cli::{exit_code, run};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    match &outcome {
        Ok(report) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
                Format::Table => render_table(report),
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = io::stdout().lock().write_all(text.as_bytes());
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(exit_code(&outcome))
}
