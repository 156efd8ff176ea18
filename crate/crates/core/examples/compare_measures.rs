//! Compare the four skeleton measures on the same input, as the
//! `compare-measures` command does.

use sloggen::cli::{cmd_compare_measures, RunRequest, SummarySource};
use sloggen::engine::EngineConfig;

fn main() {
    let request = RunRequest {
        summary: Some(SummarySource::Text(sloggen::data::HOGWARTS_SUMMARY.into())),
        engine: EngineConfig {
            niches: 1,
            top_output: 5,
            ..EngineConfig::default()
        },
        ..RunRequest::default()
    };
    match cmd_compare_measures(&request) {
        Ok(report) => print!("{}", report.to_text()),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
