use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sloggen::cli::{
    cmd_compare_measures, cmd_generate, cmd_score, CliError, OutputFormat, Overrides, ProviderKind,
};
use sloggen::fitness::EnglishnessMeasure;

/// Evolve slogans for a product from a short description of it.
#[derive(Parser)]
#[command(name = "sloggen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve slogans under one englishness measure.
    Generate(Common),
    /// Run the same niches once per measure and group the results.
    CompareMeasures(Common),
    /// Print the full score breakdown for one slogan.
    Score {
        text: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Product or company description.
    #[arg(long, conflicts_with = "summary_file")]
    summary: Option<String>,
    #[arg(long)]
    summary_file: Option<PathBuf>,
    /// Flat key = value settings file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Directory to look for data files in.
    #[arg(long, env = "SLOGGEN_DATA_DIR")]
    data_dir: Option<PathBuf>,
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long)]
    ngrams: Option<PathBuf>,
    #[arg(long)]
    embeddings: Option<PathBuf>,
    #[arg(long)]
    tag_lexicon: Option<PathBuf>,
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// Englishness measure; repeat or comma-separate for compare-measures.
    #[arg(long, value_delimiter = ',')]
    measure: Vec<EnglishnessMeasure>,
    #[arg(long)]
    w_english: Option<f64>,
    #[arg(long)]
    w_similarity: Option<f64>,
    /// Population size, a multiple of 6.
    #[arg(long)]
    population: Option<usize>,
    #[arg(long)]
    generations: Option<usize>,
    #[arg(long)]
    niches: Option<u32>,
    /// Explicit niche ids to run instead of 1..=niches.
    #[arg(long, value_delimiter = ',')]
    niche_ids: Vec<u32>,
    /// Slogans reported per niche.
    #[arg(long)]
    top: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    format: Option<OutputFormat>,
    /// Related words fetched per seed word.
    #[arg(long)]
    related_k: Option<usize>,
    #[arg(long)]
    provider: Option<ProviderKind>,
    #[arg(long)]
    provider_url: Option<String>,
    /// Include wall-clock duration in the report.
    #[arg(long)]
    timing: bool,
}

impl Common {
    fn overrides(self) -> Result<Overrides, CliError> {
        let file = match &self.config {
            Some(path) => Overrides::load_config(path)?,
            None => Overrides::default(),
        };
        let flags = Overrides {
            summary: self.summary,
            summary_file: self.summary_file,
            corpus: self.corpus,
            ngrams: self.ngrams,
            embeddings: self.embeddings,
            tag_lexicon: self.tag_lexicon,
            stopwords: self.stopwords,
            data_dir: self.data_dir,
            measures: (!self.measure.is_empty()).then_some(self.measure),
            w_english: self.w_english,
            w_similarity: self.w_similarity,
            population: self.population,
            generations: self.generations,
            niches: self.niches,
            niche_ids: (!self.niche_ids.is_empty()).then_some(self.niche_ids),
            top: self.top,
            seed: self.seed,
            format: self.format,
            related_k: self.related_k,
            provider: self.provider,
            provider_url: self.provider_url,
            timing: self.timing.then_some(true),
        };
        Ok(flags.or(file))
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Generate(common) => {
            let request = common.overrides()?.into_request()?;
            let report = cmd_generate(&request)?;
            Ok(match request.format {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Text => report.to_text(),
            })
        }
        Command::CompareMeasures(common) => {
            let request = common.overrides()?.into_request()?;
            let report = cmd_compare_measures(&request)?;
            Ok(match request.format {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Text => report.to_text(),
            })
        }
        Command::Score { text, common } => {
            let request = common.overrides()?.into_request()?;
            let report = cmd_score(&text, &request)?;
            Ok(match request.format {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Text => report.to_text(),
            })
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            match std::io::stdout().lock().write_all(out.as_bytes()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("sloggen: {e}");
                    ExitCode::FAILURE
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("sloggen: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
