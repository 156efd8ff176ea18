//! Run orchestration behind the `sloggen` binary: request handling, data
//! loading, and report rendering.
//!
//! Exit codes: 0 on success, 2 for configuration errors, 3 for data-file
//! errors, 4 when generation fails (including summaries without seeds).

mod config;
mod report;
mod workspace;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{Engine, EngineConfig, EngineError, Resources};
use crate::fitness::EnglishnessMeasure;
use crate::seeds::{
    expand_seeds, extract_seeds, EmbeddingNeighbors, RelatedWordProvider, SeedError, SeedLexicon,
};

pub use config::Overrides;
pub use report::{ConfigEcho, MeasureGroup, Mode, RunReport, ScoreReport, SeedSummary};
pub use workspace::{DataPaths, DataSources, Workspace, DATA_DIR_ENV};

pub const DEFAULT_PROVIDER_URL: &str = "https://api.datamuse.com/words";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("data error: {path}: {reason}")]
    Data { path: String, reason: String },
    #[error("no seeds: the summary contains no usable nouns or verbs (words of three or more letters that are not stopwords)")]
    NoSeeds,
    #[error("generation failed: {0}")]
    Generation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Data { .. } => 3,
            CliError::NoSeeds | CliError::Generation(_) => 4,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::InvalidConfig(msg) => CliError::Config(msg),
            other => CliError::Generation(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!("expected text or json, got {s:?}")),
        }
    }
}

/// Source of related words for seed expansion.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProviderKind {
    /// Nearest neighbours in the embedding table.
    #[default]
    Offline,
    /// A Datamuse-style HTTP endpoint.
    Http,
}

impl FromStr for ProviderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "offline" => Ok(ProviderKind::Offline),
            "http" => Ok(ProviderKind::Http),
            _ => Err(format!("expected offline or http, got {s:?}")),
        }
    }
}

impl fmt::Display for ProviderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProviderKind::Offline => "offline",
            ProviderKind::Http => "http",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SummarySource {
    Text(String),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRequest {
    pub summary: Option<SummarySource>,
    pub engine: EngineConfig,
    /// Measures run by [`cmd_compare_measures`], in report order.
    pub compare_measures: Vec<EnglishnessMeasure>,
    /// Niches to run instead of `1..=engine.niches`.
    pub niche_ids: Option<Vec<u32>>,
    pub related_k: usize,
    pub provider: ProviderKind,
    pub provider_url: Option<String>,
    pub data: DataPaths,
    pub format: OutputFormat,
    /// Record wall-clock duration in the report. Off by default so that
    /// reports of identical runs are byte-identical.
    pub timing: bool,
}

impl Default for RunRequest {
    fn default() -> Self {
        RunRequest {
            summary: None,
            engine: EngineConfig::default(),
            compare_measures: EnglishnessMeasure::SKELETON_VARIANTS.to_vec(),
            niche_ids: None,
            related_k: 5,
            provider: ProviderKind::Offline,
            provider_url: None,
            data: DataPaths::default(),
            format: OutputFormat::Text,
            timing: false,
        }
    }
}

impl RunRequest {
    pub fn niche_ids(&self) -> Vec<u32> {
        self.niche_ids
            .clone()
            .unwrap_or_else(|| (1..=self.engine.niches).collect())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.engine.validate()?;
        if let Some(ids) = &self.niche_ids {
            if ids.is_empty() {
                return Err(CliError::Config("niche id list is empty".into()));
            }
            let mut sorted = ids.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != ids.len() {
                return Err(CliError::Config("niche ids must be distinct".into()));
            }
        }
        if self.compare_measures.is_empty() {
            return Err(CliError::Config("no measures to compare".into()));
        }
        if self.provider == ProviderKind::Http && !cfg!(feature = "http-provider") {
            return Err(CliError::Config("this build has no HTTP provider".into()));
        }
        match &self.summary {
            None => Err(CliError::Config(
                "one of --summary or --summary-file is required".into(),
            )),
            Some(SummarySource::File(p)) if !p.is_file() => Err(CliError::Data {
                path: p.display().to_string(),
                reason: "summary file not found".into(),
            }),
            Some(_) => self.data.check_exists(),
        }
    }

    fn summary_text(&self) -> Result<String, CliError> {
        match &self.summary {
            Some(SummarySource::Text(t)) => Ok(t.clone()),
            Some(SummarySource::File(p)) => fs::read_to_string(p).map_err(|e| CliError::Data {
                path: p.display().to_string(),
                reason: e.to_string(),
            }),
            None => Err(CliError::Config(
                "one of --summary or --summary-file is required".into(),
            )),
        }
    }

    fn related_provider(&self, ws: &Workspace) -> Box<dyn RelatedWordProvider> {
        match self.provider {
            ProviderKind::Offline => Box::new(EmbeddingNeighbors::new(
                ws.embeddings.clone(),
                Arc::clone(&ws.tagger),
            )),
            #[cfg(feature = "http-provider")]
            ProviderKind::Http => {
                let url = self.provider_url.as_deref().unwrap_or(DEFAULT_PROVIDER_URL);
                Box::new(crate::seeds::HttpProvider::new(
                    crate::seeds::HttpProviderConfig::new(url),
                ))
            }
            #[cfg(not(feature = "http-provider"))]
            ProviderKind::Http => unreachable!("rejected by validate"),
        }
    }

    fn echo(&self, ws: &Workspace) -> ConfigEcho {
        ConfigEcho {
            population_size: self.engine.population_size,
            generations: self.engine.generations,
            niche_ids: self.niche_ids(),
            seed: self.engine.rng_seed,
            weights: self.engine.weights,
            top_output: self.engine.top_output,
            related_k: self.related_k,
            provider: self.provider,
            provider_url: match self.provider {
                ProviderKind::Http => Some(
                    self.provider_url
                        .clone()
                        .unwrap_or_else(|| DEFAULT_PROVIDER_URL.into()),
                ),
                ProviderKind::Offline => None,
            },
            data: ws.sources.clone(),
        }
    }
}

struct Prepared {
    ws: Workspace,
    summary: String,
    seeds: SeedLexicon,
    warnings: Vec<String>,
}

fn prepare(request: &RunRequest) -> Result<Prepared, CliError> {
    request.validate()?;
    let ws = Workspace::load(&request.data)?;
    let summary = request.summary_text()?;
    let extracted = extract_seeds(&summary, &ws.tagger, &ws.stopwords).map_err(|e| match e {
        SeedError::NoSeeds => CliError::NoSeeds,
        SeedError::Io { path, source } => CliError::Data {
            path,
            reason: source.to_string(),
        },
    })?;
    let provider = request.related_provider(&ws);
    let seeds = expand_seeds(
        &extracted,
        provider.as_ref(),
        request.related_k,
        &ws.tagger,
        &ws.stopwords,
    );
    let mut warnings = ws.warnings.clone();
    if seeds.expansion_failures() > 0 {
        warnings.push(format!(
            "related-word provider failed for {} seed words; continuing with the rest",
            seeds.expansion_failures()
        ));
    }
    Ok(Prepared {
        ws,
        summary,
        seeds,
        warnings,
    })
}

fn run_group(
    request: &RunRequest,
    p: &Prepared,
    config: EngineConfig,
    warnings: &mut Vec<String>,
) -> Result<MeasureGroup, CliError> {
    let measure = config.measure;
    let engine = Engine::new(
        config,
        Resources {
            corpus: &p.ws.corpus,
            tagger: &p.ws.tagger,
            index: &p.ws.index,
            ngrams: &p.ws.ngrams,
            seeds: &p.seeds,
            provider: &p.ws.similarity,
            summary: &p.summary,
        },
    )?;
    let ids = request.niche_ids();
    let niches = engine.run_niches(&ids)?;
    for id in ids
        .iter()
        .filter(|id| !niches.iter().any(|n| n.niche_id == **id))
    {
        warnings.push(format!("{measure}: niche {id} failed"));
    }
    for n in &niches {
        if n.provider_failures > 0 {
            warnings.push(format!(
                "{measure}: niche {}: similarity provider failed {} times; those scores used similarity 0",
                n.niche_id, n.provider_failures
            ));
        }
    }
    Ok(MeasureGroup::new(measure, niches, &p.ws.tagger))
}

fn finish(
    request: &RunRequest,
    mode: Mode,
    p: Prepared,
    groups: Vec<MeasureGroup>,
    warnings: Vec<String>,
    started: Instant,
) -> RunReport {
    RunReport {
        mode,
        config: request.echo(&p.ws),
        seeds: SeedSummary::of(&p.seeds),
        groups,
        warnings,
        duration_ms: request.timing.then(|| started.elapsed().as_millis() as u64),
    }
}

/// Extracts seeds from the summary, evolves every requested niche under
/// the configured measure, and reports each niche's best slogans.
pub fn cmd_generate(request: &RunRequest) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let p = prepare(request)?;
    let mut warnings = p.warnings.clone();
    let group = run_group(request, &p, request.engine.clone(), &mut warnings)?;
    Ok(finish(
        request,
        Mode::Generate,
        p,
        vec![group],
        warnings,
        started,
    ))
}

/// Runs the same niches once per measure in `compare_measures`. Every group
/// uses the same seed, so fresh samples match across groups and results
/// differ only through scoring.
pub fn cmd_compare_measures(request: &RunRequest) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let p = prepare(request)?;
    let mut warnings = p.warnings.clone();
    let mut groups = Vec::with_capacity(request.compare_measures.len());
    for &measure in &request.compare_measures {
        let config = EngineConfig {
            measure,
            ..request.engine.clone()
        };
        groups.push(run_group(request, &p, config, &mut warnings)?);
    }
    Ok(finish(
        request,
        Mode::CompareMeasures,
        p,
        groups,
        warnings,
        started,
    ))
}

/// Scores one slogan against the summary with the full metric breakdown.
pub fn cmd_score(text: &str, request: &RunRequest) -> Result<ScoreReport, CliError> {
    if text.trim().is_empty() {
        return Err(CliError::Config("the slogan to score is empty".into()));
    }
    request.data.check_exists()?;
    let ws = Workspace::load(&request.data)?;
    let summary = match &request.summary {
        Some(_) => request.summary_text()?,
        None => String::new(),
    };
    let sentence = ws
        .tagger
        .tag_text(text)
        .map_err(|e| CliError::Config(format!("cannot tag {text:?}: {e}")))?;
    let scoring = crate::fitness::ScoringContext {
        measure: request.engine.measure,
        weights: request.engine.weights,
        index: &ws.index,
        ngrams: &ws.ngrams,
        provider: &ws.similarity,
        summary: &summary,
    };
    Ok(ScoreReport {
        text: sentence.text().to_string(),
        measure: request.engine.measure,
        weights: request.engine.weights,
        fitness: scoring.evaluate(&sentence),
    })
}
