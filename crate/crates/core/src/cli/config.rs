use std::fs;
use std::path::{Path, PathBuf};

use super::{CliError, DataPaths, OutputFormat, ProviderKind, RunRequest, SummarySource};
use crate::engine::EngineConfig;
use crate::fitness::{EnglishnessMeasure, FitnessWeights};

/// Optional settings from one source (command line or config file).
/// Layers merge with [`Overrides::or`]; whatever is still unset takes the
/// built-in default in [`Overrides::into_request`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub summary: Option<String>,
    pub summary_file: Option<PathBuf>,
    pub corpus: Option<PathBuf>,
    pub ngrams: Option<PathBuf>,
    pub embeddings: Option<PathBuf>,
    pub tag_lexicon: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
    pub data_dir: Option<PathBuf>,
    pub measures: Option<Vec<EnglishnessMeasure>>,
    pub w_english: Option<f64>,
    pub w_similarity: Option<f64>,
    pub population: Option<usize>,
    pub generations: Option<usize>,
    pub niches: Option<u32>,
    pub niche_ids: Option<Vec<u32>>,
    pub top: Option<usize>,
    pub seed: Option<u64>,
    pub format: Option<OutputFormat>,
    pub related_k: Option<usize>,
    pub provider: Option<ProviderKind>,
    pub provider_url: Option<String>,
    pub timing: Option<bool>,
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| CliError::Config(format!("{key}: invalid value {value:?}: {e}")))
}

fn parse_list<T: std::str::FromStr>(key: &str, value: &str) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_value(key, s))
        .collect()
}

impl Overrides {
    /// Parses a flat `key = value` file. Keys match the long flag names,
    /// with `-` or `_`; `#` starts a comment line.
    pub fn parse_config(content: &str, source: &str) -> Result<Self, CliError> {
        let mut o = Overrides::default();
        for (n, raw) in content.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Config(format!(
                    "{source}:{}: expected key = value",
                    n + 1
                )));
            };
            let key = key.trim().replace('-', "_");
            let value = value.trim();
            let value = value
                .strip_prefix('"')
                .and_then(|v| v.strip_suffix('"'))
                .unwrap_or(value);
            let k = format!("{source}:{}: {key}", n + 1);
            match key.as_str() {
                "summary" => o.summary = Some(value.to_string()),
                "summary_file" => o.summary_file = Some(value.into()),
                "corpus" => o.corpus = Some(value.into()),
                "ngrams" => o.ngrams = Some(value.into()),
                "embeddings" => o.embeddings = Some(value.into()),
                "tag_lexicon" => o.tag_lexicon = Some(value.into()),
                "stopwords" => o.stopwords = Some(value.into()),
                "data_dir" => o.data_dir = Some(value.into()),
                "measure" => o.measures = Some(parse_list(&k, value)?),
                "w_english" => o.w_english = Some(parse_value(&k, value)?),
                "w_similarity" => o.w_similarity = Some(parse_value(&k, value)?),
                "population" => o.population = Some(parse_value(&k, value)?),
                "generations" => o.generations = Some(parse_value(&k, value)?),
                "niches" => o.niches = Some(parse_value(&k, value)?),
                "niche_ids" => o.niche_ids = Some(parse_list(&k, value)?),
                "top" => o.top = Some(parse_value(&k, value)?),
                "seed" => o.seed = Some(parse_value(&k, value)?),
                "format" => o.format = Some(parse_value(&k, value)?),
                "related_k" => o.related_k = Some(parse_value(&k, value)?),
                "provider" => o.provider = Some(parse_value(&k, value)?),
                "provider_url" => o.provider_url = Some(value.to_string()),
                "timing" => o.timing = Some(parse_value(&k, value)?),
                _ => {
                    return Err(CliError::Config(format!(
                        "{source}:{}: unknown key {key:?}",
                        n + 1
                    )))
                }
            }
        }
        Ok(o)
    }

    pub fn load_config(path: &Path) -> Result<Self, CliError> {
        let content = fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::parse_config(&content, &path.display().to_string())
    }

    /// Fields set in `self` win over those in `lower`. Setting either
    /// summary source hides both of `lower`'s.
    pub fn or(self, lower: Overrides) -> Overrides {
        let summary_set = self.summary.is_some() || self.summary_file.is_some();
        Overrides {
            summary: if summary_set {
                self.summary
            } else {
                lower.summary
            },
            summary_file: if summary_set {
                self.summary_file
            } else {
                lower.summary_file
            },
            corpus: self.corpus.or(lower.corpus),
            ngrams: self.ngrams.or(lower.ngrams),
            embeddings: self.embeddings.or(lower.embeddings),
            tag_lexicon: self.tag_lexicon.or(lower.tag_lexicon),
            stopwords: self.stopwords.or(lower.stopwords),
            data_dir: self.data_dir.or(lower.data_dir),
            measures: self.measures.or(lower.measures),
            w_english: self.w_english.or(lower.w_english),
            w_similarity: self.w_similarity.or(lower.w_similarity),
            population: self.population.or(lower.population),
            generations: self.generations.or(lower.generations),
            niches: self.niches.or(lower.niches),
            niche_ids: self.niche_ids.or(lower.niche_ids),
            top: self.top.or(lower.top),
            seed: self.seed.or(lower.seed),
            format: self.format.or(lower.format),
            related_k: self.related_k.or(lower.related_k),
            provider: self.provider.or(lower.provider),
            provider_url: self.provider_url.or(lower.provider_url),
            timing: self.timing.or(lower.timing),
        }
    }

    /// Resolves the weights. A lone weight in `[0, 1]` implies its
    /// complement for the other part.
    fn weights(&self) -> Result<FitnessWeights, CliError> {
        let defaults = FitnessWeights::default();
        let (e, s) = match (self.w_english, self.w_similarity) {
            (None, None) => (defaults.english(), defaults.similarity()),
            (Some(e), Some(s)) => (e, s),
            (Some(e), None) if (0.0..=1.0).contains(&e) => (e, 1.0 - e),
            (None, Some(s)) if (0.0..=1.0).contains(&s) => (1.0 - s, s),
            (Some(e), None) => (e, defaults.similarity()),
            (None, Some(s)) => (defaults.english(), s),
        };
        FitnessWeights::new(e, s)
            .map_err(|err| CliError::Config(format!("--w-english/--w-similarity: {err}")))
    }

    pub fn into_request(self) -> Result<RunRequest, CliError> {
        let weights = self.weights()?;
        let defaults = RunRequest::default();
        let summary = match (self.summary, self.summary_file) {
            (Some(_), Some(_)) => {
                return Err(CliError::Config(
                    "give only one of --summary and --summary-file".into(),
                ))
            }
            (Some(text), None) => Some(SummarySource::Text(text)),
            (None, Some(path)) => Some(SummarySource::File(path)),
            (None, None) => None,
        };
        let measures = self.measures.unwrap_or_default();
        let engine = EngineConfig {
            population_size: self.population.unwrap_or(defaults.engine.population_size),
            generations: self.generations.unwrap_or(defaults.engine.generations),
            niches: self.niches.unwrap_or(defaults.engine.niches),
            rng_seed: self.seed.unwrap_or(defaults.engine.rng_seed),
            measure: measures.first().copied().unwrap_or(defaults.engine.measure),
            weights,
            top_output: self.top.unwrap_or(defaults.engine.top_output),
        };
        let request = RunRequest {
            summary,
            engine,
            compare_measures: if measures.is_empty() {
                defaults.compare_measures
            } else {
                measures
            },
            niche_ids: self.niche_ids,
            related_k: self.related_k.unwrap_or(defaults.related_k),
            provider: self.provider.unwrap_or(defaults.provider),
            provider_url: self.provider_url,
            data: DataPaths {
                data_dir: self.data_dir,
                corpus: self.corpus,
                ngrams: self.ngrams,
                embeddings: self.embeddings,
                tag_lexicon: self.tag_lexicon,
                stopwords: self.stopwords,
            },
            format: self.format.unwrap_or_default(),
            timing: self.timing.unwrap_or(false),
        };
        Ok(request)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_file() {
        let o = Overrides::parse_config(
            "# run settings\npopulation = 60\nw-english=0.9\nmeasure = skeleton_trigram_univ, surface_ngram\nsummary = \"We bake bread.\"\nniche_ids = 1,3\n",
            "cfg",
        )
        .unwrap();
        assert_eq!(o.population, Some(60));
        assert_eq!(o.w_english, Some(0.9));
        assert_eq!(o.summary.as_deref(), Some("We bake bread."));
        assert_eq!(o.niche_ids, Some(vec![1, 3]));
        assert_eq!(o.measures.as_ref().map(Vec::len), Some(2));
    }

    #[test]
    fn bad_lines_name_the_location() {
        let err = Overrides::parse_config("population = 60\nbogus = 1\n", "my.cfg").unwrap_err();
        assert!(err.to_string().contains("my.cfg:2"), "{err}");
        let err = Overrides::parse_config("population = lots\n", "my.cfg").unwrap_err();
        assert!(err.to_string().contains("population"), "{err}");
        assert!(Overrides::parse_config("just words\n", "x").is_err());
    }

    #[test]
    fn precedence_is_flag_then_file_then_default() {
        let file = Overrides::parse_config(
            "population = 60\ngenerations = 7\nsummary_file = a.txt\n",
            "f",
        )
        .unwrap();
        let flags = Overrides {
            population: Some(12),
            summary: Some("We bake bread.".into()),
            ..Overrides::default()
        };
        let req = flags.or(file).into_request().unwrap();
        assert_eq!(req.engine.population_size, 12);
        assert_eq!(req.engine.generations, 7);
        assert_eq!(req.engine.niches, RunRequest::default().engine.niches);
        assert_eq!(
            req.summary,
            Some(SummarySource::Text("We bake bread.".into()))
        );
    }

    #[test]
    fn weights_resolution() {
        let w = |e, s| {
            Overrides {
                w_english: e,
                w_similarity: s,
                ..Overrides::default()
            }
            .into_request()
            .map(|r| r.engine.weights)
        };
        assert_eq!(w(None, None).unwrap(), FitnessWeights::default());
        assert!((w(Some(0.9), None).unwrap().similarity() - 0.1).abs() < 1e-12);
        assert!((w(None, Some(0.3)).unwrap().english() - 0.7).abs() < 1e-12);
        assert!((w(Some(3.0), Some(1.0)).unwrap().english() - 0.75).abs() < 1e-12);
        assert!(w(Some(0.4), None).is_err());
    }

    #[test]
    fn both_summaries_is_an_error() {
        let o = Overrides {
            summary: Some("a".into()),
            summary_file: Some("b".into()),
            ..Overrides::default()
        };
        assert!(matches!(o.into_request(), Err(CliError::Config(_))));
    }
}
