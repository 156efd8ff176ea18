use std::time::Duration;

use serde::Deserialize;

use super::{PosClass, ProviderError, RelatedWordProvider};

#[derive(Debug, Clone)]
pub struct HttpProviderConfig {
    /// Endpoint queried as `GET {url}?ml=<word>&pos=<n|v>&max=<k>`.
    pub url: String,
    pub timeout: Duration,
    pub max_retries: u32,
}

impl HttpProviderConfig {
    pub fn new(url: impl Into<String>) -> Self {
        HttpProviderConfig {
            url: url.into(),
            timeout: Duration::from_secs(5),
            max_retries: 2,
        }
    }
}

#[derive(Debug, Deserialize)]
struct ScoredWord {
    word: String,
    #[serde(default)]
    score: f64,
}

/// Related words from an HTTP service that answers with a JSON array of
/// `{"word": ..., "score": ...}` objects.
pub struct HttpProvider {
    config: HttpProviderConfig,
    agent: ureq::Agent,
}

impl HttpProvider {
    pub fn new(config: HttpProviderConfig) -> Self {
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(config.timeout))
            .build()
            .into();
        HttpProvider { config, agent }
    }

    fn fetch(&self, word: &str, class: PosClass, k: usize) -> Result<Vec<ScoredWord>, String> {
        let pos = match class {
            PosClass::Noun => "n",
            PosClass::Verb => "v",
        };
        let mut response = self
            .agent
            .get(&self.config.url)
            .query("ml", word)
            .query("pos", pos)
            .query("max", k.to_string())
            .call()
            .map_err(|e| e.to_string())?;
        response
            .body_mut()
            .read_json::<Vec<ScoredWord>>()
            .map_err(|e| e.to_string())
    }
}

impl RelatedWordProvider for HttpProvider {
    fn related(&self, word: &str, class: PosClass, k: usize) -> Result<Vec<String>, ProviderError> {
        let mut last_error = String::new();
        for attempt in 0..=self.config.max_retries {
            match self.fetch(word, class, k) {
                Ok(mut items) => {
                    items.sort_by(|a, b| b.score.total_cmp(&a.score));
                    return Ok(items
                        .into_iter()
                        .map(|s| s.word.trim().to_string())
                        .filter(|w| !w.is_empty())
                        .take(k)
                        .collect());
                }
                Err(e) => {
                    log::debug!("attempt {} for {word:?} failed: {e}", attempt + 1);
                    last_error = e;
                }
            }
        }
        Err(ProviderError {
            word: word.to_string(),
            reason: last_error,
        })
    }
}
