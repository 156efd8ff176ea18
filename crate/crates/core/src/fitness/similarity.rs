use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embeddings::Embeddings;
use crate::seeds::Stopwords;
use crate::text::tokenize;

#[derive(Debug, Error)]
#[error("similarity provider failed: {reason}")]
pub struct SimilarityError {
    pub reason: String,
}

/// The four similarity figures a provider reports for a pair of texts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityMetrics {
    pub jaccard_distance: f64,
    pub cosine: f64,
    pub euclidean_distance: f64,
    pub weighted: f64,
}

pub trait SimilarityProvider: Send + Sync {
    fn compare(&self, a: &str, b: &str) -> Result<SimilarityMetrics, SimilarityError>;

    /// Whether `compare` may be called from several threads at once.
    fn supports_concurrency(&self) -> bool {
        true
    }
}

/// Similarity from content-word overlap and mean word vectors.
///
/// Content words are alphabetic, non-stopword tokens. Words missing from
/// the embedding table are left out of the centroid; if none remain on
/// either side the weighted score is 0.
#[derive(Debug, Clone)]
pub struct CentroidSimilarity {
    embeddings: Arc<Embeddings>,
    stopwords: Arc<Stopwords>,
}

struct Profile {
    words: BTreeSet<String>,
    centroid: Option<Vec<f64>>,
}

impl CentroidSimilarity {
    pub const JACCARD_WEIGHT: f64 = 0.25;
    pub const COSINE_WEIGHT: f64 = 0.5;
    pub const EUCLIDEAN_WEIGHT: f64 = 0.25;

    pub fn new(embeddings: Arc<Embeddings>, stopwords: Arc<Stopwords>) -> Self {
        CentroidSimilarity {
            embeddings,
            stopwords,
        }
    }

    pub fn bundled() -> Self {
        Self::new(
            Arc::new(Embeddings::bundled()),
            Arc::new(Stopwords::bundled()),
        )
    }

    fn profile(&self, text: &str) -> Profile {
        let words: Vec<String> = tokenize(text)
            .into_iter()
            .map(|t| t.norm().to_string())
            .filter(|w| w.chars().all(char::is_alphabetic) && !self.stopwords.contains(w))
            .collect();
        let mut sum = vec![0.0; self.embeddings.dim()];
        let mut found = 0usize;
        for w in &words {
            if let Some(v) = self.embeddings.get(w) {
                for (s, x) in sum.iter_mut().zip(v) {
                    *s += x;
                }
                found += 1;
            }
        }
        let centroid = (found > 0).then(|| sum.iter().map(|s| s / found as f64).collect());
        Profile {
            words: words.into_iter().collect(),
            centroid,
        }
    }
}

fn jaccard_distance(a: &BTreeSet<String>, b: &BTreeSet<String>) -> f64 {
    let union = a.union(b).count();
    if union == 0 {
        return 0.0;
    }
    1.0 - a.intersection(b).count() as f64 / union as f64
}

fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        return 0.0;
    }
    (dot / (na * nb)).clamp(-1.0, 1.0)
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

impl SimilarityProvider for CentroidSimilarity {
    fn compare(&self, a: &str, b: &str) -> Result<SimilarityMetrics, SimilarityError> {
        let pa = self.profile(a);
        let pb = self.profile(b);
        let jaccard_distance = jaccard_distance(&pa.words, &pb.words);
        let metrics = match (&pa.centroid, &pb.centroid) {
            (Some(ca), Some(cb)) => {
                let cosine = cosine(ca, cb);
                let euclidean_distance = euclidean(ca, cb);
                let weighted = Self::JACCARD_WEIGHT * (1.0 - jaccard_distance)
                    + Self::COSINE_WEIGHT * cosine.max(0.0)
                    + Self::EUCLIDEAN_WEIGHT / (1.0 + euclidean_distance);
                SimilarityMetrics {
                    jaccard_distance,
                    cosine,
                    euclidean_distance,
                    weighted: weighted.clamp(0.0, 1.0),
                }
            }
            _ => {
                let zero = vec![0.0; self.embeddings.dim()];
                let ca = pa.centroid.as_deref().unwrap_or(&zero);
                let cb = pb.centroid.as_deref().unwrap_or(&zero);
                SimilarityMetrics {
                    jaccard_distance,
                    cosine: 0.0,
                    euclidean_distance: euclidean(ca, cb),
                    weighted: 0.0,
                }
            }
        };
        Ok(metrics)
    }
}
