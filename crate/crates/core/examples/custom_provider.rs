//! Plug in custom related-word and similarity providers.

use sloggen::corpus::{SkeletonIndex, SloganCorpus, SurfaceNgramSet};
use sloggen::engine::{Engine, EngineConfig, Resources};
use sloggen::fitness::{SimilarityError, SimilarityMetrics, SimilarityProvider};
use sloggen::seeds::{
    expand_seeds, extract_seeds, PosClass, ProviderError, RelatedWordProvider, Stopwords,
};
use sloggen::text::Tagger;

/// A fixed thesaurus.
struct Thesaurus;

impl RelatedWordProvider for Thesaurus {
    fn related(&self, word: &str, class: PosClass, k: usize) -> Result<Vec<String>, ProviderError> {
        let words: &[&str] = match (word, class) {
            ("coffee", PosClass::Noun) => &["espresso", "brew", "bean"],
            ("roast", PosClass::Verb) => &["brew", "grind"],
            _ => &[],
        };
        Ok(words.iter().take(k).map(|w| w.to_string()).collect())
    }
}

/// Word overlap only, and not safe to call concurrently.
struct Overlap;

impl SimilarityProvider for Overlap {
    fn compare(&self, a: &str, b: &str) -> Result<SimilarityMetrics, SimilarityError> {
        let words = |t: &str| -> std::collections::BTreeSet<String> {
            t.split_whitespace()
                .map(|w| {
                    w.trim_matches(|c: char| !c.is_alphanumeric())
                        .to_lowercase()
                })
                .collect()
        };
        let (wa, wb) = (words(a), words(b));
        let union = wa.union(&wb).count().max(1) as f64;
        let shared = wa.intersection(&wb).count() as f64 / union;
        Ok(SimilarityMetrics {
            jaccard_distance: 1.0 - shared,
            cosine: shared,
            euclidean_distance: 1.0 - shared,
            weighted: shared,
        })
    }

    fn supports_concurrency(&self) -> bool {
        false
    }
}

fn main() {
    let summary = "We roast and brew coffee for people who need coffee.";
    let tagger = Tagger::bundled();
    let stopwords = Stopwords::bundled();
    let seeds = extract_seeds(summary, &tagger, &stopwords).expect("summary has seeds");
    let seeds = expand_seeds(&seeds, &Thesaurus, 3, &tagger, &stopwords);
    println!("nouns: {:?}", seeds.nouns());
    println!("verbs: {:?}", seeds.verbs());

    let corpus = SloganCorpus::bundled(&tagger);
    let index = SkeletonIndex::build(&corpus);
    let ngrams = SurfaceNgramSet::bundled();
    let config = EngineConfig {
        population_size: 36,
        generations: 15,
        niches: 2,
        top_output: 3,
        ..EngineConfig::default()
    };
    let engine = Engine::new(
        config,
        Resources {
            corpus: &corpus,
            tagger: &tagger,
            index: &index,
            ngrams: &ngrams,
            seeds: &seeds,
            provider: &Overlap,
            summary,
        },
    )
    .expect("valid configuration");
    for niche in engine.run().expect("run succeeds") {
        for s in &niche.top {
            println!(
                "niche {}  {:.3}  {}",
                niche.niche_id, s.fitness.total, s.text
            );
        }
    }
}
