//! Run the evolutionary loop directly, printing per-generation progress of
//! one niche and its final top slogans.

use sloggen::corpus::{SkeletonIndex, SloganCorpus, SurfaceNgramSet};
use sloggen::engine::{Engine, EngineConfig, Resources};
use sloggen::fitness::CentroidSimilarity;
use sloggen::seeds::{extract_seeds, Stopwords};
use sloggen::text::Tagger;

fn main() {
    let summary = sloggen::data::HOGWARTS_SUMMARY;
    let tagger = Tagger::bundled();
    let corpus = SloganCorpus::bundled(&tagger);
    let index = SkeletonIndex::build(&corpus);
    let ngrams = SurfaceNgramSet::bundled();
    let provider = CentroidSimilarity::bundled();
    let seeds = extract_seeds(summary, &tagger, &Stopwords::bundled()).expect("summary has seeds");

    let config = EngineConfig {
        population_size: 60,
        generations: 20,
        niches: 1,
        top_output: 8,
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
            provider: &provider,
            summary,
        },
    )
    .expect("valid configuration");

    let result = engine.run_niche(1).expect("niche runs");
    for g in result.history.iter().step_by(5) {
        println!(
            "generation {:>3}: best {:.4} mean {:.4}",
            g.generation, g.best, g.mean
        );
    }
    for s in &result.top {
        println!("{:.4}  {}", s.fitness.total, s.text);
    }
}
