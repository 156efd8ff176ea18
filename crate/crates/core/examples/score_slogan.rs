//! Score one slogan against a description under every englishness measure.
//!
//! cargo run --example score_slogan -- "The magic of witchcraft"

use sloggen::corpus::{SkeletonIndex, SloganCorpus, SurfaceNgramSet};
use sloggen::fitness::{CentroidSimilarity, EnglishnessMeasure, FitnessWeights, ScoringContext};
use sloggen::text::Tagger;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "The magic of witchcraft".to_string());
    let tagger = Tagger::bundled();
    let corpus = SloganCorpus::bundled(&tagger);
    let index = SkeletonIndex::build(&corpus);
    let ngrams = SurfaceNgramSet::bundled();
    let provider = CentroidSimilarity::bundled();
    let sentence = tagger.tag_text(&text).expect("non-empty slogan");

    for measure in EnglishnessMeasure::ALL {
        let ctx = ScoringContext {
            measure,
            weights: FitnessWeights::default(),
            index: &index,
            ngrams: &ngrams,
            provider: &provider,
            summary: sloggen::data::HOGWARTS_SUMMARY,
        };
        let r = ctx.evaluate(&sentence);
        println!(
            "{:<22} englishness {:.3}  similarity {:.3}  total {:.3}",
            measure.name(),
            r.englishness,
            r.similarity,
            r.total
        );
    }
}
