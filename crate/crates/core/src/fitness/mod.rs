//! Fitness of a candidate slogan: how English it looks, how close it is in
//! meaning to the product summary, and their weighted sum.
//!
//! Englishness is measured one of five ways against the slogan corpus:
//!
//! | name | score |
//! |------|-------|
//! | `full_skeleton_std` / `_univ` | 1 if the whole tag sequence occurs in the corpus, else 0 |
//! | `skeleton_trigram_std` / `_univ` | share of the sentence's tag 3-grams seen in corpus skeletons |
//! | `surface_ngram` | matched word 2-grams plus 3-grams per token, capped at 1 |
//!
//! Sentences shorter than three tokens have no tag 3-grams; the trigram
//! measures fall back to the full-skeleton score for them.

mod similarity;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{SkeletonIndex, SurfaceNgramSet};
use crate::text::{TaggedSentence, Tagset};

pub use similarity::{CentroidSimilarity, SimilarityError, SimilarityMetrics, SimilarityProvider};

#[derive(Debug, Error, PartialEq)]
pub enum FitnessError {
    #[error("unknown englishness measure {0:?}")]
    UnknownMeasure(String),
    #[error(
        "weights must be finite and non-negative with a positive sum (got {english}, {similarity})"
    )]
    InvalidWeights { english: f64, similarity: f64 },
    #[error("similarity weight {similarity} must be below englishness weight {english}")]
    SimilarityDominates { english: f64, similarity: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnglishnessMeasure {
    FullSkeleton(Tagset),
    SkeletonTrigram(Tagset),
    SurfaceNgram,
}

impl EnglishnessMeasure {
    pub const ALL: [EnglishnessMeasure; 5] = [
        EnglishnessMeasure::FullSkeleton(Tagset::Standard),
        EnglishnessMeasure::FullSkeleton(Tagset::Universal),
        EnglishnessMeasure::SkeletonTrigram(Tagset::Standard),
        EnglishnessMeasure::SkeletonTrigram(Tagset::Universal),
        EnglishnessMeasure::SurfaceNgram,
    ];

    /// The four tag-skeleton measures, in report order.
    pub const SKELETON_VARIANTS: [EnglishnessMeasure; 4] = [
        EnglishnessMeasure::FullSkeleton(Tagset::Standard),
        EnglishnessMeasure::FullSkeleton(Tagset::Universal),
        EnglishnessMeasure::SkeletonTrigram(Tagset::Standard),
        EnglishnessMeasure::SkeletonTrigram(Tagset::Universal),
    ];

    pub fn name(self) -> &'static str {
        match self {
            EnglishnessMeasure::FullSkeleton(Tagset::Standard) => "full_skeleton_std",
            EnglishnessMeasure::FullSkeleton(Tagset::Universal) => "full_skeleton_univ",
            EnglishnessMeasure::SkeletonTrigram(Tagset::Standard) => "skeleton_trigram_std",
            EnglishnessMeasure::SkeletonTrigram(Tagset::Universal) => "skeleton_trigram_univ",
            EnglishnessMeasure::SurfaceNgram => "surface_ngram",
        }
    }

    pub fn is_full_skeleton(self) -> bool {
        matches!(self, EnglishnessMeasure::FullSkeleton(_))
    }

    pub fn score(self, s: &TaggedSentence, index: &SkeletonIndex, ngrams: &SurfaceNgramSet) -> f64 {
        match self {
            EnglishnessMeasure::FullSkeleton(t) => score_full_skeleton(s, index, t),
            EnglishnessMeasure::SkeletonTrigram(t) => score_skeleton_trigrams(s, index, t),
            EnglishnessMeasure::SurfaceNgram => score_surface_ngrams(s, ngrams),
        }
    }
}

impl Default for EnglishnessMeasure {
    fn default() -> Self {
        EnglishnessMeasure::FullSkeleton(Tagset::Standard)
    }
}

impl fmt::Display for EnglishnessMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EnglishnessMeasure {
    type Err = FitnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|m| m.name() == wanted)
            .ok_or_else(|| FitnessError::UnknownMeasure(s.to_string()))
    }
}

impl Serialize for EnglishnessMeasure {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for EnglishnessMeasure {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Normalized weights of the two fitness parts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawWeights", into = "RawWeights")]
pub struct FitnessWeights {
    english: f64,
    similarity: f64,
}

#[derive(Serialize, Deserialize)]
struct RawWeights {
    english: f64,
    similarity: f64,
}

impl TryFrom<RawWeights> for FitnessWeights {
    type Error = FitnessError;

    fn try_from(raw: RawWeights) -> Result<Self, Self::Error> {
        FitnessWeights::new(raw.english, raw.similarity)
    }
}

impl From<FitnessWeights> for RawWeights {
    fn from(w: FitnessWeights) -> Self {
        RawWeights {
            english: w.english,
            similarity: w.similarity,
        }
    }
}

impl FitnessWeights {
    /// Scales the pair to sum to one. Similarity must weigh strictly less
    /// than englishness.
    pub fn new(english: f64, similarity: f64) -> Result<Self, FitnessError> {
        let sum = english + similarity;
        if !english.is_finite()
            || !similarity.is_finite()
            || english < 0.0
            || similarity < 0.0
            || sum <= 0.0
        {
            return Err(FitnessError::InvalidWeights {
                english,
                similarity,
            });
        }
        if similarity >= english {
            return Err(FitnessError::SimilarityDominates {
                english,
                similarity,
            });
        }
        Ok(FitnessWeights {
            english: english / sum,
            similarity: similarity / sum,
        })
    }

    pub fn english(&self) -> f64 {
        self.english
    }

    pub fn similarity(&self) -> f64 {
        self.similarity
    }

    pub fn combine(&self, englishness: f64, similarity: f64) -> f64 {
        self.english * englishness + self.similarity * similarity
    }
}

impl Default for FitnessWeights {
    fn default() -> Self {
        FitnessWeights {
            english: 0.8,
            similarity: 0.2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitnessReport {
    pub englishness: f64,
    pub similarity: f64,
    pub total: f64,
    pub breakdown: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub similarity_failed: bool,
}

pub fn score_full_skeleton(s: &TaggedSentence, index: &SkeletonIndex, tagset: Tagset) -> f64 {
    if index.contains_skeleton(&s.skeleton(tagset), tagset) {
        1.0
    } else {
        0.0
    }
}

pub fn score_skeleton_trigrams(s: &TaggedSentence, index: &SkeletonIndex, tagset: Tagset) -> f64 {
    if s.len() < 3 {
        return score_full_skeleton(s, index, tagset);
    }
    let skeleton = s.skeleton(tagset);
    let total = skeleton.len() - 2;
    let hits = skeleton
        .windows(3)
        .filter(|w| index.contains_trigram(&[w[0], w[1], w[2]], tagset))
        .count();
    hits as f64 / total as f64
}

pub fn score_surface_ngrams(s: &TaggedSentence, ngrams: &SurfaceNgramSet) -> f64 {
    let words: Vec<&str> = s.tokens().iter().map(|t| t.norm()).collect();
    let bigrams = words
        .windows(2)
        .filter(|w| ngrams.contains_bigram(w[0], w[1]))
        .count();
    let trigrams = words
        .windows(3)
        .filter(|w| ngrams.contains_trigram(w[0], w[1], w[2]))
        .count();
    ((bigrams + trigrams) as f64 / words.len().max(1) as f64).min(1.0)
}

/// The provider's weighted score, clamped to `[0, 1]`.
pub fn similarity(
    slogan: &str,
    summary: &str,
    provider: &dyn SimilarityProvider,
) -> Result<f64, SimilarityError> {
    let m = provider.compare(slogan, summary)?;
    if m.weighted.is_nan() {
        return Err(SimilarityError {
            reason: "weighted score is NaN".into(),
        });
    }
    Ok(m.weighted.clamp(0.0, 1.0))
}

/// Everything needed to score a sentence. Immutable and shareable across
/// threads.
#[derive(Clone, Copy)]
pub struct ScoringContext<'a> {
    pub measure: EnglishnessMeasure,
    pub weights: FitnessWeights,
    pub index: &'a SkeletonIndex,
    pub ngrams: &'a SurfaceNgramSet,
    pub provider: &'a dyn SimilarityProvider,
    pub summary: &'a str,
}

impl ScoringContext<'_> {
    /// Scores `s`. A failing similarity provider yields similarity 0 and
    /// sets `similarity_failed`.
    pub fn evaluate(&self, s: &TaggedSentence) -> FitnessReport {
        let mut breakdown = BTreeMap::new();
        for m in EnglishnessMeasure::ALL {
            breakdown.insert(m.name().to_string(), m.score(s, self.index, self.ngrams));
        }
        let englishness = breakdown[self.measure.name()];
        let (similarity, similarity_failed) = match self.provider.compare(s.text(), self.summary) {
            Ok(m) if !m.weighted.is_nan() => {
                breakdown.insert("sim_jaccard".into(), m.jaccard_distance);
                breakdown.insert("sim_cosine".into(), m.cosine);
                breakdown.insert("sim_euclidean".into(), m.euclidean_distance);
                let w = m.weighted.clamp(0.0, 1.0);
                breakdown.insert("sim_weighted".into(), w);
                (w, false)
            }
            Ok(_) => {
                log::warn!("similarity for {:?} is NaN; using 0", s.text());
                (0.0, true)
            }
            Err(e) => {
                log::warn!("{e}; using similarity 0 for {:?}", s.text());
                (0.0, true)
            }
        };
        FitnessReport {
            englishness,
            similarity,
            total: self.weights.combine(englishness, similarity),
            breakdown,
            similarity_failed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{PennTag, Tagger, Token};
    use proptest::prelude::*;

    fn sentence(words: &[(&str, PennTag)]) -> TaggedSentence {
        let tokens = words.iter().map(|(w, _)| Token::new(*w).unwrap()).collect();
        let tags: Vec<PennTag> = words.iter().map(|(_, t)| *t).collect();
        TaggedSentence::from_tagged(tokens, &tags, &crate::text::CoarseMap::standard()).unwrap()
    }

    struct Failing;

    impl SimilarityProvider for Failing {
        fn compare(&self, _: &str, _: &str) -> Result<SimilarityMetrics, SimilarityError> {
            Err(SimilarityError {
                reason: "offline".into(),
            })
        }
    }

    struct Fixed(f64);

    impl SimilarityProvider for Fixed {
        fn compare(&self, _: &str, _: &str) -> Result<SimilarityMetrics, SimilarityError> {
            Ok(SimilarityMetrics {
                jaccard_distance: 0.0,
                cosine: 1.0,
                euclidean_distance: 0.0,
                weighted: self.0,
            })
        }
    }

    #[test]
    fn measure_names_round_trip() {
        for m in EnglishnessMeasure::ALL {
            assert_eq!(m.name().parse::<EnglishnessMeasure>().unwrap(), m);
            let json = serde_json::to_string(&m).unwrap();
            assert_eq!(
                serde_json::from_str::<EnglishnessMeasure>(&json).unwrap(),
                m
            );
        }
        assert_eq!(
            "Full-Skeleton-Std".parse::<EnglishnessMeasure>().unwrap(),
            EnglishnessMeasure::default()
        );
        assert!("skeleton".parse::<EnglishnessMeasure>().is_err());
    }

    #[test]
    fn weights_normalize_and_validate() {
        let w = FitnessWeights::new(4.0, 1.0).unwrap();
        assert!((w.english() - 0.8).abs() < 1e-15);
        assert!((w.similarity() - 0.2).abs() < 1e-15);
        assert_eq!(FitnessWeights::new(1.0, 0.0).unwrap().similarity(), 0.0);
        assert!(matches!(
            FitnessWeights::new(0.5, 0.5),
            Err(FitnessError::SimilarityDominates { .. })
        ));
        assert!(matches!(
            FitnessWeights::new(0.0, 0.0),
            Err(FitnessError::InvalidWeights { .. })
        ));
        assert!(matches!(
            FitnessWeights::new(-1.0, 0.5),
            Err(FitnessError::InvalidWeights { .. })
        ));
        assert!(matches!(
            FitnessWeights::new(f64::NAN, 0.5),
            Err(FitnessError::InvalidWeights { .. })
        ));
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(serde_json::from_str::<FitnessWeights>(&json).unwrap(), w);
        assert!(
            serde_json::from_str::<FitnessWeights>(r#"{"english":0.1,"similarity":0.9}"#).is_err()
        );
    }

    #[test]
    fn trigram_half_coverage() {
        use PennTag::*;
        // Index skeletons [DT NN VBZ] and [NN IN]; the sentence [DT NN VBZ RB]
        // has trigrams (DT NN VBZ), present, and (NN VBZ RB), absent.
        let index = SkeletonIndex::from_sentences(&[
            sentence(&[("the", Dt), ("cat", Nn), ("sits", Vbz)]),
            sentence(&[("cat", Nn), ("in", In)]),
        ]);
        let s = sentence(&[("a", Dt), ("dog", Nn), ("runs", Vbz), ("fast", Rb)]);
        assert_eq!(score_skeleton_trigrams(&s, &index, Tagset::Standard), 0.5);
        assert_eq!(score_full_skeleton(&s, &index, Tagset::Standard), 0.0);
        let short = sentence(&[("dog", Nn), ("on", In)]);
        assert_eq!(
            score_skeleton_trigrams(&short, &index, Tagset::Standard),
            1.0
        );
        let short = sentence(&[("on", In), ("dog", Nn)]);
        assert_eq!(
            score_skeleton_trigrams(&short, &index, Tagset::Standard),
            0.0
        );
    }

    #[test]
    fn surface_ngram_ratio() {
        let tagger = Tagger::bundled();
        let ngrams = SurfaceNgramSet::parse(
            "the best\nbest coffee\nin town\nthe best coffee\nfresh bread\nbread and butter\nmade with love\ngood food\nfor you\nof the",
            "t",
        )
        .unwrap();
        // 4 bigrams + 3 trigrams; matches: "the best", "best coffee", "the best coffee".
        let s = tagger.tag_text("the best coffee ever made").unwrap();
        assert!((score_surface_ngrams(&s, &ngrams) - 0.6).abs() < 1e-15);
        let s = tagger.tag_text("coffee").unwrap();
        assert_eq!(score_surface_ngrams(&s, &ngrams), 0.0);
        let s = tagger.tag_text("The best coffee").unwrap();
        assert_eq!(score_surface_ngrams(&s, &ngrams), 1.0);
    }

    #[test]
    fn evaluate_combines_and_degrades() {
        let tagger = Tagger::bundled();
        let corpus = crate::corpus::SloganCorpus::bundled(&tagger);
        let index = SkeletonIndex::build(&corpus);
        let ngrams = SurfaceNgramSet::bundled();
        let s = corpus.slogans()[0].clone();
        let mut ctx = ScoringContext {
            measure: EnglishnessMeasure::default(),
            weights: FitnessWeights::default(),
            index: &index,
            ngrams: &ngrams,
            provider: &Fixed(0.0),
            summary: "anything",
        };
        let r = ctx.evaluate(&s);
        assert_eq!(r.englishness, 1.0);
        assert!((r.total - 0.8).abs() < 1e-15);
        assert_eq!(r.breakdown.len(), 9);

        ctx.provider = &Fixed(1.0);
        assert!((ctx.evaluate(&s).total - 1.0).abs() < 1e-15);

        ctx.provider = &Failing;
        let r = ctx.evaluate(&s);
        assert!(r.similarity_failed);
        assert_eq!(r.similarity, 0.0);
        assert!(!r.breakdown.contains_key("sim_weighted"));
    }

    #[test]
    fn similarity_is_clamped() {
        assert_eq!(similarity("a", "b", &Fixed(1.5)).unwrap(), 1.0);
        assert_eq!(similarity("a", "b", &Fixed(-0.5)).unwrap(), 0.0);
        assert!(similarity("a", "b", &Fixed(f64::NAN)).is_err());
        assert!(similarity("a", "b", &Failing).is_err());
    }

    proptest! {
        #[test]
        fn combiner_is_monotone(e1 in 0.0..1.0f64, e2 in 0.0..1.0f64, s in 0.0..1.0f64, we in 0.51..10.0f64, frac in 0.01..0.99f64) {
            let w = FitnessWeights::new(we, we * frac).unwrap();
            let (lo, hi) = if e1 < e2 { (e1, e2) } else { (e2, e1) };
            prop_assume!(hi - lo > 1e-9);
            prop_assert!(w.combine(lo, s) < w.combine(hi, s));
            prop_assert!(w.combine(s, lo) < w.combine(s, hi));
            let t = w.combine(e1, s);
            prop_assert!((0.0..=1.0).contains(&t));
        }
    }
}
