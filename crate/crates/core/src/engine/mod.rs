//! The evolutionary loop.
//!
//! Each generation keeps the top third of the ranked population unchanged,
//! mutates one sixth drawn from the top third and one sixth drawn from the
//! bottom third, and fills the last third with fresh corpus samples.
//! Niches are independent runs that differ only in their random streams.

mod mutation;

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{SkeletonIndex, SloganCorpus, SurfaceNgramSet};
use crate::fitness::{
    EnglishnessMeasure, FitnessReport, FitnessWeights, ScoringContext, SimilarityProvider,
};
use crate::rng::{distinct_indices, NicheStreams};
use crate::seeds::SeedLexicon;
use crate::text::{TaggedSentence, Tagger};

pub use mutation::{mutable_slots, mutate};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error("invalid engine configuration: {0}")]
    InvalidConfig(String),
    #[error("niche {niche}: {reason}")]
    NicheFailed { niche: u32, reason: String },
    #[error("every niche failed: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    RunFailed(Vec<EngineError>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lineage {
    Sampled,
    TopMutant,
    BottomMutant,
    Elite,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub sentence: TaggedSentence,
    pub fitness: Option<FitnessReport>,
    pub lineage: Lineage,
    /// Set when a mutation found nothing to replace.
    pub noop: bool,
    /// Corpus position this individual was originally sampled from.
    pub source_index: Option<usize>,
}

impl Individual {
    pub fn sampled(sentence: TaggedSentence, source_index: Option<usize>) -> Self {
        Individual {
            sentence,
            fitness: None,
            lineage: Lineage::Sampled,
            noop: false,
            source_index,
        }
    }

    /// Total fitness, or negative infinity when unscored.
    pub fn total(&self) -> f64 {
        self.fitness.as_ref().map_or(f64::NEG_INFINITY, |f| f.total)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub population_size: usize,
    pub generations: usize,
    pub niches: u32,
    pub rng_seed: u64,
    pub measure: EnglishnessMeasure,
    pub weights: FitnessWeights,
    pub top_output: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            population_size: 120,
            generations: 50,
            niches: 4,
            rng_seed: 42,
            measure: EnglishnessMeasure::default(),
            weights: FitnessWeights::default(),
            top_output: 5,
        }
    }
}

impl EngineConfig {
    pub fn validate(&self) -> Result<(), EngineError> {
        if self.population_size < 6 || !self.population_size.is_multiple_of(6) {
            return Err(EngineError::InvalidConfig(format!(
                "population size must be a positive multiple of 6, got {}",
                self.population_size
            )));
        }
        if self.niches == 0 {
            return Err(EngineError::InvalidConfig(
                "at least one niche is required".into(),
            ));
        }
        if self.top_output == 0 {
            return Err(EngineError::InvalidConfig(
                "top output must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedSlogan {
    pub text: String,
    pub fitness: FitnessReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenerationStats {
    pub generation: usize,
    pub best: f64,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NicheResult {
    pub niche_id: u32,
    pub top: Vec<RankedSlogan>,
    pub history: Vec<GenerationStats>,
    /// FNV-1a hash of every corpus index sampled, in order. Equal digests
    /// mean equal fresh-sample sequences.
    pub sample_digest: String,
    pub provider_failures: usize,
    pub noop_mutations: usize,
}

/// Shared, read-only inputs of a run.
#[derive(Clone, Copy)]
pub struct Resources<'a> {
    pub corpus: &'a SloganCorpus,
    pub tagger: &'a Tagger,
    pub index: &'a SkeletonIndex,
    pub ngrams: &'a SurfaceNgramSet,
    pub seeds: &'a SeedLexicon,
    pub provider: &'a dyn SimilarityProvider,
    pub summary: &'a str,
}

/// Stable ranking: total descending, then text ascending, then the
/// original order.
pub fn rank(population: &mut [Individual]) {
    population.sort_by(|a, b| {
        b.total()
            .partial_cmp(&a.total())
            .unwrap_or(Ordering::Equal)
            .then_with(|| a.sentence.text().cmp(b.sentence.text()))
    });
}

struct Fnv(u64);

impl Fnv {
    fn new() -> Self {
        Fnv(0xcbf2_9ce4_8422_2325)
    }

    fn write_u64(&mut self, x: u64) {
        for b in x.to_le_bytes() {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
}

pub struct Engine<'a> {
    config: EngineConfig,
    res: Resources<'a>,
}

impl<'a> Engine<'a> {
    pub fn new(config: EngineConfig, res: Resources<'a>) -> Result<Self, EngineError> {
        config.validate()?;
        if res.seeds.is_empty() {
            return Err(EngineError::InvalidConfig("seed lexicon is empty".into()));
        }
        Ok(Engine { config, res })
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn scoring(&self) -> ScoringContext<'a> {
        ScoringContext {
            measure: self.config.measure,
            weights: self.config.weights,
            index: self.res.index,
            ngrams: self.res.ngrams,
            provider: self.res.provider,
            summary: self.res.summary,
        }
    }

    fn score(&self, population: &mut [Individual]) {
        let ctx = self.scoring();
        for ind in population.iter_mut().filter(|i| i.fitness.is_none()) {
            ind.fitness = Some(ctx.evaluate(&ind.sentence));
        }
    }

    fn sample(&self, streams: &mut NicheStreams) -> Individual {
        let i = self.res.corpus.sample_index(&mut streams.sampling);
        Individual::sampled(self.res.corpus.slogans()[i].clone(), Some(i))
    }

    /// A scored population of fresh corpus samples.
    pub fn initial_population(&self, streams: &mut NicheStreams) -> Vec<Individual> {
        let mut population: Vec<Individual> = (0..self.config.population_size)
            .map(|_| self.sample(streams))
            .collect();
        self.score(&mut population);
        population
    }

    /// Builds the next generation: elites first, then fresh samples, top
    /// mutants and bottom mutants. Everything returned is scored.
    pub fn step_generation(
        &self,
        mut population: Vec<Individual>,
        streams: &mut NicheStreams,
    ) -> Vec<Individual> {
        let n = population.len();
        debug_assert_eq!(n, self.config.population_size);
        let third = n / 3;
        let sixth = n / 6;
        self.score(&mut population);
        rank(&mut population);

        let mut next = Vec::with_capacity(n);
        next.extend(population[..third].iter().map(|ind| Individual {
            lineage: Lineage::Elite,
            noop: false,
            ..ind.clone()
        }));
        next.extend((0..third).map(|_| self.sample(streams)));
        for (lineage, offset) in [(Lineage::TopMutant, 0), (Lineage::BottomMutant, n - third)] {
            for i in distinct_indices(&mut streams.mutation, third, sixth) {
                let mut child = mutate(
                    &population[offset + i],
                    self.res.seeds,
                    self.res.tagger,
                    &mut streams.mutation,
                );
                child.lineage = lineage;
                next.push(child);
            }
        }
        self.score(&mut next);
        next
    }

    pub fn run_niche(&self, niche_id: u32) -> Result<NicheResult, EngineError> {
        let mut streams = NicheStreams::for_niche(self.config.rng_seed, niche_id);
        let mut digest = Fnv::new();
        let mut provider_failures = 0;
        let mut noop_mutations = 0;
        let mut history = Vec::with_capacity(self.config.generations + 1);

        let mut population = self.initial_population(&mut streams);
        for generation in 0..=self.config.generations {
            if generation > 0 {
                population = self.step_generation(population, &mut streams);
            }
            for ind in &population {
                let fresh = ind.lineage != Lineage::Elite;
                if ind.lineage == Lineage::Sampled {
                    digest.write_u64(ind.source_index.unwrap_or(usize::MAX) as u64);
                }
                if fresh && ind.fitness.as_ref().is_some_and(|f| f.similarity_failed) {
                    provider_failures += 1;
                }
                if ind.noop {
                    noop_mutations += 1;
                }
            }
            let totals: Vec<f64> = population.iter().map(Individual::total).collect();
            let best = totals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if !best.is_finite() {
                return Err(EngineError::NicheFailed {
                    niche: niche_id,
                    reason: format!("unscored population in generation {generation}"),
                });
            }
            history.push(GenerationStats {
                generation,
                best,
                mean: totals.iter().sum::<f64>() / totals.len() as f64,
            });
        }

        rank(&mut population);
        let mut top: Vec<RankedSlogan> = Vec::with_capacity(self.config.top_output);
        for ind in population {
            if top.len() == self.config.top_output {
                break;
            }
            if top.iter().any(|t| t.text == ind.sentence.text()) {
                continue;
            }
            top.push(RankedSlogan {
                text: ind.sentence.text().to_string(),
                fitness: ind.fitness.expect("final population is scored"),
            });
        }
        Ok(NicheResult {
            niche_id,
            top,
            history,
            sample_digest: format!("{:016x}", digest.0),
            provider_failures,
            noop_mutations,
        })
    }

    /// Runs niches `1..=niches`.
    pub fn run(&self) -> Result<Vec<NicheResult>, EngineError> {
        let ids: Vec<u32> = (1..=self.config.niches).collect();
        self.run_niches(&ids)
    }

    /// Runs the given niches, in parallel when the similarity provider
    /// allows it. Results follow the order of `ids`; failed niches are
    /// dropped unless all of them fail.
    pub fn run_niches(&self, ids: &[u32]) -> Result<Vec<NicheResult>, EngineError> {
        let outcomes: Vec<Result<NicheResult, EngineError>> =
            if self.res.provider.supports_concurrency() {
                ids.par_iter().map(|&id| self.run_niche(id)).collect()
            } else {
                ids.iter().map(|&id| self.run_niche(id)).collect()
            };
        let mut results = Vec::new();
        let mut failures = Vec::new();
        for outcome in outcomes {
            match outcome {
                Ok(r) => results.push(r),
                Err(e) => {
                    log::error!("{e}");
                    failures.push(e);
                }
            }
        }
        if results.is_empty() {
            return Err(EngineError::RunFailed(failures));
        }
        Ok(results)
    }
}
