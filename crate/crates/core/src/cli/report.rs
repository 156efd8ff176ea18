use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{DataSources, ProviderKind};
use crate::engine::NicheResult;
use crate::fitness::{EnglishnessMeasure, FitnessReport, FitnessWeights};
use crate::seeds::{Origin, SeedLexicon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Generate,
    CompareMeasures,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub population_size: usize,
    pub generations: usize,
    pub niche_ids: Vec<u32>,
    pub seed: u64,
    pub weights: FitnessWeights,
    pub top_output: usize,
    pub related_k: usize,
    pub provider: ProviderKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provider_url: Option<String>,
    pub data: DataSources,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedSummary {
    pub nouns: Vec<String>,
    pub verbs: Vec<String>,
    /// Words added by the related-word provider.
    pub related: Vec<String>,
    pub expansion_failures: usize,
}

impl SeedSummary {
    pub fn of(lexicon: &SeedLexicon) -> Self {
        let related = lexicon
            .nouns()
            .iter()
            .chain(lexicon.verbs())
            .filter(|w| lexicon.origin(w) == Some(Origin::Related))
            .cloned()
            .collect();
        SeedSummary {
            nouns: lexicon.nouns().to_vec(),
            verbs: lexicon.verbs().to_vec(),
            related,
            expansion_failures: lexicon.expansion_failures(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureGroup {
    pub measure: EnglishnessMeasure,
    /// Mean word count over the group's output slogans.
    pub mean_length: f64,
    pub niches: Vec<NicheResult>,
}

impl MeasureGroup {
    pub fn new(
        measure: EnglishnessMeasure,
        niches: Vec<NicheResult>,
        tagger: &crate::text::Tagger,
    ) -> Self {
        let lengths: Vec<usize> = niches
            .iter()
            .flat_map(|n| &n.top)
            .map(|s| tagger.tag_text(&s.text).map_or(0, |t| t.word_count()))
            .collect();
        let mean_length = if lengths.is_empty() {
            0.0
        } else {
            lengths.iter().sum::<usize>() as f64 / lengths.len() as f64
        };
        MeasureGroup {
            measure,
            mean_length,
            niches,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub mode: Mode,
    pub config: ConfigEcho,
    pub seeds: SeedSummary,
    pub groups: Vec<MeasureGroup>,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let mode = match self.mode {
            Mode::Generate => "generate",
            Mode::CompareMeasures => "compare-measures",
        };
        let _ = writeln!(
            out,
            "# {mode} seed={} population={} generations={} weights={:.3}/{:.3}",
            c.seed,
            c.population_size,
            c.generations,
            c.weights.english(),
            c.weights.similarity()
        );
        let _ = writeln!(out, "seed nouns: {}", self.seeds.nouns.join(", "));
        let _ = writeln!(out, "seed verbs: {}", self.seeds.verbs.join(", "));
        for g in &self.groups {
            let _ = writeln!(out, "[{}] mean length {:.2}", g.measure, g.mean_length);
            for n in &g.niches {
                let _ = writeln!(out, "  niche {}", n.niche_id);
                for (rank, s) in n.top.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "    {:>2}. {:.4}  (e={:.3} s={:.3})  {}",
                        rank + 1,
                        s.fitness.total,
                        s.fitness.englishness,
                        s.fitness.similarity,
                        s.text
                    );
                }
            }
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        if let Some(ms) = self.duration_ms {
            let _ = writeln!(out, "duration: {ms} ms");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreReport {
    pub text: String,
    pub measure: EnglishnessMeasure,
    pub weights: FitnessWeights,
    pub fitness: FitnessReport,
}

impl ScoreReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let f = &self.fitness;
        let _ = writeln!(out, "text: {}", self.text);
        let _ = writeln!(out, "measure: {}", self.measure);
        let _ = writeln!(out, "englishness: {:.6}", f.englishness);
        let _ = writeln!(out, "similarity: {:.6}", f.similarity);
        let _ = writeln!(out, "total: {:.6}", f.total);
        for (k, v) in &f.breakdown {
            let _ = writeln!(out, "  {k}: {v:.6}");
        }
        if f.similarity_failed {
            let _ = writeln!(out, "warning: similarity provider failed");
        }
        out
    }
}
