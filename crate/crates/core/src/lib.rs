//! Evolutionary slogan generation.
//!
//! Candidate slogans are sampled from a corpus of existing slogans, mutated
//! by swapping nouns and verbs for words drawn from a product description,
//! and scored on how English they look (POS skeleton measures) and how
//! close they are in meaning to the description. Several independent niches
//! run side by side to widen the range of output.
//!
//! ```no_run
//! use sloggen::cli::{cmd_generate, RunRequest, SummarySource};
//!
//! let mut request = RunRequest::default();
//! request.summary = Some(SummarySource::Text(sloggen::data::HOGWARTS_SUMMARY.into()));
//! let report = cmd_generate(&request).unwrap();
//! for group in &report.groups {
//!     for niche in &group.niches {
//!         for slogan in &niche.top {
//!             println!("{:.3}  {}", slogan.fitness.total, slogan.text);
//!         }
//!     }
//! }
//! ```

pub mod cli;
pub mod corpus;
pub mod data;
pub mod embeddings;
pub mod engine;
pub mod fitness;
pub mod rng;
pub mod seeds;
pub mod text;
