//! Extract seed nouns and verbs from a description and expand them with
//! embedding neighbours.
//!
//! cargo run --example expand_seeds -- "We roast coffee beans for early risers." 3

use std::sync::Arc;

use sloggen::embeddings::Embeddings;
use sloggen::seeds::{expand_seeds, extract_seeds, EmbeddingNeighbors, Origin, Stopwords};
use sloggen::text::Tagger;

fn main() {
    let mut args = std::env::args().skip(1);
    let summary = args
        .next()
        .unwrap_or_else(|| sloggen::data::HOGWARTS_SUMMARY.to_string());
    let k: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);

    let tagger = Arc::new(Tagger::bundled());
    let stopwords = Stopwords::bundled();
    let seeds = match extract_seeds(&summary, &tagger, &stopwords) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    let provider = EmbeddingNeighbors::new(Arc::new(Embeddings::bundled()), tagger.clone());
    let expanded = expand_seeds(&seeds, &provider, k, &tagger, &stopwords);
    for (label, words) in [("nouns", expanded.nouns()), ("verbs", expanded.verbs())] {
        println!("{label}:");
        for w in words {
            let mark = if expanded.origin(w) == Some(Origin::Related) {
                "+"
            } else {
                " "
            };
            println!("  {mark} {w}");
        }
    }
}
