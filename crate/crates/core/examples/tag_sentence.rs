//! Tag a sentence and print its standard and universal POS skeletons.
//!
//! cargo run --example tag_sentence -- "Diamonds are forever"

use sloggen::text::{Tagger, Tagset};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "Melts in your mouth, not in your hands".to_string());
    let tagger = Tagger::bundled();
    let sentence = match tagger.tag_text(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("{}", sentence.text());
    for (token, pair) in sentence.tokens().iter().zip(sentence.tags()) {
        println!(
            "  {:<12} {:<5} {}",
            token.surface(),
            pair.standard,
            pair.universal
        );
    }
    for tagset in Tagset::BOTH {
        let skeleton: Vec<String> = sentence
            .skeleton(tagset)
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("{:>4}: {}", tagset.short_name(), skeleton.join(" "));
    }
}
