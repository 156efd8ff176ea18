use rand::Rng;

use super::Individual;
use crate::rng::uniform_index;
use crate::seeds::{PosClass, SeedLexicon};
use crate::text::{Tagger, Token};

/// Positions that `mutate` may rewrite, with their word class.
pub fn mutable_slots(ind: &Individual, seeds: &SeedLexicon) -> Vec<(usize, PosClass)> {
    ind.sentence
        .tags()
        .iter()
        .enumerate()
        .filter_map(|(i, pair)| {
            let class = PosClass::of(pair.universal)?;
            (!seeds.words(class).is_empty()).then_some((i, class))
        })
        .collect()
}

/// Replaces one noun or verb with a seed word of the same class, both picked
/// uniformly. The result is re-tagged and unscored. Without a mutable slot
/// the individual comes back unchanged with `noop` set.
pub fn mutate<R: Rng + ?Sized>(
    ind: &Individual,
    seeds: &SeedLexicon,
    tagger: &Tagger,
    rng: &mut R,
) -> Individual {
    let slots = mutable_slots(ind, seeds);
    if slots.is_empty() {
        return Individual {
            noop: true,
            ..ind.clone()
        };
    }
    let (position, class) = slots[uniform_index(rng, slots.len())];
    let words = seeds.words(class);
    let word = &words[uniform_index(rng, words.len())];
    let token = Token::new(word.as_str()).expect("seed words are non-empty");
    Individual {
        sentence: ind.sentence.with_replacement(position, token, tagger),
        fitness: None,
        lineage: ind.lineage,
        noop: false,
        source_index: ind.source_index,
    }
}
