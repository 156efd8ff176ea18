//! Build the skeleton index of the bundled corpus and check a few
//! sentences against it.

use sloggen::corpus::{SkeletonIndex, SloganCorpus};
use sloggen::fitness::{score_full_skeleton, score_skeleton_trigrams};
use sloggen::text::{Tagger, Tagset};

fn main() {
    let tagger = Tagger::bundled();
    let corpus = SloganCorpus::bundled(&tagger);
    let index = SkeletonIndex::build(&corpus);
    println!("{} slogans", corpus.len());
    for tagset in Tagset::BOTH {
        println!(
            "{:>4}: {} skeletons, {} tag trigrams",
            tagset.short_name(),
            index.skeletons(tagset).len(),
            index.trigrams(tagset).len()
        );
    }
    for text in [
        "The magic of witchcraft",
        "Witchcraft the of magic",
        "Educate young minds",
    ] {
        let s = tagger.tag_text(text).expect("non-empty");
        println!("{text}");
        for tagset in Tagset::BOTH {
            println!(
                "  {:>4}: full {:.0}  trigram {:.3}",
                tagset.short_name(),
                score_full_skeleton(&s, &index, tagset),
                score_skeleton_trigrams(&s, &index, tagset)
            );
        }
    }
}
