//! Shared fixtures, random inputs and brute-force oracles for the
//! integration tests. The oracles deliberately avoid the library's indices
//! and scan plain vectors instead.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sloggen::corpus::{SkeletonIndex, SloganCorpus, SurfaceNgramSet};
use sloggen::data;
use sloggen::seeds::SeedLexicon;
use sloggen::text::{parse_lexicon, PosTag, TaggedSentence, Tagger, Tagset, Token, UniversalTag};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub struct Vocab {
    pub words: Vec<String>,
    pub nouns: Vec<String>,
    pub verbs: Vec<String>,
}

impl Vocab {
    pub fn bundled(tagger: &Tagger) -> Self {
        let mut words: Vec<String> = parse_lexicon(data::TAG_LEXICON)
            .unwrap()
            .into_keys()
            .collect();
        words.sort();
        let of = |t: UniversalTag| -> Vec<String> {
            words
                .iter()
                .filter(|w| w.len() >= 3 && w.chars().all(|c| c.is_ascii_lowercase()))
                .filter(|w| tagger.universal_in_isolation(w) == Some(t))
                .cloned()
                .collect()
        };
        let nouns = of(UniversalTag::Noun);
        let verbs = of(UniversalTag::Verb);
        Vocab {
            words,
            nouns,
            verbs,
        }
    }
}

pub fn pick<'a, T, R: Rng>(rng: &mut R, items: &'a [T]) -> &'a T {
    &items[rng.random_range(0..items.len())]
}

/// 1 to `max_len` tokens of lexicon words, with the odd punctuation mark
/// or unknown word.
pub fn word_salad<R: Rng>(
    rng: &mut R,
    vocab: &Vocab,
    tagger: &Tagger,
    max_len: usize,
) -> TaggedSentence {
    let n = rng.random_range(1..=max_len);
    let tokens: Vec<Token> = (0..n)
        .map(|_| {
            let roll = rng.random_range(0..20);
            let w = match roll {
                0 => ",".to_string(),
                1 => "zorblax".to_string(),
                _ => pick(rng, &vocab.words).clone(),
            };
            Token::new(w).unwrap()
        })
        .collect();
    tagger.tag(tokens).unwrap()
}

/// A random sentence: a corpus slogan, a slogan with one word swapped, or
/// word salad. At most `max_len` tokens when salad.
pub fn random_sentence<R: Rng>(
    rng: &mut R,
    corpus: &[TaggedSentence],
    vocab: &Vocab,
    tagger: &Tagger,
    max_len: usize,
) -> TaggedSentence {
    match rng.random_range(0..3) {
        0 => pick(rng, corpus).clone(),
        1 => {
            let s = pick(rng, corpus);
            let pos = rng.random_range(0..s.len());
            let w = pick(rng, &vocab.words).clone();
            s.with_replacement(pos, Token::new(w).unwrap(), tagger)
        }
        _ => word_salad(rng, vocab, tagger, max_len),
    }
}

pub fn random_seeds<R: Rng>(rng: &mut R, vocab: &Vocab) -> SeedLexicon {
    let kind = rng.random_range(0..4);
    let n = if kind == 1 { 0 } else { rng.random_range(1..6) };
    let v = if kind == 2 { 0 } else { rng.random_range(1..4) };
    let nouns: Vec<String> = (0..n).map(|_| pick(rng, &vocab.nouns).clone()).collect();
    let verbs: Vec<String> = (0..v).map(|_| pick(rng, &vocab.verbs).clone()).collect();
    SeedLexicon::from_words(nouns, verbs)
}

pub fn skeleton_of(s: &TaggedSentence, tagset: Tagset) -> Vec<PosTag> {
    s.tags()
        .iter()
        .map(|p| match tagset {
            Tagset::Standard => PosTag::Penn(p.standard),
            Tagset::Universal => PosTag::Universal(p.universal),
        })
        .collect()
}

pub fn oracle_full_skeleton(s: &TaggedSentence, corpus: &[TaggedSentence], tagset: Tagset) -> f64 {
    let target = skeleton_of(s, tagset);
    if corpus.iter().any(|c| skeleton_of(c, tagset) == target) {
        1.0
    } else {
        0.0
    }
}

pub fn oracle_skeleton_trigram(
    s: &TaggedSentence,
    corpus: &[TaggedSentence],
    tagset: Tagset,
) -> f64 {
    let target = skeleton_of(s, tagset);
    if target.len() < 3 {
        return oracle_full_skeleton(s, corpus, tagset);
    }
    let mut hits = 0usize;
    let mut total = 0usize;
    for i in 0..target.len() - 2 {
        total += 1;
        let t = &target[i..i + 3];
        let seen = corpus.iter().any(|c| {
            let sk = skeleton_of(c, tagset);
            (0..sk.len().saturating_sub(2)).any(|j| &sk[j..j + 3] == t)
        });
        if seen {
            hits += 1;
        }
    }
    hits as f64 / total as f64
}

/// `lines` holds raw n-gram lines, scanned linearly.
pub fn oracle_surface_ngram(s: &TaggedSentence, lines: &[String]) -> f64 {
    let words: Vec<String> = s.tokens().iter().map(|t| t.norm().to_lowercase()).collect();
    let entries: Vec<Vec<String>> = lines
        .iter()
        .map(|l| l.split_whitespace().map(str::to_lowercase).collect())
        .collect();
    let mut matched = 0usize;
    for n in [2usize, 3] {
        if words.len() < n {
            continue;
        }
        for i in 0..=words.len() - n {
            if entries.iter().any(|e| e.as_slice() == &words[i..i + n]) {
                matched += 1;
            }
        }
    }
    (matched as f64 / words.len() as f64).min(1.0)
}

pub struct Bundled {
    pub tagger: Tagger,
    pub corpus: SloganCorpus,
    pub index: SkeletonIndex,
    pub ngrams: SurfaceNgramSet,
}

impl Bundled {
    pub fn load() -> Self {
        let tagger = Tagger::bundled();
        let corpus = SloganCorpus::bundled(&tagger);
        let index = SkeletonIndex::build(&corpus);
        Bundled {
            tagger,
            corpus,
            index,
            ngrams: SurfaceNgramSet::bundled(),
        }
    }
}
