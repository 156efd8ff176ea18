//! Seed vocabulary for mutation: nouns and verbs taken from the product
//! description, expanded with related words from a pluggable provider.

#[cfg(feature = "http-provider")]
mod http;
mod offline;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::text::{tokenize, Tagger, UniversalTag};

#[cfg(feature = "http-provider")]
pub use http::{HttpProvider, HttpProviderConfig};
pub use offline::EmbeddingNeighbors;

#[derive(Debug, Error)]
pub enum SeedError {
    #[error("the summary contains no usable nouns or verbs")]
    NoSeeds,
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Error)]
#[error("related-word provider failed for {word:?}: {reason}")]
pub struct ProviderError {
    pub word: String,
    pub reason: String,
}

/// The two word classes that seed words are drawn for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PosClass {
    Noun,
    Verb,
}

impl PosClass {
    pub fn of(tag: UniversalTag) -> Option<Self> {
        match tag {
            UniversalTag::Noun => Some(PosClass::Noun),
            UniversalTag::Verb => Some(PosClass::Verb),
            _ => None,
        }
    }

    pub fn universal(self) -> UniversalTag {
        match self {
            PosClass::Noun => UniversalTag::Noun,
            PosClass::Verb => UniversalTag::Verb,
        }
    }
}

impl fmt::Display for PosClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PosClass::Noun => "noun",
            PosClass::Verb => "verb",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    Summary,
    Related,
}

/// Given a word and a class, returns related words of that class, best
/// first.
pub trait RelatedWordProvider: Send + Sync {
    fn related(&self, word: &str, class: PosClass, k: usize) -> Result<Vec<String>, ProviderError>;
}

/// Function words excluded from seeds and from similarity content words.
#[derive(Debug, Clone, Default)]
pub struct Stopwords {
    words: HashSet<String>,
}

impl Stopwords {
    pub fn bundled() -> Self {
        Self::parse(crate::data::STOPWORDS)
    }

    pub fn parse(content: &str) -> Self {
        Stopwords {
            words: content
                .lines()
                .map(|l| l.trim().to_lowercase())
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .collect(),
        }
    }

    pub fn load(path: &Path) -> Result<Self, SeedError> {
        fs::read_to_string(path)
            .map(|c| Self::parse(&c))
            .map_err(|source| SeedError::Io {
                path: path.display().to_string(),
                source,
            })
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Ordered, duplicate-free noun and verb lists. Summary words come first,
/// then related words in provider order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeedLexicon {
    nouns: Vec<String>,
    verbs: Vec<String>,
    origin: BTreeMap<String, Origin>,
    expansion_failures: usize,
}

impl SeedLexicon {
    /// Builds a lexicon directly from word lists, all marked as summary
    /// words. Duplicates are dropped.
    pub fn from_words<N, V>(nouns: N, verbs: V) -> Self
    where
        N: IntoIterator,
        N::Item: Into<String>,
        V: IntoIterator,
        V::Item: Into<String>,
    {
        let mut lex = SeedLexicon::default();
        for n in nouns {
            lex.push(n.into(), PosClass::Noun, Origin::Summary);
        }
        for v in verbs {
            lex.push(v.into(), PosClass::Verb, Origin::Summary);
        }
        lex
    }

    fn push(&mut self, word: String, class: PosClass, origin: Origin) -> bool {
        if self.origin.contains_key(&word) {
            return false;
        }
        self.origin.insert(word.clone(), origin);
        match class {
            PosClass::Noun => self.nouns.push(word),
            PosClass::Verb => self.verbs.push(word),
        }
        true
    }

    pub fn nouns(&self) -> &[String] {
        &self.nouns
    }

    pub fn verbs(&self) -> &[String] {
        &self.verbs
    }

    pub fn words(&self, class: PosClass) -> &[String] {
        match class {
            PosClass::Noun => &self.nouns,
            PosClass::Verb => &self.verbs,
        }
    }

    pub fn origin(&self, word: &str) -> Option<Origin> {
        self.origin.get(word).copied()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.origin.contains_key(word)
    }

    pub fn is_empty(&self) -> bool {
        self.nouns.is_empty() && self.verbs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.nouns.len() + self.verbs.len()
    }

    /// Provider calls that failed during expansion.
    pub fn expansion_failures(&self) -> usize {
        self.expansion_failures
    }
}

/// True when `word` may be a seed of `class`: lowercase letters (hyphens
/// allowed inside), at least three characters, not a stopword, and tagged
/// as `class` when tagged on its own.
fn acceptable(word: &str, class: PosClass, tagger: &Tagger, stopwords: &Stopwords) -> bool {
    word.chars().count() >= 3
        && word.chars().all(|c| c.is_lowercase() || c == '-')
        && word.chars().next().is_some_and(char::is_alphabetic)
        && !stopwords.contains(word)
        && tokenize(word).len() == 1
        && tagger.universal_in_isolation(word) == Some(class.universal())
}

/// Collects the nouns and verbs of `summary`, case-folded, in order of first
/// appearance.
pub fn extract_seeds(
    summary: &str,
    tagger: &Tagger,
    stopwords: &Stopwords,
) -> Result<SeedLexicon, SeedError> {
    let mut lex = SeedLexicon::default();
    if let Ok(sentence) = tagger.tag(tokenize(summary)) {
        for (token, tags) in sentence.tokens().iter().zip(sentence.tags()) {
            let Some(class) = PosClass::of(tags.universal) else {
                continue;
            };
            if acceptable(token.norm(), class, tagger, stopwords) {
                lex.push(token.norm().to_string(), class, Origin::Summary);
            }
        }
    }
    if lex.is_empty() {
        return Err(SeedError::NoSeeds);
    }
    Ok(lex)
}

/// Appends up to `k` related words for every summary word. A failing
/// provider call adds nothing for that word and is counted; it never aborts
/// the expansion.
pub fn expand_seeds(
    lexicon: &SeedLexicon,
    provider: &dyn RelatedWordProvider,
    k: usize,
    tagger: &Tagger,
    stopwords: &Stopwords,
) -> SeedLexicon {
    let mut out = lexicon.clone();
    if k == 0 {
        return out;
    }
    for class in [PosClass::Noun, PosClass::Verb] {
        let sources: Vec<String> = lexicon
            .words(class)
            .iter()
            .filter(|w| lexicon.origin(w) == Some(Origin::Summary))
            .cloned()
            .collect();
        for word in sources {
            match provider.related(&word, class, k) {
                Ok(related) => {
                    for candidate in related.into_iter().take(k) {
                        if acceptable(&candidate, class, tagger, stopwords) {
                            out.push(candidate, class, Origin::Related);
                        } else {
                            log::debug!("rejected related {class} {candidate:?} for {word:?}");
                        }
                    }
                }
                Err(e) => {
                    log::warn!("{e}");
                    out.expansion_failures += 1;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::HOGWARTS_SUMMARY;

    fn setup() -> (Tagger, Stopwords) {
        (Tagger::bundled(), Stopwords::bundled())
    }

    #[test]
    fn hogwarts_summary_seeds() {
        let (tagger, stop) = setup();
        let lex = extract_seeds(HOGWARTS_SUMMARY, &tagger, &stop).unwrap();
        for n in ["minds", "practice", "witchcraft", "wizardry", "service"] {
            assert!(
                lex.nouns().iter().any(|w| w == n),
                "{n} missing from {:?}",
                lex.nouns()
            );
        }
        assert!(
            lex.verbs().iter().any(|w| w == "educate"),
            "{:?}",
            lex.verbs()
        );
        assert!(lex
            .nouns()
            .iter()
            .all(|w| lex.origin(w) == Some(Origin::Summary)));
    }

    #[test]
    fn all_stopwords_is_no_seeds() {
        let (tagger, stop) = setup();
        assert!(matches!(
            extract_seeds("the of and", &tagger, &stop),
            Err(SeedError::NoSeeds)
        ));
        assert!(matches!(
            extract_seeds("", &tagger, &stop),
            Err(SeedError::NoSeeds)
        ));
    }

    #[test]
    fn case_folding_dedups() {
        let (tagger, stop) = setup();
        let lex = extract_seeds("Run run RUN", &tagger, &stop).unwrap();
        assert_eq!(lex.verbs(), ["run"]);
        assert!(lex.nouns().is_empty());
    }

    #[test]
    fn short_words_are_excluded() {
        let (tagger, stop) = setup();
        let lex = extract_seeds("An ox and a cow", &tagger, &stop).unwrap();
        assert_eq!(lex.nouns(), ["cow"]);
    }

    struct Fixed(Vec<&'static str>);

    impl RelatedWordProvider for Fixed {
        fn related(&self, _: &str, _: PosClass, k: usize) -> Result<Vec<String>, ProviderError> {
            Ok(self.0.iter().take(k).map(|s| s.to_string()).collect())
        }
    }

    struct Failing;

    impl RelatedWordProvider for Failing {
        fn related(&self, word: &str, _: PosClass, _: usize) -> Result<Vec<String>, ProviderError> {
            Err(ProviderError {
                word: word.into(),
                reason: "offline".into(),
            })
        }
    }

    #[test]
    fn k_zero_is_identity() {
        let (tagger, stop) = setup();
        let lex = extract_seeds(HOGWARTS_SUMMARY, &tagger, &stop).unwrap();
        let out = expand_seeds(&lex, &Fixed(vec!["sorcery"]), 0, &tagger, &stop);
        assert_eq!(out, lex);
    }

    #[test]
    fn wrong_class_words_are_rejected() {
        let (tagger, stop) = setup();
        let lex = SeedLexicon::from_words(["witchcraft"], Vec::<String>::new());
        // "magical" is an adjective, "Sorcery" is not lowercase, "the" is a stopword.
        let out = expand_seeds(
            &lex,
            &Fixed(vec!["magical", "Sorcery", "the", "spell", "witchcraft"]),
            5,
            &tagger,
            &stop,
        );
        assert_eq!(out.nouns(), ["witchcraft", "spell"]);
        assert_eq!(out.origin("spell"), Some(Origin::Related));
    }

    #[test]
    fn provider_failures_degrade() {
        let (tagger, stop) = setup();
        let lex = extract_seeds(HOGWARTS_SUMMARY, &tagger, &stop).unwrap();
        let out = expand_seeds(&lex, &Failing, 3, &tagger, &stop);
        assert_eq!(out.nouns(), lex.nouns());
        assert_eq!(out.verbs(), lex.verbs());
        assert_eq!(out.expansion_failures(), lex.len());
    }

    #[test]
    fn expansion_is_monotone_and_deterministic() {
        let (tagger, stop) = setup();
        let provider = EmbeddingNeighbors::new(
            std::sync::Arc::new(crate::embeddings::Embeddings::bundled()),
            std::sync::Arc::new(tagger.clone()),
        );
        let lex = extract_seeds(HOGWARTS_SUMMARY, &tagger, &stop).unwrap();
        let a = expand_seeds(&lex, &provider, 5, &tagger, &stop);
        let b = expand_seeds(&lex, &provider, 5, &tagger, &stop);
        assert_eq!(a, b);
        assert!(lex.nouns().iter().all(|w| a.nouns().contains(w)));
        assert!(lex.verbs().iter().all(|w| a.verbs().contains(w)));
        assert!(a.len() > lex.len());
        assert_eq!(&a.nouns()[..lex.nouns().len()], lex.nouns());
        for n in a.nouns() {
            assert_eq!(
                tagger.universal_in_isolation(n),
                Some(UniversalTag::Noun),
                "{n}"
            );
            assert!(!stop.contains(n));
        }
        for v in a.verbs() {
            assert_eq!(
                tagger.universal_in_isolation(v),
                Some(UniversalTag::Verb),
                "{v}"
            );
        }
    }
}
