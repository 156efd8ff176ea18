//! The slogan corpus and the englishness reference structures built from
//! it: the set of unique POS skeletons, the set of tag 3-grams over those
//! skeletons, and a surface word n-gram list.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use rand::Rng;
use thiserror::Error;

use crate::rng::uniform_index;
use crate::text::{PosTag, TaggedSentence, Tagger, Tagset};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{path}: file not found")]
    FileNotFound { path: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: corpus has no usable slogans")]
    EmptyCorpus { path: String },
    #[error("{path}: n-gram list has no usable 2- or 3-grams")]
    EmptySet { path: String },
}

fn read_file(path: &Path) -> Result<String, CorpusError> {
    fs::read_to_string(path).map_err(|source| {
        let path = path.display().to_string();
        if source.kind() == std::io::ErrorKind::NotFound {
            CorpusError::FileNotFound { path }
        } else {
            CorpusError::Io { path, source }
        }
    })
}

/// Tagged slogans in file order, blank lines and exact duplicates removed.
#[derive(Debug, Clone)]
pub struct SloganCorpus {
    slogans: Vec<TaggedSentence>,
    source: String,
}

impl SloganCorpus {
    pub fn load(path: &Path, tagger: &Tagger) -> Result<Self, CorpusError> {
        let content = read_file(path)?;
        Self::from_text(&content, &path.display().to_string(), tagger)
    }

    pub fn bundled(tagger: &Tagger) -> Self {
        Self::from_text(crate::data::SLOGANS, "<bundled>", tagger)
            .expect("bundled corpus is non-empty")
    }

    pub fn from_text(content: &str, source: &str, tagger: &Tagger) -> Result<Self, CorpusError> {
        Self::from_lines(content.lines(), source, tagger)
    }

    pub fn from_lines<'a, I>(lines: I, source: &str, tagger: &Tagger) -> Result<Self, CorpusError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut seen = HashSet::new();
        let mut slogans = Vec::new();
        for line in lines {
            let line = line.trim();
            if line.is_empty() || !seen.insert(line.to_string()) {
                continue;
            }
            if let Ok(sentence) = tagger.tag_text(line) {
                slogans.push(sentence);
            }
        }
        if slogans.is_empty() {
            return Err(CorpusError::EmptyCorpus {
                path: source.to_string(),
            });
        }
        Ok(SloganCorpus {
            slogans,
            source: source.to_string(),
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn slogans(&self) -> &[TaggedSentence] {
        &self.slogans
    }

    pub fn len(&self) -> usize {
        self.slogans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slogans.is_empty()
    }

    /// Uniform draw of a slogan index.
    pub fn sample_index<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        uniform_index(rng, self.slogans.len())
    }

    /// Uniform draw; the returned sentence is an owned copy.
    pub fn sample_individual<R: Rng + ?Sized>(&self, rng: &mut R) -> TaggedSentence {
        self.slogans[self.sample_index(rng)].clone()
    }
}

/// A tag 3-gram.
pub type TagTrigram = [PosTag; 3];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct TagsetIndex {
    skeletons: HashSet<Vec<PosTag>>,
    trigrams: HashSet<TagTrigram>,
}

/// Unique corpus skeletons and their tag 3-grams, for both tagsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonIndex {
    standard: TagsetIndex,
    universal: TagsetIndex,
}

impl SkeletonIndex {
    pub fn build(corpus: &SloganCorpus) -> Self {
        Self::from_sentences(corpus.slogans())
    }

    pub fn from_sentences(sentences: &[TaggedSentence]) -> Self {
        let mut index = SkeletonIndex {
            standard: TagsetIndex::default(),
            universal: TagsetIndex::default(),
        };
        for tagset in Tagset::BOTH {
            let part = index.part_mut(tagset);
            for s in sentences {
                part.skeletons.insert(s.skeleton(tagset));
            }
            // No boundary padding: skeletons shorter than three tags add nothing.
            for skeleton in &part.skeletons {
                for w in skeleton.windows(3) {
                    part.trigrams.insert([w[0], w[1], w[2]]);
                }
            }
        }
        index
    }

    fn part(&self, tagset: Tagset) -> &TagsetIndex {
        match tagset {
            Tagset::Standard => &self.standard,
            Tagset::Universal => &self.universal,
        }
    }

    fn part_mut(&mut self, tagset: Tagset) -> &mut TagsetIndex {
        match tagset {
            Tagset::Standard => &mut self.standard,
            Tagset::Universal => &mut self.universal,
        }
    }

    pub fn skeletons(&self, tagset: Tagset) -> &HashSet<Vec<PosTag>> {
        &self.part(tagset).skeletons
    }

    pub fn trigrams(&self, tagset: Tagset) -> &HashSet<TagTrigram> {
        &self.part(tagset).trigrams
    }

    pub fn contains_skeleton(&self, skeleton: &[PosTag], tagset: Tagset) -> bool {
        self.part(tagset).skeletons.contains(skeleton)
    }

    pub fn contains_trigram(&self, trigram: &TagTrigram, tagset: Tagset) -> bool {
        self.part(tagset).trigrams.contains(trigram)
    }
}

/// Case-insensitive sets of word 2-grams and 3-grams.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurfaceNgramSet {
    bigrams: HashSet<(String, String)>,
    trigrams: HashSet<(String, String, String)>,
    skipped_lines: usize,
}

impl SurfaceNgramSet {
    pub fn load(path: &Path) -> Result<Self, CorpusError> {
        let content = read_file(path)?;
        Self::parse(&content, &path.display().to_string())
    }

    pub fn bundled() -> Self {
        Self::parse(crate::data::NGRAMS, "<bundled>").expect("bundled n-grams are non-empty")
    }

    /// One n-gram per line. Lines that are not 2- or 3-grams are skipped and
    /// counted.
    pub fn parse(content: &str, source: &str) -> Result<Self, CorpusError> {
        let mut set = SurfaceNgramSet::default();
        for line in content.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let words: Vec<String> = line.split_whitespace().map(str::to_lowercase).collect();
            match words.as_slice() {
                [a, b] => {
                    set.bigrams.insert((a.clone(), b.clone()));
                }
                [a, b, c] => {
                    set.trigrams.insert((a.clone(), b.clone(), c.clone()));
                }
                _ => set.skipped_lines += 1,
            }
        }
        if set.skipped_lines > 0 {
            log::warn!(
                "{source}: skipped {} n-gram lines of unsupported arity",
                set.skipped_lines
            );
        }
        if set.bigrams.is_empty() && set.trigrams.is_empty() {
            return Err(CorpusError::EmptySet {
                path: source.to_string(),
            });
        }
        Ok(set)
    }

    pub fn bigram_count(&self) -> usize {
        self.bigrams.len()
    }

    pub fn trigram_count(&self) -> usize {
        self.trigrams.len()
    }

    pub fn skipped_lines(&self) -> usize {
        self.skipped_lines
    }

    pub fn contains_bigram(&self, a: &str, b: &str) -> bool {
        self.bigrams.contains(&(a.to_lowercase(), b.to_lowercase()))
    }

    pub fn contains_trigram(&self, a: &str, b: &str, c: &str) -> bool {
        self.trigrams
            .contains(&(a.to_lowercase(), b.to_lowercase(), c.to_lowercase()))
    }
}
