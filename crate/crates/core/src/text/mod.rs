//! Tokenization and dual-tagset part-of-speech tagging.
//!
//! Every token carries a [`TagPair`]: a fine Penn Treebank tag and the
//! universal tag it maps to under the tagger's [`CoarseMap`]. A sentence's
//! POS skeleton is the projection of one of those fields.

mod tagger;
mod tagset;
mod tokenize;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use tagger::{parse_lexicon, Tagger};
pub use tagset::{CoarseMap, PennTag, PosTag, Tagset, UniversalTag};
pub use tokenize::{detokenize, sentence_case, tokenize, Token};

#[derive(Debug, Error)]
pub enum TextError {
    #[error("cannot tag an empty token sequence")]
    EmptyInput,
    #[error("unknown tag {0:?}")]
    UnknownTag(String),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("coarse map is missing tags: {0}")]
    IncompleteCoarseMap(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("tag sequence length {tags} does not match token count {tokens}")]
    LengthMismatch { tokens: usize, tags: usize },
}

/// `#` starts a comment unless it is itself an entry (`#<TAB>...`).
pub(crate) fn is_comment(line: &str) -> bool {
    line.starts_with('#') && !line.starts_with("#\t")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TagPair {
    pub standard: PennTag,
    pub universal: UniversalTag,
}

/// A tokenized, tagged sentence and its rendered text.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TaggedSentence {
    tokens: Vec<Token>,
    tags: Vec<TagPair>,
    text: String,
}

impl TaggedSentence {
    pub(crate) fn assemble(tokens: Vec<Token>, tags: Vec<TagPair>) -> Self {
        debug_assert_eq!(tokens.len(), tags.len());
        debug_assert!(!tokens.is_empty());
        let text = sentence_case(&detokenize(
            &tokens.iter().map(Token::surface).collect::<Vec<_>>(),
        ));
        TaggedSentence { tokens, tags, text }
    }

    /// Builds a sentence from explicit Penn tags, deriving the universal
    /// tags through `coarse`. Mostly useful for tests and custom taggers.
    pub fn from_tagged(
        tokens: Vec<Token>,
        standard: &[PennTag],
        coarse: &CoarseMap,
    ) -> Result<Self, TextError> {
        if tokens.is_empty() {
            return Err(TextError::EmptyInput);
        }
        if tokens.len() != standard.len() {
            return Err(TextError::LengthMismatch {
                tokens: tokens.len(),
                tags: standard.len(),
            });
        }
        let tags = standard
            .iter()
            .map(|&t| TagPair {
                standard: t,
                universal: coarse.map(t),
            })
            .collect();
        Ok(Self::assemble(tokens, tags))
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn tags(&self) -> &[TagPair] {
        &self.tags
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Number of tokens that contain a letter or digit.
    pub fn word_count(&self) -> usize {
        self.tokens.iter().filter(|t| t.is_word()).count()
    }

    pub fn skeleton(&self, tagset: Tagset) -> Vec<PosTag> {
        self.tags
            .iter()
            .map(|pair| match tagset {
                Tagset::Standard => PosTag::Penn(pair.standard),
                Tagset::Universal => PosTag::Universal(pair.universal),
            })
            .collect()
    }

    /// Returns a copy with the token at `position` replaced, re-tagged in
    /// full by `tagger`.
    pub fn with_replacement(&self, position: usize, token: Token, tagger: &Tagger) -> Self {
        let mut tokens = self.tokens.clone();
        tokens[position] = token;
        tagger
            .tag(tokens)
            .expect("replacement keeps the sentence non-empty")
    }
}
