//! Demo data files compiled into the library.
//!
//! These are small stand-ins so the crate works out of the box. Every loader
//! also accepts a user-supplied file with the same format.

pub const SLOGANS: &str = include_str!("../data/slogans.txt");
pub const TAG_LEXICON: &str = include_str!("../data/tag_lexicon.tsv");
pub const COARSE_MAP: &str = include_str!("../data/coarse_map.tsv");
pub const STOPWORDS: &str = include_str!("../data/stopwords.txt");
pub const EMBEDDINGS: &str = include_str!("../data/embeddings.txt");
pub const NGRAMS: &str = include_str!("../data/ngrams.txt");

/// File names looked up under a data directory.
pub mod file_names {
    pub const SLOGANS: &str = "slogans.txt";
    pub const TAG_LEXICON: &str = "tag_lexicon.tsv";
    pub const COARSE_MAP: &str = "coarse_map.tsv";
    pub const STOPWORDS: &str = "stopwords.txt";
    pub const EMBEDDINGS: &str = "embeddings.txt";
    pub const NGRAMS: &str = "ngrams.txt";
}

/// Hogwarts description used throughout the examples and tests.
pub const HOGWARTS_SUMMARY: &str =
    "We educate young minds in the practice of witchcraft and wizardry for the service of others.";
