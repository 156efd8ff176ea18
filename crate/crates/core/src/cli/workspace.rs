use std::env;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::corpus::{SkeletonIndex, SloganCorpus, SurfaceNgramSet};
use crate::data::file_names;
use crate::embeddings::Embeddings;
use crate::fitness::CentroidSimilarity;
use crate::seeds::Stopwords;
use crate::text::Tagger;

pub const DATA_DIR_ENV: &str = "SLOGGEN_DATA_DIR";

const BUNDLED: &str = "<bundled>";

/// Data-file locations. Each file comes from its explicit path, else from
/// the data directory (`data_dir`, else `$SLOGGEN_DATA_DIR`) when present
/// there, else from the copy compiled into the library.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DataPaths {
    pub data_dir: Option<PathBuf>,
    pub corpus: Option<PathBuf>,
    pub ngrams: Option<PathBuf>,
    pub embeddings: Option<PathBuf>,
    pub tag_lexicon: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
}

/// Where each data file was read from, for the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DataSources {
    pub corpus: String,
    pub ngrams: String,
    pub embeddings: String,
    pub tag_lexicon: String,
    pub coarse_map: String,
    pub stopwords: String,
}

impl DataPaths {
    fn data_dir(&self) -> Option<PathBuf> {
        self.data_dir.clone().or_else(|| {
            env::var_os(DATA_DIR_ENV)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from)
        })
    }

    fn resolve(&self, explicit: &Option<PathBuf>, file_name: &str) -> Option<PathBuf> {
        if let Some(p) = explicit {
            return Some(p.clone());
        }
        let candidate = self.data_dir()?.join(file_name);
        candidate.is_file().then_some(candidate)
    }

    /// Fails on the first explicitly named file that does not exist.
    pub fn check_exists(&self) -> Result<(), CliError> {
        let explicit = [
            &self.corpus,
            &self.ngrams,
            &self.embeddings,
            &self.tag_lexicon,
            &self.stopwords,
        ];
        for p in explicit.into_iter().flatten() {
            if !p.is_file() {
                return Err(data_error(p, "file not found"));
            }
        }
        if let Some(dir) = &self.data_dir {
            if !dir.is_dir() {
                return Err(data_error(dir, "data directory not found"));
            }
        }
        Ok(())
    }
}

fn data_error(path: &Path, reason: impl ToString) -> CliError {
    CliError::Data {
        path: path.display().to_string(),
        reason: reason.to_string(),
    }
}

fn source_name(p: &Option<PathBuf>) -> String {
    p.as_ref()
        .map_or_else(|| BUNDLED.to_string(), |p| p.display().to_string())
}

/// All loaded data plus the indices derived from it.
pub struct Workspace {
    pub tagger: Arc<Tagger>,
    pub corpus: SloganCorpus,
    pub index: SkeletonIndex,
    pub ngrams: SurfaceNgramSet,
    pub embeddings: Arc<Embeddings>,
    pub stopwords: Arc<Stopwords>,
    pub similarity: CentroidSimilarity,
    pub sources: DataSources,
    pub warnings: Vec<String>,
}

impl Workspace {
    pub fn load(paths: &DataPaths) -> Result<Self, CliError> {
        paths.check_exists()?;
        let corpus_path = paths.resolve(&paths.corpus, file_names::SLOGANS);
        let ngrams_path = paths.resolve(&paths.ngrams, file_names::NGRAMS);
        let embeddings_path = paths.resolve(&paths.embeddings, file_names::EMBEDDINGS);
        let lexicon_path = paths.resolve(&paths.tag_lexicon, file_names::TAG_LEXICON);
        let coarse_path = paths.resolve(&None, file_names::COARSE_MAP);
        let stopwords_path = paths.resolve(&paths.stopwords, file_names::STOPWORDS);

        let tagger = match (&lexicon_path, &coarse_path) {
            (None, None) => Tagger::bundled(),
            (Some(lex), coarse) => {
                Tagger::from_files(lex, coarse.as_deref()).map_err(|e| data_error(lex, e))?
            }
            (None, Some(coarse)) => {
                let content = std::fs::read_to_string(coarse).map_err(|e| data_error(coarse, e))?;
                let map =
                    crate::text::CoarseMap::parse(&content).map_err(|e| data_error(coarse, e))?;
                let lexicon = crate::text::parse_lexicon(crate::data::TAG_LEXICON)
                    .expect("bundled lexicon parses");
                Tagger::new(lexicon, map)
            }
        };
        let corpus = match &corpus_path {
            Some(p) => SloganCorpus::load(p, &tagger).map_err(|e| data_error(p, e))?,
            None => SloganCorpus::bundled(&tagger),
        };
        let ngrams = match &ngrams_path {
            Some(p) => SurfaceNgramSet::load(p).map_err(|e| data_error(p, e))?,
            None => SurfaceNgramSet::bundled(),
        };
        let embeddings = match &embeddings_path {
            Some(p) => Embeddings::load(p).map_err(|e| data_error(p, e))?,
            None => Embeddings::bundled(),
        };
        let stopwords = match &stopwords_path {
            Some(p) => Stopwords::load(p).map_err(|e| data_error(p, e))?,
            None => Stopwords::bundled(),
        };

        let sources = DataSources {
            corpus: source_name(&corpus_path),
            ngrams: source_name(&ngrams_path),
            embeddings: source_name(&embeddings_path),
            tag_lexicon: source_name(&lexicon_path),
            coarse_map: source_name(&coarse_path),
            stopwords: source_name(&stopwords_path),
        };
        Ok(Self::assemble(
            tagger, corpus, ngrams, embeddings, stopwords, sources,
        ))
    }

    fn assemble(
        tagger: Tagger,
        corpus: SloganCorpus,
        ngrams: SurfaceNgramSet,
        embeddings: Embeddings,
        stopwords: Stopwords,
        sources: DataSources,
    ) -> Self {
        let mut warnings = Vec::new();
        if ngrams.skipped_lines() > 0 {
            warnings.push(format!(
                "{}: skipped {} n-gram lines that are not 2- or 3-grams",
                sources.ngrams,
                ngrams.skipped_lines()
            ));
        }
        let index = SkeletonIndex::build(&corpus);
        let embeddings = Arc::new(embeddings);
        let stopwords = Arc::new(stopwords);
        Workspace {
            tagger: Arc::new(tagger),
            index,
            corpus,
            ngrams,
            similarity: CentroidSimilarity::new(embeddings.clone(), stopwords.clone()),
            embeddings,
            stopwords,
            sources,
            warnings,
        }
    }

    /// The compiled-in data, ignoring any data directory.
    pub fn bundled() -> Self {
        let tagger = Tagger::bundled();
        let corpus = SloganCorpus::bundled(&tagger);
        let b = || BUNDLED.to_string();
        let sources = DataSources {
            corpus: b(),
            ngrams: b(),
            embeddings: b(),
            tag_lexicon: b(),
            coarse_map: b(),
            stopwords: b(),
        };
        Self::assemble(
            tagger,
            corpus,
            SurfaceNgramSet::bundled(),
            Embeddings::bundled(),
            Stopwords::bundled(),
            sources,
        )
    }
}
