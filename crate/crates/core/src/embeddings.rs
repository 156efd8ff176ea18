//! Dense word vectors loaded from a whitespace-separated text file.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("embedding file contains no vectors")]
    Empty,
}

/// Word vectors with a fixed dimension. Words are stored case-folded.
#[derive(Debug, Clone)]
pub struct Embeddings {
    words: Vec<String>,
    index: HashMap<String, usize>,
    dim: usize,
    data: Vec<f64>,
}

impl Embeddings {
    pub fn bundled() -> Self {
        Self::parse(crate::data::EMBEDDINGS).expect("bundled embeddings are valid")
    }

    pub fn load(path: &Path) -> Result<Self, EmbeddingError> {
        let content = fs::read_to_string(path).map_err(|source| EmbeddingError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&content)
    }

    /// Parses `word v1 ... vd` lines. An optional `<vocab_size> <d>` header
    /// line is accepted; otherwise `d` is inferred from the first row.
    pub fn parse(content: &str) -> Result<Self, EmbeddingError> {
        let mut lines = content
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .peekable();
        let mut declared: Option<(usize, usize)> = None;
        if let Some((_, first)) = lines.peek() {
            let fields: Vec<&str> = first.split_whitespace().collect();
            if fields.len() == 2 {
                if let (Ok(n), Ok(d)) = (fields[0].parse::<usize>(), fields[1].parse::<usize>()) {
                    declared = Some((n, d));
                    lines.next();
                }
            }
        }

        let mut emb = Embeddings {
            words: Vec::new(),
            index: HashMap::new(),
            dim: declared.map_or(0, |(_, d)| d),
            data: Vec::new(),
        };
        for (lineno, line) in lines {
            let mut fields = line.split_whitespace();
            let word = fields.next().expect("non-blank line").to_lowercase();
            let values = fields
                .map(|f| f.parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| EmbeddingError::Malformed {
                    line: lineno + 1,
                    reason: e.to_string(),
                })?;
            if emb.dim == 0 {
                emb.dim = values.len();
            }
            if values.len() != emb.dim || emb.dim == 0 {
                return Err(EmbeddingError::Malformed {
                    line: lineno + 1,
                    reason: format!("expected {} components, found {}", emb.dim, values.len()),
                });
            }
            if emb.index.contains_key(&word) {
                continue;
            }
            emb.index.insert(word.clone(), emb.words.len());
            emb.words.push(word);
            emb.data.extend(values);
        }
        if emb.words.is_empty() {
            return Err(EmbeddingError::Empty);
        }
        if let Some((n, _)) = declared {
            if n != emb.words.len() {
                log::warn!(
                    "embedding header declares {n} words, found {}",
                    emb.words.len()
                );
            }
        }
        Ok(emb)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn get(&self, word: &str) -> Option<&[f64]> {
        let i = *self.index.get(word)?;
        Some(&self.data[i * self.dim..(i + 1) * self.dim])
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    /// Iterates `(word, vector)` pairs in file order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &[f64])> {
        self.words
            .iter()
            .zip(self.data.chunks_exact(self.dim))
            .map(|(w, v)| (w.as_str(), v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_is_optional() {
        let with = Embeddings::parse("2 3\nmagic 1 0 0\nspell 0 1 0\n").unwrap();
        let without = Embeddings::parse("magic 1 0 0\nspell 0 1 0\n").unwrap();
        assert_eq!(with.dim(), 3);
        assert_eq!(without.dim(), 3);
        assert_eq!(with.get("spell"), without.get("spell"));
        assert_eq!(with.len(), 2);
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = Embeddings::parse("magic 1 0 0\nspell 0 1\n").unwrap_err();
        assert!(matches!(err, EmbeddingError::Malformed { line: 2, .. }));
        assert!(matches!(
            Embeddings::parse("\n"),
            Err(EmbeddingError::Empty)
        ));
        assert!(matches!(
            Embeddings::parse("magic 1 x"),
            Err(EmbeddingError::Malformed { .. })
        ));
    }

    #[test]
    fn words_are_case_folded() {
        let e = Embeddings::parse("Magic 1 2\n").unwrap();
        assert_eq!(e.get("magic"), Some(&[1.0, 2.0][..]));
    }

    #[test]
    fn bundled_file_loads() {
        let e = Embeddings::bundled();
        assert!(e.len() > 1000);
        assert!(e.contains("witchcraft"));
    }
}
