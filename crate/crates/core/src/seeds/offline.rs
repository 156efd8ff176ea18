use std::cmp::Ordering;
use std::sync::Arc;

use super::{PosClass, ProviderError, RelatedWordProvider};
use crate::embeddings::Embeddings;
use crate::text::Tagger;

/// Related words by cosine similarity over a word-embedding table,
/// restricted to words the tagger puts in the requested class.
#[derive(Debug, Clone)]
pub struct EmbeddingNeighbors {
    embeddings: Arc<Embeddings>,
    tagger: Arc<Tagger>,
    unit: Vec<Vec<f64>>,
    classes: Vec<Option<PosClass>>,
}

impl EmbeddingNeighbors {
    pub fn new(embeddings: Arc<Embeddings>, tagger: Arc<Tagger>) -> Self {
        let unit = embeddings
            .iter()
            .map(|(_, v)| {
                let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm > 0.0 {
                    v.iter().map(|x| x / norm).collect()
                } else {
                    vec![0.0; v.len()]
                }
            })
            .collect();
        let classes = embeddings
            .words()
            .iter()
            .map(|w| {
                let lowercase = w.chars().all(|c| c.is_lowercase() || c == '-');
                if lowercase {
                    tagger.universal_in_isolation(w).and_then(PosClass::of)
                } else {
                    None
                }
            })
            .collect();
        EmbeddingNeighbors {
            embeddings,
            tagger,
            unit,
            classes,
        }
    }

    pub fn tagger(&self) -> &Tagger {
        &self.tagger
    }
}

impl RelatedWordProvider for EmbeddingNeighbors {
    fn related(&self, word: &str, class: PosClass, k: usize) -> Result<Vec<String>, ProviderError> {
        let query = word.to_lowercase();
        let words = self.embeddings.words();
        let Some(qi) = words.iter().position(|w| *w == query) else {
            return Ok(Vec::new());
        };
        let q = &self.unit[qi];
        let mut scored: Vec<(f64, usize)> = self
            .unit
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != qi && self.classes[i] == Some(class))
            .map(|(i, v)| (v.iter().zip(q).map(|(a, b)| a * b).sum::<f64>(), i))
            .collect();
        scored.sort_by(|a, b| {
            b.0.partial_cmp(&a.0)
                .unwrap_or(Ordering::Equal)
                .then_with(|| words[a.1].cmp(&words[b.1]))
        });
        Ok(scored
            .into_iter()
            .take(k)
            .map(|(_, i)| words[i].clone())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbors_exclude_query_and_respect_class() {
        let tagger = Arc::new(Tagger::bundled());
        let p = EmbeddingNeighbors::new(Arc::new(Embeddings::bundled()), tagger.clone());
        let nouns = p.related("witchcraft", PosClass::Noun, 5).unwrap();
        assert_eq!(nouns.len(), 5);
        assert!(!nouns.contains(&"witchcraft".to_string()));
        for n in &nouns {
            assert_eq!(
                tagger.universal_in_isolation(n),
                Some(crate::text::UniversalTag::Noun)
            );
        }
        let verbs = p.related("educate", PosClass::Verb, 3).unwrap();
        assert_eq!(verbs.len(), 3);
    }

    #[test]
    fn unknown_word_has_no_neighbors() {
        let p =
            EmbeddingNeighbors::new(Arc::new(Embeddings::bundled()), Arc::new(Tagger::bundled()));
        assert!(p.related("qwzx", PosClass::Noun, 5).unwrap().is_empty());
    }

    #[test]
    fn tiny_table() {
        let emb = Embeddings::parse("magic 1 0\nspell 0.9 0.1\nwand 0.5 0.5\nrun 1 0\n").unwrap();
        let p = EmbeddingNeighbors::new(Arc::new(emb), Arc::new(Tagger::bundled()));
        assert_eq!(
            p.related("magic", PosClass::Noun, 5).unwrap(),
            ["spell", "wand"]
        );
        assert_eq!(p.related("magic", PosClass::Verb, 5).unwrap(), ["run"]);
    }
}
