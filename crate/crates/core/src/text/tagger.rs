use std::collections::HashMap;
use std::fs;
use std::path::Path;

use super::tagset::{CoarseMap, PennTag, UniversalTag};
use super::tokenize::{tokenize, Token};
use super::{is_comment, TagPair, TaggedSentence, TextError};

/// Lexicon-first part-of-speech tagger with ordered suffix and shape
/// fallbacks for unknown words. Immutable once built.
#[derive(Debug, Clone)]
pub struct Tagger {
    lexicon: HashMap<String, PennTag>,
    coarse: CoarseMap,
}

/// Lexicon key for a case-folded word: typographic apostrophes are folded
/// onto the ASCII one.
fn lexicon_key(norm: &str) -> std::borrow::Cow<'_, str> {
    if norm.contains('’') {
        norm.replace('’', "'").into()
    } else {
        norm.into()
    }
}

impl Tagger {
    pub fn new(lexicon: HashMap<String, PennTag>, coarse: CoarseMap) -> Self {
        Tagger { lexicon, coarse }
    }

    /// Tagger over the bundled demo lexicon and the standard coarse map.
    pub fn bundled() -> Self {
        let lexicon = parse_lexicon(crate::data::TAG_LEXICON).expect("bundled lexicon is valid");
        Tagger::new(lexicon, CoarseMap::standard())
    }

    pub fn from_files(lexicon: &Path, coarse_map: Option<&Path>) -> Result<Self, TextError> {
        let lexicon = parse_lexicon(&read(lexicon)?)?;
        let coarse = match coarse_map {
            Some(path) => CoarseMap::parse(&read(path)?)?,
            None => CoarseMap::standard(),
        };
        Ok(Tagger::new(lexicon, coarse))
    }

    pub fn coarse_map(&self) -> &CoarseMap {
        &self.coarse
    }

    pub fn lexicon_len(&self) -> usize {
        self.lexicon.len()
    }

    /// Dictionary tag for a word, if it is in the lexicon.
    pub fn lookup(&self, word: &str) -> Option<PennTag> {
        self.lexicon
            .get(lexicon_key(&word.to_lowercase()).as_ref())
            .copied()
    }

    /// Tags one token. `position` is its index in the sentence; it only
    /// matters for the capitalised-word rule.
    pub fn tag_token(&self, token: &Token, position: usize) -> PennTag {
        if let Some(&tag) = self.lexicon.get(lexicon_key(token.norm()).as_ref()) {
            return tag;
        }
        let norm = token.norm();
        if !token.is_word() {
            return PennTag::Sym;
        }
        let len = norm.chars().count();
        if len > 3 && norm.ends_with("ly") {
            return PennTag::Rb;
        }
        if len > 4 && norm.ends_with("ing") {
            return PennTag::Vbg;
        }
        if len > 3 && norm.ends_with("ed") {
            return PennTag::Vbd;
        }
        if len > 2 && norm.ends_with('s') && self.has_noun_stem(norm) {
            return PennTag::Nns;
        }
        if position > 0
            && token
                .surface()
                .chars()
                .next()
                .is_some_and(char::is_uppercase)
        {
            return PennTag::Nnp;
        }
        if norm.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            return PennTag::Cd;
        }
        PennTag::Nn
    }

    fn has_noun_stem(&self, norm: &str) -> bool {
        let is_noun = |stem: &str| {
            matches!(
                self.lexicon.get(lexicon_key(stem).as_ref()),
                Some(PennTag::Nn)
            )
        };
        let stem = &norm[..norm.len() - 1];
        if is_noun(stem) {
            return true;
        }
        if let Some(stem) = norm.strip_suffix("es") {
            if is_noun(stem) {
                return true;
            }
        }
        if let Some(stem) = norm.strip_suffix("ies") {
            if is_noun(&format!("{stem}y")) {
                return true;
            }
        }
        false
    }

    pub fn pair(&self, standard: PennTag) -> TagPair {
        TagPair {
            standard,
            universal: self.coarse.map(standard),
        }
    }

    /// Universal class of a single word tagged in isolation.
    pub fn universal_in_isolation(&self, word: &str) -> Option<UniversalTag> {
        let token = Token::new(word)?;
        Some(self.coarse.map(self.tag_token(&token, 0)))
    }

    pub fn tag(&self, tokens: Vec<Token>) -> Result<TaggedSentence, TextError> {
        if tokens.is_empty() {
            return Err(TextError::EmptyInput);
        }
        let tags = tokens
            .iter()
            .enumerate()
            .map(|(i, t)| self.pair(self.tag_token(t, i)))
            .collect();
        Ok(TaggedSentence::assemble(tokens, tags))
    }

    /// Tokenizes then tags.
    pub fn tag_text(&self, raw: &str) -> Result<TaggedSentence, TextError> {
        self.tag(tokenize(raw))
    }
}

fn read(path: &Path) -> Result<String, TextError> {
    fs::read_to_string(path).map_err(|source| TextError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses `word<TAB>PENN_TAG` lines; words are lower-cased on load.
pub fn parse_lexicon(content: &str) -> Result<HashMap<String, PennTag>, TextError> {
    let mut lexicon = HashMap::new();
    for (lineno, line) in content.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || is_comment(line) {
            continue;
        }
        let (word, tag) = line.split_once('\t').ok_or_else(|| TextError::Malformed {
            line: lineno + 1,
            reason: "expected word<TAB>PENN_TAG".into(),
        })?;
        let word = word.trim();
        if word.is_empty() || word.chars().any(char::is_whitespace) {
            return Err(TextError::Malformed {
                line: lineno + 1,
                reason: format!("invalid word {word:?}"),
            });
        }
        let tag: PennTag = tag.trim().parse().map_err(|_| TextError::Malformed {
            line: lineno + 1,
            reason: format!("unknown tag {:?}", tag.trim()),
        })?;
        lexicon.insert(lexicon_key(&word.to_lowercase()).into_owned(), tag);
    }
    Ok(lexicon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Tagset;
    use proptest::prelude::*;

    fn std_tags(tagger: &Tagger, raw: &str) -> Vec<PennTag> {
        tagger
            .tag_text(raw)
            .unwrap()
            .tags()
            .iter()
            .map(|p| p.standard)
            .collect()
    }

    #[test]
    fn diamonds_are_forever() {
        let tagger = Tagger::bundled();
        assert_eq!(
            std_tags(&tagger, "Diamonds are forever"),
            [PennTag::Nns, PennTag::Vbp, PennTag::Rb]
        );
    }

    #[test]
    fn witchcraft_is_a_noun() {
        let tagger = Tagger::bundled();
        let s = tagger.tag_text("witchcraft").unwrap();
        assert_eq!(s.tags()[0].standard, PennTag::Nn);
        assert_eq!(s.tags()[0].universal, UniversalTag::Noun);
    }

    #[test]
    fn suffix_rules_in_priority_order() {
        let tagger = Tagger::bundled();
        assert_eq!(std_tags(&tagger, "zorbly"), [PennTag::Rb]);
        assert_eq!(std_tags(&tagger, "zorbing"), [PennTag::Vbg]);
        assert_eq!(std_tags(&tagger, "zorbed"), [PennTag::Vbd]);
        // "-s after known noun stem"
        assert_eq!(tagger.lookup("homeworks"), None);
        assert_eq!(std_tags(&tagger, "homeworks"), [PennTag::Nns]);
        assert_eq!(std_tags(&tagger, "zorbs"), [PennTag::Nn]);
        assert_eq!(
            std_tags(&tagger, "visit Zorbland"),
            [PennTag::Nn, PennTag::Nnp]
        );
        assert_eq!(std_tags(&tagger, "Zorbland"), [PennTag::Nn]);
        assert_eq!(std_tags(&tagger, "42"), [PennTag::Cd]);
        assert_eq!(std_tags(&tagger, "zorb"), [PennTag::Nn]);
        assert_eq!(std_tags(&tagger, "&"), [PennTag::Sym]);
    }

    #[test]
    fn punctuation_has_tags() {
        let tagger = Tagger::bundled();
        assert_eq!(
            std_tags(&tagger, "Yes, you can!"),
            [
                PennTag::Uh,
                PennTag::Comma,
                PennTag::Prp,
                PennTag::Md,
                PennTag::Period
            ]
        );
    }

    #[test]
    fn typographic_apostrophe_uses_ascii_entry() {
        let tagger = Tagger::bundled();
        assert_eq!(tagger.lookup("let’s"), tagger.lookup("let's"));
        assert!(tagger.lookup("let's").is_some());
    }

    #[test]
    fn magic_of_witchcraft_universal_skeleton() {
        let tagger = Tagger::bundled();
        let s = tagger.tag_text("The magic of witchcraft").unwrap();
        use UniversalTag::*;
        let expected: Vec<crate::text::PosTag> =
            [Det, Noun, Adp, Noun].into_iter().map(Into::into).collect();
        assert_eq!(s.skeleton(Tagset::Universal), expected);
    }

    #[test]
    fn empty_token_list_is_an_error() {
        let tagger = Tagger::bundled();
        assert!(matches!(tagger.tag(vec![]), Err(TextError::EmptyInput)));
        assert!(matches!(tagger.tag_text("  "), Err(TextError::EmptyInput)));
    }

    #[test]
    fn lexicon_parser_rejects_bad_lines() {
        assert!(parse_lexicon("magic\tNN\n# comment\n#\t#\n").is_ok());
        assert_eq!(
            parse_lexicon("#\t#\n").unwrap().get("#"),
            Some(&PennTag::Hash)
        );
        assert!(matches!(
            parse_lexicon("magic NN"),
            Err(TextError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_lexicon("magic\tNOPE"),
            Err(TextError::Malformed { .. })
        ));
    }

    proptest! {
        #[test]
        fn tagging_is_total_and_coarse_consistent(raw in "\\PC{1,60}") {
            let tagger = Tagger::bundled();
            let tokens = tokenize(&raw);
            prop_assume!(!tokens.is_empty());
            let s = tagger.tag(tokens.clone()).unwrap();
            prop_assert_eq!(s.tokens().len(), s.tags().len());
            for pair in s.tags() {
                prop_assert_eq!(tagger.coarse_map().map(pair.standard), pair.universal);
            }
            let again = tagger.tag(tokens).unwrap();
            prop_assert_eq!(s, again);
        }
    }
}
