use serde::{Deserialize, Serialize};

/// A single token: the original surface form and its case-folded form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Token {
    surface: String,
    norm: String,
}

impl Token {
    /// Builds a token from a non-empty, whitespace-free surface form.
    pub fn new(surface: impl Into<String>) -> Option<Self> {
        let surface = surface.into();
        if surface.is_empty() || surface.chars().any(char::is_whitespace) {
            return None;
        }
        let norm = surface.to_lowercase();
        Some(Token { surface, norm })
    }

    pub fn surface(&self) -> &str {
        &self.surface
    }

    pub fn norm(&self) -> &str {
        &self.norm
    }

    /// True when the token contains at least one letter or digit.
    pub fn is_word(&self) -> bool {
        self.surface.chars().any(char::is_alphanumeric)
    }
}

fn is_joiner(c: char) -> bool {
    matches!(c, '\'' | '’' | '-')
}

/// Splits raw text into tokens. Punctuation characters become tokens of
/// their own, except apostrophes and hyphens between two alphanumerics.
pub fn tokenize(raw: &str) -> Vec<Token> {
    let chars: Vec<char> = raw.chars().collect();
    let mut tokens = Vec::new();
    let mut word = String::new();

    let flush = |word: &mut String, tokens: &mut Vec<Token>| {
        if !word.is_empty() {
            tokens.extend(Token::new(std::mem::take(word)));
        }
    };

    for (i, &c) in chars.iter().enumerate() {
        if c.is_whitespace() {
            flush(&mut word, &mut tokens);
        } else if c.is_alphanumeric()
            || is_joiner(c)
                && !word.is_empty()
                && chars.get(i + 1).is_some_and(|n| n.is_alphanumeric())
                && chars[i - 1].is_alphanumeric()
        {
            word.push(c);
        } else {
            flush(&mut word, &mut tokens);
            tokens.extend(Token::new(c.to_string()));
        }
    }
    flush(&mut word, &mut tokens);
    tokens
}

fn attaches_left(s: &str) -> bool {
    matches!(
        s,
        "." | "," | "!" | "?" | "'" | "’" | "”" | ";" | ":" | ")" | "…" | "%"
    )
}

fn opens(s: &str) -> bool {
    matches!(s, "“" | "‘" | "(")
}

/// Joins tokens with single spaces, dropping the space before closing
/// punctuation and after opening quotes or brackets.
pub fn detokenize<S: AsRef<str>>(tokens: &[S]) -> String {
    let mut out = String::new();
    let mut glue_next = false;
    let mut straight_quotes = 0usize;
    for (i, tok) in tokens.iter().enumerate() {
        let tok = tok.as_ref();
        let mut glue = glue_next || attaches_left(tok);
        glue_next = opens(tok);
        if tok == "\"" {
            if straight_quotes.is_multiple_of(2) {
                glue_next = true;
            } else {
                glue = true;
            }
            straight_quotes += 1;
        }
        if i > 0 && !glue {
            out.push(' ');
        }
        out.push_str(tok);
    }
    out
}

/// Upper-cases the first letter of `text`.
pub fn sentence_case(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut done = false;
    for c in text.chars() {
        if !done && c.is_alphabetic() {
            out.extend(c.to_uppercase());
            done = true;
        } else {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn surfaces(tokens: &[Token]) -> Vec<&str> {
        tokens.iter().map(Token::surface).collect()
    }

    #[test]
    fn whitespace_split() {
        assert_eq!(
            surfaces(&tokenize("The magic of witchcraft")),
            ["The", "magic", "of", "witchcraft"]
        );
    }

    #[test]
    fn empty_input() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("   \t\n").is_empty());
    }

    #[test]
    fn comma_is_split() {
        assert_eq!(
            surfaces(&tokenize("Melts in your mouth, not in your hands")),
            ["Melts", "in", "your", "mouth", ",", "not", "in", "your", "hands"]
        );
    }

    #[test]
    fn intra_word_joiners_stay_attached() {
        assert_eq!(
            surfaces(&tokenize(
                "Magic is everyone’s state-of-the-art witchcraft, isn't it?"
            )),
            [
                "Magic",
                "is",
                "everyone’s",
                "state-of-the-art",
                "witchcraft",
                ",",
                "isn't",
                "it",
                "?"
            ]
        );
        assert_eq!(
            surfaces(&tokenize("'quoted' - dash")),
            ["'", "quoted", "'", "-", "dash"]
        );
        assert_eq!(
            surfaces(&tokenize("Why wait...")),
            ["Why", "wait", ".", ".", "."]
        );
        assert_eq!(surfaces(&tokenize("Wow…")), ["Wow", "…"]);
    }

    #[test]
    fn norm_is_case_folded() {
        let t = Token::new("WiZarDry").unwrap();
        assert_eq!(t.norm(), "wizardry");
        assert!(Token::new("").is_none());
        assert!(Token::new("a b").is_none());
    }

    #[test]
    fn detokenize_rules() {
        let toks = tokenize("Come for the food, stay for the people!");
        assert_eq!(
            detokenize(&surfaces(&toks)),
            "Come for the food, stay for the people!"
        );
        assert_eq!(
            detokenize(&["He", "said", "\"", "hi", "\"", "."]),
            "He said \"hi\"."
        );
        assert_eq!(detokenize(&["“", "Magic", "”"]), "“Magic”");
        assert_eq!(detokenize::<&str>(&[]), "");
    }

    #[test]
    fn sentence_case_first_letter() {
        assert_eq!(sentence_case("wizardry help"), "Wizardry help");
        assert_eq!(sentence_case("“magic”"), "“Magic”");
        assert_eq!(sentence_case(""), "");
    }

    fn word() -> impl Strategy<Value = String> {
        prop_oneof![
            "[a-zA-Z]{1,8}",
            "[a-z]{1,5}'[a-z]{1,3}",
            "[a-z]{1,5}-[a-z]{1,5}",
            "[0-9]{1,4}",
        ]
    }

    fn sentence() -> impl Strategy<Value = Vec<String>> {
        prop::collection::vec(
            (
                word(),
                prop::option::of(prop::sample::select(vec![".", ",", "!", "?", ";", ":"])),
            ),
            1..10,
        )
        .prop_map(|parts| {
            let mut out = Vec::new();
            for (w, p) in parts {
                out.push(w);
                if let Some(p) = p {
                    out.push(p.to_string());
                }
            }
            out
        })
    }

    proptest! {
        #[test]
        fn detokenize_round_trips(words in sentence()) {
            let text = detokenize(&words);
            let again: Vec<String> = tokenize(&text).iter().map(|t| t.surface().to_string()).collect();
            prop_assert_eq!(again, words);
        }

        #[test]
        fn tokens_are_nonempty_and_whitespace_free(raw in "\\PC{0,40}") {
            for t in tokenize(&raw) {
                prop_assert!(!t.surface().is_empty());
                prop_assert!(!t.surface().chars().any(char::is_whitespace));
                prop_assert_eq!(t.norm(), t.surface().to_lowercase());
            }
        }
    }
}
