//! Penn Treebank and universal part-of-speech tagsets, and the coarse
//! mapping between them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::TextError;

macro_rules! tag_enum {
    (
        $(#[$meta:meta])*
        $name:ident { $($variant:ident => $label:literal),+ $(,)? }
    ) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $label),+
                }
            }

            pub fn index(self) -> usize {
                self as usize
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = TextError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($label => Ok($name::$variant),)+
                    other => Err(TextError::UnknownTag(other.to_string())),
                }
            }
        }

        impl Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(self.as_str())
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

tag_enum! {
    /// Penn Treebank tags: the 36 word-class tags followed by the nine
    /// punctuation tags of the full treebank tagset.
    PennTag {
        Cc => "CC", Cd => "CD", Dt => "DT", Ex => "EX", Fw => "FW", In => "IN",
        Jj => "JJ", Jjr => "JJR", Jjs => "JJS", Ls => "LS", Md => "MD", Nn => "NN",
        Nns => "NNS", Nnp => "NNP", Nnps => "NNPS", Pdt => "PDT", Pos => "POS", Prp => "PRP",
        PrpS => "PRP$", Rb => "RB", Rbr => "RBR", Rbs => "RBS", Rp => "RP", Sym => "SYM",
        To => "TO", Uh => "UH", Vb => "VB", Vbd => "VBD", Vbg => "VBG", Vbn => "VBN",
        Vbp => "VBP", Vbz => "VBZ", Wdt => "WDT", Wp => "WP", WpS => "WP$", Wrb => "WRB",
        Period => ".", Comma => ",", Colon => ":", OpenQuote => "``", CloseQuote => "''",
        LeftParen => "-LRB-", RightParen => "-RRB-", Dollar => "$", Hash => "#",
    }
}

tag_enum! {
    /// The 12-tag universal tagset.
    UniversalTag {
        Verb => "VERB", Noun => "NOUN", Pron => "PRON", Adj => "ADJ", Adv => "ADV",
        Adp => "ADP", Conj => "CONJ", Det => "DET", Num => "NUM", Prt => "PRT",
        X => "X", Punct => ".",
    }
}

impl PennTag {
    /// Number of word-class (non-punctuation) tags.
    pub const WORD_CLASS_COUNT: usize = 36;

    pub fn is_punctuation(self) -> bool {
        self.index() >= Self::WORD_CLASS_COUNT
    }
}

/// Which tag field a skeleton is projected from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tagset {
    Standard,
    Universal,
}

impl Tagset {
    pub const BOTH: [Tagset; 2] = [Tagset::Standard, Tagset::Universal];

    pub fn short_name(self) -> &'static str {
        match self {
            Tagset::Standard => "std",
            Tagset::Universal => "univ",
        }
    }
}

/// One element of a POS skeleton, from either tagset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosTag {
    Penn(PennTag),
    Universal(UniversalTag),
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosTag::Penn(t) => t.fmt(f),
            PosTag::Universal(t) => t.fmt(f),
        }
    }
}

impl From<PennTag> for PosTag {
    fn from(t: PennTag) -> Self {
        PosTag::Penn(t)
    }
}

impl From<UniversalTag> for PosTag {
    fn from(t: UniversalTag) -> Self {
        PosTag::Universal(t)
    }
}

/// A total function from Penn tags onto universal tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoarseMap {
    table: Vec<UniversalTag>,
}

/// The published Penn Treebank to universal mapping.
const STANDARD_MAP: &[(PennTag, UniversalTag)] = {
    use PennTag as P;
    use UniversalTag as U;
    &[
        (P::Cc, U::Conj),
        (P::Cd, U::Num),
        (P::Dt, U::Det),
        (P::Ex, U::Det),
        (P::Fw, U::X),
        (P::In, U::Adp),
        (P::Jj, U::Adj),
        (P::Jjr, U::Adj),
        (P::Jjs, U::Adj),
        (P::Ls, U::X),
        (P::Md, U::Verb),
        (P::Nn, U::Noun),
        (P::Nns, U::Noun),
        (P::Nnp, U::Noun),
        (P::Nnps, U::Noun),
        (P::Pdt, U::Det),
        (P::Pos, U::Prt),
        (P::Prp, U::Pron),
        (P::PrpS, U::Pron),
        (P::Rb, U::Adv),
        (P::Rbr, U::Adv),
        (P::Rbs, U::Adv),
        (P::Rp, U::Prt),
        (P::Sym, U::X),
        (P::To, U::Prt),
        (P::Uh, U::X),
        (P::Vb, U::Verb),
        (P::Vbd, U::Verb),
        (P::Vbg, U::Verb),
        (P::Vbn, U::Verb),
        (P::Vbp, U::Verb),
        (P::Vbz, U::Verb),
        (P::Wdt, U::Det),
        (P::Wp, U::Pron),
        (P::WpS, U::Pron),
        (P::Wrb, U::Adv),
        (P::Period, U::Punct),
        (P::Comma, U::Punct),
        (P::Colon, U::Punct),
        (P::OpenQuote, U::Punct),
        (P::CloseQuote, U::Punct),
        (P::LeftParen, U::Punct),
        (P::RightParen, U::Punct),
        (P::Dollar, U::Punct),
        (P::Hash, U::Punct),
    ]
};

impl Default for CoarseMap {
    fn default() -> Self {
        Self::standard()
    }
}

impl CoarseMap {
    pub fn standard() -> Self {
        let mut table = vec![UniversalTag::X; PennTag::ALL.len()];
        for &(penn, univ) in STANDARD_MAP {
            table[penn.index()] = univ;
        }
        CoarseMap { table }
    }

    /// Parses `PENN_TAG<TAB>UNIVERSAL_TAG` lines. Every Penn tag must be
    /// covered exactly once (repeating an identical pair is tolerated).
    pub fn parse(content: &str) -> Result<Self, TextError> {
        let mut table: Vec<Option<UniversalTag>> = vec![None; PennTag::ALL.len()];
        for (lineno, line) in content.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || super::is_comment(line) {
                continue;
            }
            let (penn, univ) = line.split_once('\t').ok_or_else(|| TextError::Malformed {
                line: lineno + 1,
                reason: "expected PENN_TAG<TAB>UNIVERSAL_TAG".into(),
            })?;
            let penn: PennTag = penn.trim().parse()?;
            let univ: UniversalTag = univ.trim().parse()?;
            match table[penn.index()] {
                Some(existing) if existing != univ => {
                    return Err(TextError::Malformed {
                        line: lineno + 1,
                        reason: format!("{penn} mapped twice ({existing} and {univ})"),
                    })
                }
                _ => table[penn.index()] = Some(univ),
            }
        }
        let missing: Vec<&str> = PennTag::ALL
            .iter()
            .filter(|t| table[t.index()].is_none())
            .map(|t| t.as_str())
            .collect();
        if !missing.is_empty() {
            return Err(TextError::IncompleteCoarseMap(missing.join(" ")));
        }
        Ok(CoarseMap {
            table: table
                .into_iter()
                .map(|t| t.expect("checked above"))
                .collect(),
        })
    }

    pub fn map(&self, tag: PennTag) -> UniversalTag {
        self.table[tag.index()]
    }
}
