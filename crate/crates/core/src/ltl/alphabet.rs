use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a symbol in an [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub u16);

impl Letter {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite word. Letters are stored left to right.
pub type Word = Vec<Letter>;

const RESERVED: &[&str] = &["X", "F", "G", "U", "R", "SF", "true", "false"];

/// An ordered, duplicate-free, nonempty set of symbols.
///
/// The order is the declaration order and is used everywhere a canonical
/// enumeration is needed (letter loops, BFS tie breaking, printing).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if letters.len() > u16::MAX as usize {
            return Err(Error::InvalidAlphabet("too many letters".into()));
        }
        for (i, l) in letters.iter().enumerate() {
            if !is_identifier(l) {
                return Err(Error::InvalidAlphabet(format!(
                    "`{l}` is not an identifier"
                )));
            }
            if RESERVED.contains(&l.as_str()) {
                return Err(Error::InvalidAlphabet(format!("`{l}` is a reserved word")));
            }
            if letters[..i].contains(l) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter `{l}`")));
            }
        }
        Ok(Self { letters })
    }

    /// Parses a comma separated list such as `a,b,c`.
    pub fn parse(spec: &str) -> Result<Self> {
        Self::new(spec.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + Clone {
        (0..self.letters.len() as u16).map(Letter)
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.letters[letter.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<Letter> {
        self.letters
            .iter()
            .position(|l| l == name)
            .map(|i| Letter(i as u16))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.letters.len()
    }

    /// True when every symbol is a single character, so words can be
    /// printed without separators.
    pub fn is_compact(&self) -> bool {
        self.letters.iter().all(|l| l.chars().count() == 1)
    }

    pub fn format_word(&self, word: &[Letter]) -> String {
        let sep = if self.is_compact() { "" } else { " " };
        word.iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses a finite word. Compact alphabets accept juxtaposed letters
    /// (`abba`); otherwise letters are separated by whitespace.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if self.is_compact() {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    self.lookup(c.encode_utf8(&mut [0; 4]))
                        .ok_or_else(|| Error::UnknownLetter(c.to_string()))
                })
                .collect()
        } else {
            text.split_whitespace()
                .map(|t| self.lookup(t).ok_or_else(|| Error::UnknownLetter(t.into())))
                .collect()
        }
    }

    /// All words of length exactly `len`, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    self.letters().map(move |l| {
                        let mut w = w.clone();
                        w.push(l);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// All words with `min <= len <= max`, shortest first.
    pub fn words_up_to(&self, min: usize, max: usize) -> Vec<Word> {
        (min..=max).flat_map(|n| self.words_of_length(n)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.letters.join(","))
    }
}

impl TryFrom<Vec<String>> for Alphabet {
    type Error = Error;

    fn try_from(value: Vec<String>) -> Result<Self> {
        Self::new(value)
    }
}

impl From<Alphabet> for Vec<String> {
    fn from(value: Alphabet) -> Self {
        value.letters
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_alphabets() {
        assert!(Alphabet::parse("").is_err());
        assert!(Alphabet::parse("a,a").is_err());
        assert!(Alphabet::parse("a,X").is_err());
        assert!(Alphabet::parse("a,1b").is_err());
        assert!(Alphabet::parse("a, b ,c").is_ok());
    }

    #[test]
    fn word_round_trip() {
        let ab = Alphabet::parse("a,b").unwrap();
        let w = ab.parse_word("abba").unwrap();
        assert_eq!(ab.format_word(&w), "abba");

        let long = Alphabet::parse("req,ack").unwrap();
        let w = long.parse_word("req ack ack").unwrap();
        assert_eq!(w, vec![Letter(0), Letter(1), Letter(1)]);
        assert_eq!(long.format_word(&w), "req ack ack");
    }

    #[test]
    fn enumerates_words() {
        let ab = Alphabet::parse("a,b").unwrap();
        assert_eq!(ab.words_up_to(0, 3).len(), 1 + 2 + 4 + 8);
        assert_eq!(ab.words_of_length(2)[1], vec![Letter(0), Letter(1)]);
    }
}
