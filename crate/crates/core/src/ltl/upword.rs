//! Ultimately periodic ω-words `x·y^ω`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

/// The ω-word `prefix · period^ω`. The period is never empty.
///
/// Positions of the lasso are numbered `0..prefix.len() + period.len()`;
/// any position `p` of the infinite word maps to [`UPWord::lasso_pos`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UPWord {
    prefix: Word,
    period: Word,
}

impl UPWord {
    pub fn new(prefix: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidWord("period must be nonempty".into()));
        }
        Ok(Self { prefix, period })
    }

    /// `period^ω`.
    pub fn periodic(period: Word) -> Result<Self> {
        Self::new(Vec::new(), period)
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    /// Number of distinct lasso positions, `|x| + |y|`.
    pub fn lasso_len(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    pub fn lasso_pos(&self, p: usize) -> usize {
        let x = self.prefix.len();
        if p < x {
            p
        } else {
            x + (p - x) % self.period.len()
        }
    }

    /// Successor of a lasso position.
    pub fn succ(&self, p: usize) -> usize {
        if p + 1 < self.lasso_len() {
            p + 1
        } else {
            self.prefix.len()
        }
    }

    pub fn at(&self, p: usize) -> Letter {
        let p = self.lasso_pos(p);
        let x = self.prefix.len();
        if p < x {
            self.prefix[p]
        } else {
            self.period[p - x]
        }
    }

    /// The first `n` letters.
    pub fn take(&self, n: usize) -> Word {
        (0..n).map(|i| self.at(i)).collect()
    }

    /// `w[i,*)`.
    pub fn suffix(&self, i: usize) -> UPWord {
        let x = self.prefix.len();
        if i <= x {
            UPWord {
                prefix: self.prefix[i..].to_vec(),
                period: self.period.clone(),
            }
        } else {
            let k = (i - x) % self.period.len();
            let mut period = self.period[k..].to_vec();
            period.extend_from_slice(&self.period[..k]);
            UPWord {
                prefix: Vec::new(),
                period,
            }
        }
    }

    /// Letters occurring infinitely often.
    pub fn inf(&self) -> BTreeSet<Letter> {
        self.period.iter().copied().collect()
    }

    pub fn letters_within(&self, alphabet: &Alphabet) -> bool {
        self.prefix
            .iter()
            .chain(&self.period)
            .all(|&l| alphabet.contains(l))
    }

    /// Canonical representative: primitive period, then shortest prefix.
    /// Two values denote the same ω-word iff their canonical forms are equal.
    pub fn canonical(&self) -> UPWord {
        let mut period = primitive_root(&self.period).to_vec();
        let mut prefix = self.prefix.clone();
        while let (Some(&last_x), Some(&last_y)) = (prefix.last(), period.last()) {
            if last_x != last_y {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        UPWord { prefix, period }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Length of the longest common prefix, capped at `limit`.
    pub fn common_prefix_len(&self, other: &UPWord, limit: usize) -> usize {
        (0..limit)
            .take_while(|&i| self.at(i) == other.at(i))
            .count()
    }

    /// Whether the two ω-words are stutter-equivalent: equal after
    /// collapsing every maximal block of a repeated letter.
    pub fn stutter_equivalent(&self, other: &UPWord) -> bool {
        self.destutter() == other.destutter()
    }

    /// Canonical form of the block-letter sequence of the word.
    pub fn destutter(&self) -> UPWord {
        let w = self.canonical();
        let first = w.period[0];
        if w.period.iter().all(|&l| l == first) {
            // eventually constant: tail is a single infinite block
            let mut prefix = compress(&w.prefix);
            if prefix.last() == Some(&first) {
                prefix.pop();
            }
            return UPWord {
                prefix,
                period: vec![first],
            }
            .canonical();
        }
        // rotate the period so that a block boundary falls on its seam
        let n = w.period.len();
        let k = (0..n)
            .find(|&i| w.period[i] != w.period[(i + n - 1) % n])
            .expect("non-constant period has a boundary");
        let mut prefix = w.prefix.clone();
        prefix.extend_from_slice(&w.period[..k]);
        let mut period = w.period[k..].to_vec();
        period.extend_from_slice(&w.period[..k]);
        let mut joined = prefix;
        joined.extend_from_slice(&period);
        let joined = compress(&joined);
        let cperiod = compress(&period);
        let cprefix = joined[..joined.len() - cperiod.len()].to_vec();
        UPWord {
            prefix: cprefix,
            period: cperiod,
        }
        .canonical()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayUPWord<'a> {
        DisplayUPWord {
            word: self,
            alphabet,
        }
    }

    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        self.display(alphabet).to_string()
    }

    /// Parses `x(y)` with an optional `^w` / `^ω` suffix, e.g. `ab(b)^ω`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<UPWord> {
        let text = text.trim();
        let text = text
            .strip_suffix("^ω")
            .or_else(|| text.strip_suffix("^w"))
            .unwrap_or(text);
        let open = text
            .find('(')
            .ok_or_else(|| Error::InvalidWord(format!("expected `x(y)`, got `{text}`")))?;
        let close = text
            .rfind(')')
            .filter(|&c| c > open && text[c + 1..].trim().is_empty())
            .ok_or_else(|| Error::InvalidWord(format!("expected `x(y)`, got `{text}`")))?;
        let prefix = alphabet.parse_word(&text[..open])?;
        let period = alphabet.parse_word(&text[open + 1..close])?;
        UPWord::new(prefix, period)
    }

    /// All canonical words with `|x| <= max_prefix` and `1 <= |y| <= max_period`,
    /// in sorted order.
    pub fn enumerate(alphabet: &Alphabet, max_prefix: usize, max_period: usize) -> Vec<UPWord> {
        let prefixes = alphabet.words_up_to(0, max_prefix);
        let periods = alphabet.words_up_to(1, max_period);
        let mut set = BTreeSet::new();
        for x in &prefixes {
            for y in &periods {
                set.insert(
                    UPWord {
                        prefix: x.clone(),
                        period: y.clone(),
                    }
                    .canonical(),
                );
            }
        }
        set.into_iter().collect()
    }
}

fn primitive_root(y: &[Letter]) -> &[Letter] {
    let n = y.len();
    for d in 1..n {
        if n.is_multiple_of(d) && (d..n).all(|i| y[i] == y[i - d]) {
            return &y[..d];
        }
    }
    y
}

fn compress(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() != Some(&l) {
            out.push(l);
        }
    }
    out
}

pub struct DisplayUPWord<'a> {
    word: &'a UPWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayUPWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({})^ω",
            self.alphabet.format_word(&self.word.prefix),
            self.alphabet.format_word(&self.word.period)
        )
    }
}
