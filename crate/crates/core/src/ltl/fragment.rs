use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A basic temporal operator that may be allowed in a fragment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TemporalOp {
    Next,
    Eventually,
    StrictEventually,
    Until,
}

impl FromStr for TemporalOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "X" | "Next" | "next" => Ok(TemporalOp::Next),
            "F" | "Eventually" | "eventually" => Ok(TemporalOp::Eventually),
            "SF" | "StrictEventually" | "strict-eventually" => Ok(TemporalOp::StrictEventually),
            "U" | "Until" | "until" => Ok(TemporalOp::Until),
            other => Err(Error::UnknownOperator(other.to_string())),
        }
    }
}

/// Canonical id of the fragment determined by an operator set.
///
/// Several operator sets determine the same fragment (`{F, SF}` and `{SF}`;
/// `{F, U}` and `{U}`; `{X, F}`, `{X, SF}` and `{X, F, SF}`). Every set
/// containing both `X` and `U` gives full LTL.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Fragment {
    X,
    F,
    SF,
    XF,
    U,
    #[serde(rename = "FULL")]
    Full,
}

impl Fragment {
    /// The five fragments with a nontrivial decision procedure.
    pub const DECIDABLE: [Fragment; 5] = [
        Fragment::X,
        Fragment::F,
        Fragment::SF,
        Fragment::XF,
        Fragment::U,
    ];

    pub fn from_ops(ops: &BTreeSet<TemporalOp>) -> Result<Fragment> {
        use TemporalOp::*;
        let has = |o| ops.contains(&o);
        let name = || {
            ops.iter()
                .map(|o| match o {
                    Next => "X",
                    Eventually => "F",
                    StrictEventually => "SF",
                    Until => "U",
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        if has(Next) && has(Until) {
            return Ok(Fragment::Full);
        }
        if has(Until) {
            return if has(StrictEventually) {
                Err(Error::UnsupportedFragment(format!("{{{}}}", name())))
            } else {
                Ok(Fragment::U)
            };
        }
        match (has(Next), has(Eventually) || has(StrictEventually)) {
            (true, true) => Ok(Fragment::XF),
            (true, false) => Ok(Fragment::X),
            (false, true) if has(StrictEventually) => Ok(Fragment::SF),
            (false, true) => Ok(Fragment::F),
            (false, false) => Err(Error::UnsupportedFragment("{}".into())),
        }
    }

    /// Parses a comma separated operator list (`"SF,U"`, `"X,F"`) or one of
    /// the canonical ids (`XF`, `FULL`).
    pub fn parse(spec: &str) -> Result<Fragment> {
        match spec.trim() {
            "XF" => return Ok(Fragment::XF),
            "FULL" | "full" => return Ok(Fragment::Full),
            _ => {}
        }
        let ops = spec
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<BTreeSet<_>>>()?;
        Fragment::from_ops(&ops)
    }

    pub fn name(self) -> &'static str {
        match self {
            Fragment::X => "X",
            Fragment::F => "F",
            Fragment::SF => "SF",
            Fragment::XF => "XF",
            Fragment::U => "U",
            Fragment::Full => "FULL",
        }
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fragment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fragment::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_table() {
        let p = |s| Fragment::parse(s);
        assert_eq!(p("F"), Ok(Fragment::F));
        assert_eq!(p("Eventually,Until"), Ok(Fragment::U));
        assert_eq!(p("F,SF"), Ok(Fragment::SF));
        assert_eq!(p("SF"), Ok(Fragment::SF));
        assert_eq!(p("X,F,SF"), Ok(Fragment::XF));
        assert_eq!(p("X,SF"), Ok(Fragment::XF));
        assert_eq!(p("X"), Ok(Fragment::X));
        assert_eq!(p("X,U"), Ok(Fragment::Full));
        assert_eq!(p("X,F,SF,U"), Ok(Fragment::Full));
        assert_eq!(p("XF"), Ok(Fragment::XF));
    }

    #[test]
    fn strict_until_is_unsupported() {
        assert!(matches!(
            Fragment::parse("SF,U"),
            Err(Error::UnsupportedFragment(_))
        ));
        assert!(matches!(
            Fragment::parse("F,SF,U"),
            Err(Error::UnsupportedFragment(_))
        ));
        assert!(matches!(
            Fragment::parse(""),
            Err(Error::UnsupportedFragment(_))
        ));
        assert!(matches!(
            Fragment::parse("Y"),
            Err(Error::UnknownOperator(_))
        ));
    }
}
