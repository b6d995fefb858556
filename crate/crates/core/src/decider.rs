//! Per-fragment verdicts: forbidden patterns in the quotient first, then
//! properties of the loop languages.
//!
//! | fragment | conditions                                   |
//! |----------|----------------------------------------------|
//! | `X`      | no T1                                        |
//! | `SF`     | no T2, loop languages 1-locally testable     |
//! | `F`      | no T2, no T3, loop languages 1-locally testable |
//! | `XF`     | no T4, loop languages locally testable       |
//! | `U`      | no T3, loop languages stutter-invariant      |

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gcma::{build_gcma, Gcma, DEFAULT_MAX_SUB};
use crate::looplang::{
    ClosureKind, LoopAnalysis, LoopCounterexample, SwapContext, DEFAULT_MAX_SEMIGROUP,
};
use crate::ltl::{to_nnf, Alphabet, Formula, Fragment, UPWord};
use crate::patterns::{self, distinguishing_word, PatternHit, PatternId, Relation, WitnessPair};
use crate::quotient::QuotientAutomaton;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    pub max_sub: usize,
    pub max_semigroup: usize,
    /// Game depth the witnesses are certified for.
    pub game_depth: usize,
    /// Evaluate every condition instead of stopping at the first failure.
    pub all_reasons: bool,
    /// Left context of the swap condition in the `F` and `SF` rows.
    pub swap_context: SwapContext,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            max_sub: DEFAULT_MAX_SUB,
            max_semigroup: DEFAULT_MAX_SEMIGROUP,
            game_depth: 6,
            all_reasons: false,
            swap_context: SwapContext::NonEmptyLeft,
        }
    }
}

/// A failed condition.
#[derive(Clone, Debug, PartialEq)]
pub enum Reason {
    Pattern(PatternHit),
    NotStutterInvariant(LoopCounterexample),
    /// Stuttering or swapping changes the anchor class.
    NotOneLocallyTestable(LoopCounterexample),
    NotLocallyTestable {
        class: usize,
        counterexample: crate::looplang::LtCounterexample,
    },
}

impl Reason {
    pub fn kind(&self) -> String {
        match self {
            Reason::Pattern(hit) => hit.id().to_string(),
            Reason::NotStutterInvariant(_) => "not-stutter-invariant".into(),
            Reason::NotOneLocallyTestable(_) => "not-1-locally-testable".into(),
            Reason::NotLocallyTestable { .. } => "not-locally-testable".into(),
        }
    }

    pub fn detail(&self, alphabet: &Alphabet) -> String {
        let w = |u: &[crate::ltl::Letter]| alphabet.format_word(u);
        match self {
            Reason::Pattern(hit) => hit.describe(alphabet),
            Reason::NotStutterInvariant(c) | Reason::NotOneLocallyTestable(c) => {
                let what = match c.kind {
                    ClosureKind::Stutter => "stuttering",
                    ClosureKind::Swap => "swapping",
                };
                format!(
                    "{what} changes the anchor class: {} vs {} (u={}, v={}, loop language of C{})",
                    w(&c.left()),
                    w(&c.right()),
                    w(&c.u),
                    w(&c.v),
                    c.class
                )
            }
            Reason::NotLocallyTestable { class, counterexample: c } => match &c.t {
                None => format!(
                    "loop language of C{class} is not locally testable: e={} is idempotent but e({})e is not",
                    w(&c.e),
                    w(&c.s)
                ),
                Some(t) => format!(
                    "loop language of C{class} is not locally testable: e={} is idempotent but e({})e and e({})e do not commute",
                    w(&c.e),
                    w(&c.s),
                    w(t)
                ),
            },
        }
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        let data = match self {
            Reason::Pattern(hit) => hit.to_json(alphabet),
            Reason::NotStutterInvariant(c) | Reason::NotOneLocallyTestable(c) => {
                c.to_json(alphabet)
            }
            Reason::NotLocallyTestable {
                class,
                counterexample,
            } => {
                let mut v = counterexample.to_json(alphabet);
                v["class"] = json!(class);
                v
            }
        };
        json!({"kind": self.kind(), "detail": self.detail(alphabet), "data": data})
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub subformulas: usize,
    pub gcma_states: usize,
    pub trimmed_states: usize,
    pub final_sets: usize,
    pub classes: usize,
    pub sccs: usize,
    /// Total size of the minimal loop-language DFAs, when they were built.
    pub loop_dfa_states: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub formula: String,
    pub alphabet: Alphabet,
    pub fragment: Fragment,
    pub expressible: bool,
    pub reasons: Vec<Reason>,
    pub notes: Vec<String>,
    pub witness: Option<WitnessPair>,
    pub stats: Stats,
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        json!({
            "formula": self.formula,
            "alphabet": self.alphabet,
            "fragment": self.fragment.name(),
            "expressible": self.expressible,
            "reasons": self.reasons.iter().map(|r| r.to_json(&self.alphabet)).collect::<Vec<_>>(),
            "notes": self.notes,
            "witness": self.witness.as_ref().map(|w| w.to_json(&self.alphabet)),
            "stats": self.stats,
        })
    }
}

/// The automata of one formula, shared by all fragment decisions.
#[derive(Debug)]
pub struct Analysis {
    formula: Formula,
    alphabet: Alphabet,
    options: DecideOptions,
    gcma: Gcma,
    quotient: QuotientAutomaton,
    stats: Stats,
    loops: OnceLock<Result<LoopAnalysis>>,
}

impl Analysis {
    pub fn new(formula: &Formula, alphabet: &Alphabet, options: DecideOptions) -> Result<Analysis> {
        if !formula.letters_within(alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        let full = build_gcma(&to_nnf(formula, alphabet), alphabet, options.max_sub)?;
        let gcma = full.trim();
        let quotient = QuotientAutomaton::of(&gcma);
        let stats = Stats {
            subformulas: full.subformulas().len(),
            gcma_states: full.num_states(),
            trimmed_states: gcma.num_states(),
            final_sets: gcma.num_final_sets(),
            classes: quotient.num_classes(),
            sccs: quotient.sccs().len(),
            loop_dfa_states: None,
        };
        Ok(Analysis {
            formula: formula.clone(),
            alphabet: alphabet.clone(),
            options,
            gcma,
            quotient,
            stats,
            loops: OnceLock::new(),
        })
    }

    pub fn gcma(&self) -> &Gcma {
        &self.gcma
    }

    pub fn quotient(&self) -> &QuotientAutomaton {
        &self.quotient
    }

    pub fn options(&self) -> &DecideOptions {
        &self.options
    }

    pub fn loops(&self) -> Result<&LoopAnalysis> {
        self.loops
            .get_or_init(|| LoopAnalysis::new(&self.gcma, &self.quotient))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn stats(&self) -> Stats {
        let mut stats = self.stats.clone();
        if let Some(Ok(l)) = self.loops.get() {
            stats.loop_dfa_states = Some(l.languages().iter().map(|l| l.dfa.num_states()).sum());
        }
        stats
    }

    pub fn decide(&self, fragment: Fragment) -> Result<Verdict> {
        let mut notes = Vec::new();
        let mut reasons = Vec::new();
        if fragment == Fragment::Full {
            notes.push("full LTL: every formula is expressible".to_string());
        } else if self.gcma.has_empty_language() {
            notes.push("empty language".to_string());
        } else {
            if fragment == Fragment::U {
                notes.push(
                    "TL-definability of the language holds for every LTL formula".to_string(),
                );
            }
            self.collect_reasons(fragment, &mut reasons)?;
        }
        let witness = match reasons.iter().find_map(|r| self.witness_for(fragment, r)) {
            Some(Ok(w)) => Some(w),
            Some(Err(e)) => {
                notes.push(e.to_string());
                None
            }
            None => None,
        };
        Ok(Verdict {
            formula: self.formula.to_text(&self.alphabet),
            alphabet: self.alphabet.clone(),
            fragment,
            expressible: reasons.is_empty(),
            reasons,
            notes,
            witness,
            stats: self.stats(),
        })
    }

    fn collect_reasons(&self, fragment: Fragment, reasons: &mut Vec<Reason>) -> Result<()> {
        let all = self.options.all_reasons;
        let pats: &[PatternId] = match fragment {
            Fragment::X => &[PatternId::T1],
            Fragment::SF => &[PatternId::T2],
            Fragment::F => &[PatternId::T2, PatternId::T3],
            Fragment::XF => &[PatternId::T4],
            Fragment::U => &[PatternId::T3],
            Fragment::Full => &[],
        };
        for &id in pats {
            if let Some(hit) = patterns::find(&self.quotient, id) {
                reasons.push(Reason::Pattern(hit));
                if !all {
                    return Ok(());
                }
            }
        }
        match fragment {
            Fragment::SF | Fragment::F => {
                let loops = self.loops()?;
                if let Some(c) = loops.one_lt_counterexample(self.options.swap_context) {
                    reasons.push(Reason::NotOneLocallyTestable(c));
                }
            }
            Fragment::XF => {
                if let Some((class, counterexample)) =
                    self.loops()?.lt_failure(self.options.max_semigroup)?
                {
                    reasons.push(Reason::NotLocallyTestable {
                        class,
                        counterexample,
                    });
                }
            }
            Fragment::U => {
                if let Some(c) = self.loops()?.stutter_counterexample() {
                    reasons.push(Reason::NotStutterInvariant(c));
                }
            }
            Fragment::X | Fragment::Full => {}
        }
        Ok(())
    }

    fn witness_for(&self, fragment: Fragment, reason: &Reason) -> Option<Result<WitnessPair>> {
        let m = self.options.game_depth;
        match reason {
            Reason::Pattern(hit) => Some(patterns::witness(&self.gcma, &self.quotient, hit, m)),
            Reason::NotStutterInvariant(c) | Reason::NotOneLocallyTestable(c) => {
                let relation = if fragment == Fragment::U {
                    Relation::StutterEquivalent
                } else {
                    Relation::OccEqualPumped
                };
                Some(self.loop_witness(c, relation))
            }
            Reason::NotLocallyTestable { .. } => None,
        }
    }

    /// `x·left^ω` vs `x·right^ω`, where `x` separates the anchor classes.
    fn loop_witness(&self, c: &LoopCounterexample, relation: Relation) -> Result<WitnessPair> {
        let (g, qa) = (&self.gcma, &self.quotient);
        let c1 = qa.class_of(g.anchor(&c.left())?);
        let c2 = qa.class_of(g.anchor(&c.right())?);
        let x = distinguishing_word(qa, c1, c2)
            .ok_or_else(|| Error::Witness(format!("classes C{c1} and C{c2} are not separated")))?;
        let pair = WitnessPair {
            w1: UPWord::new(x.clone(), c.left())?.canonical(),
            w2: UPWord::new(x, c.right())?.canonical(),
            relation,
            pump: self.options.game_depth,
            repetitions: 1,
        };
        if !pair.relation_holds() {
            return Err(Error::Witness(format!(
                "loop pair is not {relation} at depth {}",
                pair.pump
            )));
        }
        if g.accepts(&pair.w1)? == g.accepts(&pair.w2)? {
            return Err(Error::Witness("loop pair has equal membership".into()));
        }
        Ok(pair)
    }

    /// Verdicts for every fragment, checked against the inclusions
    /// `F ⊆ SF, U, XF`, `SF ⊆ XF` and `X ⊆ XF`.
    pub fn decide_all(&self) -> Result<BTreeMap<Fragment, Verdict>> {
        let mut out = BTreeMap::new();
        for f in Fragment::DECIDABLE.into_iter().chain([Fragment::Full]) {
            out.insert(f, self.decide(f)?);
        }
        let yes = |f: Fragment| out[&f].expressible;
        for (small, large) in [
            (Fragment::F, Fragment::SF),
            (Fragment::F, Fragment::U),
            (Fragment::F, Fragment::XF),
            (Fragment::SF, Fragment::XF),
            (Fragment::X, Fragment::XF),
        ] {
            if yes(small) && !yes(large) {
                return Err(Error::Inconsistent(format!(
                    "{} is expressible in {small} but not in {large}",
                    self.formula.to_text(&self.alphabet)
                )));
            }
        }
        Ok(out)
    }
}

pub fn decide(
    formula: &Formula,
    alphabet: &Alphabet,
    fragment: Fragment,
    options: DecideOptions,
) -> Result<Verdict> {
    Analysis::new(formula, alphabet, options)?.decide(fragment)
}

pub fn decide_all(
    formula: &Formula,
    alphabet: &Alphabet,
    options: DecideOptions,
) -> Result<BTreeMap<Fragment, Verdict>> {
    Analysis::new(formula, alphabet, options)?.decide_all()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ltl::{eval, parse};

    fn verdicts(f: &str) -> (Formula, BTreeMap<Fragment, Verdict>) {
        let ab = Alphabet::parse("a,b").unwrap();
        let phi = parse(f, &ab).unwrap();
        let all = decide_all(&phi, &ab, DecideOptions::default()).unwrap();
        (phi, all)
    }

    fn row(all: &BTreeMap<Fragment, Verdict>) -> [bool; 5] {
        Fragment::DECIDABLE.map(|f| all[&f].expressible)
    }

    fn check_witnesses(phi: &Formula, all: &BTreeMap<Fragment, Verdict>) {
        for v in all.values() {
            if let Some(w) = &v.witness {
                assert_ne!(eval(phi, &w.w1), eval(phi, &w.w2), "{:?}", v.fragment);
                assert!(w.relation_holds());
            }
        }
    }

    #[test]
    fn release() {
        let (phi, all) = verdicts("a R b");
        // X, F, SF, XF, U
        assert_eq!(row(&all), [false, true, true, true, true]);
        assert_eq!(all[&Fragment::X].reasons[0].kind(), "T1");
        assert!(all[&Fragment::X].witness.is_some());
        check_witnesses(&phi, &all);
    }

    #[test]
    fn next() {
        let (phi, all) = verdicts("X b");
        assert_eq!(row(&all), [true, false, false, true, false]);
        assert_eq!(all[&Fragment::U].reasons[0].kind(), "T3");
        assert_eq!(all[&Fragment::SF].reasons[0].kind(), "T2");
        for f in [Fragment::F, Fragment::SF, Fragment::U] {
            assert!(all[&f].witness.is_some(), "{f}");
        }
        let u = &all[&Fragment::U].witness.as_ref().unwrap();
        assert!(u.w1.stutter_equivalent(&u.w2));
        check_witnesses(&phi, &all);
    }

    #[test]
    fn eventually_and_letter() {
        let (phi, all) = verdicts("F a");
        assert_eq!(row(&all), [false, true, true, true, true]);
        check_witnesses(&phi, &all);
        let (_, all) = verdicts("a");
        assert_eq!(row(&all), [true; 5]);
        assert!(all[&Fragment::Full].expressible);
    }

    #[test]
    fn all_reasons_collects_loop_failures() {
        let ab = Alphabet::parse("a,b").unwrap();
        let phi = parse("X b", &ab).unwrap();
        let opts = DecideOptions {
            all_reasons: true,
            ..DecideOptions::default()
        };
        let v = decide(&phi, &ab, Fragment::U, opts).unwrap();
        let kinds: Vec<String> = v.reasons.iter().map(Reason::kind).collect();
        assert_eq!(kinds, ["T3", "not-stutter-invariant"]);
    }

    #[test]
    fn empty_language_is_expressible() {
        let ab = Alphabet::parse("a,b").unwrap();
        let phi = parse("a & b", &ab).unwrap();
        let all = decide_all(&phi, &ab, DecideOptions::default()).unwrap();
        for v in all.values() {
            assert!(v.expressible);
        }
        assert!(all[&Fragment::X]
            .notes
            .contains(&"empty language".to_string()));
    }

    #[test]
    fn json_shape() {
        let (_, all) = verdicts("X b");
        let j = all[&Fragment::U].to_json();
        assert_eq!(j["fragment"], "U");
        assert_eq!(j["expressible"], false);
        assert_eq!(j["reasons"][0]["kind"], "T3");
        assert_eq!(j["witness"]["relation"], "stutter-equivalent");
        assert!(j["stats"]["classes"].as_u64().unwrap() > 1);
    }
}
