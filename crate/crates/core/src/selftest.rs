//! Bounded oracle suites over randomly sampled formulas.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::decider::{Analysis, DecideOptions};
use crate::error::Result;
use crate::gcma::{build_gcma, fixtures, AnchorTable, Gcma};
use crate::looplang::{occ_violation, LoopAnalysis, SwapContext};
use crate::ltl::{eval, to_nnf, Alphabet, Formula, UPWord};
use crate::quotient::QuotientAutomaton;
use crate::sample::random_formula;

#[derive(Clone, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Number of sampled formulas.
    pub samples: usize,
    /// Temporal operators per sampled formula.
    pub temporal: usize,
    pub options: DecideOptions,
    /// Redirect one transition of every automaton in the anchor suite.
    pub inject_fault: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: 0,
            samples: 50,
            temporal: 3,
            options: DecideOptions::default(),
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn record_result(&mut self, r: Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub samples: usize,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

/// Membership on all canonical words with `|x|, |y| <= 3` against `eval`.
pub fn oracle_agrees(phi: &Formula, g: &Gcma) -> Result<Option<UPWord>> {
    let mut table = AnchorTable::new();
    for w in UPWord::enumerate(g.alphabet(), 3, 3) {
        if g.accepts_with(&mut table, &w)? != eval(phi, &w) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Every word of length `1..=5` has one anchor and lies in exactly one loop
/// language.
pub fn anchors_partition(g: &Gcma) -> Result<bool> {
    for u in g.alphabet().words_up_to(1, 5) {
        g.anchor(&u)?;
    }
    let qa = QuotientAutomaton::of(g);
    let loops = LoopAnalysis::new(g, &qa)?;
    Ok(g.alphabet()
        .words_up_to(1, 5)
        .iter()
        .all(|u| loops.languages().iter().filter(|l| l.contains(u)).count() == 1))
}

/// Equational 1-local testability against the bounded `Occ` check. The
/// bound grows to the length of the equational counterexample, if any.
pub fn one_lt_agrees(g: &Gcma, ctx: SwapContext) -> Result<bool> {
    let qa = QuotientAutomaton::of(g);
    let loops = LoopAnalysis::new(g, &qa)?;
    let cex = loops.one_lt_counterexample(ctx);
    let bound = cex.as_ref().map_or(5, |c| c.left().len().max(5));
    let brute = occ_violation(g, &qa, ctx, bound)?;
    Ok(cex.is_none() == brute.is_none())
}

/// First single-transition mutation that breaks anchor uniqueness on words
/// of length `<= 5`.
pub fn inject_fault(g: &Gcma) -> Option<Gcma> {
    for a in g.alphabet().letters() {
        for q in g.states() {
            for t in g.states().filter(|&t| t != g.step(a, q)) {
                let h = g.with_transition(a, q, t).ok()?;
                if h.alphabet()
                    .words_up_to(1, 5)
                    .iter()
                    .any(|u| h.anchor(u).is_err())
                {
                    return Some(h);
                }
            }
        }
    }
    None
}

pub fn run(config: &SelftestConfig, alphabet: &Alphabet) -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let formulas: Vec<Formula> = (0..config.samples)
        .map(|_| random_formula(&mut rng, alphabet, config.temporal))
        .collect();
    let mut oracle = SuiteResult::new("oracle-equivalence");
    let mut anchors = SuiteResult::new("anchor-partition");
    let mut one_lt = SuiteResult::new("one-lt-cross-check");
    let mut lattice = SuiteResult::new("lattice-consistency");
    let mut witnesses = SuiteResult::new("witness-soundness");

    let mut anchor_case = |g: &Gcma, name: &str| {
        let name = name.to_string();
        if config.inject_fault {
            match inject_fault(g) {
                Some(h) => anchors
                    .record_result(anchors_partition(&h), || format!("{name} (fault injected)")),
                None => anchors.record(false, || format!("{name}: no fault could be injected")),
            }
        } else {
            anchors.record_result(anchors_partition(g), || name);
        }
    };
    anchor_case(&fixtures::four_state(), "four-state fixture");

    for phi in &formulas {
        let text = phi.to_text(alphabet);
        let built = match build_gcma(&to_nnf(phi, alphabet), alphabet, config.options.max_sub) {
            Ok(g) => g,
            Err(e) => {
                oracle.record(false, || format!("{text}: {e}"));
                continue;
            }
        };
        let trimmed = built.trim();
        for g in [&built, &trimmed] {
            oracle.record_result(oracle_agrees(phi, g).map(|m| m.is_none()), || {
                format!("{text}: accepts and eval disagree")
            });
        }
        anchor_case(&trimmed, &text);
        for ctx in [SwapContext::Any, SwapContext::NonEmptyLeft] {
            one_lt.record_result(one_lt_agrees(&trimmed, ctx), || format!("{text} ({ctx:?})"));
        }
        let analysis = match Analysis::new(phi, alphabet, config.options) {
            Ok(a) => a,
            Err(e) => {
                lattice.record(false, || format!("{text}: {e}"));
                continue;
            }
        };
        match analysis.decide_all() {
            Ok(all) => {
                lattice.record(true, String::new);
                for v in all.values() {
                    if let Some(w) = &v.witness {
                        let ok = eval(phi, &w.w1) != eval(phi, &w.w2) && w.relation_holds();
                        witnesses.record(ok, || format!("{text} ({})", v.fragment));
                    }
                }
            }
            Err(e) => lattice.record(false, || format!("{text}: {e}")),
        }
    }
    let suites = vec![oracle, anchors, one_lt, lattice, witnesses];
    SelftestReport {
        seed: config.seed,
        samples: config.samples,
        passed: suites.iter().all(SuiteResult::passed),
        suites,
    }
}
