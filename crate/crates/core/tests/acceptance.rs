//! Acceptance criteria, one test each. Every test prints a single PASS/FAIL
//! line straight to stderr so it shows up even when output is captured.

use std::io::Write;
use std::time::{Duration, Instant};

use ltlfrag::decider::{decide_all, DecideOptions};
use ltlfrag::efgame::certify_indistinguishable;
use ltlfrag::gcma::{build_gcma, fixtures, AnchorTable};
use ltlfrag::looplang::{
    bounded_testability_order, is_locally_testable, Dfa, LoopAnalysis, SwapContext,
    DEFAULT_MAX_SEMIGROUP,
};
use ltlfrag::ltl::{eval, parse, to_nnf, Alphabet, Formula, Fragment, Letter, UPWord};
use ltlfrag::patterns::Relation;
use ltlfrag::quotient::QuotientAutomaton;
use ltlfrag::sample::{random_formula, random_in_fragment};
use ltlfrag::selftest::{anchors_partition, one_lt_agrees};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CORPUS_SEED: u64 = 0x5eed;
const CORPUS_SIZE: usize = 500;
const GAME_DEPTH: usize = 6;

fn report(n: u32, name: &str, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(
        std::io::stderr(),
        "{status} criterion {n}: {name} ({detail})"
    );
    assert!(ok, "criterion {n} failed: {detail}");
}

fn ab() -> Alphabet {
    Alphabet::parse("a,b").unwrap()
}

fn corpus() -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..CORPUS_SIZE)
        .map(|_| random_formula(&mut rng, &ab(), 3))
        .collect()
}

fn options() -> DecideOptions {
    DecideOptions {
        game_depth: GAME_DEPTH,
        ..DecideOptions::default()
    }
}

#[test]
fn criterion_1_release_example() {
    let start = Instant::now();
    let ab = ab();
    let g = build_gcma(&to_nnf(&parse("a R b", &ab).unwrap(), &ab), &ab, 16)
        .unwrap()
        .trim();
    let elapsed = start.elapsed();
    let labels: Vec<&str> = g.states().map(|q| g.label(q)).collect();
    let (a, b) = (Letter(0), Letter(1));
    // states {a}, {b}, {b, a R b}
    let ok = labels == ["{a}", "{b}", "{b, (a R b)}"]
        && g.initial_states() == [2]
        && g.final_sets() == [vec![0, 2]]
        && g.delta_row(a) == [0, 0, 0]
        && g.delta_row(b) == [1, 1, 2]
        && elapsed < Duration::from_secs(1);
    report(
        1,
        "a R b tableau after trimming",
        ok,
        &format!(
            "states {labels:?}, I {:?}, F {:?}, {elapsed:?}",
            g.initial_states(),
            g.final_sets()
        ),
    );
}

#[test]
fn criterion_2_four_state_language() {
    let start = Instant::now();
    let g = fixtures::four_state();
    let words = UPWord::enumerate(g.alphabet(), 4, 3);
    // (a+b)^* b^ω: the canonical period is b
    let mismatches = words
        .iter()
        .filter(|w| g.accepts(w).unwrap() != w.period().iter().all(|&l| l == Letter(1)))
        .count();
    let elapsed = start.elapsed();
    report(
        2,
        "four-state fixture recognizes (a+b)^* b^ω",
        mismatches == 0 && elapsed < Duration::from_secs(1),
        &format!(
            "{} words, {mismatches} mismatches, {elapsed:?}",
            words.len()
        ),
    );
}

#[test]
fn criterion_3_oracle_equivalence() {
    let start = Instant::now();
    let ab = ab();
    let words = UPWord::enumerate(&ab, 3, 3);
    let mut mismatches = Vec::new();
    let corpus = corpus();
    for phi in &corpus {
        let g = build_gcma(&to_nnf(phi, &ab), &ab, 16).unwrap();
        let mut table = AnchorTable::new();
        for w in &words {
            if g.accepts_with(&mut table, w).unwrap() != eval(phi, w) {
                mismatches.push(format!("{} on {}", phi.to_text(&ab), w.to_text(&ab)));
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        3,
        "accepts agrees with eval",
        mismatches.is_empty() && corpus.len() >= 500 && elapsed < Duration::from_secs(60),
        &format!(
            "{} formulas x {} words, {} mismatches {:?}, {elapsed:?}",
            corpus.len(),
            words.len(),
            mismatches.len(),
            mismatches.first()
        ),
    );
}

#[test]
fn criterion_4_anchor_uniqueness() {
    let ab = ab();
    let mut violations = Vec::new();
    for phi in corpus() {
        let g = build_gcma(&to_nnf(&phi, &ab), &ab, 16).unwrap().trim();
        match anchors_partition(&g) {
            Ok(true) => {}
            Ok(false) => violations.push(format!("{}: loop languages overlap", phi.to_text(&ab))),
            Err(e) => violations.push(format!("{}: {e}", phi.to_text(&ab))),
        }
    }
    report(
        4,
        "unique anchors and partition into loop languages (|u| <= 5)",
        violations.is_empty(),
        &format!("{} violations {:?}", violations.len(), violations.first()),
    );
}

#[test]
fn criterion_5_one_lt_cross_validation() {
    let ab = ab();
    let mut disagreements = Vec::new();
    let mut cases = 0;
    for phi in corpus() {
        let g = build_gcma(&to_nnf(&phi, &ab), &ab, 16).unwrap().trim();
        for ctx in [SwapContext::Any, SwapContext::NonEmptyLeft] {
            cases += 1;
            if !one_lt_agrees(&g, ctx).unwrap() {
                disagreements.push(format!("{} ({ctx:?})", phi.to_text(&ab)));
            }
        }
    }
    report(
        5,
        "occurrence-based check agrees with stutter and swap products",
        disagreements.is_empty(),
        &format!(
            "{cases} cases, {} disagreements {:?}",
            disagreements.len(),
            disagreements.first()
        ),
    );
}

#[test]
fn criterion_6_verdict_table() {
    let ab = ab();
    // X, F, SF, XF, U
    let table: [(&str, [bool; 5]); 4] = [
        ("a R b", [false, true, true, true, true]),
        ("X b", [true, false, false, true, false]),
        ("F a", [false, true, true, true, true]),
        ("a", [true, true, true, true, true]),
    ];
    let mut wrong = Vec::new();
    for (text, expected) in table {
        let phi = parse(text, &ab).unwrap();
        let all = decide_all(&phi, &ab, options()).unwrap();
        let got = Fragment::DECIDABLE.map(|f| all[&f].expressible);
        if got != expected {
            wrong.push(format!("{text}: {got:?}"));
        }
        for f in [Fragment::X, Fragment::F, Fragment::SF, Fragment::U] {
            let v = &all[&f];
            if v.expressible {
                continue;
            }
            match &v.witness {
                Some(w) if witness_sound(&phi, w) => {}
                _ => wrong.push(format!("{text} in {f}: missing or unsound witness")),
            }
        }
    }
    report(
        6,
        "verdict regression table",
        wrong.is_empty(),
        &format!("{wrong:?}"),
    );
}

fn witness_sound(phi: &Formula, w: &ltlfrag::patterns::WitnessPair) -> bool {
    let related = match w.relation {
        Relation::StutterEquivalent => w.w1.stutter_equivalent(&w.w2),
        Relation::PrefixKEqual => w.w1.common_prefix_len(&w.w2, w.pump) >= w.pump,
        Relation::OccEqualPumped | Relation::XfPumped => {
            let moves = w.game().unwrap();
            w.pump >= GAME_DEPTH && certify_indistinguishable(&w.w1, &w.w2, &moves, GAME_DEPTH)
        }
    };
    related && eval(phi, &w.w1) != eval(phi, &w.w2)
}

#[test]
fn criterion_7_witness_soundness() {
    let ab = ab();
    let mut failures = Vec::new();
    let mut witnesses = 0;
    for phi in corpus() {
        let all = decide_all(&phi, &ab, options()).unwrap();
        for v in all.values() {
            if let Some(w) = &v.witness {
                witnesses += 1;
                if !witness_sound(&phi, w) {
                    failures.push(format!("{} in {}", phi.to_text(&ab), v.fragment));
                }
            }
        }
    }
    report(
        7,
        "witness pairs separate the formula and are fragment-equivalent",
        failures.is_empty() && witnesses > 0,
        &format!(
            "{witnesses} witnesses, {} failures {:?}",
            failures.len(),
            failures.first()
        ),
    );
}

#[test]
fn criterion_8_soundness_by_syntax() {
    let ab = ab();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED + 8);
    let mut rejected = Vec::new();
    let mut lattice = Vec::new();
    for f in Fragment::DECIDABLE {
        for _ in 0..100 {
            let phi = random_in_fragment(&mut rng, &ab, f, 3);
            match decide_all(&phi, &ab, options()) {
                Ok(all) if all[&f].expressible => {}
                Ok(_) => rejected.push(format!("{} in {f}", phi.to_text(&ab))),
                Err(e) => lattice.push(format!("{}: {e}", phi.to_text(&ab))),
            }
        }
    }
    for phi in corpus() {
        if let Err(e) = decide_all(&phi, &ab, options()) {
            lattice.push(format!("{}: {e}", phi.to_text(&ab)));
        }
    }
    report(
        8,
        "syntactic members are accepted and the lattice holds",
        rejected.is_empty() && lattice.is_empty(),
        &format!("rejected {rejected:?}, lattice errors {lattice:?}"),
    );
}

#[test]
fn criterion_9_local_testability() {
    let ab = ab();
    let phi = parse("a R b", &ab).unwrap();
    let g = build_gcma(&to_nnf(&phi, &ab), &ab, 16).unwrap().trim();
    let qa = QuotientAutomaton::of(&g);
    let loops = LoopAnalysis::new(&g, &qa).unwrap();
    // class 0 loops on words containing a, class 1 on b^+
    let contains_a = &loops.language(0).dfa;
    let b_plus = &loops.language(1).dfa;
    let language_ok = ab.words_up_to(1, 6).iter().all(|u| {
        let rev: Vec<Letter> = u.iter().rev().copied().collect();
        contains_a.accepts(&rev) == u.contains(&Letter(0))
            && b_plus.accepts(&rev) == !u.contains(&Letter(0))
    });
    // (ab)^+: 0 start, 1 after a, 2 after ab, 3 sink
    let ab_plus = Dfa::new(
        2,
        0,
        vec![vec![1, 3], vec![3, 2], vec![1, 3], vec![3, 3]],
        vec![false, false, true, false],
    )
    .unwrap()
    .minimize();
    let lt = |d: &Dfa| is_locally_testable(d, DEFAULT_MAX_SEMIGROUP).unwrap();
    let order = |d: &Dfa| bounded_testability_order(&ab, |w| d.accepts(w), 3, 10);
    let (lt_a, lt_b, lt_ab) = (lt(contains_a), lt(b_plus), lt(&ab_plus));
    let (def_a, def_b, def_ab) = (order(contains_a), order(b_plus), order(&ab_plus));
    let ok = language_ok
        && lt_a
        && lt_b
        && !lt_ab
        && def_a.is_some()
        && def_b.is_some()
        && def_ab.is_none();
    report(
        9,
        "local testability of b^+, words containing a, and (ab)^+",
        ok,
        &format!(
            "semigroup criterion: contains-a {lt_a}, b^+ {lt_b}, (ab)^+ {lt_ab}; \
             bounded definitional order: {def_a:?}, {def_b:?}, {def_ab:?}"
        ),
    );
}
