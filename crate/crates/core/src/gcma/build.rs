//! Tableau construction: states are all subsets of the subformula closure.

use super::Gcma;
use crate::error::{Error, Result};
use crate::ltl::{Alphabet, Formula};

/// Default cap on the number of subformulas.
pub const DEFAULT_MAX_SUB: usize = 16;

/// Hard limit independent of the configured cap; beyond it the powerset no
/// longer fits in memory.
const HARD_MAX_SUB: usize = 24;

/// Builds the (untrimmed) tableau automaton of an NNF formula.
///
/// For a state `Φ` and a letter `a`, `a·Φ` is the set of subformulas that
/// hold at a position carrying `a` when `Φ` holds at the next position.
pub fn build_gcma(formula: &Formula, alphabet: &Alphabet, max_sub: usize) -> Result<Gcma> {
    if !formula.is_nnf() {
        return Err(Error::NotNnf);
    }
    if !formula.letters_within(alphabet) {
        return Err(Error::AlphabetMismatch);
    }
    let subs = formula.subformulas();
    let n = subs.len();
    let limit = max_sub.min(HARD_MAX_SUB);
    if n > limit {
        return Err(Error::SizeGuard {
            what: "subformula count",
            actual: n,
            limit,
        });
    }
    let index = |f: &Formula| {
        subs.iter()
            .position(|g| g == f)
            .expect("closed under children")
    };

    use Formula::*;
    // child indices per subformula
    let kids: Vec<(usize, usize)> = subs
        .iter()
        .map(|f| match f {
            Next(g) | Eventually(g) | Always(g) => (index(g), 0),
            And(l, r) | Or(l, r) | Until(l, r) | Release(l, r) => (index(l), index(r)),
            _ => (0, 0),
        })
        .collect();

    let states = 1usize << n;
    let root = n - 1;
    let delta = alphabet
        .letters()
        .map(|a| {
            (0..states)
                .map(|phi| {
                    let phi = phi as u64;
                    let has = |i: usize| phi >> i & 1 == 1;
                    let mut psi = 0u64;
                    for (i, f) in subs.iter().enumerate() {
                        let (l, r) = kids[i];
                        let got = |j: usize| psi >> j & 1 == 1;
                        let holds = match f {
                            True => true,
                            False => false,
                            Letter(b) => *b == a,
                            Not(_) => unreachable!("formula is in NNF"),
                            And(..) => got(l) && got(r),
                            Or(..) => got(l) || got(r),
                            Next(_) => has(l),
                            Eventually(_) => got(l) || has(i),
                            Always(_) => got(l) && has(i),
                            Until(..) => got(r) || (got(l) && has(i)),
                            Release(..) => got(r) && (got(l) || has(i)),
                        };
                        if holds {
                            psi |= 1 << i;
                        }
                    }
                    psi as usize
                })
                .collect()
        })
        .collect();

    let initial = (0..states).map(|phi| phi >> root & 1 == 1).collect();
    let final_sets = subs
        .iter()
        .enumerate()
        .filter_map(|(i, f)| {
            let (l, r) = kids[i];
            let cond: Box<dyn Fn(usize) -> bool> = match f {
                Eventually(_) => Box::new(move |s| s >> l & 1 == 1 || s >> i & 1 == 0),
                Always(_) => Box::new(move |s| s >> i & 1 == 1 || s >> l & 1 == 0),
                Until(..) => Box::new(move |s| s >> r & 1 == 1 || s >> i & 1 == 0),
                Release(..) => Box::new(move |s| s >> i & 1 == 1 || s >> r & 1 == 0),
                _ => return None,
            };
            Some((0..states).map(cond).collect())
        })
        .collect();

    let labels = (0..states)
        .map(|s| subset_label(s as u64, &subs, alphabet))
        .collect();

    Ok(Gcma {
        alphabet: alphabet.clone(),
        labels,
        subsets: (0..states as u64).collect(),
        subformulas: subs,
        initial,
        delta,
        final_sets,
    })
}

pub(super) fn subset_label(bits: u64, subs: &[Formula], alphabet: &Alphabet) -> String {
    if bits == 0 {
        return "∅".to_string();
    }
    let parts: Vec<String> = subs
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, f)| f.to_text(alphabet))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ltl::{parse, to_nnf, Letter, UPWord};

    fn build(f: &str) -> Gcma {
        let ab = Alphabet::parse("a,b").unwrap();
        let f = to_nnf(&parse(f, &ab).unwrap(), &ab);
        build_gcma(&f, &ab, DEFAULT_MAX_SUB).unwrap()
    }

    fn state(g: &Gcma, label: &str) -> usize {
        g.states()
            .find(|&q| g.label(q) == label)
            .unwrap_or_else(|| panic!("no state {label}"))
    }

    #[test]
    fn release_example_after_trim() {
        let g = build("a R b").trim();
        let labels: Vec<&str> = g.states().map(|q| g.label(q)).collect();
        assert_eq!(labels, vec!["{a}", "{b}", "{b, (a R b)}"]);
        let (sa, sb, sr) = (
            state(&g, "{a}"),
            state(&g, "{b}"),
            state(&g, "{b, (a R b)}"),
        );
        assert_eq!(g.initial_states(), vec![sr]);
        assert_eq!(g.final_sets(), vec![vec![sa, sr]]);
        for q in g.states() {
            assert_eq!(g.step(Letter(0), q), sa);
        }
        assert_eq!(g.step(Letter(1), sa), sb);
        assert_eq!(g.step(Letter(1), sb), sb);
        assert_eq!(g.step(Letter(1), sr), sr);
    }

    #[test]
    fn eventually_example_after_trim() {
        let g = build("F a").trim();
        let labels: Vec<&str> = g.states().map(|q| g.label(q)).collect();
        assert_eq!(labels, vec!["∅", "{F a}", "{a, F a}"]);
        assert_eq!(g.initial_states(), vec![1, 2]);
        assert_eq!(g.final_sets(), vec![vec![0, 2]]);
        for q in g.states() {
            assert_eq!(g.step(Letter(0), q), 2);
        }
        assert_eq!(g.step(Letter(1), 0), 0);
        assert_eq!(g.step(Letter(1), 1), 1);
        assert_eq!(g.step(Letter(1), 2), 1);
    }

    #[test]
    fn letter_formula_has_no_final_sets() {
        let g = build("a");
        assert_eq!(g.num_final_sets(), 0);
        assert_eq!(g.num_states(), 2);
        assert_eq!(g.initial_states(), vec![1]);
    }

    #[test]
    fn conflicting_letters_have_empty_language() {
        let g = build("a & b").trim();
        assert!(g.has_empty_language());
        assert!(g.num_states() > 0);
    }

    #[test]
    fn run_states_are_satisfied_subformulas() {
        let ab = Alphabet::parse("a,b").unwrap();
        for text in ["a U X b", "G F a", "F (a & X G b)", "(a R X b) | G a"] {
            let f = to_nnf(&parse(text, &ab).unwrap(), &ab);
            let g = build_gcma(&f, &ab, DEFAULT_MAX_SUB).unwrap().trim();
            for w in UPWord::enumerate(&ab, 2, 3) {
                let run = g.final_run_prefix(&w, w.lasso_len()).unwrap();
                for (i, &q) in run.iter().enumerate() {
                    for sub in g.subformulas() {
                        let holds = crate::ltl::eval(sub, &w.suffix(i));
                        assert_eq!(
                            g.state_contains(q, sub),
                            Some(holds),
                            "{text} on {w:?} at {i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn guards() {
        let ab = Alphabet::parse("a,b").unwrap();
        let f = parse("!a", &ab).unwrap();
        assert_eq!(build_gcma(&f, &ab, 16), Err(Error::NotNnf));
        let big = parse("X X X X X X X X X a", &ab).unwrap();
        assert!(matches!(
            build_gcma(&big, &ab, 4),
            Err(Error::SizeGuard { .. })
        ));
    }
}
