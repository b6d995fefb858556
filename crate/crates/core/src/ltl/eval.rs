//! Direct semantic evaluation on lassos.
//!
//! Every subformula is evaluated at each lasso position; `U`/`F` are least
//! fixpoints and `R`/`G` greatest fixpoints of their one-step unfoldings.
//! This module deliberately shares nothing with the automaton construction
//! so it can serve as an oracle for it.

use super::alphabet::Alphabet;
use super::formula::Formula;
use super::upword::UPWord;
use crate::error::{Error, Result};

/// Whether `word ⊨ formula`.
pub fn eval(formula: &Formula, word: &UPWord) -> bool {
    values(formula, word)[0]
}

/// [`eval`] with an alphabet check on both arguments.
pub fn eval_checked(alphabet: &Alphabet, formula: &Formula, word: &UPWord) -> Result<bool> {
    if !formula.letters_within(alphabet) || !word.letters_within(alphabet) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(eval(formula, word))
}

/// Truth value of `formula` at every lasso position of `word`.
pub fn values(formula: &Formula, word: &UPWord) -> Vec<bool> {
    use Formula::*;
    let n = word.lasso_len();
    match formula {
        True => vec![true; n],
        False => vec![false; n],
        Letter(l) => (0..n).map(|p| word.at(p) == *l).collect(),
        Not(f) => values(f, word).into_iter().map(|v| !v).collect(),
        And(l, r) => zip(values(l, word), values(r, word), |a, b| a && b),
        Or(l, r) => zip(values(l, word), values(r, word), |a, b| a || b),
        Next(f) => {
            let v = values(f, word);
            (0..n).map(|p| v[word.succ(p)]).collect()
        }
        Eventually(f) => until(&vec![true; n], &values(f, word), word),
        Always(f) => release(&vec![false; n], &values(f, word), word),
        Until(l, r) => until(&values(l, word), &values(r, word), word),
        Release(l, r) => release(&values(l, word), &values(r, word), word),
    }
}

fn zip(a: Vec<bool>, b: Vec<bool>, op: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| op(x, y)).collect()
}

/// Least solution of `u(p) = r(p) ∨ (l(p) ∧ u(succ p))`.
fn until(l: &[bool], r: &[bool], word: &UPWord) -> Vec<bool> {
    fixpoint(false, word, |p, next| r[p] || (l[p] && next))
}

/// Greatest solution of `v(p) = r(p) ∧ (l(p) ∨ v(succ p))`.
fn release(l: &[bool], r: &[bool], word: &UPWord) -> Vec<bool> {
    fixpoint(true, word, |p, next| r[p] && (l[p] || next))
}

fn fixpoint(init: bool, word: &UPWord, step: impl Fn(usize, bool) -> bool) -> Vec<bool> {
    let n = word.lasso_len();
    let mut v = vec![init; n];
    loop {
        let mut changed = false;
        for p in (0..n).rev() {
            let nv = step(p, v[word.succ(p)]);
            if nv != v[p] {
                v[p] = nv;
                changed = true;
            }
        }
        if !changed {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ltl::{parse, to_nnf};

    fn check(f: &str, w: &str) -> bool {
        let ab = Alphabet::parse("a,b").unwrap();
        eval(&parse(f, &ab).unwrap(), &UPWord::parse(w, &ab).unwrap())
    }

    #[test]
    fn basic_examples() {
        assert!(check("a R b", "(b)"));
        assert!(!check("a R b", "(ab)"));
        assert!(check("X b", "ab(b)"));
        assert!(!check("X b", "aab(b)"));
        assert!(!check("F a", "(b)"));
        assert!(check("G F a", "bbb(ab)"));
        assert!(!check("F G a", "(ab)"));
        assert!(check("b U a", "bb(a)"));
        assert!(!check("b U a", "(b)"));
    }

    #[test]
    fn next_only_formulas_look_at_a_prefix() {
        // X X a depends only on the first three letters
        let ab = Alphabet::parse("a,b").unwrap();
        let f = parse("X X a & !X b", &ab).unwrap();
        for u in UPWord::enumerate(&ab, 3, 3) {
            let p = u.take(3);
            let v = UPWord::new(p, vec![crate::ltl::Letter(1)]).unwrap();
            assert_eq!(eval(&f, &u), eval(&f, &v));
        }
    }

    #[test]
    fn dualities_and_nnf() {
        let ab = Alphabet::parse("a,b").unwrap();
        let pairs = [
            ("!F a", "G !a"),
            ("!(a U X b)", "!a R !X b"),
            ("!G b", "F !b"),
        ];
        for u in UPWord::enumerate(&ab, 3, 3) {
            for (l, r) in pairs {
                let lf = parse(l, &ab).unwrap();
                assert_eq!(eval(&lf, &u), eval(&parse(r, &ab).unwrap(), &u));
                assert_eq!(eval(&lf, &u), eval(&to_nnf(&lf, &ab), &u));
            }
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let ab = Alphabet::parse("a,b").unwrap();
        let abc = Alphabet::parse("a,b,c").unwrap();
        let f = parse("F c", &abc).unwrap();
        let w = UPWord::parse("(a)", &ab).unwrap();
        assert_eq!(eval_checked(&ab, &f, &w), Err(Error::AlphabetMismatch));
    }
}
