use std::collections::HashSet;
use std::fmt;

use super::alphabet::{Alphabet, Letter};

/// Syntax tree of a future LTL formula whose atoms are alphabet symbols.
///
/// `True`/`False` only arise from negation normal form over tiny alphabets
/// (`!a` over `{a}` is unsatisfiable); the parser accepts them as keywords.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    True,
    False,
    Letter(Letter),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Next(Box<Formula>),
    Eventually(Box<Formula>),
    Always(Box<Formula>),
    Until(Box<Formula>, Box<Formula>),
    Release(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn letter(l: Letter) -> Self {
        Formula::Letter(l)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn next(f: Formula) -> Self {
        Formula::Next(Box::new(f))
    }

    pub fn eventually(f: Formula) -> Self {
        Formula::Eventually(Box::new(f))
    }

    pub fn always(f: Formula) -> Self {
        Formula::Always(Box::new(f))
    }

    /// `X F f`, the strict eventually operator.
    pub fn strictly_eventually(f: Formula) -> Self {
        Formula::next(Formula::eventually(f))
    }

    pub fn until(l: Formula, r: Formula) -> Self {
        Formula::Until(Box::new(l), Box::new(r))
    }

    pub fn release(l: Formula, r: Formula) -> Self {
        Formula::Release(Box::new(l), Box::new(r))
    }

    pub fn children(&self) -> Vec<&Formula> {
        use Formula::*;
        match self {
            True | False | Letter(_) => vec![],
            Not(f) | Next(f) | Eventually(f) | Always(f) => vec![f],
            And(l, r) | Or(l, r) | Until(l, r) | Release(l, r) => vec![l, r],
        }
    }

    pub fn is_temporal(&self) -> bool {
        matches!(
            self,
            Formula::Next(_)
                | Formula::Eventually(_)
                | Formula::Always(_)
                | Formula::Until(..)
                | Formula::Release(..)
        )
    }

    /// Number of temporal operator occurrences in the tree.
    pub fn temporal_count(&self) -> usize {
        self.children()
            .into_iter()
            .map(Formula::temporal_count)
            .sum::<usize>()
            + usize::from(self.is_temporal())
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self
            .children()
            .into_iter()
            .map(Formula::size)
            .sum::<usize>()
    }

    /// Longest chain of nested temporal operators.
    pub fn temporal_depth(&self) -> usize {
        let inner = self
            .children()
            .into_iter()
            .map(Formula::temporal_depth)
            .max()
            .unwrap_or(0);
        inner + usize::from(self.is_temporal())
    }

    pub fn is_nnf(&self) -> bool {
        !matches!(self, Formula::Not(_)) && self.children().into_iter().all(Formula::is_nnf)
    }

    pub fn letters_within(&self, alphabet: &Alphabet) -> bool {
        match self {
            Formula::Letter(l) => alphabet.contains(*l),
            f => f.children().into_iter().all(|c| c.letters_within(alphabet)),
        }
    }

    /// The distinct subformulas in post-order (children before parents,
    /// left before right, first occurrence wins). The formula itself is last.
    pub fn subformulas(&self) -> Vec<Formula> {
        fn walk(f: &Formula, seen: &mut HashSet<Formula>, out: &mut Vec<Formula>) {
            if seen.contains(f) {
                return;
            }
            for c in f.children() {
                walk(c, seen, out);
            }
            seen.insert(f.clone());
            out.push(f.clone());
        }
        let mut out = Vec::new();
        walk(self, &mut HashSet::new(), &mut out);
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayFormula<'a> {
        DisplayFormula {
            formula: self,
            alphabet,
        }
    }

    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        self.display(alphabet).to_string()
    }
}

/// Printer for the canonical, fully parenthesized text form.
///
/// Binary operators are always wrapped in parentheses; unary operators are
/// printed prefix. The output parses back to the same tree.
pub struct DisplayFormula<'a> {
    formula: &'a Formula,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayFormula<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self.formula, self.alphabet, f)
    }
}

fn write_formula(phi: &Formula, ab: &Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    use Formula::*;
    let binary = |f: &mut fmt::Formatter<'_>, l: &Formula, op: &str, r: &Formula| {
        f.write_str("(")?;
        write_formula(l, ab, f)?;
        write!(f, " {op} ")?;
        write_formula(r, ab, f)?;
        f.write_str(")")
    };
    match phi {
        True => f.write_str("true"),
        False => f.write_str("false"),
        Letter(l) => f.write_str(ab.name(*l)),
        Not(g) => {
            f.write_str("!")?;
            write_formula(g, ab, f)
        }
        Next(g) => {
            f.write_str("X ")?;
            write_formula(g, ab, f)
        }
        Eventually(g) => {
            f.write_str("F ")?;
            write_formula(g, ab, f)
        }
        Always(g) => {
            f.write_str("G ")?;
            write_formula(g, ab, f)
        }
        And(l, r) => binary(f, l, "&", r),
        Or(l, r) => binary(f, l, "|", r),
        Until(l, r) => binary(f, l, "U", r),
        Release(l, r) => binary(f, l, "R", r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> (Alphabet, Formula, Formula) {
        let ab = Alphabet::parse("a,b").unwrap();
        (ab, Formula::Letter(Letter(0)), Formula::Letter(Letter(1)))
    }

    #[test]
    fn subformulas_post_order() {
        let (_, a, b) = ab();
        let phi = Formula::release(a.clone(), b.clone());
        assert_eq!(phi.subformulas(), vec![a.clone(), b, phi.clone()]);
        assert_eq!(a.subformulas(), vec![a.clone()]);
        let fa = Formula::eventually(a.clone());
        assert_eq!(fa.subformulas(), vec![a, fa.clone()]);
    }

    #[test]
    fn shared_subterms_counted_once() {
        let (_, a, _) = ab();
        let phi = Formula::and(
            Formula::eventually(a.clone()),
            Formula::eventually(a.clone()),
        );
        assert_eq!(phi.subformulas().len(), 3);
        assert_eq!(phi.temporal_count(), 2);
    }

    #[test]
    fn prints_canonically() {
        let (alpha, a, b) = ab();
        let phi = Formula::not(Formula::until(a.clone(), Formula::next(b)));
        assert_eq!(phi.to_text(&alpha), "!(a U X b)");
        assert_eq!(Formula::always(a).to_text(&alpha), "G a");
    }
}
