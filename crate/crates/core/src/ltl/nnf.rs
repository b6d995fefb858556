use super::alphabet::Alphabet;
use super::formula::Formula;

/// Pushes negations down to the atoms and eliminates them.
///
/// A negated letter becomes the disjunction of the remaining letters, so the
/// result contains no `Not` node at all. Over a one-letter alphabet `!a` is
/// `false`.
pub fn to_nnf(formula: &Formula, alphabet: &Alphabet) -> Formula {
    push(formula, false, alphabet)
}

fn push(f: &Formula, negated: bool, ab: &Alphabet) -> Formula {
    use Formula::*;
    match (f, negated) {
        (True, false) | (False, true) => True,
        (True, true) | (False, false) => False,
        (Letter(l), false) => Letter(*l),
        (Letter(l), true) => ab
            .letters()
            .filter(|o| o != l)
            .map(Letter)
            .reduce(Formula::or)
            .unwrap_or(False),
        (Not(g), n) => push(g, !n, ab),
        (And(l, r), false) => Formula::and(push(l, false, ab), push(r, false, ab)),
        (And(l, r), true) => Formula::or(push(l, true, ab), push(r, true, ab)),
        (Or(l, r), false) => Formula::or(push(l, false, ab), push(r, false, ab)),
        (Or(l, r), true) => Formula::and(push(l, true, ab), push(r, true, ab)),
        (Next(g), n) => Formula::next(push(g, n, ab)),
        (Eventually(g), false) => Formula::eventually(push(g, false, ab)),
        (Eventually(g), true) => Formula::always(push(g, true, ab)),
        (Always(g), false) => Formula::always(push(g, false, ab)),
        (Always(g), true) => Formula::eventually(push(g, true, ab)),
        (Until(l, r), false) => Formula::until(push(l, false, ab), push(r, false, ab)),
        (Until(l, r), true) => Formula::release(push(l, true, ab), push(r, true, ab)),
        (Release(l, r), false) => Formula::release(push(l, false, ab), push(r, false, ab)),
        (Release(l, r), true) => Formula::until(push(l, true, ab), push(r, true, ab)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ltl::parse;

    #[test]
    fn dual_rows() {
        let ab = Alphabet::parse("a,b").unwrap();
        let nnf = |s: &str| to_nnf(&parse(s, &ab).unwrap(), &ab);
        assert_eq!(nnf("!F a"), parse("G b", &ab).unwrap());
        assert_eq!(nnf("!(a U b)"), parse("b R a", &ab).unwrap());
        assert_eq!(nnf("F a"), parse("F a", &ab).unwrap());
        assert_eq!(nnf("!!X a"), parse("X a", &ab).unwrap());
        assert_eq!(nnf("!(a R G b)"), parse("b U F a", &ab).unwrap());
    }

    #[test]
    fn letter_expansion_sizes() {
        let abc = Alphabet::parse("a,b,c").unwrap();
        let f = to_nnf(&parse("!a", &abc).unwrap(), &abc);
        assert_eq!(f, parse("b | c", &abc).unwrap());
        let one = Alphabet::parse("a").unwrap();
        assert_eq!(to_nnf(&parse("!a", &one).unwrap(), &one), Formula::False);
    }

    #[test]
    fn temporal_count_preserved() {
        let ab = Alphabet::parse("a,b").unwrap();
        let f = parse("!(X a U !G (b R !a))", &ab).unwrap();
        let g = to_nnf(&f, &ab);
        assert!(g.is_nnf());
        assert_eq!(f.temporal_count(), g.temporal_count());
    }
}
