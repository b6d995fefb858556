//! Random formulas for property suites, either unrestricted or built only
//! from the operators of one fragment.

use rand::Rng;

use crate::ltl::{Alphabet, Formula, Fragment, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    X,
    F,
    G,
    /// `X F`
    SF,
    /// `X G`, the dual of `SF`
    SG,
    U,
    R,
}

fn ops_for(fragment: Option<Fragment>) -> &'static [Op] {
    match fragment {
        None | Some(Fragment::Full) => &[Op::X, Op::F, Op::G, Op::U, Op::R],
        Some(Fragment::X) => &[Op::X],
        Some(Fragment::F) => &[Op::F, Op::G],
        Some(Fragment::SF) => &[Op::SF, Op::SG],
        Some(Fragment::XF) => &[Op::X, Op::F, Op::G],
        Some(Fragment::U) => &[Op::U, Op::R, Op::F, Op::G],
    }
}

fn letter<R: Rng>(rng: &mut R, alphabet: &Alphabet) -> Formula {
    Formula::letter(Letter(rng.gen_range(0..alphabet.len()) as u16))
}

/// A formula with at most `temporal` temporal operators and at most
/// `size` nodes.
fn gen<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    ops: &[Op],
    temporal: usize,
    size: usize,
) -> Formula {
    if size <= 1 {
        return letter(rng, alphabet);
    }
    let roll = rng.gen_range(0..10);
    if temporal > 0 && roll < 5 {
        let op = ops[rng.gen_range(0..ops.len())];
        let t = temporal - 1;
        return match op {
            Op::X => Formula::next(gen(rng, alphabet, ops, t, size - 1)),
            Op::F => Formula::eventually(gen(rng, alphabet, ops, t, size - 1)),
            Op::G => Formula::always(gen(rng, alphabet, ops, t, size - 1)),
            Op::SF => Formula::strictly_eventually(gen(rng, alphabet, ops, t, size - 1)),
            Op::SG => Formula::next(Formula::always(gen(rng, alphabet, ops, t, size - 1))),
            Op::U | Op::R => {
                let split = rng.gen_range(0..=t);
                let l = gen(rng, alphabet, ops, split, (size - 1) / 2);
                let r = gen(rng, alphabet, ops, t - split, (size - 1) / 2);
                if op == Op::U {
                    Formula::until(l, r)
                } else {
                    Formula::release(l, r)
                }
            }
        };
    }
    match roll {
        0..=5 if size >= 3 => {
            let split = rng.gen_range(0..=temporal);
            let l = gen(rng, alphabet, ops, split, (size - 1) / 2);
            let r = gen(rng, alphabet, ops, temporal - split, (size - 1) / 2);
            if rng.gen_bool(0.5) {
                Formula::and(l, r)
            } else {
                Formula::or(l, r)
            }
        }
        6 | 7 => Formula::not(gen(rng, alphabet, ops, temporal, size - 1)),
        _ => letter(rng, alphabet),
    }
}

/// An arbitrary formula with at most `temporal` temporal operators.
pub fn random_formula<R: Rng>(rng: &mut R, alphabet: &Alphabet, temporal: usize) -> Formula {
    gen(rng, alphabet, ops_for(None), temporal, 4 * temporal + 5)
}

/// A formula that lies syntactically inside `fragment`.
pub fn random_in_fragment<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    fragment: Fragment,
    temporal: usize,
) -> Formula {
    gen(
        rng,
        alphabet,
        ops_for(Some(fragment)),
        temporal,
        4 * temporal + 5,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ops_used(f: &Formula, out: &mut Vec<&'static str>) {
        let name = match f {
            Formula::Next(_) => Some("X"),
            Formula::Eventually(_) => Some("F"),
            Formula::Always(_) => Some("G"),
            Formula::Until(..) => Some("U"),
            Formula::Release(..) => Some("R"),
            _ => None,
        };
        out.extend(name);
        for c in f.children() {
            ops_used(c, out);
        }
    }

    #[test]
    fn fragments_respect_their_operators() {
        let ab = Alphabet::parse("a,b").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mut ops = Vec::new();
            ops_used(&random_in_fragment(&mut rng, &ab, Fragment::F, 3), &mut ops);
            assert!(ops.iter().all(|o| ["F", "G"].contains(o)));
            let f = random_in_fragment(&mut rng, &ab, Fragment::SF, 3);
            let mut ops = Vec::new();
            ops_used(&f, &mut ops);
            assert!(ops.iter().all(|o| ["X", "F", "G"].contains(o)));
            assert!(f.temporal_count() <= 6);
            let g = random_formula(&mut rng, &ab, 3);
            assert!(g.temporal_count() <= 3);
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let ab = Alphabet::parse("a,b").unwrap();
        let a = random_formula(&mut ChaCha8Rng::seed_from_u64(1), &ab, 3);
        let b = random_formula(&mut ChaCha8Rng::seed_from_u64(1), &ab, 3);
        assert_eq!(a, b);
    }
}
