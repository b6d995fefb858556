//! Ehrenfeucht–Fraïssé games on pairs of ultimately periodic words.
//!
//! A configuration is a pair of suffixes. Before every round the first
//! letters are compared; a mismatch is a win for Spoiler. In an `X` round both
//! words lose their first letter. In an `F` round Spoiler removes a finite
//! (possibly empty) prefix from one word and Duplicator answers by doing the
//! same on the other; `SF` rounds remove nonempty prefixes.
//!
//! Suffixes of `x·y^ω` are determined by their lasso position, so each game
//! is solved exactly by a table over `|x1 y1| · |x2 y2|` position pairs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ltl::{Alphabet, Fragment, UPWord};

/// A kind of game round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Move {
    X,
    F,
    SF,
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "X" => Ok(Move::X),
            "F" => Ok(Move::F),
            "SF" => Ok(Move::SF),
            other => Err(Error::UnknownOperator(other.to_string())),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::X => "X",
            Move::F => "F",
            Move::SF => "SF",
        })
    }
}

/// The rounds Spoiler may play.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Moves(BTreeSet<Move>);

impl Moves {
    pub fn new(moves: impl IntoIterator<Item = Move>) -> Result<Moves> {
        let set: BTreeSet<Move> = moves.into_iter().collect();
        if set.is_empty() {
            return Err(Error::UnsupportedFragment("game without moves".into()));
        }
        Ok(Moves(set))
    }

    /// Parses a comma separated list such as `X,F`.
    pub fn parse(text: &str) -> Result<Moves> {
        Moves::new(
            text.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(str::parse)
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// The game matching a fragment; `None` for `U` and full LTL, which have
    /// no game here.
    pub fn for_fragment(fragment: Fragment) -> Option<Moves> {
        let m = match fragment {
            Fragment::X => vec![Move::X],
            Fragment::F => vec![Move::F],
            Fragment::SF => vec![Move::SF],
            Fragment::XF => vec![Move::X, Move::F],
            Fragment::U | Fragment::Full => return None,
        };
        Some(Moves(m.into_iter().collect()))
    }

    pub fn contains(&self, m: Move) -> bool {
        self.0.contains(&m)
    }

    pub fn iter(&self) -> impl Iterator<Item = Move> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Moves {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Solved game tables for one pair of words.
#[derive(Clone, Debug)]
pub struct Game {
    w: [UPWord; 2],
    moves: Moves,
    /// `wins[k][i * n2 + j]`: Spoiler wins from `(i, j)` within `k` rounds.
    wins: Vec<Vec<bool>>,
}

impl Game {
    /// Solves the game up to `rounds` rounds.
    pub fn solve(u: &UPWord, v: &UPWord, moves: &Moves, rounds: usize) -> Game {
        let (n1, n2) = (u.lasso_len(), v.lasso_len());
        let idx = |i: usize, j: usize| i * n2 + j;
        let base: Vec<bool> = (0..n1)
            .flat_map(|i| (0..n2).map(move |j| (i, j)))
            .map(|(i, j)| u.at(i) != v.at(j))
            .collect();
        let mut wins = vec![base.clone()];
        for _ in 0..rounds {
            let prev = wins.last().expect("nonempty");
            let mut next = base.clone();
            if moves.contains(Move::X) {
                for i in 0..n1 {
                    for j in 0..n2 {
                        next[idx(i, j)] |= prev[idx(u.succ(i), v.succ(j))];
                    }
                }
            }
            for (m, strict) in [(Move::F, false), (Move::SF, true)] {
                if moves.contains(m) {
                    let e = eventually_round(prev, u, v, strict);
                    for (n, w) in next.iter_mut().zip(e) {
                        *n |= w;
                    }
                }
            }
            let done = next == *prev;
            wins.push(next);
            if done {
                // stable: further rounds change nothing
                break;
            }
        }
        Game {
            w: [u.clone(), v.clone()],
            moves: moves.clone(),
            wins,
        }
    }

    fn n2(&self) -> usize {
        self.w[1].lasso_len()
    }

    /// Spoiler wins from `(i, j)` within `k` rounds.
    pub fn wins_at(&self, i: usize, j: usize, k: usize) -> bool {
        let k = k.min(self.wins.len() - 1);
        self.wins[k][i * self.n2() + j]
    }

    /// Minimum number of rounds Spoiler needs from `(i, j)`, if within the
    /// solved depth.
    pub fn rank(&self, i: usize, j: usize) -> Option<usize> {
        (0..self.wins.len()).find(|&k| self.wins[k][i * self.n2() + j])
    }

    /// A play of the game from the initial configuration. Spoiler uses a
    /// fastest winning move, Duplicator an answer that delays the loss the
    /// longest. Empty when Duplicator wins.
    pub fn trace(&self, rounds: usize) -> Vec<TraceStep> {
        let mut steps = Vec::new();
        let (mut i, mut j) = (0, 0);
        let Some(mut r) = self.rank(i, j).filter(|&r| r <= rounds) else {
            return steps;
        };
        while r > 0 {
            let step = self.best_move(i, j, r);
            i = step.after.0;
            j = step.after.1;
            steps.push(step);
            r = self.rank(i, j).expect("winning line");
        }
        steps
    }

    fn best_move(&self, i: usize, j: usize, r: usize) -> TraceStep {
        let (u, v) = (&self.w[0], &self.w[1]);
        let won = |a: usize, b: usize| self.wins_at(a, b, r - 1);
        let rank = |a: usize, b: usize| self.rank(a, b).unwrap_or(usize::MAX);
        for m in self.moves.iter() {
            match m {
                Move::X => {
                    if won(u.succ(i), v.succ(j)) {
                        return TraceStep {
                            round: 0,
                            kind: m,
                            spoiler_word: 1,
                            spoiler_pos: u.succ(i),
                            duplicator_pos: v.succ(j),
                            after: (u.succ(i), v.succ(j)),
                        };
                    }
                }
                Move::F | Move::SF => {
                    let strict = m == Move::SF;
                    let r1 = reach(u, i, strict);
                    let r2 = reach(v, j, strict);
                    for &a in &r1 {
                        if r2.iter().all(|&b| won(a, b)) {
                            let b = *r2.iter().max_by_key(|&&b| rank(a, b)).expect("nonempty");
                            return TraceStep {
                                round: 0,
                                kind: m,
                                spoiler_word: 1,
                                spoiler_pos: a,
                                duplicator_pos: b,
                                after: (a, b),
                            };
                        }
                    }
                    for &b in &r2 {
                        if r1.iter().all(|&a| won(a, b)) {
                            let a = *r1.iter().max_by_key(|&&a| rank(a, b)).expect("nonempty");
                            return TraceStep {
                                round: 0,
                                kind: m,
                                spoiler_word: 2,
                                spoiler_pos: b,
                                duplicator_pos: a,
                                after: (a, b),
                            };
                        }
                    }
                }
            }
        }
        unreachable!("position {i},{j} is winning in {r} rounds")
    }
}

/// Lasso positions reachable by an (strict) eventually move from `i`.
fn reach(w: &UPWord, i: usize, strict: bool) -> Vec<usize> {
    let start = reach_start(w, i, strict);
    (start..w.lasso_len()).collect()
}

/// Reachable positions always form the range `start..lasso_len`.
fn reach_start(w: &UPWord, i: usize, strict: bool) -> usize {
    let x = w.prefix().len();
    if i >= x {
        x
    } else if strict {
        i + 1
    } else {
        i
    }
}

/// One `F`/`SF` round on top of table `prev`, in `O(n1·n2)`.
fn eventually_round(prev: &[bool], u: &UPWord, v: &UPWord, strict: bool) -> Vec<bool> {
    let (n1, n2) = (u.lasso_len(), v.lasso_len());
    let at = |i: usize, j: usize| prev[i * n2 + j];
    // all_v[i][t]: Spoiler wins at (i, b) for every b >= t
    let mut all_v = vec![true; n1 * (n2 + 1)];
    for i in 0..n1 {
        for t in (0..n2).rev() {
            all_v[i * (n2 + 1) + t] = all_v[i * (n2 + 1) + t + 1] && at(i, t);
        }
    }
    // all_u[t][j]: Spoiler wins at (a, j) for every a >= t
    let mut all_u = vec![true; (n1 + 1) * n2];
    for t in (0..n1).rev() {
        for j in 0..n2 {
            all_u[t * n2 + j] = all_u[(t + 1) * n2 + j] && at(t, j);
        }
    }
    let s1: Vec<usize> = (0..n1).map(|i| reach_start(u, i, strict)).collect();
    let s2: Vec<usize> = (0..n2).map(|j| reach_start(v, j, strict)).collect();
    // Spoiler moves in u: some a >= s1(i) with all_v[a][s2(j)]
    let mut any_u = vec![false; (n1 + 1) * n2];
    for t in (0..n1).rev() {
        for j in 0..n2 {
            any_u[t * n2 + j] = any_u[(t + 1) * n2 + j] || all_v[t * (n2 + 1) + s2[j]];
        }
    }
    // Spoiler moves in v: some b >= s2(j) with all_u[s1(i)][b]
    let mut any_v = vec![false; n1 * (n2 + 1)];
    for i in 0..n1 {
        for t in (0..n2).rev() {
            any_v[i * (n2 + 1) + t] = any_v[i * (n2 + 1) + t + 1] || all_u[s1[i] * n2 + t];
        }
    }
    (0..n1)
        .flat_map(|i| (0..n2).map(move |j| (i, j)))
        .map(|(i, j)| any_u[s1[i] * n2 + j] || any_v[i * (n2 + 1) + s2[j]])
        .collect()
}

/// One round of a play.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// 1-based round number.
    pub round: usize,
    pub kind: Move,
    /// Word Spoiler moved in (1 or 2).
    pub spoiler_word: u8,
    /// Lasso position Spoiler chose.
    pub spoiler_pos: usize,
    /// Lasso position of Duplicator's answer.
    pub duplicator_pos: usize,
    /// Configuration after the round: lasso positions in word 1 and word 2.
    pub after: (usize, usize),
}

/// Whether Spoiler wins the `k`-round game on `u` and `v`.
pub fn spoiler_wins(u: &UPWord, v: &UPWord, moves: &Moves, k: usize) -> bool {
    Game::solve(u, v, moves, k).wins_at(0, 0, k)
}

/// Whether Duplicator survives `k` rounds.
pub fn certify_indistinguishable(u: &UPWord, v: &UPWord, moves: &Moves, k: usize) -> bool {
    !spoiler_wins(u, v, moves, k)
}

/// Result of a solved game, as reported by the command line tool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameReport {
    pub w1: String,
    pub w2: String,
    pub moves: String,
    pub rounds: usize,
    pub spoiler_wins: bool,
    /// Minimum number of rounds Spoiler needs, when at most `rounds`.
    pub rounds_needed: Option<usize>,
    pub trace: Vec<TraceStep>,
}

pub fn report(alphabet: &Alphabet, u: &UPWord, v: &UPWord, moves: &Moves, k: usize) -> GameReport {
    let game = Game::solve(u, v, moves, k);
    let rank = game.rank(0, 0).filter(|&r| r <= k);
    let mut trace = game.trace(k);
    for (n, s) in trace.iter_mut().enumerate() {
        s.round = n + 1;
    }
    GameReport {
        w1: u.to_text(alphabet),
        w2: v.to_text(alphabet),
        moves: moves.to_string(),
        rounds: k,
        spoiler_wins: rank.is_some(),
        rounds_needed: rank,
        trace,
    }
}
