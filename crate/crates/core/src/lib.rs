//! Decide whether the language of a future-LTL formula is expressible in a
//! fragment built from a subset of the temporal operators `X`, `F`, `SF`
//! (strict eventually) and `U`.
//!
//! The pipeline builds the formula's reverse-deterministic tableau automaton,
//! trims it, computes its left quotient and checks forbidden patterns and
//! properties of loop languages on it.

pub mod decider;
pub mod efgame;
pub mod error;
pub mod gcma;
pub mod graph;
pub mod looplang;
pub mod ltl;
pub mod patterns;
pub mod quotient;
pub mod sample;
pub mod selftest;

pub use decider::{decide, decide_all, Analysis, DecideOptions, Verdict};
pub use error::{Error, Result};
pub use gcma::{build_gcma, AnchorTable, Gcma};
pub use ltl::{Alphabet, Formula, Fragment, Letter, UPWord, Word};
