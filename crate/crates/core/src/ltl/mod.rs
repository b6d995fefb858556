//! Formulas, ω-words and the reference semantics.

mod alphabet;
mod eval;
mod formula;
mod fragment;
mod nnf;
mod parse;
mod upword;

pub use alphabet::{Alphabet, Letter, Word};
pub use eval::{eval, eval_checked, values};
pub use formula::{DisplayFormula, Formula};
pub use fragment::{Fragment, TemporalOp};
pub use nnf::to_nnf;
pub use parse::parse;
pub use upword::{DisplayUPWord, UPWord};
