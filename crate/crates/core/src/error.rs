use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("formula and word use letters outside the alphabet")]
    AlphabetMismatch,

    #[error("invalid ultimately periodic word: {0}")]
    InvalidWord(String),

    #[error("unknown temporal operator `{0}`")]
    UnknownOperator(String),

    #[error("unsupported fragment {0}: no decision procedure for this operator set")]
    UnsupportedFragment(String),

    #[error("formula is not in negation normal form")]
    NotNnf,

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("malformed automaton: {0}")]
    MalformedAutomaton(String),

    /// Zero or several states pass the loop test for a word. This falsifies the
    /// Carton-Michel property of the automaton.
    #[error("anchor invariant violated for word {word:?}: {candidates} candidate states")]
    AnchorViolation { word: Vec<usize>, candidates: usize },

    #[error("witness synthesis failed: {0}")]
    Witness(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
