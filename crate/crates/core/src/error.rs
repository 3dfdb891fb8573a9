use std::fmt;

/// Errors surfaced by this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex index outside `1..=n`.
    VertexOutOfRange { index: usize, n: usize },
    /// A bit pattern with two adjacent vertices, so not an independent set.
    NotIndependent(String),
    /// A subset of zigzag elements that is not downward closed.
    NotAnIdeal(String),
    /// A word that was required to use every toggle exactly once but does not.
    NotAPermutation(String),
    /// `n` exceeds the configured enumeration limit.
    Capacity { n: usize, max: usize },
    /// `n` below the smallest supported path graph (two vertices).
    TooSmall { n: usize },
    /// Malformed textual input (independent sets, words, statistics, compositions).
    Parse(String),
    /// An orbit board that does not decompose into snakes, i.e. was not
    /// generated by the left-to-right toggle sweep.
    NotSweepBoard(String),
    /// Conjugation by a toggle that is neither initial nor final in the word.
    NotInitialOrFinal { index: usize },
    /// The conjugation walk exceeded its step bound; should be unreachable.
    ConjugationBound { steps: usize },
    /// Integer overflow in a counting formula.
    Overflow(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { index, n } => {
                write!(f, "vertex index {index} out of range 1..={n}")
            }
            Error::NotIndependent(s) => write!(f, "{s} contains adjacent vertices"),
            Error::NotAnIdeal(s) => write!(f, "{s} is not downward closed"),
            Error::NotAPermutation(s) => {
                write!(f, "word {s} does not use every toggle exactly once")
            }
            Error::Capacity { n, max } => {
                write!(f, "n = {n} exceeds the enumeration limit {max}")
            }
            Error::TooSmall { n } => write!(f, "n = {n} is below the minimum of 2"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NotSweepBoard(msg) => {
                write!(f, "board does not decompose into snakes: {msg}")
            }
            Error::NotInitialOrFinal { index } => {
                write!(f, "toggle {index} is neither initial nor final; conjugation would leave the set of Coxeter elements")
            }
            Error::ConjugationBound { steps } => {
                write!(f, "conjugation walk did not terminate within {steps} steps")
            }
            Error::Overflow(what) => write!(f, "integer overflow computing {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
