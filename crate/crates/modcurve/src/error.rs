//! Crate-wide error type.

use std::fmt;

/// Everything that can go wrong across the crate's fallible operations.
///
/// Contract violations in internal helpers panic instead; `Error` is reserved
/// for conditions a caller can trigger with legitimate-looking input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Level N = 0 (or otherwise outside the supported range).
    BadLevel(u64),
    /// An operation that only covers square-free levels was given one that is not.
    NotSquareFree(u64),
    /// A prime parameter was expected but the value is not prime.
    NotPrime(u64),
    /// A Hecke operator T_l was requested for l dividing the level.
    PrimeDividesLevel { ell: u64, level: u64 },
    /// A point count or reduction predicate was asked at a prime of bad reduction.
    BadReductionPrime { p: u64, level: u64 },
    /// Residue degree outside the supported set {1, 3}.
    BadResidueDegree(u64),
    /// Extension degree r < 1 in a finite-field point count.
    BadExtensionDegree(u64),
    /// A square matrix was required.
    NonSquareMatrix { rows: usize, cols: usize },
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// A monic polynomial was required.
    NonMonic,
    /// Degeneracy map endpoints do not satisfy the divisibility contract.
    BadDegeneracy { from: u64, to: u64, t: u64 },
    /// The character-product formula was asked for the trivial character.
    TrivialCharacter,
    /// Hecke decomposition could not separate factors within the probe bound.
    DecompositionUnresolved { level: u64, detail: String },
    /// Two objects attached to different levels were combined.
    LevelMismatch { expected: u64, found: u64 },
    /// A level outside the tracked catalog was requested from the catalog.
    UnknownLevel(u64),
    /// Cache I/O failed in a way that cannot be degraded to a miss.
    Cache(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadLevel(n) => write!(f, "unsupported level N = {n}"),
            Error::NotSquareFree(n) => {
                write!(f, "level N = {n} is not square-free; this formula only covers square-free levels")
            }
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::PrimeDividesLevel { ell, level } => {
                write!(f, "T_{ell} is not available: {ell} divides the level {level}")
            }
            Error::BadReductionPrime { p, level } => {
                write!(f, "p = {p} divides the level {level}: reduction is bad there")
            }
            Error::BadResidueDegree(d) => write!(f, "residue degree {d} not supported (expected 1 or 3)"),
            Error::BadExtensionDegree(r) => write!(f, "extension degree r = {r} must be at least 1"),
            Error::NonSquareMatrix { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            Error::ZeroPolynomial => write!(f, "the zero polynomial has no factorization"),
            Error::NonMonic => write!(f, "a monic polynomial is required"),
            Error::BadDegeneracy { from, to, t } => {
                write!(f, "no degeneracy map for levels {from} -> {to} with divisor t = {t}")
            }
            Error::TrivialCharacter => {
                write!(f, "the character product runs over nontrivial characters only")
            }
            Error::DecompositionUnresolved { level, detail } => {
                write!(f, "decomposition at level {level} failed to separate: {detail}")
            }
            Error::LevelMismatch { expected, found } => {
                write!(f, "level mismatch: expected {expected}, found {found}")
            }
            Error::UnknownLevel(n) => write!(f, "level {n} is not in the tracked catalog"),
            Error::Cache(msg) => write!(f, "cache failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
