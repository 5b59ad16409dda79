//! Exact arithmetic of the modular curves X0(N) and their Jacobians.
//!
//! The crate computes, entirely over exact integers and rationals:
//!
//! - weight-2 modular symbols for Gamma0(N): the quotient space, its cuspidal
//!   subspace, Hecke operators via Heilbronn matrices, degeneracy maps, and
//!   the decomposition of the cuspidal space into simple Hecke modules
//!   ([`modsym`]);
//! - the order of the cuspidal subgroup of J0(N) for square-free N via the
//!   character-product formula ([`cuspidal`]);
//! - nonvanishing flags for the central L-values of the simple factors,
//!   via winding-element projections ([`lvalues`]);
//! - genus, elliptic-point and cusp data, point counts of the reduction over
//!   finite fields, square-root reduction bounds, and gonality certificates
//!   ([`geometry`]);
//! - an assembled elimination criterion for (N, p) torsion levels, with
//!   reproducible reports, a level catalog, result tables and an on-disk
//!   cache ([`pipeline`]).
//!
//! Supporting exact linear algebra (reduced row echelon form, kernels,
//! characteristic polynomials) and polynomial arithmetic (factorization over
//! Q, Newton power sums, Sturm chains) live in [`arith`].

pub mod arith;
pub mod cuspidal;
pub mod error;
pub mod geometry;
pub mod lvalues;
pub mod modsym;
pub mod numutil;
pub mod pipeline;

pub use error::Error;

/// Arbitrary-precision integer used throughout the crate.
pub use num_bigint::BigInt;

/// Arbitrary-precision rational used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
