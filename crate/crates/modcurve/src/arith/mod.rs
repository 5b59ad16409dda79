//! Exact linear algebra and polynomial arithmetic over Z and Q.
//!
//! Provides the workhorse types for the rest of the crate:
//! [`RationalMatrix`] (reduced row echelon form, kernels, characteristic
//! polynomials), [`IntPolynomial`] and [`RatPoly`] (exact polynomial
//! arithmetic), [`factor_poly`] (complete factorization over Q via
//! squarefree decomposition, Berlekamp factorization mod p, Hensel lifting
//! and subset recombination), Newton power sums, and Sturm-chain real-root
//! localization.

mod factor;
mod matrix;
mod modp;
mod poly;
mod sturm;

pub use factor::{factor_poly, factor_rat_poly, Factorization};
pub use matrix::RationalMatrix;
pub use poly::{power_sums_from_charpoly, IntPolynomial, RatPoly};
pub use sturm::{count_real_roots, count_real_roots_in_symmetric_gap, real_roots_within_sqrt_bound};
