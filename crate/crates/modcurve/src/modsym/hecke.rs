//! Hecke operators on the symbol space, realized by summing the right
//! action of an explicit family of integer matrices of determinant `ell`,
//! together with the star involution and restriction to the boundary
//! kernel.

use super::space::SymbolSpace;
use crate::arith::RationalMatrix;
use crate::numutil::is_prime;
use crate::{Error, Rational, Result};
use num_traits::One;

/// The standard determinant-`ell` family: matrices `[[a, b], [c, d]]` with
/// `a > b >= 0`, `d > c >= 0` and `ad - bc = ell`. Requires `ell` prime.
pub fn heilbronn_matrices(ell: u64) -> Result<Vec<[i64; 4]>> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let ell = ell as i64;
    let mut out = Vec::new();
    for a in 1..=ell {
        for d in 1..=ell {
            if a * d < ell {
                continue;
            }
            for b in 0..a {
                if b == 0 {
                    if a * d == ell {
                        for c in 0..d {
                            out.push([a, 0, c, d]);
                        }
                    }
                } else {
                    let num = a * d - ell;
                    if num % b == 0 {
                        let c = num / b;
                        if c < d {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The Hecke operator at `ell` on generator coordinates: column `i` is the
/// sum over the family of the classes `(c, d) . M`. Requires `ell` prime
/// and coprime to the level (so every translate is a valid class).
pub fn hecke_on_generators(space: &SymbolSpace, ell: u64) -> Result<RationalMatrix> {
    if space.level() % ell == 0 {
        return Err(Error::PrimeDividesLevel { ell, level: space.level() });
    }
    let family = heilbronn_matrices(ell)?;
    let p1 = space.p1();
    let n = p1.size();
    let mut t = RationalMatrix::zero(n, n);
    for i in 0..n {
        let (c, d) = p1.rep(i);
        for m in &family {
            let [a, b, mc, md] = *m;
            let image = p1
                .index_of(c * a + d * mc, c * b + d * md)
                .expect("translate of a valid class by a matrix of determinant coprime to N");
            t[(image, i)] += Rational::one();
        }
    }
    Ok(t)
}

/// The Hecke operator at `ell` on quotient coordinates.
pub fn hecke_operator(space: &SymbolSpace, ell: u64) -> Result<RationalMatrix> {
    let t = hecke_on_generators(space, ell)?;
    Ok(space.proj().mul(&t).mul(&space.section()))
}

/// The star involution `(c : d) -> (c : -d)` on quotient coordinates.
pub fn star_involution(space: &SymbolSpace) -> RationalMatrix {
    let p1 = space.p1();
    let n = p1.size();
    let mut perm = RationalMatrix::zero(n, n);
    for i in 0..n {
        let (c, d) = p1.rep(i);
        perm[(p1.index_of_valid(c, -d), i)] = Rational::one();
    }
    space.proj().mul(&perm).mul(&space.section())
}

/// Restriction of a quotient-coordinate operator to the column span of
/// `basis` (which must be invariant): the matrix `R` with
/// `op * basis = basis * R`.
pub fn restrict_operator(basis: &RationalMatrix, op: &RationalMatrix) -> RationalMatrix {
    let image = op.mul(basis);
    basis
        .solve_full_column_rank(&image)
        .expect("operator must preserve the span of the basis")
}
