//! Nonvanishing flags for the central values attached to the pieces of
//! the decomposition.
//!
//! Under the commuting operators at the probe primes, the quotient space
//! splits into the isotypic blocks of the decomposition factors plus one
//! residual block on which the operator at a good prime `ell` has the
//! single eigenvalue `ell + 1`.  The central value attached to a factor
//! is nonzero exactly when the projection of the winding vector (the
//! class of the path from 0 to infinity) onto the factor's block is
//! nonzero.  Each projection is realized as a polynomial in the operators
//! through Bezout identities on the characteristic polynomial, so the
//! whole computation stays in exact rational arithmetic.

use std::collections::BTreeMap;

use crate::arith::{factor_poly, IntPolynomial, RatPoly, RationalMatrix};
use crate::modsym::{decompose, hecke_operator, Decomposition, SymbolSpace};
use crate::{Error, Rational, Result};
use num_traits::Zero;

/// Nonvanishing verdicts for the winding projections at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LValueFlags {
    pub level: u64,
    /// One flag per decomposition factor, in canonical factor order:
    /// `true` means the winding projection onto the factor's full block
    /// is nonzero.
    pub flags: Vec<bool>,
}

impl LValueFlags {
    /// Flags repeated once per copy of each factor, aligned with
    /// `Decomposition::flattened_dimensions`.  Panics when `dec` is not
    /// the decomposition these flags were computed from.
    pub fn expanded(&self, dec: &Decomposition) -> Vec<bool> {
        assert_eq!(self.level, dec.level, "expanded: level mismatch");
        assert_eq!(self.flags.len(), dec.factors.len(), "expanded: factor count mismatch");
        let mut out = Vec::new();
        for (flag, factor) in self.flags.iter().zip(&dec.factors) {
            for _ in 0..factor.multiplicity {
                out.push(*flag);
            }
        }
        out
    }
}

/// Computes the flags for a level from scratch.
pub fn l_value_flags(level: u64) -> Result<LValueFlags> {
    let space = SymbolSpace::new(level)?;
    let dec = decompose(level)?;
    winding_flags(&space, &dec)
}

/// Computes the flags against an existing space and decomposition.
///
/// As a built-in consistency check, the projections onto all factor
/// blocks plus the residual block must sum back to the winding vector
/// itself; a failure of that identity is reported as an error rather
/// than as a silently wrong flag.
pub fn winding_flags(space: &SymbolSpace, dec: &Decomposition) -> Result<LValueFlags> {
    if space.level() != dec.level {
        return Err(Error::LevelMismatch { expected: dec.level, found: space.level() });
    }
    let winding = space.winding_vector();
    let mut table = BTreeMap::new();
    for &ell in &dec.probes {
        let op = hecke_operator(space, ell)?;
        let charpoly = op.char_poly_int()?;
        table.insert(ell, (op, charpoly));
    }

    let mut total = vec![Rational::zero(); winding.len()];
    let mut flags = Vec::with_capacity(dec.factors.len());
    for factor in &dec.factors {
        let projected = primary_projection(dec.level, &table, &factor.fingerprint, &winding)?;
        for (t, c) in total.iter_mut().zip(&projected) {
            *t += c;
        }
        flags.push(projected.iter().any(|c| !c.is_zero()));
    }
    let residual =
        primary_projection(dec.level, &table, &residual_fingerprint(&dec.probes), &winding)?;
    for (t, c) in total.iter_mut().zip(&residual) {
        *t += c;
    }
    if total != winding {
        return Err(Error::DecompositionUnresolved {
            level: dec.level,
            detail: "block projections of the winding vector do not sum back to it".into(),
        });
    }
    Ok(LValueFlags { level: dec.level, flags })
}

/// The fingerprint of the residual block: `x - (ell + 1)` at each probe.
fn residual_fingerprint(probes: &[u64]) -> Vec<(u64, IntPolynomial)> {
    probes.iter().map(|&ell| (ell, IntPolynomial::from_i64(&[-(ell as i64) - 1, 1]))).collect()
}

/// Projects `v` onto the joint block selected by the fingerprint.
///
/// For each probe, the characteristic polynomial of the operator splits
/// as `block * rest` where `block` collects the full power of every
/// irreducible part of the fingerprint polynomial and `rest` is coprime
/// to it.  A Bezout identity `u * block + s * rest = 1` then makes
/// `(s * rest)(op)` the projection onto the generalized eigenspace of
/// `block` along the complementary invariant subspace.  Fingerprint
/// parts absent from the characteristic polynomial select the zero
/// block.
fn primary_projection(
    level: u64,
    table: &BTreeMap<u64, (RationalMatrix, IntPolynomial)>,
    fingerprint: &[(u64, IntPolynomial)],
    v: &[Rational],
) -> Result<Vec<Rational>> {
    let mut out = v.to_vec();
    for (ell, part) in fingerprint {
        let (op, charpoly) = table
            .get(ell)
            .unwrap_or_else(|| panic!("no operator tabulated for probe {ell}"));
        let mut block = IntPolynomial::one();
        let mut rest = charpoly.clone();
        for (irreducible, _) in &factor_poly(part)?.factors {
            let mut power = 0u32;
            while let Some(quotient) = rest.try_exact_div(irreducible) {
                rest = quotient;
                power += 1;
            }
            if power == 0 {
                return Ok(vec![Rational::zero(); v.len()]);
            }
            block = block.mul(&irreducible.pow(power));
        }
        let (gcd, _, s) = block.to_rat().ext_gcd(&rest.to_rat());
        if gcd != RatPoly::one() {
            return Err(Error::DecompositionUnresolved {
                level,
                detail: format!("block polynomial for probe {ell} is not complementary"),
            });
        }
        out = op.poly_apply(&s.mul(&rest.to_rat()), &out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modsym::star_involution;

    #[test]
    fn mismatched_levels_are_rejected() {
        let space = SymbolSpace::new(11).unwrap();
        let dec = decompose(15).unwrap();
        assert!(matches!(
            winding_flags(&space, &dec),
            Err(Error::LevelMismatch { expected: 15, found: 11 })
        ));
    }

    #[test]
    fn genus_zero_levels_have_no_flags() {
        for level in [6, 13] {
            let flags = l_value_flags(level).unwrap();
            assert!(flags.flags.is_empty(), "level {level}");
        }
    }

    #[test]
    fn flags_for_elliptic_prime_levels() {
        assert_eq!(l_value_flags(11).unwrap().flags, vec![true]);
        // Both pieces have dimension one; the piece with trace 0 at the
        // probe 2 sorts first and has nonzero central value, the piece
        // with trace -2 vanishes.
        assert_eq!(l_value_flags(37).unwrap().flags, vec![true, false]);
    }

    #[test]
    fn flags_for_composite_levels() {
        assert_eq!(l_value_flags(39).unwrap().flags, vec![true, true]);
        assert_eq!(l_value_flags(26).unwrap().flags, vec![true, true]);
        assert_eq!(l_value_flags(30).unwrap().flags, vec![true, true]);
        // Two one-dimensional pieces with vanishing central value, then
        // the pieces of dimension two and three with nonzero value.
        assert_eq!(l_value_flags(91).unwrap().flags, vec![false, false, true, true]);
    }

    #[test]
    fn old_copies_inherit_the_flag_of_their_piece() {
        let dec = decompose(22).unwrap();
        let flags = winding_flags(&SymbolSpace::new(22).unwrap(), &dec).unwrap();
        assert_eq!(flags.flags, vec![true]);
        assert_eq!(flags.expanded(&dec), vec![true, true]);
    }

    #[test]
    fn prime_square_level_has_exactly_one_vanishing_piece() {
        let dec = decompose(121).unwrap();
        let flags = winding_flags(&SymbolSpace::new(121).unwrap(), &dec).unwrap();
        assert_eq!(flags.flags.len(), 5);
        // The copies of the piece from level 11 come first and do not vanish.
        assert_eq!(dec.factors[0].new_level, 11);
        assert!(flags.flags[0]);
        assert_eq!(flags.flags.iter().filter(|f| !*f).count(), 1);
        assert_eq!(flags.expanded(&dec).len(), 6);
    }

    #[test]
    fn projections_land_in_the_matching_block() {
        let space = SymbolSpace::new(39).unwrap();
        let dec = decompose(39).unwrap();
        let mut table = BTreeMap::new();
        for &ell in &dec.probes {
            let op = hecke_operator(&space, ell).unwrap();
            let charpoly = op.char_poly_int().unwrap();
            table.insert(ell, (op, charpoly));
        }
        let winding = space.winding_vector();
        for factor in &dec.factors {
            let projected =
                primary_projection(39, &table, &factor.fingerprint, &winding).unwrap();
            let column = RationalMatrix::from_cols(vec![projected], space.dim());
            assert!(
                factor.subspace.solve_full_column_rank(&column).is_some(),
                "projection must lie in the span of the factor block"
            );
        }
    }

    #[test]
    fn winding_vector_is_fixed_by_the_star_involution() {
        for level in [11, 39] {
            let space = SymbolSpace::new(level).unwrap();
            let star = star_involution(&space);
            let winding = space.winding_vector();
            assert_eq!(star.apply(&winding), winding, "level {level}");
        }
    }
}
