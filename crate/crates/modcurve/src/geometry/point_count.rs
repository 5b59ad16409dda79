//! Point counts of the good reduction of X0(N) over finite fields, from
//! the characteristic polynomial of the operator at p on the boundary
//! kernel.

use crate::arith::{factor_poly, power_sums_from_charpoly, IntPolynomial};
use crate::modsym::{hecke_operator, restrict_operator, SymbolSpace};
use crate::numutil::{bi, is_prime};
use crate::{BigInt, Error, Result};
use num_traits::Zero;

/// The characteristic polynomial of Frobenius acting on the reduction of
/// the curve at `p`: `prod_i (T^2 - a_i T + p)` over the eigenvalues
/// `a_i` of the operator at `p` on the forms of the level, assembled as
/// `sum_j m_j (T^2 + p)^j T^(g - j)` from the square root
/// `m = prod (x - a_i)` of the kernel characteristic polynomial.
pub fn frobenius_polynomial(level: u64, p: u64) -> Result<IntPolynomial> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if level == 0 || level % p == 0 {
        return Err(Error::BadReductionPrime { p, level });
    }
    let space = SymbolSpace::new(level)?;
    if space.cuspidal_dim() == 0 {
        return Ok(IntPolynomial::one());
    }
    let op = hecke_operator(&space, p)?;
    let restricted = restrict_operator(space.cuspidal_basis(), &op);
    let charpoly = restricted.char_poly_int()?;
    // The kernel is two copies of the forms space, so every factor occurs
    // with even multiplicity; halve them.
    let factors = factor_poly(&charpoly)?;
    let mut m = IntPolynomial::one();
    for (f, e) in &factors.factors {
        assert!(e % 2 == 0, "factor with odd multiplicity {e} in kernel characteristic polynomial");
        m = m.mul(&f.pow(e / 2));
    }
    let g = m.degree().expect("positive genus here");
    let shift = IntPolynomial::from_coeffs(vec![bi(p as i64), BigInt::from(0u32), bi(1)]);
    let mut frob = IntPolynomial::zero();
    for j in 0..=g {
        let mj = m.coeff(j);
        if mj.is_zero() {
            continue;
        }
        let mut term = shift.pow(j as u32).scale(&mj);
        // Multiply by T^(g - j).
        let mut coeffs = vec![BigInt::zero(); g - j];
        coeffs.extend_from_slice(term.coeffs());
        term = IntPolynomial::from_coeffs(coeffs);
        frob = frob.add(&term);
    }
    Ok(frob)
}

/// Number of points of the reduction of X0(N) over the field with p^r
/// elements: `p^r + 1 - t_r`, with `t_r` the r-th power sum of the
/// Frobenius roots.
pub fn point_count(level: u64, p: u64, r: u32) -> Result<BigInt> {
    if r < 1 {
        return Err(Error::BadExtensionDegree(r as u64));
    }
    let frob = frobenius_polynomial(level, p)?;
    let q_r = BigInt::from(p).pow(r);
    let t_r = if frob.degree() == Some(0) || frob.is_zero() {
        BigInt::zero()
    } else {
        power_sums_from_charpoly(&frob, r as usize)?[r as usize - 1].clone()
    };
    Ok(q_r + 1 - t_r)
}
