//! Paths between cusps expressed in symbol coordinates via continued
//! fractions, level-lowering maps, and the subspace they cut out.

use super::p1::P1;
use super::space::{sl2_lift, SymbolSpace};
use crate::arith::RationalMatrix;
use crate::geometry::cusps::Cusp;
use crate::numutil::{prime_divisors, rat};
use crate::{Error, Rational, Result};
use num_traits::Zero;

/// Continued-fraction convergents of `a/b` (with `gcd(a, b) = 1`,
/// `b >= 1`), preceded by the formal convergent `1/0`. The last pair is
/// `(a, b)` up to sign.
pub fn convergents(a: i64, b: i64) -> Vec<(i64, i64)> {
    assert!(b >= 1, "denominator must be positive");
    let mut out = vec![(1i64, 0i64)];
    let (mut x, mut y) = (a, b);
    // Standard recurrence seeded with the formal convergents 0/1 and 1/0,
    // so that pushing the first quotient produces (a0, 1).
    let (mut p_prev, mut q_prev) = (0i64, 1i64);
    let (mut p_cur, mut q_cur) = (1i64, 0i64);
    while y != 0 {
        let quot = x.div_euclid(y);
        let r = x - quot * y;
        let p_next = quot * p_cur + p_prev;
        let q_next = quot * q_cur + q_prev;
        out.push((p_next, q_next));
        (p_prev, q_prev) = (p_cur, q_cur);
        (p_cur, q_cur) = (p_next, q_next);
        (x, y) = (y, r);
    }
    out
}

/// The path from infinity to the cusp, as a signed list of P1 classes:
/// each consecutive convergent pair `p'/q', p/q` contributes the class of
/// `(q, e q')` with `e = p q' - p' q`.
fn infinity_to(p1: &P1, cusp: &Cusp) -> Vec<(usize, i64)> {
    if cusp.is_infinity() {
        return Vec::new();
    }
    let conv = convergents(cusp.numerator(), cusp.denominator() as i64);
    let mut terms = Vec::new();
    for w in conv.windows(2) {
        let [(p_prev, q_prev), (p, q)] = [w[0], w[1]];
        let e = p * q_prev - p_prev * q;
        debug_assert!(e == 1 || e == -1);
        terms.push((p1.index_of_valid(q, e * q_prev), 1i64));
    }
    terms
}

/// The path from one cusp to another as a signed list of P1 classes.
pub fn path_symbols(p1: &P1, from: &Cusp, to: &Cusp) -> Vec<(usize, i64)> {
    let mut terms = infinity_to(p1, to);
    for (i, c) in infinity_to(p1, from) {
        terms.push((i, -c));
    }
    terms
}

/// Quotient coordinates of the path between two cusps.
pub fn path_vector(space: &SymbolSpace, from: &Cusp, to: &Cusp) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); space.dim()];
    for (i, c) in path_symbols(space.p1(), from, to) {
        let col = space.proj().col(i);
        for (acc, x) in v.iter_mut().zip(&col) {
            *acc += x * rat(c);
        }
    }
    v
}

/// The level-lowering map indexed by `t`, sending the class of a path
/// `{x, y}` at the finer level to the class of `{t x, t y}` at the coarser
/// level. Requires `to.level() | from.level()` and
/// `t | from.level() / to.level()`.
pub fn degeneracy_matrix(from: &SymbolSpace, to: &SymbolSpace, t: u64) -> Result<RationalMatrix> {
    let (n_from, n_to) = (from.level(), to.level());
    if n_to == 0 || n_from % n_to != 0 || t == 0 || (n_from / n_to) % t != 0 {
        return Err(Error::BadDegeneracy { from: n_from, to: n_to, t });
    }
    let mut cols = Vec::with_capacity(from.dim());
    for &f in from.free_generators() {
        let (c, d) = from.p1().rep(f);
        let [a, b, c0, d0] = sl2_lift(n_from, c, d);
        let start = Cusp::new(t as i64 * b, d0);
        let end = Cusp::new(t as i64 * a, c0);
        cols.push(path_vector(to, &start, &end));
    }
    Ok(RationalMatrix::from_cols(cols, to.dim()))
}

/// Basis (as columns, in quotient coordinates) of the part of the boundary
/// kernel killed by every level-lowering map to every maximal proper
/// divisor level. At levels with no proper divisor maps this is the whole
/// boundary kernel.
pub fn new_subspace(space: &SymbolSpace) -> Result<RationalMatrix> {
    let cuspidal = space.cuspidal_basis();
    let mut stacked: Option<RationalMatrix> = None;
    for q in prime_divisors(space.level()) {
        let target = SymbolSpace::new(space.level() / q)?;
        if target.dim() == 0 {
            continue;
        }
        for t in [1, q] {
            let map = degeneracy_matrix(space, &target, t)?;
            stacked = Some(match stacked {
                Some(s) => s.vstack(&map),
                None => map,
            });
        }
    }
    let Some(stacked) = stacked else {
        return Ok(cuspidal.clone());
    };
    let restricted = stacked.mul(cuspidal);
    let kernel = restricted.kernel_basis();
    Ok(cuspidal.mul(&kernel))
}
