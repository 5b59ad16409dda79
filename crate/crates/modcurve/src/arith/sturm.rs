//! Exact real-root localization via Sturm chains.
//!
//! The interesting evaluation points here are of the form `±sqrt(t)` for a
//! nonnegative integer `t`, so sign evaluation splits a polynomial into
//! even and odd parts and compares exactly — no floating point anywhere.

use crate::arith::poly::{IntPolynomial, RatPoly};
use crate::numutil::bi;
use crate::{BigInt, Rational};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy)]
enum EvalPoint {
    NegInfinity,
    /// `-sqrt(t)`.
    NegSqrt(u64),
    /// `+sqrt(t)`.
    PosSqrt(u64),
    PosInfinity,
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(f: &IntPolynomial) -> usize {
    let sf = squarefree_part(f);
    if sf.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    let chain = sturm_chain(&sf);
    variations(&chain, EvalPoint::NegInfinity) - variations(&chain, EvalPoint::PosInfinity)
}

/// Number of distinct real roots `g` of a nonzero polynomial with
/// `g^2 > t`, i.e. lying strictly outside the closed interval
/// `[-sqrt(t), sqrt(t)]`.
pub fn count_real_roots_in_symmetric_gap(f: &IntPolynomial, t: u64) -> usize {
    let mut sf = squarefree_part(f);
    if sf.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    sf = remove_boundary_roots(&sf, t);
    if sf.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    let chain = sturm_chain(&sf);
    let v_ni = variations(&chain, EvalPoint::NegInfinity);
    let v_ns = variations(&chain, EvalPoint::NegSqrt(t));
    let v_ps = variations(&chain, EvalPoint::PosSqrt(t));
    let v_pi = variations(&chain, EvalPoint::PosInfinity);
    (v_ni - v_ns) + (v_ps - v_pi)
}

/// True iff every real root `g` of the nonzero polynomial satisfies
/// `g^2 <= t` (roots exactly at `±sqrt(t)` pass).
pub fn real_roots_within_sqrt_bound(f: &IntPolynomial, t: u64) -> bool {
    count_real_roots_in_symmetric_gap(f, t) == 0
}

/// Monic squarefree part of a nonzero integer polynomial, over `Q`.
fn squarefree_part(f: &IntPolynomial) -> RatPoly {
    assert!(!f.is_zero(), "real-root localization of the zero polynomial");
    let fr = f.to_rat();
    if fr.degree().map_or(true, |d| d == 0) {
        return fr.monic();
    }
    let g = fr.gcd(&fr.derivative());
    let (q, r) = fr.divrem(&g);
    debug_assert!(r.is_zero());
    q.monic()
}

/// Divides out any roots exactly at `±sqrt(t)` (the factor `x^2 - t`, or
/// the linear factors when `t` is a perfect square).
fn remove_boundary_roots(sf: &RatPoly, t: u64) -> RatPoly {
    let mut cur = sf.clone();
    let tb = bi(t as i64);
    let s = crate::numutil::isqrt(&tb);
    let divisors: Vec<RatPoly> = if &s * &s == tb {
        // Perfect square (including t = 0): roots at +s and -s.
        let sq = Rational::from_integer(s);
        let mut v = vec![RatPoly::from_coeffs(vec![-sq.clone(), Rational::one()])];
        if !sq.is_zero() {
            v.push(RatPoly::from_coeffs(vec![sq, Rational::one()]));
        }
        v
    } else {
        vec![RatPoly::from_coeffs(vec![
            -Rational::from_integer(tb),
            Rational::zero(),
            Rational::one(),
        ])]
    };
    for d in divisors {
        loop {
            let (q, r) = cur.divrem(&d);
            if r.is_zero() && q.degree().is_some() {
                cur = q;
            } else {
                break;
            }
        }
    }
    cur
}

/// Sturm chain of a squarefree nonconstant polynomial.
fn sturm_chain(sf: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![sf.clone(), sf.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.scale(&-Rational::one()));
    }
    chain
}

/// Number of sign variations of the chain at the point (zeros skipped).
fn variations(chain: &[RatPoly], pt: EvalPoint) -> usize {
    let signs: Vec<i32> = chain
        .iter()
        .map(|p| sign_at(p, pt))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Exact sign of `p` at the evaluation point: -1, 0, or +1.
fn sign_at(p: &RatPoly, pt: EvalPoint) -> i32 {
    match pt {
        EvalPoint::PosInfinity => match p.degree() {
            None => 0,
            Some(_) => rat_sign(p.leading().unwrap()),
        },
        EvalPoint::NegInfinity => match p.degree() {
            None => 0,
            Some(d) => {
                let s = rat_sign(p.leading().unwrap());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        },
        EvalPoint::PosSqrt(t) => sign_at_sqrt(p, t, 1),
        EvalPoint::NegSqrt(t) => sign_at_sqrt(p, t, -1),
    }
}

/// Sign of `p(eps * sqrt(t))` for `eps = ±1`, computed exactly by writing
/// `p(x) = E(x^2) + x*O(x^2)` and comparing `E(t)^2` against `t*O(t)^2`.
fn sign_at_sqrt(p: &RatPoly, t: u64, eps: i32) -> i32 {
    let tb = Rational::from_integer(BigInt::from(t));
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if k % 2 == 0 {
            even.push(c.clone());
        } else {
            odd.push(c.clone());
        }
    }
    let a = RatPoly::from_coeffs(even).eval(&tb);
    let b = RatPoly::from_coeffs(odd).eval(&tb) * Rational::from_integer(BigInt::from(eps));
    // Value is a + b*sqrt(t).
    if t == 0 || b.is_zero() {
        return rat_sign(&a);
    }
    if a.is_zero() {
        return rat_sign(&b);
    }
    let sa = rat_sign(&a);
    if sa == rat_sign(&b) {
        return sa;
    }
    let lhs = &a * &a;
    let rhs = &b * &b * tb;
    if lhs > rhs {
        sa
    } else if lhs < rhs {
        -sa
    } else {
        0
    }
}

fn rat_sign(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}
