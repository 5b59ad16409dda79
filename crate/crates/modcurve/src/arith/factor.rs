//! Exact factorization of integer and rational polynomials.
//!
//! The pipeline is classical: squarefree decomposition (Yun), reduction
//! modulo a well-chosen small prime, Berlekamp factorization there, Hensel
//! lifting of the modular factors to a power of the prime exceeding twice
//! the Landau–Mignotte coefficient bound, and subset recombination with
//! exact divisibility tests. Everything is deterministic.

use crate::arith::modp::{self, FpPoly};
use crate::arith::poly::{IntPolynomial, RatPoly};
use crate::numutil::{big_mod_inverse, isqrt, next_prime};
use crate::{BigInt, Error, Rational, Result};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A complete factorization `unit * prod_i f_i^{e_i}` with each `f_i`
/// irreducible in `Z[x]`, primitive, with positive leading coefficient.
/// Factors are sorted by (degree, coefficient sequence).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(IntPolynomial, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out (for verification).
    pub fn product(&self) -> RatPoly {
        let mut acc = RatPoly::from_coeffs(vec![self.unit.clone()]);
        for (f, e) in &self.factors {
            let fr = f.to_rat();
            for _ in 0..*e {
                acc = acc.mul(&fr);
            }
        }
        acc
    }

    /// True iff the polynomial is a unit times a single irreducible factor.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factors a nonzero integer polynomial into irreducibles over `Q`
/// (equivalently, primitive irreducibles over `Z` and a rational unit).
pub fn factor_poly(p: &IntPolynomial) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (content, prim) = p.primitive_parts();
    let unit = Rational::from_integer(content);
    let mut factors: Vec<(IntPolynomial, u32)> = Vec::new();
    if prim.degree().map_or(false, |d| d >= 1) {
        for (part, mult) in yun_squarefree(&prim) {
            for irr in factor_squarefree_primitive(&part) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Ok(Factorization { unit, factors })
}

/// Factors a nonzero rational polynomial.
pub fn factor_rat_poly(p: &RatPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (den, ip) = p.clear_denominators();
    let mut fac = factor_poly(&ip)?;
    fac.unit /= Rational::from_integer(den);
    Ok(fac)
}

/// Primitive positive-leading gcd of two integer polynomials (assumed not
/// both zero), computed through the monic rational gcd.
fn int_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let g = a.to_rat().gcd(&b.to_rat());
    let (_, ip) = g.clear_denominators();
    let (_, pp) = ip.primitive_parts();
    pp
}

fn exact_div(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a.try_exact_div(b)
        .expect("internal invariant: division known to be exact")
}

/// Yun's squarefree decomposition of a primitive positive-leading
/// polynomial of degree >= 1: returns pairs `(a_i, i)` with
/// `f = prod a_i^i`, the `a_i` squarefree, pairwise coprime, primitive.
fn yun_squarefree(f: &IntPolynomial) -> Vec<(IntPolynomial, u32)> {
    let fd = f.derivative();
    let g = int_gcd(f, &fd);
    if g.degree() == Some(0) {
        return vec![(f.clone(), 1)];
    }
    let mut b = exact_div(f, &g);
    let mut d = exact_div(&fd, &g).sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1u32;
    loop {
        let a = int_gcd(&b, &d);
        if a.degree().map_or(false, |dg| dg >= 1) {
            out.push((a.clone(), i));
        }
        b = exact_div(&b, &a);
        if b.degree() == Some(0) {
            break;
        }
        d = exact_div(&d, &a).sub(&b.derivative());
        i += 1;
    }
    out
}

/// Factors a squarefree primitive positive-leading polynomial of degree
/// >= 1 into its irreducible factors (primitive, positive leading).
fn factor_squarefree_primitive(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => return vec![f.clone()],
    };
    let lc = f.leading().expect("nonzero by assumption").clone();

    // Choose a prime keeping the reduction squarefree of full degree; among
    // the first few candidates take the one with the fewest modular factors.
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut examined = 0usize;
    let mut p = 1u64;
    while examined < 3 {
        p = next_prime(p);
        assert!(p < 100_000, "no suitable factorization prime found");
        if lc.mod_floor(&BigInt::from(p)).is_zero() {
            continue;
        }
        let fbar = reduce_monic_mod_p(f, p);
        if !modp::is_squarefree(&fbar, p) {
            continue;
        }
        let facs = modp::berlekamp(&fbar, p);
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        let better = match &best {
            None => true,
            Some((_, prev)) => facs.len() < prev.len(),
        };
        if better {
            best = Some((p, facs));
        }
        examined += 1;
    }
    let (p, fp_factors) = best.expect("at least one prime examined");

    // Landau–Mignotte: any divisor of f (times lc) has height at most
    // sqrt(n+1) * 2^n * height(f) * |lc|; lift past twice that.
    let bound: BigInt =
        (isqrt(&BigInt::from(n as u64 + 1)) + 1) * (BigInt::one() << n) * f.height() * lc.abs();
    let threshold = &bound * 2;
    let mut a = 1usize;
    let mut m = BigInt::from(p);
    while m <= threshold {
        m *= p;
        a += 1;
    }
    let a2 = a.next_power_of_two();
    let mut pa = BigInt::one();
    for _ in 0..a2 {
        pa *= p;
    }

    // Monic image of f modulo p^a2, then the lifted modular factors.
    let lc_inv = big_mod_inverse(&lc, &pa).expect("lc invertible modulo p^k");
    let f_monic: MPoly = m_trim(
        f.coeffs()
            .iter()
            .map(|c| (c * &lc_inv).mod_floor(&pa))
            .collect(),
    );
    let lifted = hensel_tree(&f_monic, &fp_factors, p, &pa);
    debug_assert_eq!(lifted.len(), fp_factors.len());

    // Subset recombination with exact divisibility tests.
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut current = f.clone();
    let mut out: Vec<IntPolynomial> = Vec::new();
    let mut size = 1usize;
    while 2 * size <= remaining.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        let mut extracted = false;
        loop {
            let cur_lc = current.leading().expect("current nonzero").clone();
            let mut prod: MPoly = m_trim(vec![cur_lc.mod_floor(&pa)]);
            for &pos in &combo {
                prod = m_mul(&prod, &lifted[remaining[pos]], &pa);
            }
            let cand_raw = symmetric_lift(&prod, &pa);
            let (_, cand) = cand_raw.primitive_parts();
            if cand.degree().map_or(false, |d| d >= 1) {
                if let Some(quot) = current.try_exact_div(&cand) {
                    out.push(cand);
                    let (_, qpp) = quot.primitive_parts();
                    current = qpp;
                    for &pos in combo.iter().rev() {
                        remaining.remove(pos);
                    }
                    extracted = true;
                    break;
                }
            }
            if !next_combination(&mut combo, remaining.len()) {
                break;
            }
        }
        if !extracted {
            size += 1;
        }
    }
    if current.degree().map_or(false, |d| d >= 1) {
        out.push(current);
    }
    out.sort_by(|x, y| {
        x.degree()
            .cmp(&y.degree())
            .then_with(|| x.coeffs().cmp(y.coeffs()))
    });
    out
}

/// Reduces `f` modulo `p` and rescales to a monic polynomial (requires
/// `p` does not divide the leading coefficient).
fn reduce_monic_mod_p(f: &IntPolynomial, p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    let raw: FpPoly = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits in u64"))
        .collect();
    modp::monic(&modp::trim(raw), p)
}

/// Advances `c` (a strictly increasing k-subset of `0..n`) to the next
/// subset in lexicographic order; returns false when exhausted.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Polynomials modulo p^k with big-integer coefficients (ascending, trimmed,
// reduced into [0, m)). Internal to the Hensel lifting below.
// ---------------------------------------------------------------------------

type MPoly = Vec<BigInt>;

fn m_trim(mut f: MPoly) -> MPoly {
    while f.last().map_or(false, |c| c.is_zero()) {
        f.pop();
    }
    f
}

fn m_reduce(f: &[BigInt], m: &BigInt) -> MPoly {
    m_trim(f.iter().map(|c| c.mod_floor(m)).collect())
}

fn m_add(f: &[BigInt], g: &[BigInt], m: &BigInt) -> MPoly {
    let n = f.len().max(g.len());
    m_trim(
        (0..n)
            .map(|k| {
                let a = f.get(k).cloned().unwrap_or_else(BigInt::zero);
                let b = g.get(k).cloned().unwrap_or_else(BigInt::zero);
                (a + b).mod_floor(m)
            })
            .collect(),
    )
}

fn m_sub(f: &[BigInt], g: &[BigInt], m: &BigInt) -> MPoly {
    let n = f.len().max(g.len());
    m_trim(
        (0..n)
            .map(|k| {
                let a = f.get(k).cloned().unwrap_or_else(BigInt::zero);
                let b = g.get(k).cloned().unwrap_or_else(BigInt::zero);
                (a - b).mod_floor(m)
            })
            .collect(),
    )
}

fn m_mul(f: &[BigInt], g: &[BigInt], m: &BigInt) -> MPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    m_reduce(&out, m)
}

/// Division by a monic polynomial (leading coefficient literally 1).
fn m_divrem_monic(f: &[BigInt], g: &[BigInt], m: &BigInt) -> (MPoly, MPoly) {
    let dg = g.len().checked_sub(1).expect("monic divisor is nonzero");
    debug_assert!(g.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let mut rem: Vec<BigInt> = f.to_vec();
    if rem.len() <= dg {
        return (Vec::new(), m_trim(rem));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dg];
    for k in (dg..rem.len()).rev() {
        let c = rem[k].mod_floor(m);
        if !c.is_zero() {
            for (j, b) in g.iter().enumerate() {
                let v = (&rem[k - dg + j] - &c * b).mod_floor(m);
                rem[k - dg + j] = v;
            }
        }
        quot[k - dg] = c;
    }
    (m_trim(quot), m_trim(rem))
}

fn symmetric_lift(f: &[BigInt], m: &BigInt) -> IntPolynomial {
    IntPolynomial::from_coeffs(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if &r * 2 > *m {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn embed_fp(f: &FpPoly) -> MPoly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: given `f = g*h (mod m)` with `g, h` monic and
/// Bezout data `s*g + t*h = 1 (mod m)`, returns the lifted quadruple modulo
/// `m2 = m^2` (or any modulus `m2` such that the inputs are valid mod `m`
/// and `m^2 = 0 mod m2`).
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (MPoly, MPoly, MPoly, MPoly) {
    let fr = m_reduce(f, m2);
    let e = m_sub(&fr, &m_mul(g, h, m2), m2);
    let (q, r) = m_divrem_monic(&m_mul(s, &e, m2), h, m2);
    let g1 = m_add(&m_add(g, &m_mul(t, &e, m2), m2), &m_mul(&q, g, m2), m2);
    let h1 = m_add(h, &r, m2);
    debug_assert_eq!(g1.len(), g.len());
    debug_assert_eq!(h1.len(), h.len());
    debug_assert!(g1.last().map_or(false, |c| c.is_one()));
    debug_assert!(h1.last().map_or(false, |c| c.is_one()));
    debug_assert!(m_sub(&fr, &m_mul(&g1, &h1, m2), m2).is_empty());
    let one: MPoly = vec![BigInt::one()];
    let b = m_sub(
        &m_add(&m_mul(s, &g1, m2), &m_mul(t, &h1, m2), m2),
        &one,
        m2,
    );
    let (c, d) = m_divrem_monic(&m_mul(s, &b, m2), &h1, m2);
    let s1 = m_sub(s, &d, m2);
    let t1 = m_sub(&m_sub(t, &m_mul(t, &b, m2), m2), &m_mul(&c, &g1, m2), m2);
    debug_assert!({
        let chk = m_sub(
            &m_add(&m_mul(&s1, &g1, m2), &m_mul(&t1, &h1, m2), m2),
            &one,
            m2,
        );
        chk.is_empty()
    });
    (g1, h1, s1, t1)
}

/// Lifts the factorization `f = prod factors (mod p)` (f monic mod `pa`,
/// `pa = p^(2^k)`) to a factorization modulo `pa`, recursively splitting
/// the factor list in half.
fn hensel_tree(f: &MPoly, factors_p: &[FpPoly], p: u64, pa: &BigInt) -> Vec<MPoly> {
    if factors_p.len() == 1 {
        return vec![m_reduce(f, pa)];
    }
    let mid = factors_p.len() / 2;
    let (left, right) = factors_p.split_at(mid);
    let g0 = left
        .iter()
        .fold(vec![1u64], |acc, x| modp::mul(&acc, x, p));
    let h0 = right
        .iter()
        .fold(vec![1u64], |acc, x| modp::mul(&acc, x, p));
    let (gcd, s0, t0) = modp::ext_euclid(&g0, &h0, p);
    assert_eq!(gcd, vec![1], "modular factors must be pairwise coprime");

    let mut g = embed_fp(&g0);
    let mut h = embed_fp(&h0);
    let mut s = embed_fp(&s0);
    let mut t = embed_fp(&t0);
    let mut m = BigInt::from(p);
    while &m < pa {
        let m2 = &m * &m;
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m2);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = m2;
    }
    let mut out = hensel_tree(&g, left, p, pa);
    out.extend(hensel_tree(&h, right, p, pa));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::bi;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn rejects_zero() {
        assert!(matches!(
            factor_poly(&IntPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn splits_difference_of_squares() {
        let fac = factor_poly(&ip(&[-1, 0, 1])).unwrap();
        assert_eq!(fac.unit, Rational::one());
        assert_eq!(
            fac.factors,
            vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 1)]
        );
    }

    #[test]
    fn pulls_out_content() {
        let fac = factor_poly(&ip(&[-6, 0, 6])).unwrap();
        assert_eq!(fac.unit, Rational::from_integer(bi(6)));
        assert_eq!(
            fac.factors,
            vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 1)]
        );
    }

    #[test]
    fn detects_irreducibles() {
        assert!(factor_poly(&ip(&[1, 0, 1])).unwrap().is_irreducible());
        assert!(factor_poly(&ip(&[-2, 0, 0, 1])).unwrap().is_irreducible());
        // Splits into two quadratics modulo every prime, yet irreducible.
        assert!(factor_poly(&ip(&[1, 0, -10, 0, 1])).unwrap().is_irreducible());
    }

    #[test]
    fn recovers_multiplicities() {
        // (x - 1)^2 (x + 2)^3
        let f = ip(&[-1, 1]).pow(2).mul(&ip(&[2, 1]).pow(3));
        let fac = factor_poly(&f).unwrap();
        assert_eq!(fac.unit, Rational::one());
        assert_eq!(
            fac.factors,
            vec![(ip(&[-1, 1]), 2), (ip(&[2, 1]), 3)]
        );
    }

    #[test]
    fn splits_quadratic_fields() {
        // (x^2 - x - 1)(x^2 - 3)
        let f = ip(&[-1, -1, 1]).mul(&ip(&[-3, 0, 1]));
        let fac = factor_poly(&f).unwrap();
        assert_eq!(
            fac.factors,
            vec![(ip(&[-3, 0, 1]), 1), (ip(&[-1, -1, 1]), 1)]
        );
    }

    #[test]
    fn handles_negative_leading_and_units() {
        let fac = factor_poly(&ip(&[2, 0, -2])).unwrap();
        assert_eq!(fac.unit, Rational::from_integer(bi(-2)));
        assert_eq!(
            fac.factors,
            vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 1)]
        );
        let back = fac.product();
        assert_eq!(back, ip(&[2, 0, -2]).to_rat());
    }

    #[test]
    fn rational_inputs() {
        // (1/2)x^2 - 1/2
        let q = RatPoly::from_coeffs(vec![
            crate::numutil::ratio(-1, 2),
            Rational::zero(),
            crate::numutil::ratio(1, 2),
        ]);
        let fac = factor_rat_poly(&q).unwrap();
        assert_eq!(fac.unit, crate::numutil::ratio(1, 2));
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.product(), q);
    }

    #[test]
    fn factors_a_degree_six_product() {
        // (x^2 + x + 1)(x^3 - x - 1)(x - 4)
        let f = ip(&[1, 1, 1]).mul(&ip(&[-1, -1, 0, 1])).mul(&ip(&[-4, 1]));
        let fac = factor_poly(&f).unwrap();
        assert_eq!(
            fac.factors,
            vec![
                (ip(&[-4, 1]), 1),
                (ip(&[1, 1, 1]), 1),
                (ip(&[-1, -1, 0, 1]), 1)
            ]
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn product_round_trip(coeffs in proptest::collection::vec(-12i64..=12, 1..=7)) {
            let f = ip(&coeffs);
            prop_assume!(!f.is_zero());
            let fac = factor_poly(&f).unwrap();
            prop_assert_eq!(fac.product(), f.to_rat());
            for (g, _) in &fac.factors {
                let d = g.degree().unwrap();
                prop_assert!(d >= 1);
                prop_assert!(g.leading().unwrap() > &bi(0));
            }
        }
    }
}
