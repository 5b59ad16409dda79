//! Order of the rational cuspidal subgroup of J0(N) for square-free N,
//! via Takagi's character-product formula.
//!
//! For square-free N = p1 ... pf the order is
//!
//! ```text
//! h0(N) = (2^f * 12 * a2 * a3 / d) * prod over nontrivial sign vectors e
//!         of (1/24) * prod over i of (p_i + e_i)
//! ```
//!
//! where `d = gcd(12, p1 - 1, ..., pf - 1)`, `a2 = 2` exactly when `2 | N`
//! and some prime factor is `3 mod 4` (else 1), and `a3 = 3` exactly when
//! `3 | N` and some prime factor is `2 mod 3` (else 1). The per-character
//! terms are rational; the product is an integer, which the implementation
//! verifies structurally by tracking prime exponents.

use crate::numutil::{gcd_u64, is_squarefree, prime_divisors, prime_factors};
use crate::{BigInt, Error, Rational, Result};
use num_traits::One;
use std::collections::BTreeMap;

/// Parameters entering the order formula at a square-free level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TakagiParameters {
    /// Prime factors of the level, ascending.
    pub primes: Vec<u64>,
    /// Number of prime factors.
    pub f: u64,
    /// gcd of 12 with every `p - 1`.
    pub gcd12: u64,
    /// 2 when the level is even and some prime factor is 3 mod 4, else 1.
    pub a2: u64,
    /// 3 when 3 divides the level and some prime factor is 2 mod 3, else 1.
    pub a3: u64,
}

/// A character of the two-torsion sign group: one sign per prime factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCharacter {
    pub signs: Vec<i64>,
}

impl SignCharacter {
    pub fn is_trivial(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }
}

/// The computed order together with its factorization and parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspidalOrder {
    pub level: u64,
    pub value: BigInt,
    /// Prime factorization of the value, ascending primes.
    pub factors: Vec<(u64, u32)>,
    pub parameters: TakagiParameters,
}

fn check_level(level: u64) -> Result<()> {
    if level <= 1 {
        return Err(Error::BadLevel(level));
    }
    if !is_squarefree(level) {
        return Err(Error::NotSquareFree(level));
    }
    Ok(())
}

/// Formula parameters for a square-free level > 1.
pub fn takagi_parameters(level: u64) -> Result<TakagiParameters> {
    check_level(level)?;
    let primes = prime_divisors(level);
    let f = primes.len() as u64;
    let gcd12 = primes.iter().fold(12, |g, &p| gcd_u64(g, p - 1));
    let a2 = if level % 2 == 0 && primes.iter().any(|&p| p % 4 == 3) { 2 } else { 1 };
    let a3 = if level % 3 == 0 && primes.iter().any(|&p| p % 3 == 2) { 3 } else { 1 };
    Ok(TakagiParameters { primes, f, gcd12, a2, a3 })
}

/// All 2^f sign characters, the trivial one first.
pub fn characters(f: u64) -> Vec<SignCharacter> {
    (0..1u64 << f)
        .map(|mask| SignCharacter {
            signs: (0..f).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect(),
        })
        .collect()
}

/// The factor contributed by one nontrivial character:
/// `(1/24) * prod (p_i + sign_i)`.
pub fn character_term(chi: &SignCharacter, level: u64) -> Result<Rational> {
    let params = takagi_parameters(level)?;
    assert_eq!(chi.signs.len() as u64, params.f, "character length must match prime count");
    if chi.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    let mut num = BigInt::one();
    for (&p, &s) in params.primes.iter().zip(&chi.signs) {
        num *= BigInt::from(p as i64 + s);
    }
    Ok(Rational::new(num, BigInt::from(24)))
}

fn add_prime_powers(exponents: &mut BTreeMap<u64, i64>, n: u64, sign: i64) {
    for (p, e) in prime_factors(n) {
        *exponents.entry(p).or_insert(0) += sign * e as i64;
    }
}

/// The order of the rational cuspidal subgroup for square-free level > 1.
pub fn h0(level: u64) -> Result<CuspidalOrder> {
    let parameters = takagi_parameters(level)?;
    let mut exponents: BTreeMap<u64, i64> = BTreeMap::new();
    // Front factor 2^f * 12 * a2 * a3 / d.
    *exponents.entry(2).or_insert(0) += parameters.f as i64;
    add_prime_powers(&mut exponents, 12, 1);
    add_prime_powers(&mut exponents, parameters.a2, 1);
    add_prime_powers(&mut exponents, parameters.a3, 1);
    add_prime_powers(&mut exponents, parameters.gcd12, -1);
    // One term (1/24) * prod (p_i + sign) per nontrivial character.
    for chi in characters(parameters.f) {
        if chi.is_trivial() {
            continue;
        }
        for (&p, &s) in parameters.primes.iter().zip(&chi.signs) {
            add_prime_powers(&mut exponents, (p as i64 + s) as u64, 1);
        }
        add_prime_powers(&mut exponents, 24, -1);
    }
    let mut value = BigInt::one();
    let mut factors = Vec::new();
    for (&p, &e) in &exponents {
        assert!(e >= 0, "denominator survives at prime {p} for level {level}");
        if e > 0 {
            value *= BigInt::from(p).pow(e as u32);
            factors.push((p, e as u32));
        }
    }
    Ok(CuspidalOrder { level, value, factors, parameters })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::{bi, ratio};

    #[test]
    fn rejects_bad_levels() {
        assert!(matches!(h0(0), Err(Error::BadLevel(0))));
        assert!(matches!(h0(1), Err(Error::BadLevel(1))));
        assert!(matches!(h0(12), Err(Error::NotSquareFree(12))));
        assert!(matches!(h0(45), Err(Error::NotSquareFree(45))));
        assert!(matches!(takagi_parameters(49), Err(Error::NotSquareFree(49))));
    }

    #[test]
    fn parameters_for_known_levels() {
        let p30 = takagi_parameters(30).unwrap();
        assert_eq!((p30.f, p30.gcd12, p30.a2, p30.a3), (3, 1, 2, 3));
        let p39 = takagi_parameters(39).unwrap();
        assert_eq!((p39.f, p39.gcd12, p39.a2, p39.a3), (2, 2, 1, 1));
        let p26 = takagi_parameters(26).unwrap();
        assert_eq!((p26.f, p26.gcd12, p26.a2, p26.a3), (2, 1, 1, 1));
        assert_eq!(p26.primes, vec![2, 13]);
    }

    #[test]
    fn character_group_shape() {
        let chars = characters(2);
        assert_eq!(chars.len(), 4);
        assert!(chars[0].is_trivial());
        assert_eq!(chars.iter().filter(|c| c.is_trivial()).count(), 1);
    }

    #[test]
    fn character_terms_by_hand() {
        // Level 39, sign -1 at 3 and +1 at 13: (3-1)(13+1)/24 = 7/6.
        let chi = SignCharacter { signs: vec![-1, 1] };
        assert_eq!(character_term(&chi, 39).unwrap(), ratio(7, 6));
        // Level 39, signs (+1, -1): (3+1)(13-1)/24 = 2.
        let chi = SignCharacter { signs: vec![1, -1] };
        assert_eq!(character_term(&chi, 39).unwrap(), ratio(2, 1));
        // Level 26, signs (-1, -1): (2-1)(13-1)/24 = 1/2.
        let chi = SignCharacter { signs: vec![-1, -1] };
        assert_eq!(character_term(&chi, 26).unwrap(), ratio(1, 2));
        // Trivial character refused.
        let chi = SignCharacter { signs: vec![1, 1] };
        assert!(matches!(character_term(&chi, 26), Err(Error::TrivialCharacter)));
    }

    #[test]
    fn frozen_orders() {
        let cases = [
            (26u64, 21i64),
            (30, 192),
            (33, 100),
            (35, 48),
            (39, 56),
            (42, 2304),
            (11, 5),
            (91, 336),
            (14, 6),
            (15, 8),
            (21, 8),
            (22, 25),
        ];
        for (level, expected) in cases {
            assert_eq!(h0(level).unwrap().value, bi(expected), "order at level {level}");
        }
    }

    #[test]
    fn factored_forms() {
        let h39 = h0(39).unwrap();
        assert_eq!(h39.factors, vec![(2, 3), (7, 1)]);
        let h42 = h0(42).unwrap();
        assert_eq!(h42.factors, vec![(2, 8), (3, 2)]);
        let h91 = h0(91).unwrap();
        assert_eq!(h91.factors, vec![(2, 4), (3, 1), (7, 1)]);
    }

    #[test]
    fn prime_level_reduction() {
        // For prime levels away from 2 and 3 the formula collapses to
        // (p - 1) / gcd(12, p - 1).
        for p in crate::numutil::primes_up_to(100) {
            if p < 5 {
                continue;
            }
            let expected = (p - 1) / gcd_u64(12, p - 1);
            assert_eq!(h0(p).unwrap().value, BigInt::from(expected), "prime level {p}");
        }
    }

    #[test]
    fn integral_for_all_squarefree_levels_up_to_200() {
        for level in 2..=200 {
            if !is_squarefree(level) {
                continue;
            }
            // The exponent bookkeeping asserts integrality internally.
            let order = h0(level).unwrap();
            assert!(order.value >= BigInt::one(), "level {level}");
            let rebuilt: BigInt = order
                .factors
                .iter()
                .fold(BigInt::one(), |acc, &(p, e)| acc * BigInt::from(p).pow(e));
            assert_eq!(order.value, rebuilt, "factored form at level {level}");
        }
    }
}
