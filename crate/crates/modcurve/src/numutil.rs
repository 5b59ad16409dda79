//! Small elementary number-theory helpers shared across the crate.

use crate::{BigInt, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Shorthand: `i64` to `BigInt`.
pub fn bi(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Shorthand: `i64` to `Rational`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(bi(n))
}

/// Shorthand: `n/d` as a `Rational`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "ratio: zero denominator");
    Rational::new(bi(n), bi(d))
}

/// Non-negative gcd of two `u64`.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Non-negative gcd of two `i64`.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs()) as i64
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Inverse of `a` modulo `m > 0`, if it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    assert!(m > 0, "mod_inverse: modulus must be positive");
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    if g != 1 {
        None
    } else {
        Some(x.rem_euclid(m))
    }
}

/// Deterministic primality test by trial division (intended for small inputs).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes up to and including `bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut m = n + 1;
    while !is_prime(m) {
        m += 1;
    }
    m
}

/// Prime factorization of `n >= 1` as `(prime, exponent)` pairs, primes ascending.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "prime_factors: n must be >= 1");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of `n >= 1`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    prime_factors(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Number-of-divisors function sigma_0(n).
pub fn sigma0(n: u64) -> u64 {
    divisors(n).len() as u64
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi: n must be >= 1");
    let mut phi = n;
    for (p, _) in prime_factors(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// True iff `n >= 1` has no repeated prime factor.
pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && prime_factors(n).iter().all(|&(_, e)| e == 1)
}

/// Largest divisor of `n` coprime to `p` (i.e. `n` with every factor of `p` removed).
pub fn prime_to_part(mut n: u64, p: u64) -> u64 {
    assert!(n >= 1 && p >= 2);
    while n % p == 0 {
        n /= p;
    }
    n
}

/// Integer square root: largest `r` with `r*r <= n`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt: negative input");
    if n.is_zero() {
        return BigInt::zero();
    }
    let mut x: BigInt = BigInt::one() << (n.bits() / 2 + 1);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Extended Euclid on big integers: returns `(g, x, y)` with
/// `a*x + b*y = g` and `g = gcd(a, b) >= 0`.
pub fn big_ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if b.is_zero() {
        if a.is_negative() {
            (-a.clone(), -BigInt::one(), BigInt::zero())
        } else {
            (a.clone(), BigInt::one(), BigInt::zero())
        }
    } else {
        let (g, x, y) = big_ext_gcd(b, &(a % b));
        let q = a / b;
        (g, y.clone(), x - q * y)
    }
}

/// Inverse of `a` modulo `m > 0` over big integers, if it exists.
pub fn big_mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    assert!(m.is_positive(), "big_mod_inverse: modulus must be positive");
    if m == &BigInt::one() {
        return Some(BigInt::zero());
    }
    let (g, x, _) = big_ext_gcd(&a.mod_floor(m), m);
    if g == BigInt::one() {
        Some(x.mod_floor(m))
    } else {
        None
    }
}

/// True iff `n` is a perfect square.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = isqrt(n);
    &r * &r == *n
}

/// Converts a `Rational` known to be an integer into a `BigInt`. Panics otherwise.
pub fn rational_to_integer(r: &Rational) -> BigInt {
    assert!(r.is_integer(), "rational_to_integer: {r} is not an integer");
    r.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_inverse() {
        assert_eq!(gcd_u64(12, 18), 6);
        assert_eq!(gcd_i64(-12, 18), 6);
        let (g, x, y) = ext_gcd(240, 46);
        assert_eq!(g, 2);
        assert_eq!(240 * x + 46 * y, 2);
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(6, 9), None);
        assert_eq!(mod_inverse(5, 1), Some(0));
    }

    #[test]
    fn big_inverse() {
        let m = bi(390_625); // 5^8
        let a = bi(7);
        let inv = big_mod_inverse(&a, &m).unwrap();
        assert_eq!((a * inv) % &m, bi(1));
        assert_eq!(big_mod_inverse(&bi(5), &m), None);
        let (g, x, y) = big_ext_gcd(&bi(240), &bi(46));
        assert_eq!(g, bi(2));
        assert_eq!(bi(240) * x + bi(46) * y, bi(2));
    }

    #[test]
    fn primes_and_factorizations() {
        assert!(is_prime(2) && is_prime(13) && !is_prime(1) && !is_prime(91));
        assert_eq!(primes_up_to(13), vec![2, 3, 5, 7, 11, 13]);
        assert_eq!(next_prime(13), 17);
        assert_eq!(prime_factors(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divisors(39), vec![1, 3, 13, 39]);
        assert_eq!(sigma0(36), 9);
        assert_eq!(euler_phi(39), 24);
        assert!(is_squarefree(39) && !is_squarefree(45));
        assert_eq!(prime_to_part(45, 3), 5);
        assert_eq!(prime_to_part(91, 3), 91);
    }

    #[test]
    fn integer_square_roots() {
        assert_eq!(isqrt(&bi(0)), bi(0));
        assert_eq!(isqrt(&bi(15)), bi(3));
        assert_eq!(isqrt(&bi(16)), bi(4));
        assert!(is_perfect_square(&bi(144)));
        assert!(!is_perfect_square(&bi(96)));
        assert!(!is_perfect_square(&bi(-4)));
    }
}
