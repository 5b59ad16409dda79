//! Geometric invariants of the modular curves X0(N): index, elliptic
//! point counts, cusp counts, genus, cusp enumeration and equivalence,
//! point counts over finite fields, square-root reduction bounds, and
//! gonality certificates.

pub mod cusps;
pub mod gonality;
pub mod point_count;
pub mod weil;

use crate::numutil::{divisors, euler_phi, gcd_u64, prime_divisors};
use crate::{Error, Result};

/// Basic invariants of X0(N).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveData {
    pub level: u64,
    /// Index of Gamma0(N) in PSL2(Z).
    pub index: u64,
    /// Number of elliptic points of order 2.
    pub nu2: u64,
    /// Number of elliptic points of order 3.
    pub nu3: u64,
    /// Number of cusps.
    pub nu_infinity: u64,
    /// Genus of the compactified curve.
    pub genus: u64,
}

/// Computes the invariants of X0(N) for `level >= 1`.
pub fn curve_data(level: u64) -> Result<CurveData> {
    if level == 0 {
        return Err(Error::BadLevel(level));
    }
    let primes = prime_divisors(level);

    let mut index = level;
    for &p in &primes {
        // index *= (1 + 1/p) exactly: level is divisible by p.
        index = index / p * (p + 1);
    }

    let nu2 = if level % 4 == 0 {
        0
    } else {
        primes
            .iter()
            .map(|&p| match p % 4 {
                0 | 2 => 1, // p == 2
                1 => 2,
                _ => 0,
            })
            .product()
    };

    let nu3 = if level % 9 == 0 {
        0
    } else {
        primes
            .iter()
            .map(|&p| {
                if p == 3 {
                    1
                } else {
                    match p % 3 {
                        1 => 2,
                        _ => 0,
                    }
                }
            })
            .product()
    };

    let nu_infinity: u64 = divisors(level)
        .iter()
        .map(|&d| euler_phi(gcd_u64(d, level / d)))
        .sum();

    // genus = 1 + index/12 - nu2/4 - nu3/3 - nu_infinity/2, always integral.
    let twelve_g = 12 + index as i64 - 3 * nu2 as i64 - 4 * nu3 as i64 - 6 * nu_infinity as i64;
    assert!(
        twelve_g >= 0 && twelve_g % 12 == 0,
        "genus formula must give a nonnegative integer at level {level}"
    );
    let genus = (twelve_g / 12) as u64;

    Ok(CurveData {
        level,
        index,
        nu2,
        nu3,
        nu_infinity,
        genus,
    })
}
