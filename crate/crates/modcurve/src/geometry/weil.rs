//! Square-root bounds for reductions of torsion points.
//!
//! For a prime `p` and residue degree `f`, the multiplicative order
//! constraint coming from reduction modulo a degree-`f` prime above `p`
//! is violated once the relevant level exceeds `(1 + p^(f/2))^2`. The
//! comparisons below are exact integer forms of that strict inequality:
//! `n > (1 + sqrt(q))^2` iff `n - 1 - q > 0` and `(n - 1 - q)^2 > 4q`
//! (equality `(n-1-q)^2 = 4q` cannot occur when `q` is a prime or a prime
//! cube, since `4q` is then not a perfect square).

use crate::numutil::{is_prime, prime_to_part};
use crate::{Error, Result};

/// Outcome of the square-root bound test for a level and reduction prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeilAdmissibility {
    pub level: u64,
    pub prime: u64,
    /// Residue degree of the prime above `p`: 1 or 3.
    pub residue_degree: u64,
    /// The quantity compared against the bound: the level itself for
    /// residue degree 3, its prime-to-p part for residue degree 1.
    pub compared_level: u64,
    /// Levels 1..4 never pass (torsion is unobstructed there).
    pub level_large_enough: bool,
    /// Unramified reduction kills p-torsion only for p > 2.
    pub prime_large_enough: bool,
    /// The exact strict inequality `compared_level > (1 + p^(f/2))^2`.
    pub exceeds_square_bound: bool,
    /// Conjunction of the three conditions above.
    pub admissible: bool,
}

/// Evaluates the exact square-root bound for level `n`, prime `p`, and
/// residue degree `f` in `{1, 3}`.
pub fn weil_admissibility(level: u64, p: u64, f: u64) -> Result<WeilAdmissibility> {
    if level == 0 {
        return Err(Error::BadLevel(level));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if f != 1 && f != 3 {
        return Err(Error::BadResidueDegree(f));
    }
    let compared_level = if f == 1 {
        prime_to_part(level, p)
    } else {
        level
    };
    let q = p.pow(f as u32);
    let level_large_enough = level > 4;
    let prime_large_enough = p > 2;
    let exceeds_square_bound = {
        let n = compared_level as i128;
        let q = q as i128;
        let d = n - 1 - q;
        d > 0 && d * d > 4 * q
    };
    let admissible = level_large_enough && prime_large_enough && exceeds_square_bound;
    Ok(WeilAdmissibility {
        level,
        prime: p,
        residue_degree: f,
        compared_level,
        level_large_enough,
        prime_large_enough,
        exceeds_square_bound,
        admissible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn input_validation() {
        assert!(matches!(weil_admissibility(0, 3, 3), Err(Error::BadLevel(0))));
        assert!(matches!(weil_admissibility(39, 4, 3), Err(Error::NotPrime(4))));
        assert!(matches!(
            weil_admissibility(39, 3, 2),
            Err(Error::BadResidueDegree(2))
        ));
    }

    #[test]
    fn degree_three_bound() {
        // 39 > (1 + 3*sqrt(3))^2 = 28 + 6*sqrt(3) ~ 38.39: passes.
        let w = weil_admissibility(39, 3, 3).unwrap();
        assert!(w.admissible);
        assert_eq!(w.compared_level, 39);
        // 38 < 38.39...: fails on the exact inequality.
        let w = weil_admissibility(38, 3, 3).unwrap();
        assert!(!w.exceeds_square_bound);
        assert!(!w.admissible);
        // 13^3 dwarfs 39.
        let w = weil_admissibility(39, 13, 3).unwrap();
        assert!(!w.exceeds_square_bound);
        assert!(!w.admissible);
    }

    #[test]
    fn degree_one_uses_prime_to_p_part() {
        // Level 39, p = 3: compares 13 against (1 + sqrt(3))^2 ~ 7.46.
        let w = weil_admissibility(39, 3, 1).unwrap();
        assert_eq!(w.compared_level, 13);
        assert!(w.admissible);
        // Level 91, p = 3: 3 does not divide 91, so the full level is used.
        let w = weil_admissibility(91, 3, 1).unwrap();
        assert_eq!(w.compared_level, 91);
        assert!(w.admissible);
        // Level 12, p = 3: 4 < 7.46 fails.
        let w = weil_admissibility(12, 3, 1).unwrap();
        assert_eq!(w.compared_level, 4);
        assert!(!w.exceeds_square_bound);
    }

    #[test]
    fn small_prime_and_level_guards() {
        // p = 2 never qualifies even when the inequality holds.
        let w = weil_admissibility(1000, 2, 3).unwrap();
        assert!(w.exceeds_square_bound);
        assert!(!w.prime_large_enough);
        assert!(!w.admissible);
        // Tiny levels fail the level guard.
        let w = weil_admissibility(3, 3, 3).unwrap();
        assert!(!w.level_large_enough);
        assert!(!w.admissible);
    }

    #[test]
    fn boundary_is_strict() {
        // (1 + sqrt(q))^2 with q = 27 lies in (38, 39); check both sides
        // of the unique integer boundary.
        assert!(weil_admissibility(39, 3, 3).unwrap().exceeds_square_bound);
        assert!(!weil_admissibility(38, 3, 3).unwrap().exceeds_square_bound);
        // f = 1, q = 3: boundary (1 + sqrt(3))^2 in (7, 8).
        assert!(weil_admissibility(8 * 3, 3, 1).unwrap().exceeds_square_bound);
        assert!(!weil_admissibility(7 * 3, 3, 1).unwrap().exceeds_square_bound);
    }
}
