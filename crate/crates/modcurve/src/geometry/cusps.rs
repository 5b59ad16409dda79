//! Cusps of X0(N): representation, the exact equivalence test under
//! Gamma0(N), and enumeration of the cusp classes with widths and field
//! degrees.

use crate::numutil::{divisors, euler_phi, gcd_i64, gcd_u64, mod_inverse};
use crate::{Error, Result};

/// A cusp of the extended upper half plane, written `numerator/denominator`
/// in lowest terms with `denominator >= 0`; the denominator is zero exactly
/// for the cusp at infinity, stored as `1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cusp {
    numerator: i64,
    denominator: u64,
}

impl Cusp {
    /// Builds a cusp from any integer pair, reducing to lowest terms.
    /// Panics on `0/0`.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(
            numerator != 0 || denominator != 0,
            "cusp 0/0 is undefined"
        );
        if denominator == 0 {
            return Cusp { numerator: 1, denominator: 0 };
        }
        let g = gcd_i64(numerator, denominator);
        let mut n = numerator / g;
        let mut d = denominator / g;
        if d < 0 {
            n = -n;
            d = -d;
        }
        Cusp { numerator: n, denominator: d as u64 }
    }

    pub fn infinity() -> Self {
        Cusp { numerator: 1, denominator: 0 }
    }

    pub fn zero() -> Self {
        Cusp { numerator: 0, denominator: 1 }
    }

    pub fn is_infinity(&self) -> bool {
        self.denominator == 0
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }
}

impl std::fmt::Display for Cusp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_infinity() {
            write!(f, "oo")
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// True iff two cusps are equivalent under Gamma0(N): writing them as
/// `a_i/q_i` in lowest terms (with infinity rewritten as `1/N`), they are
/// equivalent iff `s_1 q_2 = s_2 q_1 (mod gcd(q_1 q_2, N))`, where
/// `s_i` inverts `a_i` modulo `q_i`.
pub fn cusps_equivalent(level: u64, x: &Cusp, y: &Cusp) -> bool {
    assert!(level >= 1, "level must be positive");
    let (a1, q1) = normalize_at_level(level, x);
    let (a2, q2) = normalize_at_level(level, y);
    let s1 = inverse_mod(a1, q1);
    let s2 = inverse_mod(a2, q2);
    let g = gcd_u64(q1 * q2, level) as i64;
    (s1 * q2 as i64 - s2 * q1 as i64).rem_euclid(g) == 0
}

fn normalize_at_level(level: u64, c: &Cusp) -> (i64, u64) {
    if c.is_infinity() {
        (1, level)
    } else {
        (c.numerator, c.denominator)
    }
}

fn inverse_mod(a: i64, q: u64) -> i64 {
    mod_inverse(a, q as i64).expect("cusp numerator coprime to denominator")
}

/// One Gamma0(N)-class of cusps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspClass {
    /// First representative in the enumeration order.
    pub representative: Cusp,
    /// gcd of the representative denominator with the level.
    pub denominator_divisor: u64,
    /// Width of the cusp.
    pub width: u64,
    /// Degree over Q of the field of definition of the cusp.
    pub field_degree: u64,
}

/// The full set of cusp classes of X0(N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspSet {
    pub level: u64,
    pub classes: Vec<CuspClass>,
}

impl CuspSet {
    /// Index of the class containing the given cusp.
    pub fn classify(&self, c: &Cusp) -> usize {
        self.classes
            .iter()
            .position(|cl| cusps_equivalent(self.level, &cl.representative, c))
            .expect("every cusp belongs to one of the enumerated classes")
    }
}

/// Enumerates the cusp classes of X0(N). Representatives are `a/d` with
/// `d` running over the divisors of N; widths are `N / gcd(d^2, N)` and
/// field degrees `phi(gcd(d, N/d))`.
pub fn cusp_set(level: u64) -> Result<CuspSet> {
    if level == 0 {
        return Err(Error::BadLevel(level));
    }
    let mut classes: Vec<CuspClass> = Vec::new();
    for d in divisors(level) {
        let stratum_size = euler_phi(gcd_u64(d, level / d));
        let width = level / gcd_u64(d * d, level);
        let mut found = 0u64;
        let candidates: Vec<i64> = if d == 1 {
            vec![0]
        } else {
            (1..=d as i64).filter(|&a| gcd_i64(a, d as i64) == 1).collect()
        };
        for a in candidates {
            let c = Cusp::new(a, d as i64);
            let seen = classes
                .iter()
                .any(|cl| cusps_equivalent(level, &cl.representative, &c));
            if !seen {
                classes.push(CuspClass {
                    representative: c,
                    denominator_divisor: d,
                    width,
                    field_degree: stratum_size,
                });
                found += 1;
            }
        }
        assert_eq!(
            found, stratum_size,
            "stratum at denominator {d} of level {level} has the wrong size"
        );
    }
    Ok(CuspSet { level, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::curve_data;

    #[test]
    fn normalization() {
        assert_eq!(Cusp::new(2, 4), Cusp::new(1, 2));
        assert_eq!(Cusp::new(-2, -4), Cusp::new(1, 2));
        assert_eq!(Cusp::new(2, -4), Cusp::new(-1, 2));
        assert_eq!(Cusp::new(5, 0), Cusp::infinity());
        assert_eq!(Cusp::new(0, 7), Cusp::zero());
        assert_eq!(Cusp::new(1, 2).to_string(), "1/2");
        assert_eq!(Cusp::infinity().to_string(), "oo");
    }

    #[test]
    fn equivalence_at_level_eleven() {
        // X0(11) has two cusps: 0 and infinity.
        let zero = Cusp::zero();
        let inf = Cusp::infinity();
        assert!(!cusps_equivalent(11, &zero, &inf));
        // 1/11 is the infinity class; 3/7 lands in the zero class.
        assert!(cusps_equivalent(11, &inf, &Cusp::new(1, 11)));
        assert!(cusps_equivalent(11, &zero, &Cusp::new(3, 7)));
        // Integers are all in the zero class.
        assert!(cusps_equivalent(11, &zero, &Cusp::new(4, 1)));
    }

    #[test]
    fn class_counts_match_curve_data() {
        for level in 1..=80 {
            let set = cusp_set(level).unwrap();
            let data = curve_data(level).unwrap();
            assert_eq!(
                set.classes.len() as u64,
                data.nu_infinity,
                "cusp count at level {level}"
            );
            // Widths sum to the index.
            let width_sum: u64 = set.classes.iter().map(|c| c.width).sum();
            assert_eq!(width_sum, data.index, "width sum at level {level}");
        }
    }

    #[test]
    fn level_39_classes() {
        let set = cusp_set(39).unwrap();
        assert_eq!(set.classes.len(), 4);
        let by_d: Vec<(u64, u64, u64)> = set
            .classes
            .iter()
            .map(|c| (c.denominator_divisor, c.width, c.field_degree))
            .collect();
        assert_eq!(by_d, vec![(1, 39, 1), (3, 13, 1), (13, 3, 1), (39, 1, 1)]);
        // The infinity cusp is the one with denominator 39 (width 1).
        assert_eq!(set.classify(&Cusp::infinity()), 3);
        assert_eq!(set.classify(&Cusp::zero()), 0);
    }

    #[test]
    fn classify_arbitrary_cusps() {
        let set = cusp_set(39).unwrap();
        // 2/7: denominator coprime to 39, equivalent to an integer cusp.
        assert_eq!(set.classify(&Cusp::new(2, 7)), 0);
        // 1/3 and 2/3 are the same class here (field degree 1).
        assert_eq!(set.classify(&Cusp::new(1, 3)), set.classify(&Cusp::new(2, 3)));
    }

    #[test]
    fn field_degrees_can_exceed_one() {
        // Level 25: the 1/5-type cusps split into phi(5) = 4 classes.
        let set = cusp_set(25).unwrap();
        assert_eq!(set.classes.len(), 6);
        let deg4: Vec<_> = set
            .classes
            .iter()
            .filter(|c| c.denominator_divisor == 5)
            .collect();
        assert_eq!(deg4.len(), 4);
        for c in deg4 {
            assert_eq!(c.field_degree, 4);
            assert_eq!(c.width, 1);
        }
    }
}
