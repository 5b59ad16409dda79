//! The projective line over Z/N: canonical representatives and constant
//! time index lookup for pairs `(c : d)` with `gcd(c, d, N) = 1`, up to
//! scaling by units.

use crate::numutil::gcd_u64;
use crate::{Error, Result};

const INVALID: u32 = u32::MAX;

/// The projective line over Z/N with a complete lookup table. For each
/// orbit the canonical representative is the lexicographically smallest
/// pair `(c, d)` with both entries in `[0, N)`.
#[derive(Debug, Clone)]
pub struct P1 {
    level: u64,
    list: Vec<(i64, i64)>,
    lookup: Vec<u32>,
}

impl P1 {
    pub fn new(level: u64) -> Result<Self> {
        if level == 0 {
            return Err(Error::BadLevel(level));
        }
        let n = level as usize;
        let units: Vec<u64> = (0..level).filter(|&u| gcd_u64(u, level) == 1).collect();
        let mut list = Vec::new();
        let mut lookup = vec![INVALID; n * n];
        for c in 0..level {
            for d in 0..level {
                let slot = (c * level + d) as usize;
                if lookup[slot] != INVALID {
                    continue;
                }
                if gcd_u64(gcd_u64(c, d), level) != 1 {
                    continue;
                }
                // First visit in lexicographic order: this pair is the
                // canonical representative of its orbit. Mark the orbit.
                let index = list.len() as u32;
                list.push((c as i64, d as i64));
                for &u in &units {
                    let oc = u * c % level;
                    let od = u * d % level;
                    lookup[(oc * level + od) as usize] = index;
                }
            }
        }
        Ok(P1 { level, list, lookup })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Number of classes: the index of Gamma0(N) in PSL2(Z).
    pub fn size(&self) -> usize {
        self.list.len()
    }

    /// Canonical representative of class `i`.
    pub fn rep(&self, i: usize) -> (i64, i64) {
        self.list[i]
    }

    /// Index of the class of `(c : d)`, or None when `gcd(c, d, N) > 1`.
    pub fn index_of(&self, c: i64, d: i64) -> Option<usize> {
        let n = self.level as i64;
        let c = c.rem_euclid(n) as u64;
        let d = d.rem_euclid(n) as u64;
        let slot = (c * self.level + d) as usize;
        match self.lookup[slot] {
            INVALID => None,
            i => Some(i as usize),
        }
    }

    /// Index of the class of `(c : d)`; panics on invalid pairs.
    pub fn index_of_valid(&self, c: i64, d: i64) -> usize {
        self.index_of(c, d)
            .expect("pair with gcd(c, d, N) = 1 expected")
    }
}
