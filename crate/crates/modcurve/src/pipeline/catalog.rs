//! The tracked catalog of levels and their elimination status.
//!
//! These are the 24 levels in play for cyclic torsion over cubic fields
//! after the classical genus and class-number arguments: the criterion
//! assembled in this crate settles level 39, ten further levels were
//! settled by two earlier published installments, and the rest remain
//! open.

use crate::{Error, Result};

/// Current status of one tracked level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelStatus {
    /// Eliminated by the first earlier installment.
    EliminatedPriorFirst,
    /// Eliminated by the second earlier installment.
    EliminatedPriorSecond,
    /// Eliminated by the criterion assembled in this crate.
    EliminatedHere,
    /// Not settled by this pipeline.
    Open,
}

impl LevelStatus {
    /// Stable lowercase label used in CLI output.
    pub fn label(self) -> &'static str {
        match self {
            LevelStatus::EliminatedPriorFirst => "eliminated-prior-i",
            LevelStatus::EliminatedPriorSecond => "eliminated-prior-ii",
            LevelStatus::EliminatedHere => "eliminated-here",
            LevelStatus::Open => "open",
        }
    }
}

/// The tracked levels in ascending order, with statuses.
pub const CATALOG: &[(u64, LevelStatus)] = &[
    (22, LevelStatus::EliminatedPriorSecond),
    (24, LevelStatus::Open),
    (25, LevelStatus::EliminatedPriorSecond),
    (26, LevelStatus::Open),
    (27, LevelStatus::Open),
    (28, LevelStatus::Open),
    (30, LevelStatus::Open),
    (32, LevelStatus::Open),
    (33, LevelStatus::Open),
    (35, LevelStatus::Open),
    (36, LevelStatus::Open),
    (39, LevelStatus::EliminatedHere),
    (40, LevelStatus::EliminatedPriorSecond),
    (42, LevelStatus::Open),
    (45, LevelStatus::Open),
    (49, LevelStatus::EliminatedPriorSecond),
    (55, LevelStatus::EliminatedPriorFirst),
    (63, LevelStatus::Open),
    (65, LevelStatus::EliminatedPriorFirst),
    (77, LevelStatus::EliminatedPriorFirst),
    (91, LevelStatus::EliminatedPriorFirst),
    (121, LevelStatus::Open),
    (143, LevelStatus::EliminatedPriorFirst),
    (169, LevelStatus::EliminatedPriorFirst),
];

/// The tracked levels in ascending order.
pub fn levels() -> Vec<u64> {
    CATALOG.iter().map(|&(n, _)| n).collect()
}

/// True iff the level is tracked.
pub fn contains(level: u64) -> bool {
    CATALOG.binary_search_by_key(&level, |&(n, _)| n).is_ok()
}

/// Status of a tracked level.
pub fn status(level: u64) -> Result<LevelStatus> {
    CATALOG
        .binary_search_by_key(&level, |&(n, _)| n)
        .map(|i| CATALOG[i].1)
        .map_err(|_| Error::UnknownLevel(level))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_sorted_and_complete() {
        assert_eq!(CATALOG.len(), 24);
        assert!(CATALOG.windows(2).all(|w| w[0].0 < w[1].0));
        assert_eq!(levels().first(), Some(&22));
        assert_eq!(levels().last(), Some(&169));
    }

    #[test]
    fn status_partition_matches_the_record() {
        let by_status = |s: LevelStatus| -> Vec<u64> {
            CATALOG.iter().filter(|&&(_, t)| t == s).map(|&(n, _)| n).collect()
        };
        assert_eq!(
            by_status(LevelStatus::EliminatedPriorFirst),
            vec![55, 65, 77, 91, 143, 169]
        );
        assert_eq!(by_status(LevelStatus::EliminatedPriorSecond), vec![22, 25, 40, 49]);
        assert_eq!(by_status(LevelStatus::EliminatedHere), vec![39]);
        assert_eq!(by_status(LevelStatus::Open).len(), 13);
    }

    #[test]
    fn lookup_outside_the_catalog_fails() {
        assert!(contains(39));
        assert!(!contains(41));
        assert!(matches!(status(41), Err(Error::UnknownLevel(41))));
        assert_eq!(status(22).unwrap(), LevelStatus::EliminatedPriorSecond);
    }
}
