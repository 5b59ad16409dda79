//! The assembled elimination criterion for one (level, prime) pair.
//!
//! Seven independent conditions are evaluated and recorded with their
//! exact numeric inputs; the pair is eliminated only when every single
//! condition passes.  A condition whose computation cannot be carried
//! out (a non-square-free level for the cuspidal order, an unresolved
//! decomposition) is recorded as unavailable, which blocks elimination
//! but is distinguished from an outright failure.

use num_integer::Integer;
use num_traits::One;

use super::catalog;
use crate::cuspidal::h0;
use crate::geometry::cusps::cusp_set;
use crate::geometry::gonality::{gonality_certificate, GonalityClass};
use crate::geometry::weil::weil_admissibility;
use crate::lvalues::l_value_flags;
use crate::numutil::{euler_phi, is_prime};
use crate::{BigInt, Error, Result};

/// Verdict of a single condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionVerdict {
    Pass,
    Fail,
    /// The underlying computation does not apply or did not resolve.
    Unavailable,
}

impl ConditionVerdict {
    pub fn label(self) -> &'static str {
        match self {
            ConditionVerdict::Pass => "pass",
            ConditionVerdict::Fail => "fail",
            ConditionVerdict::Unavailable => "unavailable",
        }
    }
}

/// One evaluated condition with its exact inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionRecord {
    pub name: &'static str,
    /// Numeric and categorical inputs backing the verdict, in a fixed
    /// order, every number rendered as a decimal string.
    pub inputs: Vec<(&'static str, String)>,
    pub verdict: ConditionVerdict,
    /// What the passing condition certifies, in one sentence.
    pub anchor: &'static str,
}

/// Overall verdict for the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinalVerdict {
    Eliminated,
    NotEstablished,
}

impl FinalVerdict {
    pub fn label(self) -> &'static str {
        match self {
            FinalVerdict::Eliminated => "eliminated",
            FinalVerdict::NotEstablished => "not-established",
        }
    }
}

/// The full evaluation for one (level, prime) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub level: u64,
    pub prime: u64,
    pub conditions: Vec<ConditionRecord>,
    pub verdict: FinalVerdict,
}

impl CriterionReport {
    /// The record for a named condition, if present.
    pub fn condition(&self, name: &str) -> Option<&ConditionRecord> {
        self.conditions.iter().find(|c| c.name == name)
    }
}

/// Evaluates all seven conditions for a catalog level and a prime.
pub fn evaluate_criterion(level: u64, p: u64) -> Result<CriterionReport> {
    catalog::status(level)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }

    let conditions = vec![
        level_bound(level),
        weil_bound(level, p, 3)?,
        weil_bound(level, p, 1)?,
        cuspidal_order_coprime(level, p),
        cusp_fields_abelian(level)?,
        central_values_nonvanishing(level),
        not_trigonal(level)?,
    ];
    let verdict = if conditions.iter().all(|c| c.verdict == ConditionVerdict::Pass) {
        FinalVerdict::Eliminated
    } else {
        FinalVerdict::NotEstablished
    };
    Ok(CriterionReport { level, prime: p, conditions, verdict })
}

fn pass_fail(ok: bool) -> ConditionVerdict {
    if ok {
        ConditionVerdict::Pass
    } else {
        ConditionVerdict::Fail
    }
}

fn level_bound(level: u64) -> ConditionRecord {
    ConditionRecord {
        name: "level-bound",
        inputs: vec![("level", level.to_string()), ("minimum_exclusive", "4".into())],
        verdict: pass_fail(level > 4),
        anchor: "levels above four admit no additive degeneration at the bad primes",
    }
}

fn weil_bound(level: u64, p: u64, degree: u64) -> Result<ConditionRecord> {
    let w = weil_admissibility(level, p, degree)?;
    let name = if degree == 3 { "weil-bound-degree-three" } else { "weil-bound-degree-one" };
    let anchor = if degree == 3 {
        "the level exceeds the square bound for reduction at a residue field of degree three"
    } else {
        "the prime-to-p part of the level exceeds the square bound for reduction at a \
         residue field of degree one"
    };
    Ok(ConditionRecord {
        name,
        inputs: vec![
            ("level", level.to_string()),
            ("prime", p.to_string()),
            ("residue_degree", degree.to_string()),
            ("compared_level", w.compared_level.to_string()),
            ("prime_power", p.pow(degree as u32).to_string()),
            ("exceeds_square_bound", w.exceeds_square_bound.to_string()),
            ("prime_large_enough", w.prime_large_enough.to_string()),
        ],
        verdict: pass_fail(w.admissible),
        anchor,
    })
}

fn cuspidal_order_coprime(level: u64, p: u64) -> ConditionRecord {
    let name = "cuspidal-order-coprime";
    let anchor = "torsion specializes injectively because the cuspidal order is prime to p";
    match h0(level) {
        Ok(order) => {
            let gcd = order.value.gcd(&BigInt::from(p));
            ConditionRecord {
                name,
                inputs: vec![
                    ("order", order.value.to_string()),
                    ("prime", p.to_string()),
                    ("gcd", gcd.to_string()),
                ],
                verdict: pass_fail(gcd.is_one()),
                anchor,
            }
        }
        Err(e) => ConditionRecord {
            name,
            inputs: vec![("reason", e.to_string())],
            verdict: ConditionVerdict::Unavailable,
            anchor,
        },
    }
}

fn cusp_fields_abelian(level: u64) -> Result<ConditionRecord> {
    let cusps = cusp_set(level)?;
    let phi = euler_phi(level);
    let max_degree = cusps.classes.iter().map(|c| c.field_degree).max().unwrap_or(1);
    let all_divide = cusps.classes.iter().all(|c| phi % c.field_degree == 0);
    Ok(ConditionRecord {
        name: "cusp-fields-abelian",
        inputs: vec![
            ("cusp_count", cusps.classes.len().to_string()),
            ("max_field_degree", max_degree.to_string()),
            ("phi_of_level", phi.to_string()),
        ],
        verdict: pass_fail(all_divide),
        anchor: "every cusp is defined over the cyclotomic field of the level",
    })
}

fn central_values_nonvanishing(level: u64) -> ConditionRecord {
    let name = "central-values-nonvanishing";
    let anchor = "nonvanishing central values make the rational points of every quotient finite";
    match l_value_flags(level) {
        Ok(flags) => {
            let vanishing = flags.flags.iter().filter(|f| !*f).count();
            ConditionRecord {
                name,
                inputs: vec![
                    ("pieces", flags.flags.len().to_string()),
                    ("vanishing", vanishing.to_string()),
                ],
                verdict: pass_fail(vanishing == 0),
                anchor,
            }
        }
        Err(e) => ConditionRecord {
            name,
            inputs: vec![("reason", e.to_string())],
            verdict: ConditionVerdict::Unavailable,
            anchor,
        },
    }
}

fn not_trigonal(level: u64) -> Result<ConditionRecord> {
    let cert = gonality_certificate(level)?;
    let mut inputs = vec![
        ("genus", cert.genus.to_string()),
        ("class", format!("{:?}", cert.claim)),
        ("basis", cert.claim_basis.to_string()),
    ];
    if let Some(source) = cert.table_source {
        inputs.push(("source", source.to_string()));
    }
    Ok(ConditionRecord {
        name: "not-trigonal",
        inputs,
        verdict: pass_fail(cert.claim == GonalityClass::NotTrigonal),
        anchor: "no degree-three map to the line collects the cubic points into divisors",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preconditions_are_enforced() {
        assert!(matches!(evaluate_criterion(41, 3), Err(Error::UnknownLevel(41))));
        assert!(matches!(evaluate_criterion(39, 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn the_target_pair_is_eliminated() {
        let report = evaluate_criterion(39, 3).unwrap();
        assert_eq!(report.verdict, FinalVerdict::Eliminated);
        assert_eq!(report.conditions.len(), 7);
        for c in &report.conditions {
            assert_eq!(c.verdict, ConditionVerdict::Pass, "condition {}", c.name);
        }
        let order = report.condition("cuspidal-order-coprime").unwrap();
        assert!(order.inputs.contains(&("order", "56".to_string())));
        assert!(order.inputs.contains(&("gcd", "1".to_string())));
        let cube = report.condition("weil-bound-degree-three").unwrap();
        assert!(cube.inputs.contains(&("prime_power", "27".to_string())));
        assert!(cube.inputs.contains(&("compared_level", "39".to_string())));
        let line = report.condition("weil-bound-degree-one").unwrap();
        assert!(line.inputs.contains(&("compared_level", "13".to_string())));
    }

    #[test]
    fn large_prime_fails_the_cube_bound() {
        let report = evaluate_criterion(39, 13).unwrap();
        assert_eq!(report.verdict, FinalVerdict::NotEstablished);
        let cube = report.condition("weil-bound-degree-three").unwrap();
        assert_eq!(cube.verdict, ConditionVerdict::Fail);
    }

    #[test]
    fn vanishing_central_value_blocks_elimination() {
        let report = evaluate_criterion(91, 3).unwrap();
        assert_eq!(report.verdict, FinalVerdict::NotEstablished);
        let central = report.condition("central-values-nonvanishing").unwrap();
        assert_eq!(central.verdict, ConditionVerdict::Fail);
        assert!(central.inputs.contains(&("vanishing", "2".to_string())));
        // The cuspidal order 336 = 2^4 * 3 * 7 shares the factor 3.
        let order = report.condition("cuspidal-order-coprime").unwrap();
        assert_eq!(order.verdict, ConditionVerdict::Fail);
        assert!(order.inputs.contains(&("gcd", "3".to_string())));
    }

    #[test]
    fn non_square_free_levels_report_unavailable_order() {
        let report = evaluate_criterion(121, 3).unwrap();
        assert_eq!(report.verdict, FinalVerdict::NotEstablished);
        let order = report.condition("cuspidal-order-coprime").unwrap();
        assert_eq!(order.verdict, ConditionVerdict::Unavailable);
        let central = report.condition("central-values-nonvanishing").unwrap();
        assert_eq!(central.verdict, ConditionVerdict::Fail);
    }

    #[test]
    fn trigonal_levels_fail_the_last_condition() {
        let report = evaluate_criterion(45, 3).unwrap();
        let g = report.condition("not-trigonal").unwrap();
        assert_eq!(g.verdict, ConditionVerdict::Fail);
        assert_eq!(report.verdict, FinalVerdict::NotEstablished);
    }
}
