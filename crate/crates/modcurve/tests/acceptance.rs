//! End-to-end acceptance suite: one test per delivery criterion, each
//! printing exactly one `ACCEPTANCE <name>: PASS` or `FAIL` line (visible
//! under `cargo test --test acceptance -- --nocapture`).

use std::collections::BTreeSet;

use modcurve::arith::{factor_poly, real_roots_within_sqrt_bound};
use modcurve::cuspidal::h0;
use modcurve::geometry::curve_data;
use modcurve::geometry::point_count::point_count;
use modcurve::modsym::{decompose, hecke_operator, restrict_operator, SymbolSpace, P1};
use modcurve::numutil::{gcd_u64, primes_up_to};
use modcurve::pipeline::{
    check_decomposition_table, check_order_table, decomposition_row, evaluate_criterion,
    report_json, Cache, CacheKey, ConditionVerdict, CriterionReport, FinalVerdict, CACHE_VERSION,
    CATALOG,
};
use modcurve::BigInt;
use tempfile::TempDir;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !($cond) {
            return Err(format!($($arg)+));
        }
    };
}

/// Runs one acceptance criterion, prints its verdict line, and fails the
/// test if the criterion does not hold.
fn check(name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("ACCEPTANCE {name}: PASS"),
        Err(why) => {
            println!("ACCEPTANCE {name}: FAIL - {why}");
            panic!("acceptance criterion {name} failed: {why}");
        }
    }
}

fn ok<T>(r: modcurve::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn io<T>(r: std::io::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

/// Looks up one recorded input of one condition of a criterion report.
fn input<'a>(report: &'a CriterionReport, name: &str, key: &str) -> Result<&'a str, String> {
    let record = report
        .condition(name)
        .ok_or_else(|| format!("report has no condition named {name}"))?;
    record
        .inputs
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| v.as_str())
        .ok_or_else(|| format!("condition {name} records no input named {key}"))
}

fn failed_names(report: &CriterionReport) -> BTreeSet<&'static str> {
    report
        .conditions
        .iter()
        .filter(|c| c.verdict == ConditionVerdict::Fail)
        .map(|c| c.name)
        .collect()
}

/// Criterion 1: the six cuspidal-subgroup orders, exactly.
#[test]
fn table_1_cuspidal_orders() {
    check("table-1-orders", || {
        let rows = ok(check_order_table(), "order table")?;
        let expected: [(u64, u64); 6] =
            [(26, 21), (30, 192), (33, 100), (35, 48), (39, 56), (42, 2304)];
        ensure!(rows.len() == expected.len(), "expected 6 rows, got {}", rows.len());
        for (row, &(level, value)) in rows.iter().zip(&expected) {
            ensure!(row.level == level, "row order: found level {}, expected {level}", row.level);
            ensure!(
                row.pass,
                "order row {} failed: computed {}, expected {}",
                row.level,
                row.computed,
                row.expected
            );
            let order = ok(h0(level), "cuspidal order")?;
            ensure!(
                order.value == BigInt::from(value),
                "h0({level}) = {}, expected {value}",
                order.value
            );
        }
        Ok(())
    });
}

/// Criterion 2: all 24 decomposition rows as multisets of dimensions and
/// nonvanishing flags, recomputed into a fresh cache directory.
#[test]
fn table_2_decomposition_rows() {
    check("table-2-decompositions", || {
        let dir = io(TempDir::new(), "temporary cache directory")?;
        let cache = Cache::at(dir.path());
        let rows = ok(check_decomposition_table(&cache), "decomposition table")?;
        ensure!(rows.len() == 24, "expected 24 rows, got {}", rows.len());
        for row in &rows {
            ensure!(
                row.pass,
                "decomposition row {} failed: computed {}, expected {}",
                row.level,
                row.computed,
                row.expected
            );
        }
        Ok(())
    });
}

/// Criterion 3: the elimination verdict for level 39 at the prime 3, with
/// the decisive quantities pinned in the condition records.
#[test]
fn elimination_criterion_for_39_at_3() {
    check("elimination-39-3", || {
        let report = ok(evaluate_criterion(39, 3), "criterion (39, 3)")?;
        ensure!(
            report.verdict == FinalVerdict::Eliminated,
            "verdict is {}, expected eliminated",
            report.verdict.label()
        );
        ensure!(report.conditions.len() == 7, "expected 7 conditions, got {}", report.conditions.len());
        for c in &report.conditions {
            ensure!(
                c.verdict == ConditionVerdict::Pass,
                "condition {} is {}, expected pass",
                c.name,
                c.verdict.label()
            );
        }
        let pins = [
            ("cuspidal-order-coprime", "order", "56"),
            ("cuspidal-order-coprime", "gcd", "1"),
            ("weil-bound-degree-three", "prime_power", "27"),
            ("weil-bound-degree-three", "compared_level", "39"),
            ("weil-bound-degree-one", "prime_power", "3"),
            ("weil-bound-degree-one", "compared_level", "13"),
            ("central-values-nonvanishing", "pieces", "2"),
            ("central-values-nonvanishing", "vanishing", "0"),
            ("not-trigonal", "class", "NotTrigonal"),
        ];
        for (name, key, want) in pins {
            let got = input(&report, name, key)?;
            ensure!(got == want, "{name}.{key} = {got}, expected {want}");
        }
        Ok(())
    });
}

/// Criterion 4: the two negative controls fail, each for exactly the
/// expected reasons.
#[test]
fn negative_controls() {
    check("negative-controls", || {
        let r91 = ok(evaluate_criterion(91, 3), "criterion (91, 3)")?;
        ensure!(
            r91.verdict == FinalVerdict::NotEstablished,
            "(91, 3) verdict is {}, expected not-established",
            r91.verdict.label()
        );
        let want91: BTreeSet<&str> =
            ["cuspidal-order-coprime", "central-values-nonvanishing"].into_iter().collect();
        let got91 = failed_names(&r91);
        ensure!(
            got91.iter().map(|s| *s).collect::<BTreeSet<&str>>() == want91,
            "(91, 3) failed conditions {got91:?}, expected {want91:?}"
        );
        ensure!(input(&r91, "cuspidal-order-coprime", "gcd")? == "3", "(91, 3) gcd pin");
        ensure!(
            input(&r91, "central-values-nonvanishing", "vanishing")? == "2",
            "(91, 3) vanishing-count pin"
        );

        let r39 = ok(evaluate_criterion(39, 13), "criterion (39, 13)")?;
        ensure!(
            r39.verdict == FinalVerdict::NotEstablished,
            "(39, 13) verdict is {}, expected not-established",
            r39.verdict.label()
        );
        let want39: BTreeSet<&str> =
            ["weil-bound-degree-three", "weil-bound-degree-one"].into_iter().collect();
        let got39 = failed_names(&r39);
        ensure!(
            got39.iter().map(|s| *s).collect::<BTreeSet<&str>>() == want39,
            "(39, 13) failed conditions {got39:?}, expected {want39:?}"
        );
        ensure!(
            input(&r39, "weil-bound-degree-three", "exceeds_square_bound")? == "false",
            "(39, 13) square-bound pin"
        );
        Ok(())
    });
}

/// Criterion 5: structural invariants across every catalog level — space
/// dimensions, decomposition totals, commuting Hecke operators, integer
/// characteristic polynomials, and eigenvalue bounds.
#[test]
fn structural_invariants_across_the_catalog() {
    check("structural-invariants", || {
        for &(level, _) in CATALOG {
            let data = ok(curve_data(level), "curve data")?;
            let space = ok(SymbolSpace::new(level), "symbol space")?;
            ensure!(
                space.dim() as u64 == 2 * data.genus + data.nu_infinity - 1,
                "dim at level {level}: {} != 2g + cusps - 1 = {}",
                space.dim(),
                2 * data.genus + data.nu_infinity - 1
            );
            ensure!(
                space.cuspidal_dim() as u64 == 2 * data.genus,
                "cuspidal dim at level {level}: {} != 2g = {}",
                space.cuspidal_dim(),
                2 * data.genus
            );

            let dec = ok(decompose(level), "decomposition")?;
            let total: u64 = dec.factors.iter().map(|f| f.dimension * f.multiplicity).sum();
            ensure!(
                total == data.genus,
                "piece dimensions at level {level} sum to {total}, expected genus {}",
                data.genus
            );

            let good: Vec<u64> = [2, 3, 5, 7].into_iter().filter(|ell| level % ell != 0).collect();
            let mut operators = Vec::new();
            for &ell in &good {
                let t = ok(hecke_operator(&space, ell), "Hecke operator")?;
                if space.cuspidal_dim() > 0 {
                    let restricted = restrict_operator(space.cuspidal_basis(), &t);
                    let cp = ok(
                        restricted.char_poly_int(),
                        &format!("integer characteristic polynomial of T_{ell} at level {level}"),
                    )?;
                    let factored = ok(factor_poly(&cp), "characteristic polynomial factorization")?;
                    for (f, _) in &factored.factors {
                        ensure!(
                            real_roots_within_sqrt_bound(f, 4 * ell),
                            "eigenvalue of T_{ell} at level {level} exceeds 2*sqrt({ell}): {f:?}"
                        );
                    }
                }
                operators.push((ell, t));
            }
            for i in 0..operators.len() {
                for j in i + 1..operators.len() {
                    let (li, ti) = &operators[i];
                    let (lj, tj) = &operators[j];
                    ensure!(
                        ti.mul(tj) == tj.mul(ti),
                        "T_{li} and T_{lj} do not commute at level {level}"
                    );
                }
            }
        }
        Ok(())
    });
}

/// Criterion 6: small-scale oracles — brute-force projective classes,
/// the closed form for prime-level cuspidal orders, and point counts.
#[test]
fn oracle_equivalence_at_desk_scale() {
    check("oracle-equivalence", || {
        for level in 1..=60u64 {
            let p1 = ok(P1::new(level), "projective line")?;
            let units: Vec<u64> = (0..level).filter(|&u| gcd_u64(u, level) == 1).collect();
            let mut orbits: BTreeSet<(u64, u64)> = BTreeSet::new();
            for c in 0..level {
                for d in 0..level {
                    if gcd_u64(gcd_u64(c, d), level) != 1 {
                        continue;
                    }
                    let canonical = units
                        .iter()
                        .map(|&u| (u * c % level, u * d % level))
                        .min()
                        .expect("at least the unit 1");
                    orbits.insert(canonical);
                    ensure!(
                        p1.index_of(c as i64, d as i64)
                            == p1.index_of(canonical.0 as i64, canonical.1 as i64),
                        "class map splits the orbit of ({c}:{d}) at level {level}"
                    );
                }
            }
            ensure!(
                orbits.len() == p1.size(),
                "class count at level {level}: brute force {}, table {}",
                orbits.len(),
                p1.size()
            );
            for i in 0..p1.size() {
                let (c, d) = p1.rep(i);
                ensure!(
                    p1.index_of(c, d) == Some(i),
                    "representative {i} at level {level} does not look itself up"
                );
            }
            let index = ok(curve_data(level), "curve data")?.index;
            ensure!(
                p1.size() as u64 == index,
                "class count at level {level}: {} != index {index}",
                p1.size()
            );
        }

        for p in primes_up_to(100) {
            let order = ok(h0(p), "prime-level cuspidal order")?;
            let closed_form = (p - 1) / gcd_u64(12, p - 1);
            ensure!(
                order.value == BigInt::from(closed_form),
                "h0({p}) = {}, closed form gives {closed_form}",
                order.value
            );
        }

        let over_f2 = ok(point_count(11, 2, 1), "point count")?;
        ensure!(over_f2 == BigInt::from(5), "count of X0(11) over F_2 is {over_f2}, expected 5");
        for r in 1..=2u32 {
            let q = BigInt::from(2u64.pow(r));
            let count = ok(point_count(11, 2, r), "point count")?;
            let deviation = count.clone() - &q - BigInt::from(1);
            ensure!(
                &deviation * &deviation <= BigInt::from(4) * &q,
                "count {count} over F_(2^{r}) violates the square-root window"
            );
        }
        Ok(())
    });
}

/// Criterion 7: on-disk cache semantics and byte-stable reports.
#[test]
fn serialization_round_trips() {
    check("serialization", || {
        let dir = io(TempDir::new(), "temporary cache directory")?;
        let cache = Cache::at(dir.path());
        let key = CacheKey::new("acceptance-probe", 39);
        ensure!(cache.get(&key).is_none(), "fresh cache must miss");
        cache.put(&key, "{\"value\":1}");
        ensure!(
            cache.get(&key).as_deref() == Some("{\"value\":1}"),
            "stored payload must read back verbatim"
        );

        let bumped = CacheKey { kind: "acceptance-probe", level: 39, version: CACHE_VERSION + 1 };
        ensure!(cache.get(&bumped).is_none(), "newer format version must miss");

        let path = dir.path().join(key.file_name());
        io(std::fs::write(&path, b"{ not json"), "tamper with cache entry")?;
        ensure!(cache.get(&key).is_none(), "unparseable entry must read as absent");
        io(
            std::fs::write(&path, "{\"checksum\":\"00\",\"payload\":\"{\\\"value\\\":1}\"}"),
            "forge cache entry",
        )?;
        ensure!(cache.get(&key).is_none(), "checksum mismatch must read as absent");

        let first = ok(decomposition_row(26, &cache), "decomposition row")?;
        let second = ok(decomposition_row(26, &cache), "cached decomposition row")?;
        ensure!(first == second, "cached row differs from the computed row");

        let once = report_json(&ok(evaluate_criterion(39, 3), "criterion (39, 3)")?);
        let twice = report_json(&ok(evaluate_criterion(39, 3), "criterion (39, 3) again")?);
        ensure!(once == twice, "report bytes differ between two evaluations");
        ensure!(
            once.starts_with("{\"version\":\"1\",\"level\":\"39\","),
            "unexpected report prefix: {once}"
        );
        ensure!(once.contains("\"verdict\":\"eliminated\""), "report lacks the final verdict");
        ensure!(once.ends_with('}') && !once.contains('\n'), "report must be a single JSON line");
        Ok(())
    });
}
