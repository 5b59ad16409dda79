//! Gonality certificates for X0(N): whether the curve admits a degree-3
//! map to the projective line, from genus bounds in low genus and from
//! complete curated classifications otherwise.

use crate::geometry::curve_data;
use crate::Result;
use std::sync::OnceLock;

/// Coarse gonality classification of X0(N).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GonalityClass {
    /// Genus 0: the curve is the projective line.
    Rational,
    /// Genus 1, or a genus >= 3 curve from the trigonal table: admits a
    /// degree-3 map to the projective line.
    Trigonal,
    /// Genus 2: gonality two (and degree <= 3 maps exist).
    Hyperelliptic,
    /// Genus >= 3 and not in the trigonal table: no degree-3 map exists.
    NotTrigonal,
}

/// A finite-field point count certifying the absence of a degree-3 map:
/// more than `3*(q+1)` points cannot fit in fibers over the projective
/// line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrigonalityWitness {
    pub field_size: u64,
    pub point_count: u64,
}

/// The gonality claim for one level with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GonalityCertificate {
    pub level: u64,
    pub genus: u64,
    pub claim: GonalityClass,
    /// "genus-bound" for genus <= 2, "curated-table" for genus >= 3.
    pub claim_basis: &'static str,
    /// Source tag of the curated table consulted for genus >= 3 claims.
    pub table_source: Option<&'static str>,
    /// Whether the curve is hyperelliptic, with the table source when the
    /// answer came from the curated list.
    pub hyperelliptic: bool,
    pub hyperelliptic_source: Option<&'static str>,
    /// Optional independent point-count confirmation for `NotTrigonal`.
    pub witness: Option<TrigonalityWitness>,
}

struct GonalityTables {
    hyperelliptic: Vec<u64>,
    hyperelliptic_tag: &'static str,
    trigonal: Vec<u64>,
    trigonal_tag: &'static str,
}

fn tables() -> &'static GonalityTables {
    static TABLES: OnceLock<GonalityTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let raw: &'static str = include_str!("data/gonality.txt");
        let mut hyperelliptic = Vec::new();
        let mut hyperelliptic_tag = "";
        let mut trigonal = Vec::new();
        let mut trigonal_tag = "";
        for line in raw.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let kind = parts.next().expect("nonempty line has a kind");
            let tag = parts.next().expect("record has a source tag");
            let levels: Vec<u64> = parts
                .map(|t| t.parse().expect("record levels are integers"))
                .collect();
            assert!(!levels.is_empty(), "record lists at least one level");
            assert!(
                levels.windows(2).all(|w| w[0] < w[1]),
                "record levels are strictly increasing"
            );
            match kind {
                "hyperelliptic" => {
                    hyperelliptic = levels;
                    hyperelliptic_tag = tag;
                }
                "trigonal" => {
                    trigonal = levels;
                    trigonal_tag = tag;
                }
                other => panic!("unknown gonality record kind: {other}"),
            }
        }
        assert!(!hyperelliptic.is_empty() && !trigonal.is_empty());
        GonalityTables {
            hyperelliptic,
            hyperelliptic_tag,
            trigonal,
            trigonal_tag,
        }
    })
}

/// Produces the gonality certificate for a level.
pub fn gonality_certificate(level: u64) -> Result<GonalityCertificate> {
    let data = curve_data(level)?;
    let t = tables();
    let genus = data.genus;
    let in_hyp = t.hyperelliptic.binary_search(&level).is_ok();
    let in_tri = t.trigonal.binary_search(&level).is_ok();

    let (claim, claim_basis, table_source) = match genus {
        0 => (GonalityClass::Rational, "genus-bound", None),
        1 => (GonalityClass::Trigonal, "genus-bound", None),
        2 => (GonalityClass::Hyperelliptic, "genus-bound", None),
        _ => {
            if in_tri {
                (GonalityClass::Trigonal, "curated-table", Some(t.trigonal_tag))
            } else {
                (
                    GonalityClass::NotTrigonal,
                    "curated-table",
                    Some(t.trigonal_tag),
                )
            }
        }
    };
    let hyperelliptic = genus >= 2 && in_hyp;
    let hyperelliptic_source = if genus >= 2 && in_hyp {
        Some(t.hyperelliptic_tag)
    } else {
        None
    };
    assert!(
        genus != 2 || in_hyp || level > 200,
        "every genus-2 level in the table range must be listed as hyperelliptic"
    );

    Ok(GonalityCertificate {
        level,
        genus,
        claim,
        claim_basis,
        table_source,
        hyperelliptic,
        hyperelliptic_source,
        witness: None,
    })
}

/// True iff a point count over F_q rules out a degree-3 map to the
/// projective line: the count exceeds `3 * (q + 1)`.
pub fn witness_excludes_trigonal(field_size: u64, point_count: u64) -> bool {
    point_count > 3 * (field_size + 1)
}

impl GonalityCertificate {
    /// Attaches a point-count witness; the count must actually be
    /// conclusive and the claim must be `NotTrigonal`.
    pub fn with_witness(mut self, field_size: u64, point_count: u64) -> Self {
        assert!(self.claim == GonalityClass::NotTrigonal);
        assert!(witness_excludes_trigonal(field_size, point_count));
        self.witness = Some(TrigonalityWitness { field_size, point_count });
        self
    }
}
