//! Splits the boundary kernel into isotypic blocks using the operators at
//! small primes coprime to the level, identifies each block with a simple
//! piece first occurring at a divisor level, and counts copies.

use super::hecke::{hecke_operator, restrict_operator};
use super::paths::new_subspace;
use super::space::SymbolSpace;
use crate::arith::{factor_poly, IntPolynomial, RationalMatrix};
use crate::geometry::curve_data;
use crate::numutil::{divisors, primes_up_to, sigma0};
use crate::{Error, Result};

/// One simple piece of the decomposition at a given level.
#[derive(Debug, Clone)]
pub struct IsogenyFactor {
    /// Divisor level where this piece first occurs.
    pub new_level: u64,
    /// Dimension of the piece as an abelian variety: half the dimension
    /// of its symbol block at its own level.
    pub dimension: u64,
    /// Number of copies inside the ambient level.
    pub multiplicity: u64,
    /// For each probe prime, the squarefree part of the characteristic
    /// polynomial of the operator on the block. Sorted by probe.
    pub fingerprint: Vec<(u64, IntPolynomial)>,
    /// Basis (columns, ambient quotient coordinates) of the full isotypic
    /// block at the ambient level: `2 * dimension * multiplicity` columns.
    pub subspace: RationalMatrix,
}

/// The full decomposition at one level.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub level: u64,
    pub genus: u64,
    /// Probe primes used, ascending.
    pub probes: Vec<u64>,
    /// Factors in canonical order: by divisor level, then dimension, then
    /// fingerprint.
    pub factors: Vec<IsogenyFactor>,
}

impl Decomposition {
    /// Total number of simple pieces counted with multiplicity.
    pub fn factor_count(&self) -> u64 {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }

    /// Dimensions of the pieces, each repeated by multiplicity, in
    /// canonical factor order.
    pub fn flattened_dimensions(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for f in &self.factors {
            for _ in 0..f.multiplicity {
                out.push(f.dimension);
            }
        }
        out
    }
}

/// Probe primes for a level: primes coprime to the level, up to the
/// ceiling of (index / 6), ascending.
pub fn decomposition_probes(level: u64) -> Result<Vec<u64>> {
    let data = curve_data(level)?;
    let bound = data.index.div_ceil(6);
    Ok(primes_up_to(bound)
        .into_iter()
        .filter(|&p| level % p != 0)
        .collect())
}

/// Decomposes with the default probe set.
pub fn decompose(level: u64) -> Result<Decomposition> {
    let probes = decomposition_probes(level)?;
    decompose_with_probes(level, &probes)
}

/// Splits a basis into joint generalized eigenspace blocks of the given
/// commuting operators.
fn split_blocks(ops: &[RationalMatrix], basis: &RationalMatrix) -> Result<Vec<RationalMatrix>> {
    let mut blocks = vec![basis.clone()];
    for op in ops {
        let mut next = Vec::new();
        for block in blocks {
            let r = restrict_operator(&block, op);
            let charpoly = r.char_poly_int()?;
            let factors = factor_poly(&charpoly)?;
            if factors.factors.len() <= 1 {
                next.push(block);
                continue;
            }
            let mut captured = 0;
            for (f, e) in &factors.factors {
                let image = r.poly_eval(&f.pow(*e).to_rat());
                let kernel = image.kernel_basis();
                captured += kernel.cols();
                next.push(block.mul(&kernel));
            }
            assert_eq!(captured, r.rows(), "generalized eigenspaces must exhaust the block");
        }
        blocks = next;
    }
    Ok(blocks)
}

/// Squarefree parts of the characteristic polynomials of the operators
/// restricted to the block, one per probe, sorted by probe.
fn block_fingerprint(
    probes: &[u64],
    ops: &[RationalMatrix],
    block: &RationalMatrix,
) -> Result<Vec<(u64, IntPolynomial)>> {
    let mut out = Vec::with_capacity(probes.len());
    for (&ell, op) in probes.iter().zip(ops) {
        let r = restrict_operator(block, op);
        let charpoly = r.char_poly_int()?;
        let factors = factor_poly(&charpoly)?;
        let mut radical = IntPolynomial::one();
        for (f, _) in &factors.factors {
            radical = radical.mul(f);
        }
        out.push((ell, radical));
    }
    out.sort_by_key(|(ell, _)| *ell);
    Ok(out)
}

/// Decomposes the boundary kernel at `level` with an explicit probe set.
/// Exposed so that invariance under probe order can be exercised.
pub fn decompose_with_probes(level: u64, probes: &[u64]) -> Result<Decomposition> {
    let data = curve_data(level)?;
    let space = SymbolSpace::new(level)?;
    if space.cuspidal_dim() == 0 {
        return Ok(Decomposition { level, genus: 0, probes: probes.to_vec(), factors: Vec::new() });
    }
    if probes.is_empty() {
        return Err(Error::DecompositionUnresolved {
            level,
            detail: "no probe primes available".into(),
        });
    }

    // Reference pieces: for each divisor level, split the part not coming
    // from below, and record dimensions and fingerprints.
    struct Piece {
        new_level: u64,
        dimension: u64,
        multiplicity: u64,
        fingerprint: Vec<(u64, IntPolynomial)>,
    }
    let mut pieces: Vec<Piece> = Vec::new();
    for m in divisors(level) {
        if curve_data(m)?.genus == 0 {
            continue;
        }
        let space_m = if m == level { space.clone() } else { SymbolSpace::new(m)? };
        let new_basis = new_subspace(&space_m)?;
        if new_basis.cols() == 0 {
            continue;
        }
        let ops: Vec<RationalMatrix> = probes
            .iter()
            .map(|&ell| hecke_operator(&space_m, ell))
            .collect::<Result<_>>()?;
        for block in split_blocks(&ops, &new_basis)? {
            if block.cols() % 2 != 0 {
                return Err(Error::DecompositionUnresolved {
                    level,
                    detail: format!("odd block of size {} at divisor level {m}", block.cols()),
                });
            }
            pieces.push(Piece {
                new_level: m,
                dimension: (block.cols() / 2) as u64,
                multiplicity: sigma0(level / m),
                fingerprint: block_fingerprint(probes, &ops, &block)?,
            });
        }
    }

    // Ambient blocks, then match each to exactly one reference piece.
    let ops: Vec<RationalMatrix> = probes
        .iter()
        .map(|&ell| hecke_operator(&space, ell))
        .collect::<Result<_>>()?;
    let ambient_blocks = split_blocks(&ops, space.cuspidal_basis())?;
    let mut used = vec![false; pieces.len()];
    let mut factors = Vec::new();
    for block in ambient_blocks {
        let fp = block_fingerprint(probes, &ops, &block)?;
        let matches: Vec<usize> = pieces
            .iter()
            .enumerate()
            .filter(|(_, p)| p.fingerprint == fp)
            .map(|(i, _)| i)
            .collect();
        let [idx] = matches[..] else {
            return Err(Error::DecompositionUnresolved {
                level,
                detail: format!(
                    "ambient block of size {} matches {} reference pieces",
                    block.cols(),
                    matches.len()
                ),
            });
        };
        let piece = &pieces[idx];
        if used[idx] || block.cols() as u64 != 2 * piece.dimension * piece.multiplicity {
            return Err(Error::DecompositionUnresolved {
                level,
                detail: format!(
                    "block of size {} inconsistent with piece at level {}",
                    block.cols(),
                    piece.new_level
                ),
            });
        }
        used[idx] = true;
        factors.push(IsogenyFactor {
            new_level: piece.new_level,
            dimension: piece.dimension,
            multiplicity: piece.multiplicity,
            fingerprint: fp,
            subspace: block,
        });
    }
    if used.iter().any(|u| !u) {
        return Err(Error::DecompositionUnresolved {
            level,
            detail: "reference piece not realized by any ambient block".into(),
        });
    }
    let total: u64 = factors.iter().map(|f| 2 * f.dimension * f.multiplicity).sum();
    assert_eq!(total, 2 * data.genus, "factor dimensions must add up to the kernel dimension");

    factors.sort_by(|a, b| {
        (a.new_level, a.dimension, &a.fingerprint).cmp(&(b.new_level, b.dimension, &b.fingerprint))
    });
    Ok(Decomposition { level, genus: data.genus, probes: probes.to_vec(), factors })
}
