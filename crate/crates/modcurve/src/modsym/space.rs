//! Weight-two symbol space for Gamma0(N): formal generators indexed by
//! P1(Z/N) modulo the two-term and three-term relations, together with the
//! boundary map to cusp classes and the subspace it kills.

use super::p1::P1;
use crate::arith::RationalMatrix;
use crate::geometry::cusps::{cusp_set, Cusp, CuspSet};
use crate::geometry::curve_data;
use crate::numutil::{ext_gcd, gcd_i64};
use crate::{Rational, Result};
use num_traits::{One, Zero};

/// The quotient of the free module on P1(Z/N) by the relations
/// `x + x.s = 0` and `x + x.t + x.t^2 = 0`, where `s: (c,d) -> (d,-c)` and
/// `t: (c,d) -> (d,-c-d)`, presented by a projection onto a free generating
/// subset.
#[derive(Debug, Clone)]
pub struct SymbolSpace {
    level: u64,
    p1: P1,
    /// Projection from generator coordinates to quotient coordinates
    /// (`dim x generator_count`).
    proj: RationalMatrix,
    /// P1 indices of the free generators; `proj` restricted to these
    /// columns is the identity.
    free: Vec<usize>,
    cusp_set: CuspSet,
    /// Boundary map from quotient coordinates to cusp-class coordinates
    /// (`class_count x dim`).
    boundary: RationalMatrix,
    /// Columns form a basis of the kernel of the boundary map
    /// (`dim x kernel_dim`).
    cuspidal: RationalMatrix,
}

impl SymbolSpace {
    pub fn new(level: u64) -> Result<Self> {
        let p1 = P1::new(level)?;
        let data = curve_data(level)?;
        let cusps = cusp_set(level)?;
        let n = p1.size();

        // Relation matrix: one two-term row per s-orbit, one three-term row
        // per t-orbit (rows repeated inside an orbit are identical, so the
        // orbit minimum suffices).
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for i in 0..n {
            let (c, d) = p1.rep(i);
            let si = p1.index_of_valid(d, -c);
            if i <= si {
                let mut row = vec![Rational::zero(); n];
                row[i] += Rational::one();
                row[si] += Rational::one();
                rows.push(row);
            }
            let ti = p1.index_of_valid(d, -c - d);
            let tti = p1.index_of_valid(-c - d, c);
            if i <= ti && i <= tti {
                let mut row = vec![Rational::zero(); n];
                row[i] += Rational::one();
                row[ti] += Rational::one();
                row[tti] += Rational::one();
                rows.push(row);
            }
        }
        let relations = RationalMatrix::from_rows(rows);
        let (rref, pivots) = relations.rref();

        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let dim = free.len();
        let expected = 2 * data.genus + data.nu_infinity - 1;
        assert_eq!(
            dim as u64, expected,
            "quotient dimension at level {level}: got {dim}, expected {expected}"
        );

        let mut proj = RationalMatrix::zero(dim, n);
        for (j, &f) in free.iter().enumerate() {
            proj[(j, f)] = Rational::one();
        }
        for (k, &p) in pivots.iter().enumerate() {
            for (j, &f) in free.iter().enumerate() {
                if !rref[(k, f)].is_zero() {
                    proj[(j, p)] = -rref[(k, f)].clone();
                }
            }
        }

        // Boundary of the free generator with matrix [[a, b], [c0, d0]]:
        // the path runs from b/d0 to a/c0.
        let class_count = cusps.classes.len();
        let mut boundary = RationalMatrix::zero(class_count, dim);
        for (j, &f) in free.iter().enumerate() {
            let (c, d) = p1.rep(f);
            let [a, b, c0, d0] = sl2_lift(level, c, d);
            let to = cusps.classify(&Cusp::new(a, c0));
            let from = cusps.classify(&Cusp::new(b, d0));
            boundary[(to, j)] += Rational::one();
            boundary[(from, j)] -= Rational::one();
        }
        assert_eq!(
            boundary.rank() as u64,
            data.nu_infinity - 1,
            "boundary rank at level {level}"
        );

        let cuspidal = boundary.kernel_basis();
        assert_eq!(
            cuspidal.cols() as u64,
            2 * data.genus,
            "kernel of the boundary map at level {level}"
        );

        Ok(SymbolSpace { level, p1, proj, free, cusp_set: cusps, boundary, cuspidal })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn p1(&self) -> &P1 {
        &self.p1
    }

    /// Dimension of the quotient space.
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Number of P1 generators before relations.
    pub fn generator_count(&self) -> usize {
        self.p1.size()
    }

    /// Dimension of the kernel of the boundary map (twice the genus).
    pub fn cuspidal_dim(&self) -> usize {
        self.cuspidal.cols()
    }

    pub fn proj(&self) -> &RationalMatrix {
        &self.proj
    }

    pub fn free_generators(&self) -> &[usize] {
        &self.free
    }

    /// Section of `proj`: sends quotient basis vector `j` to generator
    /// `free[j]`. `proj * section` is the identity.
    pub fn section(&self) -> RationalMatrix {
        let mut s = RationalMatrix::zero(self.generator_count(), self.dim());
        for (j, &f) in self.free.iter().enumerate() {
            s[(f, j)] = Rational::one();
        }
        s
    }

    pub fn cusp_set(&self) -> &CuspSet {
        &self.cusp_set
    }

    pub fn boundary_matrix(&self) -> &RationalMatrix {
        &self.boundary
    }

    /// Basis of the boundary kernel as columns of a `dim x 2g` matrix.
    pub fn cuspidal_basis(&self) -> &RationalMatrix {
        &self.cuspidal
    }

    /// Quotient coordinates of the generator `(c : d)`.
    /// Panics when `gcd(c, d, N) > 1`.
    pub fn symbol_vector(&self, c: i64, d: i64) -> Vec<Rational> {
        self.proj.col(self.p1.index_of_valid(c, d))
    }

    /// Quotient coordinates of the path from 0 to infinity: the negative
    /// of the class of the generator `(1 : 0)`.
    pub fn winding_vector(&self) -> Vec<Rational> {
        self.symbol_vector(1, 0).into_iter().map(|v| -v).collect()
    }
}

/// Lifts a pair `(c, d)` with `gcd(c, d, N) = 1` to a determinant-one
/// integer matrix `[[a, b], [c0, d0]]` with `(c0, d0) = (c, d) mod N`.
pub(crate) fn sl2_lift(level: u64, c: i64, d: i64) -> [i64; 4] {
    let n = level as i64;
    let c = c.rem_euclid(n);
    let d = d.rem_euclid(n);
    let c0 = if c == 0 { n } else { c };
    let mut d0 = None;
    for t in 0..=n {
        let cand = d + t * n;
        if gcd_i64(c0, cand) == 1 {
            d0 = Some(cand);
            break;
        }
    }
    let d0 = d0.expect("bottom row lifts to a coprime pair");
    let (g, x, y) = ext_gcd(d0, c0);
    debug_assert_eq!(g, 1);
    let (a, b) = (x, -y);
    debug_assert_eq!(a * d0 - b * c0, 1);
    debug_assert_eq!((c0 - c).rem_euclid(n), 0);
    debug_assert_eq!((d0 - d).rem_euclid(n), 0);
    [a, b, c0, d0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_match_curve_data() {
        for level in (1..=40).chain([49, 63, 65]) {
            let space = SymbolSpace::new(level).unwrap();
            let data = curve_data(level).unwrap();
            assert_eq!(
                space.dim() as u64,
                2 * data.genus + data.nu_infinity - 1,
                "quotient dimension at level {level}"
            );
            assert_eq!(space.cuspidal_dim() as u64, 2 * data.genus, "kernel dimension at level {level}");
        }
    }

    #[test]
    fn frozen_small_dimensions() {
        let s11 = SymbolSpace::new(11).unwrap();
        assert_eq!((s11.dim(), s11.cuspidal_dim()), (3, 2));
        let s39 = SymbolSpace::new(39).unwrap();
        assert_eq!((s39.dim(), s39.cuspidal_dim()), (9, 6));
    }

    #[test]
    fn relations_collapse_in_quotient() {
        for level in [11u64, 15, 21] {
            let space = SymbolSpace::new(level).unwrap();
            let p1 = space.p1();
            for i in 0..p1.size() {
                let (c, d) = p1.rep(i);
                let xi = space.proj().col(i);
                let xs = space.proj().col(p1.index_of_valid(d, -c));
                let two: Vec<Rational> = xi.iter().zip(&xs).map(|(a, b)| a + b).collect();
                assert!(two.iter().all(Rational::is_zero), "two-term relation at {level}, gen {i}");
                let xt = space.proj().col(p1.index_of_valid(d, -c - d));
                let xtt = space.proj().col(p1.index_of_valid(-c - d, c));
                let three: Vec<Rational> =
                    xi.iter().zip(&xt).zip(&xtt).map(|((a, b), e)| a + b + e).collect();
                assert!(three.iter().all(Rational::is_zero), "three-term relation at {level}, gen {i}");
            }
        }
    }

    #[test]
    fn projection_section_is_identity() {
        let space = SymbolSpace::new(39).unwrap();
        let prod = space.proj().mul(&space.section());
        assert_eq!(prod, RationalMatrix::identity(space.dim()));
    }

    #[test]
    fn boundary_columns_have_degree_zero() {
        for level in [11u64, 24, 39] {
            let space = SymbolSpace::new(level).unwrap();
            let b = space.boundary_matrix();
            for j in 0..b.cols() {
                let total: Rational = (0..b.rows()).map(|i| b[(i, j)].clone()).sum();
                assert!(total.is_zero(), "boundary column {j} at level {level}");
            }
        }
    }

    #[test]
    fn winding_vector_is_nonzero() {
        for level in [11u64, 37, 39] {
            let space = SymbolSpace::new(level).unwrap();
            assert!(space.winding_vector().iter().any(|v| !v.is_zero()), "level {level}");
        }
    }

    #[test]
    fn boundary_kills_kernel_basis() {
        let space = SymbolSpace::new(39).unwrap();
        assert!(space.boundary_matrix().mul(space.cuspidal_basis()).is_zero());
    }

    #[test]
    fn lift_round_trips() {
        for level in [1u64, 12, 39] {
            let p1 = P1::new(level).unwrap();
            for i in 0..p1.size() {
                let (c, d) = p1.rep(i);
                let [a, b, c0, d0] = sl2_lift(level, c, d);
                assert_eq!(a * d0 - b * c0, 1);
                assert_eq!((c0 - c).rem_euclid(level as i64), 0);
                assert_eq!((d0 - d).rem_euclid(level as i64), 0);
            }
        }
    }
}
