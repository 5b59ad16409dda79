//! Dense matrices over Q with exact row reduction and characteristic polynomials.

use super::poly::{IntPolynomial, RatPoly};
use crate::error::Error;
use crate::numutil::bi;
use crate::{BigInt, Rational, Result};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Dense row-major matrix over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    /// Zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "from_rows: ragged rows");
        RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| Rational::from_integer(bi(v))).collect())
                .collect(),
        )
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True iff every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Column `j` as a vector.
    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: Vec<Vec<Rational>>, rows: usize) -> Self {
        let c = cols.len();
        assert!(cols.iter().all(|col| col.len() == rows), "from_cols: ragged columns");
        let mut m = Self::zero(rows, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "mul: inner dimensions differ");
        let mut m = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] += a * b;
                    }
                }
            }
        }
        m
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "apply: dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut s = Rational::zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        s += a * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add: shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        RationalMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub: shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        RationalMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> Self {
        let data = self.data.iter().map(|a| a * c).collect();
        RationalMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Stacks `self` on top of `other` (equal column counts).
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack: column counts differ");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        RationalMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self` (equal row counts).
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack: row counts differ");
        let mut m = Self::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Sub-matrix keeping the given columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut m = Self::zero(self.rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                m[(i, jj)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// Zero rows sink to the bottom; pivots are exactly 1 with zeros above
    /// and below. Never fails; the zero matrix returns itself with no pivots.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            // Find a pivot in this column at or below `row`.
            let mut pivot_row = None;
            for i in row..m.rows {
                if !m[(i, col)].is_zero() {
                    pivot_row = Some(i);
                    break;
                }
            }
            let Some(p) = pivot_row else { continue };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let v = &m[(row, j)] * &inv;
                m[(row, j)] = v;
            }
            for i in 0..m.rows {
                if i != row && !m[(i, col)].is_zero() {
                    let factor = m[(i, col)].clone();
                    for j in col..m.cols {
                        let t = &m[(row, j)] * &factor;
                        m[(i, j)] -= t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : self * x = 0}`, returned as the
    /// columns of a `cols x nullity` matrix (one column per free variable,
    /// in ascending free-column order).
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&j| !pivot_set[j]).collect();
        let mut basis = Self::zero(self.cols, free.len());
        for (k, &fj) in free.iter().enumerate() {
            basis[(fj, k)] = Rational::one();
            for (i, &pj) in pivots.iter().enumerate() {
                // Row i of the rref reads x_pj + sum_{free j} r[i][j] x_j = 0.
                if !r[(i, fj)].is_zero() {
                    basis[(pj, k)] = -r[(i, fj)].clone();
                }
            }
        }
        basis
    }

    /// Solves `self * x = rhs` for each column of `rhs`, requiring `self` to
    /// have full column rank; returns `None` if any system is inconsistent.
    pub fn solve_full_column_rank(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows, "solve: row counts differ");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        // Consistency: no pivot may fall in the rhs block.
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        if pivots.len() != self.cols {
            // Not full column rank: solution not unique; reject.
            return None;
        }
        let mut x = Self::zero(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            debug_assert_eq!(p, i);
            for j in 0..rhs.cols {
                x[(p, j)] = r[(i, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    /// Characteristic polynomial `det(x*I - self)`, monic, degree = size.
    ///
    /// Entries are first rescaled to integers, then the division-free
    /// Berkowitz recurrence runs over Z, and the result is scaled back.
    /// Errors on non-square input.
    pub fn char_poly(&self) -> Result<RatPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(RatPoly::one());
        }
        // Common denominator.
        let mut den = BigInt::one();
        for v in &self.data {
            den = den.lcm(v.denom());
        }
        let scaled: Vec<BigInt> = self
            .data
            .iter()
            .map(|v| (v * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let c = berkowitz_descending(&scaled, n);
        // det(xI - A) = den^-n * det((den x)I - den A): coefficient of
        // x^(n-k) is c[k] / den^k.
        let mut coeffs = vec![Rational::zero(); n + 1];
        let mut dpow = BigInt::one();
        for (k, ck) in c.iter().enumerate() {
            coeffs[n - k] = Rational::new(ck.clone(), dpow.clone());
            dpow *= &den;
        }
        Ok(RatPoly::from_coeffs(coeffs))
    }

    /// Characteristic polynomial known to have integer coefficients.
    /// Panics if it does not (used for operators with an integrality
    /// guarantee, where a non-integer coefficient means a bug).
    pub fn char_poly_int(&self) -> Result<IntPolynomial> {
        let p = self.char_poly()?;
        Ok(p.to_int().expect("char_poly_int: non-integer coefficient in characteristic polynomial"))
    }

    /// Trace. Errors on non-square input.
    pub fn trace(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let mut t = Rational::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        Ok(t)
    }

    /// Evaluates a polynomial at this (square) matrix by Horner's rule.
    pub fn poly_eval(&self, p: &RatPoly) -> Self {
        assert_eq!(self.rows, self.cols, "poly_eval: non-square matrix");
        let n = self.rows;
        let mut acc = Self::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    /// Evaluates a polynomial in this matrix applied to a vector,
    /// `p(self) * v`, via matrix-vector Horner (no matrix-matrix products).
    pub fn poly_apply(&self, p: &RatPoly, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.rows, self.cols, "poly_apply: non-square matrix");
        assert_eq!(self.cols, v.len(), "poly_apply: dimension mismatch");
        let mut acc = vec![Rational::zero(); v.len()];
        for c in p.coeffs().iter().rev() {
            acc = self.apply(&acc);
            for (a, b) in acc.iter_mut().zip(v) {
                *a += c * b;
            }
        }
        acc
    }

    /// `self^e` by repeated squaring (square matrices only).
    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols, "pow: non-square matrix");
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

/// Berkowitz recurrence over Z on a flat row-major `n x n` integer matrix.
/// Returns characteristic polynomial coefficients in descending order
/// (`[1, c_1, ..., c_n]` for `det(xI - A)`).
fn berkowitz_descending(a: &[BigInt], n: usize) -> Vec<BigInt> {
    let at = |i: usize, j: usize| -> &BigInt { &a[i * n + j] };
    // Polynomial of the trailing 1x1 minor.
    let mut poly: Vec<BigInt> = vec![BigInt::one(), -at(n - 1, n - 1).clone()];
    for r in 2..=n {
        let off = n - r;
        // Trailing r x r minor partitioned as [[corner, R], [C, B]]
        // with B the previous (r-1) x (r-1) trailing minor.
        // Toeplitz column: t = [1, -corner, -(R C), -(R B C), -(R B^2 C), ...].
        let mut t: Vec<BigInt> = Vec::with_capacity(r + 1);
        t.push(BigInt::one());
        t.push(-at(off, off).clone());
        // v starts as C and is repeatedly multiplied by B.
        let mut v: Vec<BigInt> = (off + 1..n).map(|i| at(i, off).clone()).collect();
        for step in 0..r - 1 {
            // s = R . v
            let mut s = BigInt::zero();
            for (k, vk) in v.iter().enumerate() {
                s += at(off, off + 1 + k) * vk;
            }
            t.push(-s);
            if step + 1 < r - 1 {
                // v = B . v
                let mut nv = vec![BigInt::zero(); v.len()];
                for (i, nvi) in nv.iter_mut().enumerate() {
                    for (k, vk) in v.iter().enumerate() {
                        if !vk.is_zero() {
                            *nvi += at(off + 1 + i, off + 1 + k) * vk;
                        }
                    }
                }
                v = nv;
            }
        }
        // poly <- banded Toeplitz product: new[j] = sum_i t[j-i] * poly[i].
        let mut new_poly = vec![BigInt::zero(); r + 1];
        for (j, npj) in new_poly.iter_mut().enumerate() {
            for (i, pi) in poly.iter().enumerate().take(j + 1) {
                if j - i <= r {
                    *npj += &t[j - i] * pi;
                }
            }
        }
        poly = new_poly;
    }
    poly
}
