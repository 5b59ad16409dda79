//! Polynomial arithmetic over F_p for small primes, plus Berlekamp's
//! factorization of squarefree polynomials. Internal to the factorization
//! pipeline.
//!
//! Polynomials are `Vec<u64>` with ascending coefficients in `[0, p)`,
//! trailing zeros trimmed. All primes used here are small enough that
//! `p * p` fits in a `u64`.

use crate::numutil::mod_inverse;

pub type FpPoly = Vec<u64>;

pub fn trim(mut f: FpPoly) -> FpPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn deg(f: &FpPoly) -> Option<usize> {
    f.len().checked_sub(1)
}

#[cfg(test)]
pub fn add(f: &FpPoly, g: &FpPoly, p: u64) -> FpPoly {
    let n = f.len().max(g.len());
    trim(
        (0..n)
            .map(|k| {
                (f.get(k).copied().unwrap_or(0) + g.get(k).copied().unwrap_or(0)) % p
            })
            .collect(),
    )
}

pub fn sub(f: &FpPoly, g: &FpPoly, p: u64) -> FpPoly {
    let n = f.len().max(g.len());
    trim(
        (0..n)
            .map(|k| {
                (p + f.get(k).copied().unwrap_or(0) - g.get(k).copied().unwrap_or(0)) % p
            })
            .collect(),
    )
}

pub fn mul(f: &FpPoly, g: &FpPoly, p: u64) -> FpPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    trim(out)
}

pub fn scale(f: &FpPoly, c: u64, p: u64) -> FpPoly {
    trim(f.iter().map(|&a| a * c % p).collect())
}

/// Euclidean division; panics if `g` is zero.
pub fn divrem(f: &FpPoly, g: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    assert!(!g.is_empty(), "divrem: division by zero polynomial");
    let dg = g.len() - 1;
    let lead_inv = mod_inverse(g[dg] as i64, p as i64).expect("divrem: leading coeff not invertible") as u64;
    let mut rem = f.clone();
    if rem.len() <= dg {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![0u64; rem.len() - dg];
    for k in (dg..rem.len()).rev() {
        let c = rem[k] * lead_inv % p;
        if c != 0 {
            quot[k - dg] = c;
            for (j, &b) in g.iter().enumerate() {
                rem[k - dg + j] = (rem[k - dg + j] + p - c * b % p) % p;
            }
        }
    }
    (trim(quot), trim(rem))
}

/// Monic gcd (empty iff both inputs zero).
pub fn gcd(f: &FpPoly, g: &FpPoly, p: u64) -> FpPoly {
    let mut a = trim(f.clone());
    let mut b = trim(g.clone());
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Rescales to leading coefficient 1.
pub fn monic(f: &FpPoly, p: u64) -> FpPoly {
    match f.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = mod_inverse(l as i64, p as i64).expect("monic: zero leading coeff") as u64;
            scale(f, inv, p)
        }
    }
}

pub fn derivative(f: &FpPoly, p: u64) -> FpPoly {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * (k as u64 % p) % p)
            .collect(),
    )
}

/// `base^e mod f`.
pub fn pow_mod(base: &FpPoly, mut e: u64, f: &FpPoly, p: u64) -> FpPoly {
    let mut result = vec![1u64];
    let mut b = divrem(base, f, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = divrem(&mul(&result, &b, p), f, p).1;
        }
        b = divrem(&mul(&b, &b, p), f, p).1;
        e >>= 1;
    }
    result
}

/// Extended Euclid in F_p[x]: returns `(g, s, t)` monic with `s f + t g0 = g`.
pub fn ext_euclid(f: &FpPoly, g0: &FpPoly, p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let mut r0 = trim(f.clone());
    let mut r1 = trim(g0.clone());
    let mut s0: FpPoly = vec![1];
    let mut s1: FpPoly = Vec::new();
    let mut t0: FpPoly = Vec::new();
    let mut t1: FpPoly = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let ns = sub(&s0, &mul(&q, &s1, p), p);
        let nt = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    // Normalize the gcd to be monic, scaling the cofactors along.
    if let Some(&l) = r0.last() {
        let inv = mod_inverse(l as i64, p as i64).unwrap() as u64;
        r0 = scale(&r0, inv, p);
        s0 = scale(&s0, inv, p);
        t0 = scale(&t0, inv, p);
    }
    (r0, s0, t0)
}

/// True iff `f` (nonzero) is squarefree mod p, i.e. gcd(f, f') = 1.
pub fn is_squarefree(f: &FpPoly, p: u64) -> bool {
    let d = derivative(f, p);
    if d.is_empty() {
        // f is a p-th power (or constant): not squarefree unless degree 0.
        return f.len() <= 1;
    }
    gcd(f, &d, p).len() == 1
}

/// Berlekamp factorization of a squarefree monic polynomial mod p.
/// Returns the monic irreducible factors, sorted ascending by
/// (degree, coefficient sequence) for determinism.
pub fn berlekamp(f: &FpPoly, p: u64) -> Vec<FpPoly> {
    let n = match deg(f) {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![monic(f, p)],
        Some(n) => n,
    };
    debug_assert!(f.last() == Some(&1), "berlekamp: input must be monic");
    debug_assert!(is_squarefree(f, p), "berlekamp: input must be squarefree");

    // Frobenius matrix: row i = x^(i*p) mod f.
    let xp = pow_mod(&vec![0, 1], p, f, p);
    let mut rows: Vec<FpPoly> = Vec::with_capacity(n);
    let mut r: FpPoly = vec![1];
    for _ in 0..n {
        rows.push(r.clone());
        r = divrem(&mul(&r, &xp, p), f, p).1;
    }
    // M = (Q - I)^T as a dense n x n array; kernel vectors v give
    // v(x)^p = v(x) mod f.
    let mut m = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n {
            let q = row.get(j).copied().unwrap_or(0);
            let delta = if i == j { 1 } else { 0 };
            m[j][i] = (q + p - delta) % p;
        }
    }
    let basis = nullspace(&mut m, n, p);
    let r_factors = basis.len();
    debug_assert!(r_factors >= 1);

    let mut factors = vec![monic(f, p)];
    // Refine by each basis vector; the constant vector produces no splits.
    for b in basis.iter() {
        if factors.len() == r_factors {
            break;
        }
        let bpoly = trim(b.clone());
        if bpoly.len() <= 1 {
            continue;
        }
        let current = std::mem::take(&mut factors);
        for u in current {
            if u.len() == 2 {
                factors.push(u);
                continue;
            }
            let mut pieces = vec![u];
            for c in 0..p {
                if pieces.iter().all(|q| q.len() == 2) {
                    break;
                }
                let shifted = sub(&bpoly, &vec![c], p);
                let mut refined = Vec::new();
                for piece in pieces {
                    let g = gcd(&piece, &shifted, p);
                    if g.len() > 1 && g.len() < piece.len() {
                        let (q, rem) = divrem(&piece, &g, p);
                        debug_assert!(rem.is_empty());
                        refined.push(g);
                        refined.push(monic(&q, p));
                    } else {
                        refined.push(piece);
                    }
                }
                pieces = refined;
            }
            factors.extend(pieces);
        }
    }
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    debug_assert_eq!(factors.len(), r_factors, "berlekamp: splitting incomplete");
    factors
}

/// Kernel basis of an n x n matrix over F_p (destroys the input).
fn nullspace(m: &mut [Vec<u64>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots: Vec<Option<usize>> = vec![None; n];
    let mut row = 0usize;
    for col in 0..n {
        if row >= n {
            break;
        }
        let mut pr = None;
        for i in row..n {
            if m[i][col] != 0 {
                pr = Some(i);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        m.swap(row, pr);
        let inv = mod_inverse(m[row][col] as i64, p as i64).unwrap() as u64;
        for j in 0..n {
            m[row][j] = m[row][j] * inv % p;
        }
        for i in 0..n {
            if i != row && m[i][col] != 0 {
                let factor = m[i][col];
                for j in 0..n {
                    m[i][j] = (m[i][j] + p - factor * m[row][j] % p) % p;
                }
            }
        }
        pivots[col] = Some(row);
        row += 1;
    }
    let mut basis = Vec::new();
    for col in 0..n {
        if pivots[col].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[col] = 1;
        for (c, piv) in pivots.iter().enumerate() {
            if let Some(r) = piv {
                v[c] = (p - m[*r][col]) % p;
            }
        }
        basis.push(v);
    }
    basis
}
