//! Exact integer matrices, Hermite and Smith normal forms, and quotients of
//! full-rank lattices. Lattice vectors are always rows.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vector is not in the row lattice")]
    NotInLattice,
    #[error("row {0} of the sublattice basis is not in the ambient lattice")]
    NotSublattice(usize),
    #[error("dimension mismatch: expected {expected} columns, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diagonal(diag: &[BigInt]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r);
        }
        Self {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Rows that are not entirely zero.
    pub fn nonzero_rows(&self) -> Self {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|x| !x.is_zero()))
            .map(|i| self.row(i).to_vec())
            .collect();
        Self::from_rows(rows, self.cols)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] -= q * row[src]`
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = &self.entries[src * self.cols + j] * q;
            self.entries[dst * self.cols + j] -= t;
        }
    }

    fn sub_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = &self.entries[i * self.cols + src] * q;
            self.entries[i * self.cols + dst] -= t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let x = &mut self.entries[r * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    /// Replace rows `(a, b)` by `(s a + t b, u a + v b)`.
    fn combine_rows(&mut self, a: usize, b: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
        for j in 0..self.cols {
            let x = self.entries[a * self.cols + j].clone();
            let y = self.entries[b * self.cols + j].clone();
            self.entries[a * self.cols + j] = s * &x + t * &y;
            self.entries[b * self.cols + j] = u * &x + v * &y;
        }
    }

    fn combine_cols(&mut self, a: usize, b: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
        for i in 0..self.rows {
            let x = self.entries[i * self.cols + a].clone();
            let y = self.entries[i * self.cols + b].clone();
            self.entries[i * self.cols + a] = s * &x + t * &y;
            self.entries[i * self.cols + b] = u * &x + v * &y;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Extended gcd with a nonnegative gcd: `s a + t b = g`.
fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Row-style Hermite normal form with transform: returns `(H, U)` with
/// `H = U M`, `U` unimodular.
///
/// Nonzero rows come first; each pivot is positive and lies strictly to the
/// right of the previous row's pivot; entries above a pivot lie in `[0, pivot)`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    hnf_in_place(&mut h, Some(&mut u));
    (h, u)
}

/// Hermite normal form without tracking the transform.
pub fn hnf_only(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    hnf_in_place(&mut h, None);
    h
}

/// HNF with zero rows dropped: a canonical basis of the row lattice.
pub fn lattice_basis(m: &IntMatrix) -> IntMatrix {
    hnf_only(m).nonzero_rows()
}

fn hnf_in_place(h: &mut IntMatrix, mut u: Option<&mut IntMatrix>) {
    let mut r = 0;
    for col in 0..h.cols {
        if r == h.rows {
            break;
        }
        // fold every entry below into row r with unimodular 2x2 steps
        for i in r + 1..h.rows {
            if h[(i, col)].is_zero() {
                continue;
            }
            if h[(r, col)].is_zero() {
                h.swap_rows(r, i);
                if let Some(u) = u.as_deref_mut() {
                    u.swap_rows(r, i);
                }
                continue;
            }
            let a = h[(r, col)].clone();
            let b = h[(i, col)].clone();
            let (g, s, t) = xgcd(&a, &b);
            let (ua, ub) = (-(&b / &g), &a / &g);
            h.combine_rows(r, i, &s, &t, &ua, &ub);
            if let Some(u) = u.as_deref_mut() {
                u.combine_rows(r, i, &s, &t, &ua, &ub);
            }
        }
        if h[(r, col)].is_zero() {
            continue;
        }
        if h[(r, col)].is_negative() {
            h.negate_row(r);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(r);
            }
        }
        let pivot = h[(r, col)].clone();
        for i in 0..r {
            let q = h[(i, col)].div_floor(&pivot);
            h.sub_row_multiple(i, r, &q);
            if let Some(u) = u.as_deref_mut() {
                u.sub_row_multiple(i, r, &q);
            }
        }
        r += 1;
    }
}

/// Pivot column of each nonzero row of a matrix in HNF.
pub fn pivot_columns(h: &IntMatrix) -> Vec<usize> {
    (0..h.rows)
        .filter_map(|i| h.row(i).iter().position(|x| !x.is_zero()))
        .collect()
}

/// Checks every row-HNF condition entry by entry.
pub fn is_hnf(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..h.rows {
        match h.row(i).iter().position(|x| !x.is_zero()) {
            None => seen_zero = true,
            Some(c) => {
                if seen_zero || last_pivot.is_some_and(|p| c <= p) {
                    return false;
                }
                let pivot = &h[(i, c)];
                if !pivot.is_positive() {
                    return false;
                }
                for k in 0..i {
                    let x = &h[(k, c)];
                    if x.is_negative() || x >= pivot {
                        return false;
                    }
                }
                last_pivot = Some(c);
            }
        }
    }
    true
}

/// Elementary divisors and free rank of a finitely generated abelian group
/// `Z/d1 + ... + Z/dk + Z^free_rank` with `1 < d1 | d2 | ... | dk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    divisors: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianInvariants {
    /// Normalizes an arbitrary list of cyclic orders into invariant-factor form.
    /// Zeros count toward the free rank; units are dropped.
    pub fn from_cyclic_orders(orders: &[BigInt], free_rank: usize) -> Self {
        let mut free = free_rank;
        let mut ds: Vec<BigInt> = Vec::new();
        for d in orders {
            if d.is_zero() {
                free += 1;
            } else {
                ds.push(d.abs());
            }
        }
        let chain = divisibility_fixup(ds);
        Self {
            divisors: chain.into_iter().filter(|d| !d.is_one()).collect(),
            free_rank: free,
        }
    }

    /// `(C_d)^count`
    pub fn elementary(d: &BigInt, count: usize) -> Self {
        Self::from_cyclic_orders(&vec![d.clone(); count], 0)
    }

    pub fn trivial() -> Self {
        Self {
            divisors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Product of the divisors (the group order when finite).
    pub fn torsion_order(&self) -> BigInt {
        self.divisors.iter().product()
    }

    /// `Some(d)` when the group is `(C_d)^k` for a single `d`.
    pub fn elementary_exponent(&self) -> Option<&BigInt> {
        let first = self.divisors.first()?;
        self.divisors.iter().all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for AbelianInvariants {
    /// `C_3^8`, `C_2 x C_6`, `Z^2`, or `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.divisors.len() {
            let d = &self.divisors[i];
            let run = self.divisors[i..].iter().take_while(|x| *x == d).count();
            parts.push(if run == 1 {
                format!("C_{d}")
            } else {
                format!("C_{d}^{run}")
            });
            i += run;
        }
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Replaces a list of positive integers by an equivalent divisibility chain
/// via repeated `(gcd, lcm)` exchanges.
fn divisibility_fixup(mut ds: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            if ds[j].is_multiple_of(&ds[i]) {
                continue;
            }
            let g = ds[i].gcd(&ds[j]);
            let l = ds[i].lcm(&ds[j]);
            ds[i] = g;
            ds[j] = l;
        }
    }
    ds
}

/// Smith normal form: `D` diagonal with `d1 | d2 | ...` (nonnegative), plus
/// the invariants of the cokernel `Z^cols / rowspace(M)`.
pub fn snf(m: &IntMatrix) -> (IntMatrix, AbelianInvariants) {
    let mut d = m.clone();
    let n = d.rows.min(d.cols);
    for t in 0..n {
        // deterministic pivot: smallest nonzero |entry| in the trailing block,
        // ties broken by lowest (row, col)
        let Some((pi, pj)) = smallest_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        d.swap_cols(t, pj);
        loop {
            for i in t + 1..d.rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let (q, rem) = d[(i, t)].div_rem(&d[(t, t)]);
                if rem.is_zero() {
                    d.sub_row_multiple(i, t, &q);
                } else {
                    let (g, s, x) = xgcd(&d[(t, t)], &d[(i, t)]);
                    let (ua, ub) = (-(&d[(i, t)] / &g), &d[(t, t)] / &g);
                    d.combine_rows(t, i, &s, &x, &ua, &ub);
                }
            }
            for j in t + 1..d.cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let (q, rem) = d[(t, j)].div_rem(&d[(t, t)]);
                if rem.is_zero() {
                    d.sub_col_multiple(j, t, &q);
                } else {
                    let (g, s, x) = xgcd(&d[(t, t)], &d[(t, j)]);
                    let (ua, ub) = (-(&d[(t, j)] / &g), &d[(t, t)] / &g);
                    d.combine_cols(t, j, &s, &x, &ua, &ub);
                }
            }
            // a gcd step on the columns can refill column t; the pivot
            // strictly shrinks each time that happens
            if (t + 1..d.rows).all(|i| d[(i, t)].is_zero()) {
                break;
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
        }
    }
    let diag: Vec<BigInt> = (0..n).map(|i| d[(i, i)].clone()).collect();
    let nonzero: Vec<BigInt> = diag.iter().filter(|x| !x.is_zero()).cloned().collect();
    let rank = nonzero.len();
    let chain = divisibility_fixup(nonzero);
    let mut full = chain.clone();
    full.resize(n, BigInt::zero());
    let mut out = IntMatrix::zeros(m.rows, m.cols);
    for (i, x) in full.into_iter().enumerate() {
        out[(i, i)] = x;
    }
    let inv = AbelianInvariants::from_cyclic_orders(&chain, m.cols - rank);
    (out, inv)
}

fn smallest_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Solves `c B = v` for a basis `B` in HNF (zero rows allowed at the bottom).
pub fn express_in_basis(b: &IntMatrix, v: &[BigInt]) -> Result<Vec<BigInt>, LatticeError> {
    if v.len() != b.cols {
        return Err(LatticeError::DimensionMismatch {
            expected: b.cols,
            got: v.len(),
        });
    }
    let mut rest = v.to_vec();
    let mut coords = vec![BigInt::zero(); b.rows];
    for i in 0..b.rows {
        let Some(pc) = b.row(i).iter().position(|x| !x.is_zero()) else {
            break;
        };
        if rest[..pc].iter().any(|x| !x.is_zero()) {
            return Err(LatticeError::NotInLattice);
        }
        let (q, r) = rest[pc].div_rem(&b[(i, pc)]);
        if !r.is_zero() {
            return Err(LatticeError::NotInLattice);
        }
        for (x, y) in rest.iter_mut().zip(b.row(i)).skip(pc) {
            *x -= &q * y;
        }
        coords[i] = q;
    }
    if rest.iter().any(|x| !x.is_zero()) {
        return Err(LatticeError::NotInLattice);
    }
    Ok(coords)
}

/// Each row of `sub` written in the coordinates of the HNF basis of `ambient`.
pub fn coordinates_in(ambient: &IntMatrix, sub: &IntMatrix) -> Result<IntMatrix, LatticeError> {
    let basis = lattice_basis(ambient);
    let rows = (0..sub.rows)
        .map(|i| express_in_basis(&basis, sub.row(i)).map_err(|_| LatticeError::NotSublattice(i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntMatrix::from_rows(rows, basis.rows))
}

/// Invariants of `lattice(A) / lattice(B)`.
pub fn quotient_invariants(
    a: &IntMatrix,
    b: &IntMatrix,
) -> Result<AbelianInvariants, LatticeError> {
    if a.cols != b.cols {
        return Err(LatticeError::DimensionMismatch {
            expected: a.cols,
            got: b.cols,
        });
    }
    let coords = coordinates_in(a, b)?;
    Ok(snf(&coords).1)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = num / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * &a[(n - 1, n - 1)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_identity() {
        let id = IntMatrix::identity(4);
        let (h, u) = hnf(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_small() {
        let m = IntMatrix::from_i64(&[&[2, 4], &[1, 3]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, IntMatrix::from_i64(&[&[1, 1], &[0, 2]]));
        assert_eq!(u.mul(&m), h);
        assert_eq!(det(&u).abs(), BigInt::one());
    }

    #[test]
    fn hnf_rank_deficient_and_wide() {
        let m = IntMatrix::from_i64(&[&[0, 2, 4, 6], &[0, 3, 6, 9], &[0, 0, 0, 5], &[0, 1, 2, 3]]);
        let (h, u) = hnf(&m);
        assert!(is_hnf(&h));
        assert_eq!(u.mul(&m), h);
        assert_eq!(det(&u).abs(), BigInt::one());
        assert_eq!(
            lattice_basis(&m),
            IntMatrix::from_i64(&[&[0, 1, 2, 3], &[0, 0, 0, 5]])
        );
    }

    #[test]
    fn hnf_idempotent() {
        let m = IntMatrix::from_i64(&[&[3, -7, 2], &[5, 1, 9], &[-4, 4, 8]]);
        let h = hnf_only(&m);
        assert_eq!(hnf_only(&h), h);
    }

    #[test]
    fn is_hnf_rejects() {
        assert!(!is_hnf(&IntMatrix::from_i64(&[&[-1, 0], &[0, 1]])));
        assert!(!is_hnf(&IntMatrix::from_i64(&[&[1, 2], &[0, 2]])));
        assert!(!is_hnf(&IntMatrix::from_i64(&[&[0, 1], &[1, 0]])));
        assert!(!is_hnf(&IntMatrix::from_i64(&[&[0, 0], &[1, 0]])));
    }

    #[test]
    fn snf_diagonal_examples() {
        let (d, inv) = snf(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(d, IntMatrix::from_i64(&[&[1, 0], &[0, 6]]));
        assert_eq!(inv.divisors(), big(&[6]).as_slice());
        assert_eq!(inv.free_rank(), 0);

        let (_, inv) = snf(&IntMatrix::from_i64(&[&[5, 0], &[0, 5]]));
        assert_eq!(inv.divisors(), big(&[5, 5]).as_slice());
    }

    #[test]
    fn snf_free_rank_and_zero() {
        let (_, inv) = snf(&IntMatrix::from_i64(&[&[2, 4, 0]]));
        assert_eq!(inv.divisors(), big(&[2]).as_slice());
        assert_eq!(inv.free_rank(), 2);
        let (d, inv) = snf(&IntMatrix::zeros(2, 3));
        assert_eq!(d, IntMatrix::zeros(2, 3));
        assert_eq!(inv.free_rank(), 3);
    }

    #[test]
    fn snf_dense() {
        // known SNF: diag(2, 6, 12)
        let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let (d, inv) = snf(&m);
        assert_eq!(d, IntMatrix::diagonal(&big(&[2, 6, 12])));
        assert_eq!(inv.torsion_order(), det(&m).abs());
    }

    #[test]
    fn express_examples() {
        let id = IntMatrix::identity(3);
        let v = big(&[4, -2, 7]);
        assert_eq!(express_in_basis(&id, &v).unwrap(), v);

        let b = IntMatrix::diagonal(&big(&[1, 3, 3]));
        assert_eq!(
            express_in_basis(&b, &big(&[2, 6, -3])).unwrap(),
            big(&[2, 2, -1])
        );
        assert_eq!(
            express_in_basis(&b, &big(&[0, 4, 0])),
            Err(LatticeError::NotInLattice)
        );
        assert!(matches!(
            express_in_basis(&b, &big(&[1, 2])),
            Err(LatticeError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn express_outside_span() {
        let b = IntMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(
            express_in_basis(&b, &big(&[0, 0, 1])),
            Err(LatticeError::NotInLattice)
        );
    }

    #[test]
    fn quotient_examples() {
        let a = IntMatrix::identity(2);
        assert_eq!(
            quotient_invariants(&a, &a).unwrap(),
            AbelianInvariants::trivial()
        );
        let b = IntMatrix::diagonal(&big(&[7, 7]));
        let q = quotient_invariants(&a, &b).unwrap();
        assert_eq!(q, AbelianInvariants::elementary(&BigInt::from(7), 2));
        assert_eq!(q.to_string(), "C_7^2");
        assert_eq!(
            quotient_invariants(&b, &a),
            Err(LatticeError::NotSublattice(0))
        );
    }

    #[test]
    fn invariants_display() {
        let inv = AbelianInvariants::from_cyclic_orders(&big(&[2, 3, 4, 1]), 1);
        // 2,3,4 -> 1, 2, 12 after fixup
        assert_eq!(inv.divisors(), big(&[2, 12]).as_slice());
        assert_eq!(inv.to_string(), "C_2 x C_12 x Z");
        assert_eq!(AbelianInvariants::trivial().to_string(), "0");
        assert_eq!(inv.elementary_exponent(), None);
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            det(&IntMatrix::from_i64(&[&[2, 4], &[1, 3]])),
            BigInt::from(2)
        );
        assert_eq!(
            det(&IntMatrix::from_i64(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            det(&IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])),
            BigInt::zero()
        );
    }
}
