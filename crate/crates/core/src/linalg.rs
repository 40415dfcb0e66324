//! Exact integer matrices and Smith normal form.
//!
//! Reductions run on `i64` with checked arithmetic and are redone on
//! `BigInt` if anything overflows, so results are always exact.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Dense integer matrix with machine-word entries.
pub type IntMatrix = Matrix<i64>;

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let n = rows.len();
        Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl Matrix<BigInt> {
    pub fn mul(&self, other: &Matrix<BigInt>) -> Matrix<BigInt> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|r| &self.data[r * self.cols..(r + 1) * self.cols]))
            .finish()
    }
}

/// Invariant factors of a matrix, optionally with `D = U·M·V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_rank`, all positive.
    pub factors: Vec<BigInt>,
    pub transforms: Option<SmithTransforms>,
}

impl SmithForm {
    /// Factors greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().filter(|d| !d.is_one())
    }

    pub fn all_units(&self) -> bool {
        self.factors.iter().all(One::is_one)
    }
}

/// Unimodular transforms with their inverses: `d = u · m · v`,
/// `u · u_inv = I`, `v · v_inv = I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithTransforms {
    pub u: Matrix<BigInt>,
    pub u_inv: Matrix<BigInt>,
    pub d: Matrix<BigInt>,
    pub v: Matrix<BigInt>,
    pub v_inv: Matrix<BigInt>,
}

trait Scalar:
    Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + fmt::Debug
{
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// `x - q*y`, or `None` on overflow.
fn sub_mul<T: Scalar>(x: &T, q: &T, y: &T) -> Option<T> {
    x.checked_sub(&q.checked_mul(y)?)
}

struct Tracked<'a, T> {
    a: &'a mut Matrix<T>,
    // u, u_inv, v, v_inv
    tr: Option<[Matrix<T>; 4]>,
}

impl<T: Scalar> Tracked<'_, T> {
    /// row `i` -= q * row `t`
    fn row_sub(&mut self, i: usize, t: usize, q: &T) -> Option<()> {
        let cols = self.a.cols;
        for c in 0..cols {
            let v = sub_mul(self.a.get(i, c), q, self.a.get(t, c))?;
            self.a.set(i, c, v);
        }
        if let Some([u, u_inv, _, _]) = self.tr.as_mut() {
            for c in 0..u.cols {
                let v = sub_mul(u.get(i, c), q, u.get(t, c))?;
                u.set(i, c, v);
            }
            // u_inv <- u_inv * (I + q e_i e_t^T): column t += q * column i.
            for r in 0..u_inv.rows {
                let v = u_inv.get(r, t).checked_add(&q.checked_mul(u_inv.get(r, i))?)?;
                u_inv.set(r, t, v);
            }
        }
        Some(())
    }

    /// column `j` -= q * column `t`
    fn col_sub(&mut self, j: usize, t: usize, q: &T) -> Option<()> {
        for r in 0..self.a.rows {
            let v = sub_mul(self.a.get(r, j), q, self.a.get(r, t))?;
            self.a.set(r, j, v);
        }
        if let Some([_, _, v, v_inv]) = self.tr.as_mut() {
            for r in 0..v.rows {
                let x = sub_mul(v.get(r, j), q, v.get(r, t))?;
                v.set(r, j, x);
            }
            // v_inv <- (I + q e_t e_j^T) * v_inv: row t += q * row j.
            for c in 0..v_inv.cols {
                let x = v_inv.get(t, c).checked_add(&q.checked_mul(v_inv.get(j, c))?)?;
                v_inv.set(t, c, x);
            }
        }
        Some(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.a.swap_rows(a, b);
        if let Some([u, u_inv, _, _]) = self.tr.as_mut() {
            u.swap_rows(a, b);
            u_inv.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.a.swap_cols(a, b);
        if let Some([_, _, v, v_inv]) = self.tr.as_mut() {
            v.swap_cols(a, b);
            v_inv.swap_rows(a, b);
        }
    }

    fn negate_row(&mut self, t: usize) {
        for c in 0..self.a.cols {
            let v = -self.a.get(t, c).clone();
            self.a.set(t, c, v);
        }
        if let Some([u, u_inv, _, _]) = self.tr.as_mut() {
            for c in 0..u.cols {
                let v = -u.get(t, c).clone();
                u.set(t, c, v);
            }
            for r in 0..u_inv.rows {
                let v = -u_inv.get(r, t).clone();
                u_inv.set(r, t, v);
            }
        }
    }
}

/// Reduces `a` in place to Smith form. Returns the rank, or `None` on
/// overflow.
///
/// The pivot is always an entry of least absolute value in the remaining
/// block (first in row-major order on ties), which keeps coefficient growth
/// small and makes the result deterministic.
fn reduce_dense<T: Scalar>(m: &mut Tracked<'_, T>) -> Option<usize> {
    let (rows, cols) = (m.a.rows, m.a.cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(m.a, t, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        loop {
            let p = m.a.get(t, t).clone();
            for i in t + 1..rows {
                if !m.a.get(i, t).is_zero() {
                    let q = m.a.get(i, t).clone() / p.clone();
                    m.row_sub(i, t, &q)?;
                }
            }
            for j in t + 1..cols {
                if !m.a.get(t, j).is_zero() {
                    let q = m.a.get(t, j).clone() / p.clone();
                    m.col_sub(j, t, &q)?;
                }
            }
            let leftover = min_abs_entry(
                m.a,
                t,
                (t + 1..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j))),
            );
            if let Some((i, j)) = leftover {
                m.swap_rows(t, i);
                m.swap_cols(t, j);
                continue;
            }
            let p = m.a.get(t, t).clone();
            let bad_row = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !m.a.get(i, j).is_multiple_of(&p))
            });
            match bad_row {
                Some(i) => {
                    // row t += row i
                    m.row_sub(t, i, &(-T::one()))?;
                }
                None => break,
            }
        }
        if m.a.get(t, t).is_negative() {
            m.negate_row(t);
        }
        t += 1;
    }
    Some(t)
}

fn min_abs_entry<T: Scalar>(
    a: &Matrix<T>,
    _t: usize,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for (i, j) in positions {
        let v = a.get(i, j);
        if v.is_zero() {
            continue;
        }
        let av = v.abs();
        let better = match &best {
            None => true,
            Some((_, b)) => av < *b,
        };
        if better {
            let done = av.is_one();
            best = Some(((i, j), av));
            if done {
                break;
            }
        }
    }
    best.map(|(pos, _)| pos)
}

fn snf_generic<T: Scalar>(m: &Matrix<T>, with_transforms: bool) -> Option<SmithForm> {
    let mut a = m.clone();
    let tr = with_transforms.then(|| {
        [
            Matrix::identity(m.rows),
            Matrix::identity(m.rows),
            Matrix::identity(m.cols),
            Matrix::identity(m.cols),
        ]
    });
    let mut tracked = Tracked { a: &mut a, tr };
    let rank = reduce_dense(&mut tracked)?;
    let tr = tracked.tr.take();
    let factors = (0..rank).map(|i| a.get(i, i).to_big()).collect();
    let transforms = tr.map(|[u, u_inv, v, v_inv]| SmithTransforms {
        u: u.map(Scalar::to_big),
        u_inv: u_inv.map(Scalar::to_big),
        d: a.map(Scalar::to_big),
        v: v.map(Scalar::to_big),
        v_inv: v_inv.map(Scalar::to_big),
    });
    Some(SmithForm {
        rank,
        factors,
        transforms,
    })
}

/// Smith normal form of a dense matrix, without transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    snf_generic(m, false).unwrap_or_else(|| {
        snf_generic(&m.map(|&x| BigInt::from(x)), false).expect("BigInt cannot overflow")
    })
}

/// Smith normal form of a dense matrix with unimodular transforms.
pub fn smith_normal_form_with_transforms(m: &IntMatrix) -> SmithForm {
    snf_generic(m, true).unwrap_or_else(|| {
        snf_generic(&m.map(|&x| BigInt::from(x)), true).expect("BigInt cannot overflow")
    })
}

/// Sparse integer matrix stored by rows, each row sorted by column.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        SparseMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    /// Appends a row given as `(column, value)` pairs in any order;
    /// repeated columns are summed and zeros dropped.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, i64)>) {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.cols, "column {c} out of range");
            *acc.entry(c).or_insert(0) += v;
        }
        self.rows.push(acc.into_iter().filter(|&(_, v)| v != 0).collect());
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.rows[r]
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows.len(), self.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                m.set(r, c, v);
            }
        }
        m
    }

    /// Nonzero entries as `(row, col, value)` triplets in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c, v)))
    }

    /// `self · other`, computed densely per row.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows.len(), "dimension mismatch");
        let mut out = SparseMatrix::new(other.cols);
        for row in &self.rows {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, a) in row {
                for &(j, b) in &other.rows[k] {
                    *acc.entry(j).or_insert(0) += a * b;
                }
            }
            out.push_row(acc);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }
}

type SparseRow<T> = Vec<(usize, T)>;

/// `x - f*y` on sorted sparse rows.
fn sparse_sub_mul<T: Scalar>(x: &SparseRow<T>, f: &T, y: &SparseRow<T>) -> Option<SparseRow<T>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, T::zero().checked_sub(&f.checked_mul(&y[j].1)?)?));
            j += 1;
        } else {
            let v = sub_mul(&x[i].1, f, &y[j].1)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Eliminates unit pivots sparsely, then finishes the leftover block with
/// the dense reduction. Unit pivots are taken from the shortest row that
/// has one, at its sparsest column, to limit fill-in.
fn sparse_snf_generic<T: Scalar>(rows_in: Vec<SparseRow<T>>, cols: usize) -> Option<SmithForm> {
    let mut rows: Vec<Option<SparseRow<T>>> = rows_in.into_iter().map(Some).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row.as_ref().unwrap() {
            col_rows[*c].insert(r);
        }
    }
    let mut queue: BTreeSet<(usize, usize)> = rows
        .iter()
        .enumerate()
        .filter_map(|(r, row)| {
            let len = row.as_ref().unwrap().len();
            (len > 0).then_some((len, r))
        })
        .collect();
    let mut unit_pivots = 0usize;
    while let Some((len, r)) = queue.pop_first() {
        let Some(row) = rows[r].as_ref() else {
            continue;
        };
        if row.len() != len {
            continue;
        }
        let pivot = row
            .iter()
            .filter(|(_, v)| v.abs().is_one())
            .min_by_key(|(c, _)| (col_rows[*c].len(), *c))
            .cloned();
        let Some((pc, pv)) = pivot else {
            continue;
        };
        let prow = rows[r].take().unwrap();
        for (c, _) in &prow {
            col_rows[*c].remove(&r);
        }
        let others: Vec<usize> = col_rows[pc].iter().copied().collect();
        for o in others {
            let orow = rows[o].take().unwrap();
            let coeff = orow.iter().find(|(c, _)| *c == pc).unwrap().1.clone();
            // pv is ±1, so coeff / pv = coeff * pv.
            let f = coeff.checked_mul(&pv)?;
            let new = sparse_sub_mul(&orow, &f, &prow)?;
            for (c, _) in &orow {
                col_rows[*c].remove(&o);
            }
            for (c, _) in &new {
                col_rows[*c].insert(o);
            }
            if !new.is_empty() {
                queue.insert((new.len(), o));
                rows[o] = Some(new);
            } else {
                rows[o] = Some(Vec::new());
            }
        }
        debug_assert!(col_rows[pc].is_empty());
        unit_pivots += 1;
    }
    let rest: Vec<SparseRow<T>> = rows.into_iter().flatten().filter(|r| !r.is_empty()).collect();
    let live: Vec<usize> = {
        let mut s = BTreeSet::new();
        for r in &rest {
            for (c, _) in r {
                s.insert(*c);
            }
        }
        s.into_iter().collect()
    };
    let mut dense = Matrix::zeros(rest.len(), live.len());
    for (i, r) in rest.iter().enumerate() {
        for (c, v) in r {
            let j = live.binary_search(c).unwrap();
            dense.set(i, j, v.clone());
        }
    }
    let tail = snf_generic(&dense, false)?;
    let mut factors = vec![BigInt::one(); unit_pivots];
    factors.extend(tail.factors);
    Some(SmithForm {
        rank: unit_pivots + tail.rank,
        factors,
        transforms: None,
    })
}

/// Rank and invariant factors of a sparse matrix.
pub fn sparse_smith_form(m: &SparseMatrix) -> SmithForm {
    sparse_snf_generic(m.rows.clone(), m.cols).unwrap_or_else(|| {
        let big = m
            .rows
            .iter()
            .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
            .collect();
        sparse_snf_generic(big, m.cols).expect("BigInt cannot overflow")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_examples() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&m);
        assert_eq!((s.rank, s.factors), (2, big(&[1, 6])));

        let z = IntMatrix::zeros(3, 2);
        let s = smith_normal_form(&z);
        assert_eq!(s.rank, 0);
        assert!(s.factors.is_empty());

        let m = IntMatrix::from_rows(vec![vec![2, 4], vec![4, 8]]);
        let s = smith_normal_form(&m);
        assert_eq!((s.rank, s.factors), (1, big(&[2])));
    }

    #[test]
    fn transforms_reconstruct() {
        let m = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_normal_form_with_transforms(&m);
        assert_eq!(s.factors, big(&[2, 6, 12]));
        let t = s.transforms.unwrap();
        assert_eq!(t.u.mul(&m.map(|&x| BigInt::from(x))).mul(&t.v), t.d);
        assert_eq!(t.u.mul(&t.u_inv), Matrix::identity(3));
        assert_eq!(t.v.mul(&t.v_inv), Matrix::identity(3));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let huge = i64::MAX / 2 + 1;
        let m = IntMatrix::from_rows(vec![vec![huge, huge - 1], vec![huge - 1, huge]]);
        let s = smith_normal_form_with_transforms(&m);
        // det = 2*huge - 1, gcd of entries = 1.
        let det = BigInt::from(huge) * BigInt::from(huge) - BigInt::from(huge - 1) * BigInt::from(huge - 1);
        assert_eq!(s.factors, vec![BigInt::one(), det]);
        let t = s.transforms.unwrap();
        assert_eq!(t.u.mul(&m.map(|&x| BigInt::from(x))).mul(&t.v), t.d);
    }

    #[test]
    fn sparse_matches_dense() {
        let rows = vec![
            vec![1, 1, 0, 0],
            vec![0, 2, 2, 0],
            vec![0, 0, 3, 3],
            vec![1, 0, 0, 1],
        ];
        let mut sp = SparseMatrix::new(4);
        for r in &rows {
            sp.push_row(r.iter().enumerate().map(|(c, &v)| (c, v)));
        }
        let dense = smith_normal_form(&IntMatrix::from_rows(rows));
        let sparse = sparse_smith_form(&sp);
        assert_eq!(dense.rank, sparse.rank);
        assert_eq!(dense.factors, sparse.factors);
    }
}
