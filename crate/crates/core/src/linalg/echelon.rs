//! Sparse Gaussian elimination.
//!
//! Two flavours are provided. [`Rref`] is a Gauss-Jordan reduction with
//! normalized pivots, used whenever kernels, images or solutions are needed.
//! [`rank`] only counts pivots; over the rationals it runs the
//! cross-multiplying (fraction-free) update `r <- p_c * r - r_c * p` and
//! rescales every new row to a primitive integer vector, which keeps entry
//! growth in check on large coboundary matrices.

use std::collections::HashMap;

use crate::field::{FieldSpec, Scalar};
use crate::linalg::matrix::{dense_from_sparse, sparse_axpy, sparse_lincomb, Matrix, SparseVec};

/// Reduced row echelon form of a row list.
///
/// Pivots are only taken in columns `< pivot_limit`; rows that vanish on
/// those columns end up in `dependent` (their trailing part is kept, which is
/// how augmented systems report inconsistent right hand sides).
#[derive(Clone, Debug)]
pub struct Rref<K> {
    pub cols: usize,
    pub pivot_limit: usize,
    /// Rows in order of increasing pivot column; each pivot entry is 1 and
    /// is the only nonzero entry of its column among these rows.
    pub rows: Vec<SparseVec<K>>,
    pub pivots: Vec<usize>,
    pub dependent: Vec<SparseVec<K>>,
}

impl<K: Scalar> Rref<K> {
    pub fn new(cols: usize, pivot_limit: usize) -> Self {
        Rref { cols, pivot_limit, rows: Vec::new(), pivots: Vec::new(), dependent: Vec::new() }
    }

    pub fn from_rows<I: IntoIterator<Item = SparseVec<K>>>(cols: usize, pivot_limit: usize, rows: I) -> Self {
        let mut r = Self::new(cols, pivot_limit);
        let mut index = HashMap::new();
        for row in rows {
            r.insert_indexed(row, &mut index);
        }
        r.finish();
        r
    }

    pub fn of_matrix(m: &Matrix<K>) -> Self {
        Self::from_rows(m.cols(), m.cols(), m.row_data().iter().cloned())
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivot rows.
    pub fn reduce(&self, row: &[(usize, K)]) -> SparseVec<K> {
        let index: HashMap<usize, usize> = self.pivots.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        reduce_with(&self.rows, &index, row.to_vec())
    }

    pub(crate) fn insert_indexed(&mut self, row: SparseVec<K>, index: &mut HashMap<usize, usize>) {
        let mut row = reduce_with(&self.rows, index, row);
        let Some(&(c, ref lead)) = row.first() else {
            return;
        };
        if c >= self.pivot_limit {
            self.dependent.push(row);
            return;
        }
        let inv = lead.inv().expect("nonzero lead");
        for e in row.iter_mut() {
            e.1 = e.1.clone() * inv.clone();
        }
        // clear the new pivot column from existing rows
        for r in self.rows.iter_mut() {
            if let Ok(p) = r.binary_search_by_key(&c, |(j, _)| *j) {
                let f = -r[p].1.clone();
                *r = sparse_axpy(r, &f, &row);
            }
        }
        index.insert(c, self.rows.len());
        self.rows.push(row);
        self.pivots.push(c);
    }

    /// Sorts rows by pivot column.
    pub(crate) fn finish(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let rows = std::mem::take(&mut self.rows);
        let mut rows: Vec<Option<SparseVec<K>>> = rows.into_iter().map(Some).collect();
        self.rows = order.iter().map(|&i| rows[i].take().unwrap()).collect();
        self.pivots = order.iter().map(|&i| self.pivots[i]).collect();
    }

    /// Basis of the null space of the pivot part (columns `< pivot_limit`),
    /// one vector per free column, as dense vectors of that length.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let n = self.pivot_limit;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..n).filter(|&f| !is_pivot[f]) {
            let mut v = vec![K::zero(); n];
            v[f] = K::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if let Ok(q) = row.binary_search_by_key(&f, |(j, _)| *j) {
                    v[p] = -row[q].1.clone();
                }
            }
            out.push(v);
        }
        out
    }

    pub fn dense_rows(&self) -> Vec<Vec<K>> {
        self.rows.iter().map(|r| dense_from_sparse(r, self.cols)).collect()
    }
}

fn reduce_with<K: Scalar>(rows: &[SparseVec<K>], index: &HashMap<usize, usize>, mut row: SparseVec<K>) -> SparseVec<K> {
    if rows.is_empty() {
        return row;
    }
    let mut start = 0;
    loop {
        let hit = row[start..].iter().position(|(c, _)| index.contains_key(c));
        let Some(off) = hit else {
            return row;
        };
        let pos = start + off;
        let (c, v) = row[pos].clone();
        let pr = &rows[index[&c]];
        row = sparse_axpy(&row, &-v, pr);
        // entries before `pos` are untouched since pivot rows have no entries
        // left of their pivot
        start = pos;
    }
}

/// Rank by forward elimination (no back substitution). Over the rationals
/// the fraction-free update is used, over prime fields plain elimination.
pub fn rank<K: Scalar>(m: &Matrix<K>) -> usize {
    match K::field() {
        FieldSpec::Rationals => rank_fraction_free(m),
        FieldSpec::PrimeField(_) => rank_plain(m),
    }
}

/// Forward elimination with cross-multiplication, `r <- p_c * r - r_c * p`,
/// followed by [`Scalar::make_primitive`]. Valid over any field.
pub fn rank_fraction_free<K: Scalar>(m: &Matrix<K>) -> usize {
    forward_eliminate(m, true)
}

/// Forward elimination with normalized pivots.
pub fn rank_plain<K: Scalar>(m: &Matrix<K>) -> usize {
    forward_eliminate(m, false)
}

fn forward_eliminate<K: Scalar>(m: &Matrix<K>, fraction_free: bool) -> usize {
    // sparse rows tend to be shorter than columns in coboundary matrices; the
    // pivot table maps a column to its pivot row
    let mut pivot_rows: HashMap<usize, SparseVec<K>> = HashMap::new();
    for row in m.row_data() {
        let mut r = row.clone();
        while let Some((c, v)) = r.first().cloned() {
            match pivot_rows.get(&c) {
                Some(p) => {
                    if fraction_free {
                        let pc = p[0].1.clone();
                        r = sparse_lincomb(&pc, &r, &-v, p);
                        K::make_primitive(&mut r);
                    } else {
                        // plain: pivots are normalized to 1
                        r = sparse_axpy(&r, &-v, p);
                    }
                }
                None => {
                    if fraction_free {
                        K::make_primitive(&mut r);
                    } else {
                        let inv = v.inv().expect("nonzero");
                        for e in r.iter_mut() {
                            e.1 = e.1.clone() * inv.clone();
                        }
                    }
                    pivot_rows.insert(c, r);
                    break;
                }
            }
        }
    }
    pivot_rows.len()
}

/// Solves `m x = b` for several right hand sides at once. Free variables are
/// set to zero, so the answer is deterministic.
pub fn solve_many<K: Scalar>(m: &Matrix<K>, rhs: &[Vec<K>]) -> Vec<Option<Vec<K>>> {
    let n = m.cols();
    let k = rhs.len();
    let rows = (0..m.rows()).map(|i| {
        let mut r = m.row(i).to_vec();
        for (t, b) in rhs.iter().enumerate() {
            if !b[i].is_zero() {
                r.push((n + t, b[i].clone()));
            }
        }
        r
    });
    let rr = Rref::from_rows(n + k, n, rows);
    let mut bad = vec![false; k];
    for d in &rr.dependent {
        for (c, _) in d {
            bad[c - n] = true;
        }
    }
    (0..k)
        .map(|t| {
            if bad[t] {
                return None;
            }
            let mut x = vec![K::zero(); n];
            for (row, &p) in rr.rows.iter().zip(&rr.pivots) {
                if let Ok(q) = row.binary_search_by_key(&(n + t), |(j, _)| *j) {
                    x[p] = row[q].1.clone();
                }
            }
            Some(x)
        })
        .collect()
}

pub fn solve<K: Scalar>(m: &Matrix<K>, b: &[K]) -> Option<Vec<K>> {
    solve_many(m, &[b.to_vec()]).pop().unwrap()
}

/// Inverse of a square matrix, if it exists.
pub fn inverse<K: Scalar>(m: &Matrix<K>) -> Option<Matrix<K>> {
    assert!(m.is_square());
    let n = m.rows();
    let cols: Vec<Vec<K>> = (0..n)
        .map(|i| {
            let mut e = vec![K::zero(); n];
            e[i] = K::one();
            e
        })
        .collect();
    let sols = solve_many(m, &cols);
    if rank(m) < n {
        return None;
    }
    let sols: Option<Vec<Vec<K>>> = sols.into_iter().collect();
    Some(Matrix::from_columns(n, &sols?))
}
