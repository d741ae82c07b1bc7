use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;

/// Sparse vector: `(index, value)` pairs, indices strictly increasing, no
/// stored zeros.
pub type SparseVec<K> = Vec<(usize, K)>;

/// Sparse row-major matrix over an exact field.
///
/// Matrices act on column vectors: an `r x c` matrix maps `K^c` to `K^r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<K>>,
}

pub fn sparse_from_dense<K: Scalar>(v: &[K]) -> SparseVec<K> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse<K: Scalar>(v: &[(usize, K)], len: usize) -> Vec<K> {
    let mut out = vec![K::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a + s * b` for sorted sparse vectors.
pub fn sparse_axpy<K: Scalar>(a: &[(usize, K)], s: &K, b: &[(usize, K)]) -> SparseVec<K> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = s.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.clone() + s.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `s * a + t * b` for sorted sparse vectors.
pub fn sparse_lincomb<K: Scalar>(s: &K, a: &[(usize, K)], t: &K, b: &[(usize, K)]) -> SparseVec<K> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (idx, v) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            i += 1;
            (a[i - 1].0, s.clone() * a[i - 1].1.clone())
        } else if i == a.len() || b[j].0 < a[i].0 {
            j += 1;
            (b[j - 1].0, t.clone() * b[j - 1].1.clone())
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, s.clone() * a[i - 1].1.clone() + t.clone() * b[j - 1].1.clone())
        };
        if !v.is_zero() {
            out.push((idx, v));
        }
    }
    out
}

impl<K: Scalar> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, K::one())
    }

    pub fn scalar(n: usize, s: K) -> Self {
        let mut m = Self::zeros(n, n);
        if !s.is_zero() {
            for i in 0..n {
                m.data[i].push((i, s.clone()));
            }
        }
        m
    }

    pub fn from_dense(rows: &[Vec<K>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.iter().map(|row| sparse_from_dense(row)).collect() }
    }

    /// Builds a matrix from small integers, row by row.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<K>> = rows.iter().map(|r| r.iter().map(|&x| K::from_i64(x)).collect()).collect();
        Self::from_dense(&dense)
    }

    pub fn from_sparse_rows(rows: usize, cols: usize, data: Vec<SparseVec<K>>) -> Self {
        debug_assert_eq!(data.len(), rows);
        debug_assert!(data.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)
            && r.iter().all(|(c, v)| *c < cols && !v.is_zero())));
        Matrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<K>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.data[i].push((j, v.clone()));
                }
            }
        }
        m
    }

    /// Builds from `(row, col, value)` triples; duplicates are summed.
    pub fn from_triplets(rows: usize, cols: usize, mut triplets: Vec<(usize, usize, K)>) -> Self {
        triplets.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut data: Vec<SparseVec<K>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of range");
            let row = &mut data[r];
            match row.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = lv.clone() + v,
                _ => row.push((c, v)),
            }
        }
        for row in &mut data {
            row.retain(|(_, v)| !v.is_zero());
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, K)] {
        &self.data[i]
    }

    pub fn row_data(&self) -> &[SparseVec<K>] {
        &self.data
    }

    pub fn into_row_data(self) -> Vec<SparseVec<K>> {
        self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> K {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(p) => self.data[i][p].1.clone(),
            Err(_) => K::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(p) => {
                if v.is_zero() {
                    row.remove(p);
                } else {
                    row[p].1 = v;
                }
            }
            Err(p) => {
                if !v.is_zero() {
                    row.insert(p, (j, v));
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<K>> {
        self.data.iter().map(|r| dense_from_sparse(r, self.cols)).collect()
    }

    pub fn column(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<K>> {
        let t = self.transpose();
        t.data.iter().map(|r| dense_from_sparse(r, self.rows)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec<K>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols, "mul_vec: length mismatch");
        self.data
            .iter()
            .map(|row| {
                row.iter().fold(K::zero(), |acc, (j, a)| {
                    if v[*j].is_zero() {
                        acc
                    } else {
                        acc + a.clone() * v[*j].clone()
                    }
                })
            })
            .collect()
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: SparseVec<K> = Vec::new();
                for (k, a) in row {
                    acc = sparse_axpy(&acc, a, &other.data[*k]);
                }
                acc
            })
            .collect();
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.lincomb(&K::one(), other, &K::one())
    }

    /// `s * self + t * other`.
    pub fn lincomb(&self, s: &K, other: &Self, t: &K) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| sparse_lincomb(s, a, t, b))
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &K) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, s.clone() * v.clone())).collect())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-K::one())
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("square");
        }
        acc
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data: Vec<SparseVec<K>> = Vec::with_capacity(rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, va) in ra {
                    for (jb, vb) in rb {
                        row.push((ja * other.cols + jb, va.clone() * vb.clone()));
                    }
                }
                data.push(row);
            }
        }
        Matrix { rows, cols, data }
    }

    /// Block-diagonal matrix.
    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows);
        let mut off = 0;
        for b in blocks {
            for r in &b.data {
                data.push(r.iter().map(|(j, v)| (j + off, v.clone())).collect());
            }
            off += b.cols;
        }
        Matrix { rows, cols, data }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column count".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Places `self` left of `other`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row count".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(j, v)| (j + self.cols, v.clone())));
                r
            })
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols + other.cols, data })
    }

    /// Submatrix on the given row and column index lists (in the given order).
    pub fn select(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let mut col_map = vec![usize::MAX; self.cols];
        for (new, &old) in col_idx.iter().enumerate() {
            col_map[old] = new;
        }
        let data = row_idx
            .iter()
            .map(|&i| {
                let mut r: SparseVec<K> = self.data[i]
                    .iter()
                    .filter(|(j, _)| col_map[*j] != usize::MAX)
                    .map(|(j, v)| (col_map[*j], v.clone()))
                    .collect();
                r.sort_by_key(|(j, _)| *j);
                r
            })
            .collect();
        Matrix { rows: row_idx.len(), cols: col_idx.len(), data }
    }

    pub fn trace(&self) -> K {
        (0..self.rows.min(self.cols)).fold(K::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.pow(self.rows as u32).is_zero()
    }
}

impl<K: fmt::Debug> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in &self.data {
            let cells: Vec<String> = r.iter().map(|(j, x)| format!("{j}:{x:?}")).collect();
            writeln!(f, "  {{{}}}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::field::Fp;

    type F7 = Fp<7>;

    #[test]
    fn product_and_transpose() {
        let a = Matrix::<F7>::from_i64(&[&[1, 2], &[0, 3]]);
        let b = Matrix::<F7>::from_i64(&[&[4, 0], &[1, 1]]);
        let ab = a.checked_mul(&b).unwrap();
        assert_eq!(ab, Matrix::from_i64(&[&[6, 2], &[3, 3]]));
        assert_eq!(ab.transpose().transpose(), ab);
        assert_eq!(a.mul_vec(&[F7::one(), F7::one()]), vec![F7::from_i64(3), F7::from_i64(3)]);
        assert!(a.checked_mul(&Matrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn kron_matches_definition() {
        let a = Matrix::<F7>::from_i64(&[&[1, 2], &[3, 4]]);
        let i = Matrix::<F7>::identity(2);
        let k = a.kron(&i);
        assert_eq!(k.get(0, 2), F7::from_i64(2));
        assert_eq!(k.get(3, 1), F7::from_i64(3));
        assert_eq!(k.get(1, 0), F7::zero());
    }

    #[test]
    fn set_keeps_rows_sparse() {
        let mut m = Matrix::<F7>::zeros(2, 3);
        m.set(0, 2, F7::one());
        m.set(0, 1, F7::one());
        m.set(0, 2, F7::zero());
        assert_eq!(m.row(0), &[(1, F7::one())]);
        assert_eq!(m.nnz(), 1);
    }
}
