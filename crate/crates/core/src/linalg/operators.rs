//! Questions about finite families of operators on `K^n`.

use crate::field::Scalar;
use crate::linalg::matrix::Matrix;
use crate::linalg::poly::charpoly;
use crate::linalg::subspace::Subspace;

/// Outcome of a search that can be exhaustive or not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The search was exhaustive.
    None,
    /// Nothing found, but some eigenvalue search did not complete.
    Inconclusive,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// A vector that is an eigenvector of every operator, i.e. spans a common
/// invariant line. Candidate eigenvalues are the roots in `K` of the
/// characteristic polynomials, so the search is exhaustive whenever root
/// finding is.
pub fn common_eigenvector<K: Scalar>(n: usize, ops: &[Matrix<K>]) -> Search<Vec<K>> {
    if n == 0 {
        return Search::None;
    }
    let mut candidates = vec![Subspace::full(n)];
    let mut complete = true;
    for op in ops {
        if op.is_zero() {
            continue;
        }
        let Some(roots) = K::roots(&charpoly(op)) else {
            complete = false;
            continue;
        };
        let mut next = Vec::new();
        for w in &candidates {
            for r in &roots {
                let shifted = op.lincomb(&K::one(), &Matrix::identity(n), &-r.clone()).expect("square");
                let e = w.intersect(&Subspace::kernel(&shifted)).expect("same ambient");
                if !e.is_zero() {
                    next.push(e);
                }
            }
        }
        candidates = next;
        if candidates.is_empty() {
            break;
        }
    }
    // skipped operators still have to be checked
    for w in &candidates {
        for v in w.basis() {
            let line = Subspace::span(n, std::slice::from_ref(v));
            if ops.iter().all(|m| line.is_invariant(m)) {
                return Search::Found(v.clone());
            }
        }
    }
    if complete {
        Search::None
    } else {
        Search::Inconclusive
    }
}

/// `{v : T v = 0 for every T}`.
pub fn common_kernel<K: Scalar>(n: usize, ops: &[Matrix<K>]) -> Subspace<K> {
    let mut rows = Vec::new();
    for m in ops {
        assert_eq!(m.cols(), n);
        rows.extend(m.row_data().iter().cloned());
    }
    Subspace::kernel(&Matrix::from_sparse_rows(rows.len(), n, rows))
}

/// `Σ Im T`.
pub fn sum_of_images<K: Scalar>(n: usize, ops: &[Matrix<K>]) -> Subspace<K> {
    let mut vecs = Vec::new();
    for m in ops {
        vecs.extend(m.columns());
    }
    Subspace::span(n, &vecs)
}

/// Dimension of `{X : XT = TX for every T}`, computed from the linear system
/// in the `n²` entries of `X` (row-major).
pub fn commutant_dim<K: Scalar>(n: usize, ops: &[Matrix<K>]) -> usize {
    let id = Matrix::identity(n);
    let mut rows = Vec::new();
    for t in ops {
        // vec(XT - TX) = (I ⊗ Tᵀ - T ⊗ I) vec(X) for row-major vec
        let m = id.kron(&t.transpose()).lincomb(&K::one(), &t.kron(&id), &-K::one()).expect("square");
        rows.extend(m.into_row_data());
    }
    let sys = Matrix::from_sparse_rows(rows.len(), n * n, rows);
    Subspace::kernel(&sys).dim()
}
