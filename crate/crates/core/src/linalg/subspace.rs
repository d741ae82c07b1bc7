use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::echelon::Rref;
use crate::linalg::matrix::{sparse_from_dense, Matrix};

/// A subspace of `K^n` in canonical reduced row echelon form.
///
/// Two generating sets of the same space always give identical values, so
/// `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<K> {
    ambient: usize,
    basis: Vec<Vec<K>>,
    pivots: Vec<usize>,
}

impl<K: Scalar> Subspace<K> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, &(0..ambient).collect::<Vec<_>>())
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vecs: Vec<Vec<K>> = indices.iter().map(|&i| unit(ambient, i)).collect();
        Self::span(ambient, &vecs)
    }

    pub fn span(ambient: usize, vectors: &[Vec<K>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
        }
        let rr = Rref::from_rows(ambient, ambient, vectors.iter().map(|v| sparse_from_dense(v)));
        Self::from_rref(&rr)
    }

    pub fn checked_span(ambient: usize, vectors: &[Vec<K>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {ambient}",
                v.len()
            )));
        }
        Ok(Self::span(ambient, vectors))
    }

    fn from_rref(rr: &Rref<K>) -> Self {
        Subspace { ambient: rr.pivot_limit, basis: rr.dense_rows(), pivots: rr.pivots.clone() }
    }

    /// Null space of `m` (acting on column vectors).
    pub fn kernel(m: &Matrix<K>) -> Self {
        let rr = Rref::of_matrix(m);
        Self::span(m.cols(), &rr.kernel_basis())
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix<K>) -> Self {
        let rr = Rref::of_matrix(&m.transpose());
        Self::from_rref(&rr)
    }

    /// `{v : m v ∈ target}`.
    pub fn preimage(m: &Matrix<K>, target: &Subspace<K>) -> Self {
        assert_eq!(m.rows(), target.ambient);
        let q = target.quotient_matrix();
        Self::kernel(&q.checked_mul(m).expect("shapes"))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<K>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; they index the canonical quotient
    /// coordinates of `K^n / self`.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Canonical remainder of `v` modulo the subspace: zero at every pivot.
    pub fn reduce(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                for (o, x) in out.iter_mut().zip(b) {
                    if !x.is_zero() {
                        *o = o.clone() - c.clone() * x.clone();
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[K]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` with respect to the echelon basis.
    pub fn coords(&self, v: &[K]) -> Option<Vec<K>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn combine(&self, coeffs: &[K]) -> Vec<K> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = vec![K::zero(); self.ambient];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
        out
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of K^{} and K^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Ok(Self::span(self.ambient, &vecs))
    }

    /// Intersection via the kernel of the stacked system `[U | -W]`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let mut cols: Vec<Vec<K>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.iter().map(|x| -x.clone()).collect()));
        let m = Matrix::from_columns(self.ambient, &cols);
        let du = self.dim();
        let ker = Rref::of_matrix(&m).kernel_basis();
        let vecs: Vec<Vec<K>> = ker.iter().map(|k| self.combine(&k[..du])).collect();
        Ok(Self::span(self.ambient, &vecs))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    /// True when `m` maps the subspace into itself.
    pub fn is_invariant(&self, m: &Matrix<K>) -> bool {
        self.basis.iter().all(|b| self.contains(&m.mul_vec(b)))
    }

    /// Smallest subspace containing `seeds` and invariant under every
    /// operator in `ops`.
    pub fn spin(ambient: usize, seeds: &[Vec<K>], ops: &[Matrix<K>]) -> Self {
        fn push<K: Scalar>(v: Vec<K>, rr: &mut Rref<K>, index: &mut HashMap<usize, usize>, queue: &mut Vec<Vec<K>>) {
            let before = rr.rank();
            rr.insert_indexed(sparse_from_dense(&v), index);
            if rr.rank() > before {
                queue.push(v);
            }
        }
        let mut rr = Rref::new(ambient, ambient);
        let mut index = HashMap::new();
        let mut queue: Vec<Vec<K>> = Vec::new();
        for v in seeds {
            assert_eq!(v.len(), ambient);
            push(v.clone(), &mut rr, &mut index, &mut queue);
        }
        while let Some(v) = queue.pop() {
            for op in ops {
                if rr.rank() == ambient {
                    break;
                }
                push(op.mul_vec(&v), &mut rr, &mut index, &mut queue);
            }
        }
        rr.finish();
        Self::from_rref(&rr)
    }

    pub fn image_under(&self, m: &Matrix<K>) -> Self {
        let vecs: Vec<Vec<K>> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Self::span(m.rows(), &vecs)
    }

    /// Matrix with the basis vectors as columns (`ambient x dim`).
    pub fn inclusion_matrix(&self) -> Matrix<K> {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// Coordinate map onto the subspace, `dim x ambient`, valid on vectors of
    /// the subspace (reads the pivot entries).
    pub fn coordinate_matrix(&self) -> Matrix<K> {
        let mut m = Matrix::zeros(self.dim(), self.ambient);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, K::one());
        }
        m
    }

    /// Quotient projection `K^n -> K^n / self` in canonical coordinates
    /// (the free columns), `(n - dim) x n`. Surjective with kernel `self`.
    pub fn quotient_matrix(&self) -> Matrix<K> {
        let free = self.free_columns();
        let mut m = Matrix::zeros(free.len(), self.ambient);
        let mut pos = vec![usize::MAX; self.ambient];
        for (i, &f) in free.iter().enumerate() {
            pos[f] = i;
            m.set(i, f, K::one());
        }
        // a pivot unit vector reduces to minus the free part of its row
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            for (j, x) in b.iter().enumerate() {
                if pos[j] != usize::MAX && !x.is_zero() {
                    m.set(pos[j], p, -x.clone());
                }
            }
        }
        m
    }

    pub fn quotient_coords(&self, v: &[K]) -> Vec<K> {
        let r = self.reduce(v);
        self.free_columns().into_iter().map(|f| r[f].clone()).collect()
    }

    /// Section of the quotient map: places quotient coordinates on the free
    /// columns.
    pub fn quotient_lift(&self, w: &[K]) -> Vec<K> {
        let free = self.free_columns();
        assert_eq!(w.len(), free.len());
        let mut out = vec![K::zero(); self.ambient];
        for (x, f) in w.iter().zip(free) {
            out[f] = x.clone();
        }
        out
    }

    /// Matrix of [`Self::quotient_lift`], `n x (n - dim)`.
    pub fn quotient_lift_matrix(&self) -> Matrix<K> {
        let free = self.free_columns();
        let mut m = Matrix::zeros(self.ambient, free.len());
        for (i, f) in free.into_iter().enumerate() {
            m.set(f, i, K::one());
        }
        m
    }

    /// Operator induced by an invariant `m` on the subspace, in echelon
    /// coordinates.
    pub fn restrict(&self, m: &Matrix<K>) -> Result<Matrix<K>> {
        let cols: Option<Vec<Vec<K>>> = self.basis.iter().map(|b| self.coords(&m.mul_vec(b))).collect();
        let cols = cols.ok_or(Error::NotClosed("invariant under the operator"))?;
        Ok(Matrix::from_columns(self.dim(), &cols))
    }

    /// Operator induced by an invariant `m` on `K^n / self`.
    pub fn induced_on_quotient(&self, m: &Matrix<K>) -> Result<Matrix<K>> {
        if !self.is_invariant(m) {
            return Err(Error::NotClosed("invariant under the operator"));
        }
        let free = self.free_columns();
        let cols: Vec<Vec<K>> = free
            .iter()
            .map(|&f| self.quotient_coords(&m.mul_vec(&unit(self.ambient, f))))
            .collect();
        Ok(Matrix::from_columns(free.len(), &cols))
    }
}

pub fn unit<K: Scalar>(n: usize, i: usize) -> Vec<K> {
    let mut v = vec![K::zero(); n];
    v[i] = K::one();
    v
}

impl<K: fmt::Debug> fmt::Debug for Subspace<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(K^{}, dim {}) [", self.ambient, self.basis.len())?;
        for b in &self.basis {
            let cells: Vec<String> = b.iter().map(|x| format!("{x:?}")).collect();
            write!(f, " ({})", cells.join(","))?;
        }
        write!(f, " ]")
    }
}

/// `V / U` for `U ⊆ V ⊆ K^n`, with coordinates taken from the canonical
/// projection `K^n -> K^n / U` restricted to `V`.
#[derive(Clone, Debug)]
pub struct RelativeQuotient<K> {
    pub outer: Subspace<K>,
    pub inner: Subspace<K>,
    image: Subspace<K>,
}

impl<K: Scalar> RelativeQuotient<K> {
    pub fn new(outer: Subspace<K>, inner: Subspace<K>) -> Result<Self> {
        if !inner.is_subspace_of(&outer) {
            return Err(Error::Precondition("quotient V/U needs U ⊆ V".into()));
        }
        let projected: Vec<Vec<K>> = outer.basis().iter().map(|v| inner.quotient_coords(v)).collect();
        let image = Subspace::span(inner.ambient_dim() - inner.dim(), &projected);
        Ok(RelativeQuotient { outer, inner, image })
    }

    pub fn dim(&self) -> usize {
        self.image.dim()
    }

    /// Coordinates of `v ∈ V` in `V/U`; `None` if `v ∉ V`.
    pub fn project(&self, v: &[K]) -> Option<Vec<K>> {
        if !self.outer.contains(v) {
            return None;
        }
        self.image.coords(&self.inner.quotient_coords(v))
    }

    /// A representative in `V` of the class with coordinates `w`.
    pub fn lift(&self, w: &[K]) -> Vec<K> {
        self.inner.quotient_lift(&self.image.combine(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    fn v(x: &[i64]) -> Vec<Q> {
        x.iter().map(|&a| Q::from_i64(a)).collect()
    }

    #[test]
    fn canonical_form_is_generator_independent() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[1, 1, 0])]);
        let b = Subspace::span(3, &[v(&[2, 1, 0]), v(&[0, 3, 0])]);
        assert_eq!(a, b);
        assert_eq!(a, Subspace::coordinate(3, &[0, 1]));
    }

    #[test]
    fn sum_and_intersection() {
        let x = Subspace::<Q>::coordinate(3, &[0]);
        let y = Subspace::coordinate(3, &[1]);
        assert_eq!(x.sum(&y).unwrap(), Subspace::coordinate(3, &[0, 1]));
        assert!(x.intersect(&y).unwrap().is_zero());
        let p = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let q = Subspace::coordinate(3, &[0, 1]);
        assert_eq!(p.intersect(&q).unwrap(), Subspace::span(3, &[v(&[1, 1, 0])]));
        assert_eq!(p.intersect(&p).unwrap(), p);
        assert!(x.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn quotient_projection_has_kernel_u() {
        let u = Subspace::span(3, &[v(&[1, 2, 3])]);
        let q = u.quotient_matrix();
        assert_eq!(q.rows(), 2);
        assert_eq!(Subspace::kernel(&q), u);
        assert!(Subspace::image(&q).is_full());
        let w = v(&[4, -1]);
        assert_eq!(u.quotient_coords(&u.quotient_lift(&w)), w);
        let lift = u.quotient_lift_matrix();
        assert_eq!(q.checked_mul(&lift).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn relative_quotient_roundtrip() {
        let outer = Subspace::span(3, &[v(&[1, 0, 1]), v(&[0, 1, 1])]);
        let inner = Subspace::span(3, &[v(&[1, 1, 2])]);
        let rq = RelativeQuotient::new(outer.clone(), inner.clone()).unwrap();
        assert_eq!(rq.dim(), 1);
        let l = rq.lift(&[Q::from_i64(1)]);
        assert!(outer.contains(&l));
        assert_eq!(rq.project(&l).unwrap(), vec![Q::from_i64(1)]);
        assert_eq!(rq.project(&v(&[1, 1, 2])).unwrap(), vec![Q::from_i64(0)]);
    }

    #[test]
    fn kernel_image_rank_nullity() {
        let m = Matrix::<Fp<3>>::from_i64(&[&[1, 1, 0], &[0, 0, 0], &[1, 1, 0]]);
        let k = Subspace::kernel(&m);
        let i = Subspace::image(&m);
        assert_eq!(k.dim() + i.dim(), 3);
        assert_eq!(i.dim(), 1);
    }
}
