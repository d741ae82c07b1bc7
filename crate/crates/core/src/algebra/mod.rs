//! Finite-dimensional left Leibniz algebras given by structure constants.

mod ideals;
mod subalgebras;

pub use ideals::{IdealChain, IdealInfo, Quotient, SeriesKind, Supersolvability};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{inverse, unit, Matrix, Subspace};

/// A left Leibniz algebra: every left multiplication is a derivation,
/// `x(yz) = (xy)z + y(xz)`.
///
/// `c[i][j]` is the coordinate vector of `e_i e_j`. Left and right
/// multiplication matrices of the basis are cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra<K> {
    dim: usize,
    c: Vec<Vec<Vec<K>>>,
    left: Vec<Matrix<K>>,
    right: Vec<Matrix<K>>,
}

impl<K: Scalar> LeibnizAlgebra<K> {
    /// Checks shapes and the left Leibniz identity on all basis triples.
    pub fn new(dim: usize, c: Vec<Vec<Vec<K>>>) -> Result<Self> {
        let a = Self::new_unchecked(dim, c)?;
        a.validate()?;
        Ok(a)
    }

    /// Checks shapes only.
    pub fn new_unchecked(dim: usize, c: Vec<Vec<Vec<K>>>) -> Result<Self> {
        if c.len() != dim || c.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(Error::DimensionMismatch(format!("structure constants are not {dim}x{dim}x{dim}")));
        }
        let left = (0..dim)
            .map(|i| Matrix::from_columns(dim, &c[i]))
            .collect();
        let right = (0..dim)
            .map(|i| {
                let cols: Vec<Vec<K>> = (0..dim).map(|j| c[j][i].clone()).collect();
                Matrix::from_columns(dim, &cols)
            })
            .collect();
        Ok(LeibnizAlgebra { dim, c, left, right })
    }

    /// Builds from `(i, j, e_i e_j)` entries; omitted pairs multiply to zero.
    pub fn from_products(dim: usize, products: &[(usize, usize, Vec<K>)]) -> Result<Self> {
        Self::new(dim, Self::table(dim, products)?)
    }

    fn table(dim: usize, products: &[(usize, usize, Vec<K>)]) -> Result<Vec<Vec<Vec<K>>>> {
        let mut c = vec![vec![vec![K::zero(); dim]; dim]; dim];
        for (i, j, v) in products {
            if *i >= dim || *j >= dim || v.len() != dim {
                return Err(Error::DimensionMismatch(format!("product entry ({i}, {j}) out of shape")));
            }
            c[*i][*j] = v.clone();
        }
        Ok(c)
    }

    /// Like [`Self::from_products`] with small integer coefficients.
    pub fn from_int_products(dim: usize, products: &[(usize, usize, &[i64])]) -> Result<Self> {
        let p: Vec<(usize, usize, Vec<K>)> = products
            .iter()
            .map(|(i, j, v)| (*i, *j, v.iter().map(|&x| K::from_i64(x)).collect()))
            .collect();
        Self::from_products(dim, &p)
    }

    pub fn field(&self) -> FieldSpec {
        K::field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<K>>] {
        &self.c
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[K] {
        &self.c[i][j]
    }

    pub fn mul(&self, x: &[K], y: &[K]) -> Vec<K> {
        assert!(x.len() == self.dim && y.len() == self.dim);
        let mut out = vec![K::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi.clone() * yj.clone();
                for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                    if !c.is_zero() {
                        *o = o.clone() + s.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// `L_{e_i}: y ↦ e_i y`.
    pub fn left_basis(&self, i: usize) -> &Matrix<K> {
        &self.left[i]
    }

    /// `R_{e_i}: y ↦ y e_i`.
    pub fn right_basis(&self, i: usize) -> &Matrix<K> {
        &self.right[i]
    }

    pub fn left_mults(&self) -> &[Matrix<K>] {
        &self.left
    }

    pub fn right_mults(&self) -> &[Matrix<K>] {
        &self.right
    }

    /// `L_x` for an arbitrary element.
    pub fn left_mult(&self, x: &[K]) -> Matrix<K> {
        combination(self.dim, x, &self.left)
    }

    /// `R_x` for an arbitrary element.
    pub fn right_mult(&self, x: &[K]) -> Matrix<K> {
        combination(self.dim, x, &self.right)
    }

    /// Every basis triple `(i, j, k)` on which the identity fails, in
    /// lexicographic order.
    pub fn violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.left[i].mul_vec(&self.c[j][k]);
                    let rhs1 = self.right[k].mul_vec(&self.c[i][j]);
                    let rhs2 = self.left[j].mul_vec(&self.c[i][k]);
                    let ok = lhs
                        .iter()
                        .zip(rhs1.iter().zip(&rhs2))
                        .all(|(l, (a, b))| *l == a.clone() + b.clone());
                    if !ok {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        match self.violations().first() {
            None => Ok(()),
            Some(&(i, j, k)) => Err(Error::LeibnizViolation { i, j, k }),
        }
    }

    /// Lie means `x² = 0` for all `x`, which is exactly a zero Leibniz kernel.
    pub fn is_lie(&self) -> bool {
        self.leibniz_kernel().is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().flatten().all(|x| x.is_zero())
    }

    /// The algebra in the basis given by the columns of `p` (new basis
    /// vectors in old coordinates).
    pub fn change_basis(&self, p: &Matrix<K>) -> Result<Self> {
        if p.rows() != self.dim || !p.is_square() {
            return Err(Error::DimensionMismatch("change of basis must be square".into()));
        }
        let pinv = inverse(p).ok_or_else(|| Error::Precondition("change of basis is singular".into()))?;
        let cols = p.columns();
        let c = (0..self.dim)
            .map(|a| (0..self.dim).map(|b| pinv.mul_vec(&self.mul(&cols[a], &cols[b]))).collect())
            .collect();
        Self::new(self.dim, c)
    }

    /// The subalgebra `s` as an algebra in its echelon basis.
    pub fn restrict_to(&self, s: &Subspace<K>) -> Result<Self> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch("subspace of a different algebra".into()));
        }
        let b = s.basis();
        let mut c = Vec::with_capacity(b.len());
        for x in b {
            let mut row = Vec::with_capacity(b.len());
            for y in b {
                row.push(s.coords(&self.mul(x, y)).ok_or(Error::NotClosed("a subalgebra"))?);
            }
            c.push(row);
        }
        Self::new(b.len(), c)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim + other.dim;
        let mut c = vec![vec![vec![K::zero(); n]; n]; n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                c[i][j][..self.dim].clone_from_slice(&self.c[i][j]);
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                c[self.dim + i][self.dim + j][self.dim..].clone_from_slice(&other.c[i][j]);
            }
        }
        Self::new(n, c).expect("direct sum of Leibniz algebras")
    }

    // -- constructors ------------------------------------------------------

    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, vec![vec![vec![K::zero(); dim]; dim]; dim]).expect("abelian")
    }

    pub fn one_dim_lie() -> Self {
        Self::abelian(1)
    }

    /// Two-dimensional nilpotent non-Lie algebra, basis `(e, f)`, `ff = e`.
    pub fn example_n() -> Self {
        Self::from_int_products(2, &[(1, 1, &[1, 0])]).expect("N")
    }

    /// Two-dimensional supersolvable non-Lie algebra, basis `(e, h)`,
    /// `he = e`.
    pub fn example_a() -> Self {
        Self::from_int_products(2, &[(1, 0, &[1, 0])]).expect("A")
    }

    /// `sl_2` in the basis `(e, f, h)`.
    pub fn sl2() -> Self {
        Self::from_int_products(
            3,
            &[
                (0, 1, &[0, 0, 1]),
                (1, 0, &[0, 0, -1]),
                (2, 0, &[2, 0, 0]),
                (0, 2, &[-2, 0, 0]),
                (2, 1, &[0, -2, 0]),
                (1, 2, &[0, 2, 0]),
            ],
        )
        .expect("sl2")
    }

    /// `𝔤 ⋉ V` with `(g, u)(h, v) = (gh, g·v)`, for a Lie algebra `𝔤`
    /// and left action matrices `action[i]` of its basis on `V`.
    pub fn hemi_semidirect(lie: &Self, action: &[Matrix<K>]) -> Result<Self> {
        if !lie.is_lie() {
            return Err(Error::Precondition("hemi-semidirect product needs a Lie algebra".into()));
        }
        check_left_module(lie, action)?;
        let g = lie.dim;
        let v = action.first().map_or(0, Matrix::rows);
        let n = g + v;
        let mut c = vec![vec![vec![K::zero(); n]; n]; n];
        for i in 0..g {
            for j in 0..g {
                c[i][j][..g].clone_from_slice(&lie.c[i][j]);
            }
            for k in 0..v {
                let col = action[i].column(k);
                c[i][g + k][g..].clone_from_slice(&col);
            }
        }
        Self::new(n, c)
    }
}

/// `Σ x_i m_i`.
pub(crate) fn combination<K: Scalar>(n: usize, x: &[K], ms: &[Matrix<K>]) -> Matrix<K> {
    assert_eq!(x.len(), ms.len());
    let mut acc = Matrix::zeros(n, n);
    for (xi, m) in x.iter().zip(ms) {
        if !xi.is_zero() {
            acc = acc.lincomb(&K::one(), m, xi).expect("square");
        }
    }
    acc
}

/// Checks `λ_{xy} = [λ_x, λ_y]` on basis pairs.
pub fn check_left_module<K: Scalar>(a: &LeibnizAlgebra<K>, lambda: &[Matrix<K>]) -> Result<()> {
    if lambda.len() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} action matrices for an algebra of dimension {}",
            lambda.len(),
            a.dim()
        )));
    }
    let d = lambda.first().map_or(0, Matrix::rows);
    if lambda.iter().any(|m| m.rows() != d || m.cols() != d) {
        return Err(Error::DimensionMismatch("action matrices differ in shape".into()));
    }
    for x in 0..a.dim() {
        for y in 0..a.dim() {
            let lhs = combination(d, a.basis_product(x, y), lambda);
            let xy = lambda[x].checked_mul(&lambda[y])?;
            let yx = lambda[y].checked_mul(&lambda[x])?;
            if lhs != xy.lincomb(&K::one(), &yx, &-K::one())? {
                return Err(Error::LeftModuleViolation { x, y });
            }
        }
    }
    Ok(())
}

pub(crate) fn basis_vectors<K: Scalar>(n: usize) -> Vec<Vec<K>> {
    (0..n).map(|i| unit(n, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use num_traits::Zero;

    type Q = Rational;

    #[test]
    fn examples_validate() {
        assert!(LeibnizAlgebra::<Q>::example_n().validate().is_ok());
        assert!(LeibnizAlgebra::<Q>::example_a().validate().is_ok());
        assert!(LeibnizAlgebra::<Fp<7>>::sl2().is_lie());
        assert!(!LeibnizAlgebra::<Q>::example_n().is_lie());
    }

    #[test]
    fn violation_list_contains_fff() {
        let a = LeibnizAlgebra::<Q>::new_unchecked(
            2,
            vec![
                vec![vec![Q::zero(), Q::zero()], vec![Q::zero(), Q::from_i64(1)]],
                vec![vec![Q::zero(), Q::zero()], vec![Q::from_i64(1), Q::zero()]],
            ],
        )
        .unwrap();
        let v = a.violations();
        assert!(v.contains(&(1, 1, 1)));
        assert!(a.validate().is_err());
    }

    #[test]
    fn hemi_semidirect_recovers_a() {
        let h = LeibnizAlgebra::<Q>::one_dim_lie();
        let act = [Matrix::from_i64(&[&[1]])];
        let a = LeibnizAlgebra::hemi_semidirect(&h, &act).unwrap();
        // basis (h, e) here; swap to (e, h)
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.change_basis(&swap).unwrap(), LeibnizAlgebra::example_a());
        let zero = LeibnizAlgebra::hemi_semidirect(&h, &[Matrix::zeros(1, 1)]).unwrap();
        assert!(zero.is_abelian());
        let jordan = [Matrix::from_i64(&[&[0, 1], &[0, 0]])];
        let n3 = LeibnizAlgebra::hemi_semidirect(&h, &jordan).unwrap();
        assert!(n3.is_nilpotent() && !n3.is_lie());
    }

    #[test]
    fn multiplication_operators() {
        let a = LeibnizAlgebra::<Q>::example_a();
        let h = unit::<Q>(2, 1);
        let e = unit::<Q>(2, 0);
        assert_eq!(a.left_mult(&h).mul_vec(&e), e);
        assert_eq!(a.right_mult(&e).mul_vec(&h), e);
        assert!(a.right_mult(&h).is_zero());
    }
}
