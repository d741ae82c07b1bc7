//! Leibniz bimodules as representation pairs `(λ, ρ)`.

mod composition;

pub use composition::{CompositionFactor, CompositionSeries, Irreducibility, LINE_BUDGET};

use std::sync::Arc;

use crate::algebra::{check_left_module, combination, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{
    common_eigenvector, common_kernel, inverse, sum_of_images, unit, Matrix, Search, Subspace,
};
use crate::field::Scalar;

/// Names of the three operator identities a representation must satisfy.
pub const LEFT_IDENTITY: &str = "λ_xy = λ_x λ_y - λ_y λ_x";
pub const MIXED_IDENTITY: &str = "ρ_xy = λ_x ρ_y - ρ_y λ_x";
pub const RIGHT_IDENTITY: &str = "ρ_y ρ_x = -ρ_y λ_x";

/// `λ[i]` and `ρ[i]` are the left and right actions of the basis vector
/// `e_i` on `K^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<K> {
    algebra: Arc<LeibnizAlgebra<K>>,
    dim: usize,
    lambda: Vec<Matrix<K>>,
    rho: Vec<Matrix<K>>,
}

/// Kernels of `x ↦ λ_x` and `x ↦ ρ_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilators<K> {
    pub left: Subspace<K>,
    pub right: Subspace<K>,
    pub both: Subspace<K>,
}

impl<K: Scalar> Bimodule<K> {
    pub fn new(algebra: Arc<LeibnizAlgebra<K>>, lambda: Vec<Matrix<K>>, rho: Vec<Matrix<K>>) -> Result<Self> {
        let m = Self::new_unchecked(algebra, lambda, rho)?;
        m.validate()?;
        Ok(m)
    }

    /// Checks shapes only.
    pub fn new_unchecked(algebra: Arc<LeibnizAlgebra<K>>, lambda: Vec<Matrix<K>>, rho: Vec<Matrix<K>>) -> Result<Self> {
        let n = algebra.dim();
        if lambda.len() != n || rho.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "need {n} left and {n} right action matrices, got {} and {}",
                lambda.len(),
                rho.len()
            )));
        }
        let dim = lambda.first().map_or(0, Matrix::rows);
        if lambda.iter().chain(&rho).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("action matrices must all be {dim}x{dim}")));
        }
        Ok(Bimodule { algebra, dim, lambda, rho })
    }

    /// Every `(identity, x, y)` on basis pairs where an identity fails.
    pub fn violations(&self) -> Vec<(&'static str, usize, usize)> {
        let n = self.algebra.dim();
        let one = K::one();
        let minus = -K::one();
        let mul = |a: &Matrix<K>, b: &Matrix<K>| a.checked_mul(b).expect("shapes");
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let xy = self.algebra.basis_product(x, y);
                let comm = mul(&self.lambda[x], &self.lambda[y])
                    .lincomb(&one, &mul(&self.lambda[y], &self.lambda[x]), &minus)
                    .expect("shapes");
                if combination(self.dim, xy, &self.lambda) != comm {
                    out.push((LEFT_IDENTITY, x, y));
                }
                let mixed = mul(&self.lambda[x], &self.rho[y])
                    .lincomb(&one, &mul(&self.rho[y], &self.lambda[x]), &minus)
                    .expect("shapes");
                if combination(self.dim, xy, &self.rho) != mixed {
                    out.push((MIXED_IDENTITY, x, y));
                }
                if mul(&self.rho[y], &self.rho[x]) != mul(&self.rho[y], &self.lambda[x]).neg() {
                    out.push((RIGHT_IDENTITY, x, y));
                }
            }
        }
        out
    }

    /// The first basis pair violating one of the three identities.
    pub fn validate(&self) -> Result<()> {
        match self.violations().first() {
            None => Ok(()),
            Some(&(identity, x, y)) => Err(Error::BimoduleViolation { identity, x, y }),
        }
    }

    pub fn algebra(&self) -> &LeibnizAlgebra<K> {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<LeibnizAlgebra<K>> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lambda(&self) -> &[Matrix<K>] {
        &self.lambda
    }

    pub fn rho(&self) -> &[Matrix<K>] {
        &self.rho
    }

    pub fn lambda_of(&self, x: &[K]) -> Matrix<K> {
        combination(self.dim, x, &self.lambda)
    }

    pub fn rho_of(&self, x: &[K]) -> Matrix<K> {
        combination(self.dim, x, &self.rho)
    }

    /// All action matrices, left ones first.
    pub fn operators(&self) -> Vec<Matrix<K>> {
        self.lambda.iter().chain(&self.rho).cloned().collect()
    }

    // -- constructors ------------------------------------------------------

    pub fn trivial(algebra: Arc<LeibnizAlgebra<K>>, dim: usize) -> Self {
        let n = algebra.dim();
        let z = vec![Matrix::zeros(dim, dim); n];
        Bimodule { algebra, dim, lambda: z.clone(), rho: z }
    }

    /// `L_ad`: `x·m = xm`, `m·x = mx`.
    pub fn adjoint(algebra: Arc<LeibnizAlgebra<K>>) -> Self {
        let lambda = algebra.left_mults().to_vec();
        let rho = algebra.right_mults().to_vec();
        let dim = algebra.dim();
        Bimodule { algebra, dim, lambda, rho }
    }

    /// `M_s` of a left module: `ρ = -λ`.
    pub fn symmetric(algebra: Arc<LeibnizAlgebra<K>>, lambda: Vec<Matrix<K>>) -> Result<Self> {
        check_left_module(&algebra, &lambda)?;
        let rho = lambda.iter().map(Matrix::neg).collect();
        Self::new(algebra, lambda, rho)
    }

    /// `M_a` of a left module: `ρ = 0`.
    pub fn antisymmetric(algebra: Arc<LeibnizAlgebra<K>>, lambda: Vec<Matrix<K>>) -> Result<Self> {
        check_left_module(&algebra, &lambda)?;
        let d = lambda.first().map_or(0, Matrix::rows);
        let rho = vec![Matrix::zeros(d, d); lambda.len()];
        Self::new(algebra, lambda, rho)
    }

    /// Three-dimensional bimodule over the one-dimensional Lie algebra with
    /// `λ_e` a nilpotent Jordan block and `ρ_e = E_13`.
    pub fn example_a() -> Self {
        let l = Arc::new(LeibnizAlgebra::one_dim_lie());
        let a = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
        Self::new(l, vec![a], vec![b]).expect("example A")
    }

    /// The algebra of the abelian pair `{E, I}` in `gl_2` acting on `K^2`
    /// from the left, made symmetric.
    pub fn example_b() -> Self {
        let g = Arc::new(LeibnizAlgebra::abelian(2));
        let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let i = Matrix::identity(2);
        Self::symmetric(g, vec![e, i]).expect("example B")
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::Precondition("direct sum of bimodules over different algebras".into()));
        }
        let lambda = self.lambda.iter().zip(&other.lambda).map(|(a, b)| Matrix::block_diag(&[a, b])).collect();
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| Matrix::block_diag(&[a, b])).collect();
        Ok(Bimodule { algebra: self.algebra.clone(), dim: self.dim + other.dim, lambda, rho })
    }

    pub fn is_sub_bimodule(&self, w: &Subspace<K>) -> bool {
        w.ambient_dim() == self.dim && self.lambda.iter().chain(&self.rho).all(|m| w.is_invariant(m))
    }

    /// The sub-bimodule `w` in its echelon basis.
    pub fn sub_bimodule(&self, w: &Subspace<K>) -> Result<Self> {
        if w.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch("subspace of a different module".into()));
        }
        let lambda = self.lambda.iter().map(|m| w.restrict(m)).collect::<Result<Vec<_>>>()?;
        let rho = self.rho.iter().map(|m| w.restrict(m)).collect::<Result<Vec<_>>>()?;
        Ok(Bimodule { algebra: self.algebra.clone(), dim: w.dim(), lambda, rho })
    }

    /// `M / w` in the canonical quotient coordinates of `w`.
    pub fn quotient(&self, w: &Subspace<K>) -> Result<Self> {
        if w.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch("subspace of a different module".into()));
        }
        let lambda = self.lambda.iter().map(|m| w.induced_on_quotient(m)).collect::<Result<Vec<_>>>()?;
        let rho = self.rho.iter().map(|m| w.induced_on_quotient(m)).collect::<Result<Vec<_>>>()?;
        Ok(Bimodule { algebra: self.algebra.clone(), dim: self.dim - w.dim(), lambda, rho })
    }

    /// Restriction to a subalgebra `s`, whose structure constants are
    /// re-derived in the echelon basis of `s`.
    pub fn restrict_to_subalgebra(&self, s: &Subspace<K>) -> Result<Self> {
        let sub = Arc::new(self.algebra.restrict_to(s)?);
        let lambda = s.basis().iter().map(|b| self.lambda_of(b)).collect();
        let rho = s.basis().iter().map(|b| self.rho_of(b)).collect();
        Ok(Bimodule { algebra: sub, dim: self.dim, lambda, rho })
    }

    /// The same module over the algebra written in the basis given by the
    /// columns of `p`.
    pub fn change_algebra_basis(&self, p: &Matrix<K>) -> Result<Self> {
        let algebra = Arc::new(self.algebra.change_basis(p)?);
        let cols = p.columns();
        let lambda = cols.iter().map(|b| self.lambda_of(b)).collect();
        let rho = cols.iter().map(|b| self.rho_of(b)).collect();
        Ok(Bimodule { algebra, dim: self.dim, lambda, rho })
    }

    /// The module transported along an invertible `p` (new basis vectors of
    /// `M` as columns).
    pub fn change_module_basis(&self, p: &Matrix<K>) -> Result<Self> {
        let pinv = inverse(p).ok_or_else(|| Error::Precondition("change of basis is singular".into()))?;
        let conj = |m: &Matrix<K>| -> Result<Matrix<K>> { pinv.checked_mul(&m.checked_mul(p)?) };
        let lambda = self.lambda.iter().map(conj).collect::<Result<Vec<_>>>()?;
        let rho = self.rho.iter().map(conj).collect::<Result<Vec<_>>>()?;
        Ok(Bimodule { algebra: self.algebra.clone(), dim: self.dim, lambda, rho })
    }

    /// `Hom(L, M)_s` with `(x·f)(y) = x·f(y) - f(xy)` and `ρ = -λ`.
    ///
    /// `f` is stored as `f[y * dim M + r]`, the degree-one cochain layout.
    pub fn hom_symmetric(&self) -> Result<Self> {
        let n = self.algebra.dim();
        let id_l = Matrix::identity(n);
        let id_m = Matrix::identity(self.dim);
        let lambda: Vec<Matrix<K>> = (0..n)
            .map(|x| {
                id_l.kron(&self.lambda[x])
                    .lincomb(&K::one(), &self.algebra.left_basis(x).transpose().kron(&id_m), &-K::one())
                    .expect("shapes")
            })
            .collect();
        Self::symmetric(self.algebra.clone(), lambda)
    }

    // -- invariants --------------------------------------------------------

    /// `M^S = {m : m·s = 0 for s ∈ S}`.
    pub fn right_invariants(&self, s: &Subspace<K>) -> Subspace<K> {
        let ops: Vec<Matrix<K>> = s.basis().iter().map(|b| self.rho_of(b)).collect();
        common_kernel(self.dim, &ops)
    }

    /// `M^L`.
    pub fn invariants(&self) -> Subspace<K> {
        common_kernel(self.dim, &self.rho)
    }

    /// `M_0 = span{x·m + m·x}`.
    pub fn antisymmetric_kernel(&self) -> Subspace<K> {
        let ops: Vec<Matrix<K>> = self
            .lambda
            .iter()
            .zip(&self.rho)
            .map(|(l, r)| l.checked_add(r).expect("shapes"))
            .collect();
        sum_of_images(self.dim, &ops)
    }

    /// `M L = span{m·x}`.
    pub fn right_action_image(&self) -> Subspace<K> {
        sum_of_images(self.dim, &self.rho)
    }

    /// `∩ Ker λ_i ∩ Ker ρ_i`, the largest trivial sub-bimodule.
    pub fn trivial_part(&self) -> Subspace<K> {
        common_kernel(self.dim, &self.operators())
    }

    pub fn is_symmetric(&self) -> bool {
        self.lambda.iter().zip(&self.rho).all(|(l, r)| l.checked_add(r).expect("shapes").is_zero())
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rho.iter().all(Matrix::is_zero)
    }

    pub fn is_trivial(&self) -> bool {
        self.lambda.iter().chain(&self.rho).all(Matrix::is_zero)
    }

    pub fn annihilators(&self) -> Annihilators<K> {
        let left = action_kernel(self.algebra.dim(), &self.lambda);
        let right = action_kernel(self.algebra.dim(), &self.rho);
        let both = left.intersect(&right).expect("same ambient");
        Annihilators { left, right, both }
    }

    pub fn is_right_faithful(&self) -> bool {
        self.annihilators().right.is_zero()
    }

    /// Smallest sub-bimodule containing `vecs`.
    pub fn generated(&self, vecs: &[Vec<K>]) -> Subspace<K> {
        Subspace::spin(self.dim, vecs, &self.operators())
    }

    /// A vector spanning a one-dimensional sub-bimodule, if one exists.
    pub fn one_dim_submodule(&self) -> Search<Vec<K>> {
        common_eigenvector(self.dim, &self.operators())
    }

    pub fn unit(&self, i: usize) -> Vec<K> {
        unit(self.dim, i)
    }
}

/// Kernel of `x ↦ Σ x_i ops[i]` as a subspace of the algebra.
fn action_kernel<K: Scalar>(n: usize, ops: &[Matrix<K>]) -> Subspace<K> {
    // column i is vec(ops[i]); the kernel of that matrix is the annihilator
    let d = ops.first().map_or(0, Matrix::rows);
    let cols: Vec<Vec<K>> = ops.iter().map(|m| m.to_dense().concat()).collect();
    if d == 0 {
        return Subspace::full(n);
    }
    Subspace::kernel(&Matrix::from_columns(d * d, &cols))
}
