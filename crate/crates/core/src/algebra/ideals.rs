use super::{basis_vectors, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{common_eigenvector, common_kernel, Matrix, Search, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `¹L = L`, `ʳ⁺¹L = L·(ʳL)`.
    LeftDescendingCentral,
    /// `L⁽⁰⁾ = L`, `L⁽ⁿ⁺¹⁾ = L⁽ⁿ⁾L⁽ⁿ⁾`.
    Derived,
}

/// A chain of ideals, listed from the whole algebra downwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealChain<K> {
    pub terms: Vec<Subspace<K>>,
}

impl<K: Scalar> IdealChain<K> {
    pub fn last(&self) -> &Subspace<K> {
        self.terms.last().expect("chains are never empty")
    }

    /// `dim T_k - dim T_{k+1}` for consecutive terms.
    pub fn codims(&self) -> Vec<usize> {
        self.terms.windows(2).map(|w| w[0].dim() - w[1].dim()).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealInfo<K> {
    pub is_ideal: bool,
    pub is_left_ideal: bool,
    pub is_right_ideal: bool,
    /// Smallest two-sided ideal containing the subspace.
    pub closure: Subspace<K>,
}

/// `L / I` with the canonical projection and its section on the free
/// columns of `I`.
#[derive(Clone, Debug)]
pub struct Quotient<K> {
    pub algebra: LeibnizAlgebra<K>,
    pub ideal: Subspace<K>,
    pub projection: Matrix<K>,
    pub lift: Matrix<K>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Supersolvability<K> {
    /// A chain of ideals `L = I_d ⊃ … ⊃ I_0 = 0` with one-dimensional steps.
    Yes(IdealChain<K>),
    No,
    /// Eigenvalue search could not be completed over the rationals.
    Unknown,
}

impl<K> Supersolvability<K> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Supersolvability::Yes(_))
    }
}

impl<K: Scalar> LeibnizAlgebra<K> {
    /// `span{xy : x ∈ A, y ∈ B}`.
    pub fn product_space(&self, a: &Subspace<K>, b: &Subspace<K>) -> Subspace<K> {
        let mut vecs = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                vecs.push(self.mul(x, y));
            }
        }
        Subspace::span(self.dim, &vecs)
    }

    pub fn whole(&self) -> Subspace<K> {
        Subspace::full(self.dim)
    }

    /// `Leib(L) = span{x²}`, spanned by `e_i²` and `e_i e_j + e_j e_i`.
    pub fn leibniz_kernel(&self) -> Subspace<K> {
        let mut vecs = Vec::new();
        for i in 0..self.dim {
            vecs.push(self.c[i][i].clone());
            for j in i + 1..self.dim {
                vecs.push(self.c[i][j].iter().zip(&self.c[j][i]).map(|(a, b)| a.clone() + b.clone()).collect());
            }
        }
        Subspace::span(self.dim, &vecs)
    }

    pub fn derived_subalgebra(&self) -> Subspace<K> {
        self.product_space(&self.whole(), &self.whole())
    }

    /// Terms are strictly decreasing; the last one is the stable value.
    pub fn series(&self, kind: SeriesKind) -> IdealChain<K> {
        let whole = self.whole();
        let mut terms = vec![whole.clone()];
        loop {
            let cur = terms.last().unwrap();
            let next = match kind {
                SeriesKind::LeftDescendingCentral => self.product_space(&whole, cur),
                SeriesKind::Derived => self.product_space(cur, cur),
            };
            if next == *cur {
                break;
            }
            terms.push(next);
        }
        IdealChain { terms }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LeftDescendingCentral).last().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived).last().is_zero()
    }

    /// `C^ℓ(L) = {c : cx = 0 for all x}`.
    pub fn left_center(&self) -> Subspace<K> {
        common_kernel(self.dim, &self.right)
    }

    /// `{x : sx = 0 for all s ∈ S}`.
    pub fn right_centralizer(&self, s: &Subspace<K>) -> Subspace<K> {
        let ops: Vec<Matrix<K>> = s.basis().iter().map(|b| self.left_mult(b)).collect();
        common_kernel(self.dim, &ops)
    }

    /// `L·V ⊆ V`.
    pub fn is_left_ideal(&self, v: &Subspace<K>) -> bool {
        self.left.iter().all(|m| v.is_invariant(m))
    }

    /// `V·L ⊆ V`.
    pub fn is_right_ideal(&self, v: &Subspace<K>) -> bool {
        self.right.iter().all(|m| v.is_invariant(m))
    }

    pub fn is_ideal(&self, v: &Subspace<K>) -> bool {
        self.is_left_ideal(v) && self.is_right_ideal(v)
    }

    pub fn is_subalgebra(&self, v: &Subspace<K>) -> bool {
        v.basis().iter().all(|x| v.basis().iter().all(|y| v.contains(&self.mul(x, y))))
    }

    pub fn ideal_closure(&self, v: &Subspace<K>) -> Subspace<K> {
        let ops: Vec<Matrix<K>> = self.left.iter().chain(&self.right).cloned().collect();
        Subspace::spin(self.dim, v.basis(), &ops)
    }

    pub fn generated_subalgebra(&self, vecs: &[Vec<K>]) -> Subspace<K> {
        let mut cur = Subspace::span(self.dim, vecs);
        loop {
            let next = cur.sum(&self.product_space(&cur, &cur)).expect("same ambient");
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn ideal_info(&self, v: &Subspace<K>) -> IdealInfo<K> {
        let is_left_ideal = self.is_left_ideal(v);
        let is_right_ideal = self.is_right_ideal(v);
        IdealInfo {
            is_ideal: is_left_ideal && is_right_ideal,
            is_left_ideal,
            is_right_ideal,
            closure: self.ideal_closure(v),
        }
    }

    pub fn quotient(&self, ideal: &Subspace<K>) -> Result<Quotient<K>> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch("ideal of a different algebra".into()));
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotClosed("an ideal"));
        }
        let projection = ideal.quotient_matrix();
        let lift = ideal.quotient_lift_matrix();
        let reps = lift.columns();
        let q = reps.len();
        let c = (0..q)
            .map(|a| (0..q).map(|b| projection.mul_vec(&self.mul(&reps[a], &reps[b]))).collect())
            .collect();
        let algebra = LeibnizAlgebra::new(q, c)?;
        Ok(Quotient { algebra, ideal: ideal.clone(), projection, lift })
    }

    /// `L / Leib(L)`.
    pub fn canonical_lie(&self) -> LeibnizAlgebra<K> {
        self.quotient(&self.leibniz_kernel()).expect("the Leibniz kernel is an ideal").algebra
    }

    /// A nonzero `v` spanning a one-dimensional ideal, i.e. a common
    /// eigenvector of all left and right multiplications.
    pub fn one_dim_ideal(&self) -> Search<Vec<K>> {
        let ops: Vec<Matrix<K>> = self.left.iter().chain(&self.right).cloned().collect();
        common_eigenvector(self.dim, &ops)
    }

    /// Greedy search: split off a one-dimensional ideal and recurse on the
    /// quotient. Exact whenever all eigenvalue searches complete, since
    /// quotients of supersolvable algebras are supersolvable.
    pub fn supersolvability(&self) -> Supersolvability<K> {
        if self.dim == 0 {
            return Supersolvability::Yes(IdealChain { terms: vec![self.whole()] });
        }
        let v = match self.one_dim_ideal() {
            Search::Found(v) => v,
            Search::None => return Supersolvability::No,
            Search::Inconclusive => return Supersolvability::Unknown,
        };
        let line = Subspace::span(self.dim, &[v]);
        let q = self.quotient(&line).expect("one-dimensional ideal");
        match q.algebra.supersolvability() {
            Supersolvability::Yes(chain) => {
                let mut terms: Vec<Subspace<K>> =
                    chain.terms.iter().map(|t| Subspace::preimage(&q.projection, t)).collect();
                terms.push(Subspace::zero(self.dim));
                Supersolvability::Yes(IdealChain { terms })
            }
            other => other,
        }
    }

    /// Checks that a chain consists of ideals with one-dimensional steps from
    /// the whole algebra to zero.
    pub fn is_supersolvable_chain(&self, chain: &IdealChain<K>) -> bool {
        chain.terms.first().is_some_and(Subspace::is_full)
            && chain.last().is_zero()
            && chain.codims().iter().all(|&c| c == 1)
            && chain.terms.iter().all(|t| self.is_ideal(t))
    }

    pub fn basis(&self) -> Vec<Vec<K>> {
        basis_vectors(self.dim)
    }
}
