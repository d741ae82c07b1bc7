//! Composition series by spinning descent.

use super::Bimodule;
use crate::field::Scalar;
use crate::linalg::enumerate::{gaussian_binomial, lines};
use crate::linalg::poly::charpoly;
use crate::linalg::{commutant_dim, Matrix, Search, Subspace};

/// Largest number of lines visited when certifying irreducibility by
/// exhaustion.
pub const LINE_BUDGET: u64 = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Irreducibility {
    /// Every nonzero vector was checked to generate the whole module.
    Certified,
    /// Only the deterministic candidate vectors were checked (large or
    /// infinite field); irreducible relative to those.
    Heuristic,
}

#[derive(Clone, Debug)]
pub struct CompositionFactor<K> {
    pub module: Bimodule<K>,
    pub is_trivial: bool,
    pub irreducibility: Irreducibility,
}

impl<K: Scalar> CompositionFactor<K> {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// An irreducible module whose commutant is the ground field stays
    /// irreducible over every extension field.
    pub fn is_absolutely_irreducible(&self) -> bool {
        commutant_dim(self.module.dim(), &self.module.operators()) == 1
    }
}

/// `0 = W_0 ⊂ W_1 ⊂ … ⊂ W_k = M` with irreducible factors `W_i / W_{i-1}`.
#[derive(Clone, Debug)]
pub struct CompositionSeries<K> {
    pub chain: Vec<Subspace<K>>,
    pub factors: Vec<CompositionFactor<K>>,
}

impl<K: Scalar> CompositionSeries<K> {
    pub fn all_certified(&self) -> bool {
        self.factors.iter().all(|f| f.irreducibility == Irreducibility::Certified)
    }

    pub fn has_trivial_factor(&self) -> bool {
        self.factors.iter().any(|f| f.is_trivial)
    }

    pub fn has_one_dim_factor(&self) -> bool {
        self.factors.iter().any(|f| f.dim() == 1)
    }
}

impl<K: Scalar> Bimodule<K> {
    /// A nonzero proper sub-bimodule, and whether the search was exhaustive.
    pub fn proper_submodule(&self, budget: u64) -> (Option<Subspace<K>>, bool) {
        let n = self.dim;
        if n <= 1 {
            return (None, true);
        }
        let proper = |v: &[K]| -> Option<Subspace<K>> {
            let g = self.generated(&[v.to_vec()]);
            (g.dim() > 0 && g.dim() < n).then_some(g)
        };
        for v in self.candidate_vectors() {
            if let Some(g) = proper(&v) {
                return (Some(g), true);
            }
        }
        let count = K::elements().map(|e| gaussian_binomial(n, 1, e.len() as u64));
        match count {
            Some(c) if c <= budget => {
                for v in lines::<K>(n, budget).expect("within budget") {
                    if let Some(g) = proper(&v) {
                        return (Some(g), true);
                    }
                }
                (None, true)
            }
            _ => (None, false),
        }
    }

    /// Basis vectors, a common eigenvector, and kernels and eigenvectors of
    /// each action matrix.
    fn candidate_vectors(&self) -> Vec<Vec<K>> {
        let n = self.dim;
        let mut out: Vec<Vec<K>> = (0..n).map(|i| self.unit(i)).collect();
        let ops = self.operators();
        if let Search::Found(v) = crate::linalg::common_eigenvector(n, &ops) {
            out.push(v);
        }
        for op in &ops {
            let roots = K::roots(&charpoly(op)).unwrap_or_default();
            for r in roots {
                let shifted = op.lincomb(&K::one(), &Matrix::identity(n), &-r).expect("square");
                out.extend(Subspace::kernel(&shifted).basis().iter().cloned());
            }
        }
        out
    }

    /// An irreducible sub-bimodule reached by repeated descent.
    pub fn irreducible_submodule(&self, budget: u64) -> (Subspace<K>, Irreducibility) {
        let mut w = Subspace::full(self.dim);
        loop {
            let sub = self.sub_bimodule(&w).expect("invariant");
            match sub.proper_submodule(budget) {
                (Some(u), _) => {
                    let vecs: Vec<Vec<K>> = u.basis().iter().map(|c| w.combine(c)).collect();
                    w = Subspace::span(self.dim, &vecs);
                }
                (None, exhaustive) => {
                    let cert = if exhaustive { Irreducibility::Certified } else { Irreducibility::Heuristic };
                    return (w, cert);
                }
            }
        }
    }

    pub fn irreducibility(&self, budget: u64) -> Option<Irreducibility> {
        if self.dim == 0 {
            return None;
        }
        match self.proper_submodule(budget) {
            (Some(_), _) => None,
            (None, true) => Some(Irreducibility::Certified),
            (None, false) => Some(Irreducibility::Heuristic),
        }
    }

    pub fn composition_series(&self) -> CompositionSeries<K> {
        self.composition_series_with_budget(LINE_BUDGET)
    }

    pub fn composition_series_with_budget(&self, budget: u64) -> CompositionSeries<K> {
        let mut chain = vec![Subspace::zero(self.dim)];
        let mut factors = Vec::new();
        let mut cur = self.clone();
        let mut proj = Matrix::identity(self.dim);
        while cur.dim > 0 {
            let (u, irreducibility) = cur.irreducible_submodule(budget);
            let module = cur.sub_bimodule(&u).expect("invariant");
            factors.push(CompositionFactor { is_trivial: module.is_trivial(), module, irreducibility });
            chain.push(Subspace::preimage(&proj, &u));
            proj = u.quotient_matrix().checked_mul(&proj).expect("shapes");
            cur = cur.quotient(&u).expect("invariant");
        }
        CompositionSeries { chain, factors }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::LeibnizAlgebra;
    use crate::field::{Fp, Rational};

    #[test]
    fn example_a_has_three_trivial_factors() {
        let m = Bimodule::<Rational>::example_a();
        let cs = m.composition_series();
        assert_eq!(cs.factors.len(), 3);
        assert!(cs.factors.iter().all(|f| f.is_trivial && f.dim() == 1));
        assert!(cs.chain.iter().all(|w| m.is_sub_bimodule(w)));
        assert_eq!(cs.chain.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn rotation_module_is_irreducible_over_gf3_not_gf5() {
        let rot3 = Matrix::<Fp<3>>::from_i64(&[&[0, -1], &[1, 0]]);
        let l3 = Arc::new(LeibnizAlgebra::one_dim_lie());
        let m3 = Bimodule::symmetric(l3, vec![rot3]).unwrap();
        let cs = m3.composition_series();
        assert_eq!(cs.factors.len(), 1);
        assert_eq!(cs.factors[0].irreducibility, Irreducibility::Certified);
        assert!(!cs.factors[0].is_absolutely_irreducible());
        let rot5 = Matrix::<Fp<5>>::from_i64(&[&[0, -1], &[1, 0]]);
        let l5 = Arc::new(LeibnizAlgebra::one_dim_lie());
        let m5 = Bimodule::symmetric(l5, vec![rot5]).unwrap();
        assert_eq!(m5.composition_series().factors.len(), 2);
    }

    #[test]
    fn adjoint_n_factors() {
        let n = Arc::new(LeibnizAlgebra::<Rational>::example_n());
        let cs = Bimodule::adjoint(n).composition_series();
        assert_eq!(cs.factors.len(), 2);
        assert!(cs.has_trivial_factor() && cs.factors.iter().all(|f| f.is_trivial));
        assert_eq!(cs.chain[1], Subspace::coordinate(2, &[0]));
    }
}
