//! Subalgebra lattice over small prime fields, and conjugation by
//! `exp(L_x)`.

use std::collections::{BTreeSet, HashMap};

use super::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::enumerate::all_subspaces;
use crate::linalg::{Matrix, Subspace};
use crate::field::Scalar;

impl<K: Scalar> LeibnizAlgebra<K> {
    /// Every subalgebra, by exhaustive enumeration of subspaces.
    pub fn subalgebras(&self, budget: u64) -> Result<Vec<Subspace<K>>> {
        Ok(all_subspaces::<K>(self.dim, budget)?
            .into_iter()
            .filter(|s| self.is_subalgebra(s))
            .collect())
    }

    /// Proper subalgebras not contained in a larger proper subalgebra.
    pub fn maximal_subalgebras(&self, budget: u64) -> Result<Vec<Subspace<K>>> {
        let subs = self.subalgebras(budget)?;
        Ok(maximal_below(&subs, &self.whole()))
    }

    /// Intersection of the maximal subalgebras (zero when there are none).
    pub fn frattini(&self, budget: u64) -> Result<Subspace<K>> {
        let max = self.maximal_subalgebras(budget)?;
        let mut acc = self.whole();
        if max.is_empty() {
            return Ok(Subspace::zero(self.dim));
        }
        for m in &max {
            acc = acc.intersect(m)?;
        }
        Ok(acc)
    }

    /// The set of lengths of all maximal chains `0 = S_0 < … < S_k = L`
    /// where each `S_i` is maximal in `S_{i+1}`.
    pub fn maximal_chain_lengths(&self, budget: u64) -> Result<BTreeSet<usize>> {
        let subs = self.subalgebras(budget)?;
        let mut memo: HashMap<Subspace<K>, BTreeSet<usize>> = HashMap::new();
        Ok(chain_lengths(&self.whole(), &subs, &mut memo))
    }

    /// `exp(L_x)`: `id + L_x` when `L_x² = 0`, the full exponential series in
    /// characteristic zero when `L_x` is nilpotent. The result is checked to
    /// be an automorphism.
    pub fn exp_left(&self, x: &[K]) -> Result<Matrix<K>> {
        let l = self.left_mult(x);
        let id = Matrix::identity(self.dim);
        let exp = if l.pow(2).is_zero() {
            id.checked_add(&l)?
        } else if K::field().characteristic() == 0 && l.is_nilpotent() {
            let mut acc = id.clone();
            let mut term = id;
            for k in 1..=self.dim as i64 {
                term = term.checked_mul(&l)?.scale(&K::from_i64(k).inv().expect("char 0"));
                acc = acc.checked_add(&term)?;
            }
            acc
        } else {
            return Err(Error::Precondition(
                "exp(L_x) needs L_x² = 0, or L_x nilpotent in characteristic 0".into(),
            ));
        };
        if !self.is_automorphism(&exp) {
            return Err(Error::Precondition("exp(L_x) is not an automorphism for this x".into()));
        }
        Ok(exp)
    }

    /// Invertible and multiplicative on basis pairs.
    pub fn is_automorphism(&self, m: &Matrix<K>) -> bool {
        if m.rows() != self.dim || !m.is_square() || crate::linalg::rank(m) != self.dim {
            return false;
        }
        let cols = m.columns();
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| m.mul_vec(&self.c[i][j]) == self.mul(&cols[i], &cols[j]))
        })
    }

    /// `exp(L_x)(k)`.
    pub fn exp_conjugate(&self, x: &[K], k: &Subspace<K>) -> Result<Subspace<K>> {
        let e = self.exp_left(x)?;
        Ok(k.image_under(&e))
    }
}

fn maximal_below<K: Scalar>(subs: &[Subspace<K>], top: &Subspace<K>) -> Vec<Subspace<K>> {
    let proper: Vec<&Subspace<K>> = subs
        .iter()
        .filter(|s| s.dim() < top.dim() && s.is_subspace_of(top))
        .collect();
    proper
        .iter()
        .filter(|s| !proper.iter().any(|t| t.dim() > s.dim() && s.is_subspace_of(t)))
        .map(|s| (*s).clone())
        .collect()
}

fn chain_lengths<K: Scalar>(
    top: &Subspace<K>,
    subs: &[Subspace<K>],
    memo: &mut HashMap<Subspace<K>, BTreeSet<usize>>,
) -> BTreeSet<usize> {
    if top.is_zero() {
        return BTreeSet::from([0]);
    }
    if let Some(v) = memo.get(top) {
        return v.clone();
    }
    let mut out = BTreeSet::new();
    for m in maximal_below(subs, top) {
        for l in chain_lengths(&m, subs, memo) {
            out.insert(l + 1);
        }
    }
    memo.insert(top.clone(), out.clone());
    out
}
