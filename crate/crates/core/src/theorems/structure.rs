//! Searches for the structural witnesses the hypotheses ask about.

use crate::algebra::{LeibnizAlgebra, SeriesKind};
use crate::bimodule::Bimodule;
use crate::field::Scalar;
use crate::linalg::enumerate::all_subspaces;
use crate::linalg::matrix::sparse_from_dense;
use crate::linalg::{rank, unit, Matrix, Search, Subspace};

use super::Status;

/// Budget for exhaustive subspace enumeration inside hypothesis checks.
pub const SUBSPACE_BUDGET: u64 = 100_000;

/// Basis vectors and all sums of two basis vectors (including `2 e_i`).
pub fn witness_elements<K: Scalar>(d: usize) -> Vec<Vec<K>> {
    let mut out: Vec<Vec<K>> = (0..d).map(|i| unit(d, i)).collect();
    for i in 0..d {
        for j in i..d {
            let mut v = unit::<K>(d, i);
            v[j] = v[j].clone() + K::one();
            if v.iter().any(|c| !c.is_zero()) {
                out.push(v);
            }
        }
    }
    out
}

/// An element `a` with `L_a` nilpotent and `λ_a` invertible, searched among
/// [`witness_elements`].
pub fn vanhh_witness<K: Scalar>(m: &Bimodule<K>) -> Option<Vec<K>> {
    let alg = m.algebra();
    witness_elements::<K>(alg.dim())
        .into_iter()
        .find(|a| alg.left_mult(a).is_nilpotent() && rank(&m.lambda_of(a)) == m.dim())
}

/// Subspaces worth testing, and whether the list is every subspace.
///
/// Over a small finite field this is the full lattice. Otherwise it is a
/// fixed list of canonical subspaces: zero, the whole algebra, `Leib`, the
/// terms of both series, the left center, coordinate lines and their ideal
/// closures.
pub fn candidate_subspaces<K: Scalar>(alg: &LeibnizAlgebra<K>, budget: u64) -> (Vec<Subspace<K>>, bool) {
    if K::field().is_finite() {
        if let Ok(all) = all_subspaces::<K>(alg.dim(), budget) {
            return (all, true);
        }
    }
    let d = alg.dim();
    let mut out = vec![Subspace::zero(d), alg.whole(), alg.leibniz_kernel(), alg.left_center()];
    out.extend(alg.series(SeriesKind::LeftDescendingCentral).terms);
    out.extend(alg.series(SeriesKind::Derived).terms);
    for i in 0..d {
        let line = Subspace::coordinate(d, &[i]);
        out.push(alg.ideal_closure(&line));
        out.push(line);
    }
    let mut uniq: Vec<Subspace<K>> = Vec::new();
    for s in out {
        if !uniq.contains(&s) {
            uniq.push(s);
        }
    }
    (uniq, false)
}

/// Nonzero right ideals that are nilpotent as algebras, among the
/// candidates.
pub fn nilpotent_right_ideals<K: Scalar>(alg: &LeibnizAlgebra<K>, budget: u64) -> (Vec<Subspace<K>>, bool) {
    let (cands, exhaustive) = candidate_subspaces(alg, budget);
    let found = cands
        .into_iter()
        .filter(|s| !s.is_zero() && alg.is_right_ideal(s))
        .filter(|s| alg.restrict_to(s).map(|b| b.is_nilpotent()).unwrap_or(false))
        .collect();
    (found, exhaustive)
}

fn is_abelian_ideal<K: Scalar>(alg: &LeibnizAlgebra<K>, s: &Subspace<K>) -> bool {
    !s.is_zero() && alg.is_ideal(s) && alg.product_space(s, s).is_zero()
}

/// `Σ tr(L_i L_j)`-form; only meaningful for Lie algebras.
fn killing_form<K: Scalar>(alg: &LeibnizAlgebra<K>) -> Matrix<K> {
    let d = alg.dim();
    let mut trip = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let t = alg.left_basis(i).checked_mul(alg.left_basis(j)).expect("square").trace();
            if !t.is_zero() {
                trip.push((i, j, t));
            }
        }
    }
    Matrix::from_triplets(d, d, trip)
}

/// A nonzero abelian ideal, i.e. a witness that `L` is not a semisimple Lie
/// algebra.
///
/// Non-Lie algebras always have `Leib(L)`. For Lie algebras the center and
/// the last nonzero derived term are tried first; then, in characteristic
/// zero, the radical `[L, L]^⊥` of the Killing form, and over small finite
/// fields the full ideal lattice.
pub fn abelian_ideal<K: Scalar>(alg: &LeibnizAlgebra<K>, budget: u64) -> Search<Subspace<K>> {
    let d = alg.dim();
    if d == 0 {
        return Search::None;
    }
    let leib = alg.leibniz_kernel();
    if !leib.is_zero() {
        return Search::Found(leib);
    }
    let center = alg.left_center();
    if is_abelian_ideal(alg, &center) {
        return Search::Found(center);
    }
    let derived = alg.series(SeriesKind::Derived);
    if derived.last().is_zero() {
        let terms = &derived.terms;
        return Search::Found(terms[terms.len() - 2].clone());
    }
    if K::field().characteristic() == 0 {
        let k = killing_form(alg);
        let rows: Vec<_> =
            alg.derived_subalgebra().basis().iter().map(|b| sparse_from_dense(&k.mul_vec(b))).collect();
        let radical = Subspace::kernel(&Matrix::from_sparse_rows(rows.len(), d, rows));
        if radical.is_zero() {
            return Search::None;
        }
        let sub = alg.restrict_to(&radical).expect("the radical is an ideal");
        let terms = sub.series(SeriesKind::Derived).terms;
        let last = &terms[terms.len() - 2];
        let emb = radical.inclusion_matrix();
        let vecs: Vec<Vec<K>> = last.basis().iter().map(|v| emb.mul_vec(v)).collect();
        return Search::Found(Subspace::span(d, &vecs));
    }
    match all_subspaces::<K>(d, budget) {
        Ok(all) => match all.into_iter().find(|s| is_abelian_ideal(alg, s)) {
            Some(s) => Search::Found(s),
            None => Search::None,
        },
        Err(_) => Search::Inconclusive,
    }
}

/// Gate for statements over algebraically closed fields: over `GF(p)`
/// every composition factor must be certified irreducible with trivial
/// commutant, so that nothing splits further over an extension.
pub(crate) fn closed_field_gate<K: Scalar>(m: &Bimodule<K>) -> Status {
    if !K::field().is_finite() {
        return Status::NotCheckable(
            "closed-field caveat: stated over algebraically closed fields, tested only over GF(p)".into(),
        );
    }
    let series = m.composition_series();
    if !series.all_certified() {
        return Status::NotCheckable("closed-field caveat: composition factors not certified irreducible".into());
    }
    if !series.factors.iter().all(|f| f.is_absolutely_irreducible()) {
        return Status::NotCheckable("closed-field caveat: a composition factor splits over an extension".into());
    }
    Status::Satisfied
}
