//! The restriction sequence `0 → DL → CL(L, M) → CL(I, M) → 0` for an ideal
//! `I` of codimension one, and the identification of `DL` with a shifted
//! copy of `CL(I, M)`.

use super::complex::{long_exact_sequence, ChainMap, CochainComplex, LesReport};
use super::{check_memory, decode, encode, num_tuples, theta};
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{unit, Matrix, Subspace};

#[derive(Clone, Debug)]
pub struct DixmierReport<K> {
    /// `res` commutes with the differentials.
    pub res_chain_map: bool,
    /// `φ^n` maps `DL^n_1` isomorphically onto `CL^{n-1}(I, M)`.
    pub phi_iso: bool,
    /// `φ^{n+1} d^n = -d^{n-1} φ^n` on `DL^n_1`, for `n = 1..=n_max`.
    pub anticommutation: Vec<bool>,
    /// `φ^{n+1}(∂ c) - res θ_x c̃` is a coboundary, for `n = 1..=n_max`.
    pub connecting_vs_theta: Vec<bool>,
    pub les: LesReport<K>,
    /// `dim DL^n` for `n = 0..=n_max + 1`.
    pub dl_dims: Vec<usize>,
    /// `dim HL^n(I, M)` for `n = 0..=n_max`.
    pub ideal_dims: Vec<usize>,
}

impl<K> DixmierReport<K> {
    pub fn all_pass(&self) -> bool {
        self.res_chain_map
            && self.phi_iso
            && self.anticommutation.iter().all(|&b| b)
            && self.connecting_vs_theta.iter().all(|&b| b)
            && self.les.is_exact()
    }
}

/// `CL^n(L, M) → CL^n(I, M)`; `I` spans the first `k` basis vectors of `L`.
fn restriction<K: Scalar>(d: usize, k: usize, dm: usize, n: usize) -> Matrix<K> {
    let mut trip = Vec::new();
    for wi in 0..num_tuples(k, n) {
        let src = encode(&decode(wi, k, n), d);
        for r in 0..dm {
            trip.push((wi * dm + r, src * dm + r, K::one()));
        }
    }
    Matrix::from_triplets(num_tuples(k, n) * dm, num_tuples(d, n) * dm, trip)
}

/// Coordinates of `DL^n`: the tuples that contain the last index.
fn dl_tuples(d: usize, n: usize) -> Vec<usize> {
    (0..num_tuples(d, n)).filter(|&u| decode(u, d, n).contains(&(d - 1))).collect()
}

fn selection<K: Scalar>(total: usize, dm: usize, tuples: &[usize]) -> Matrix<K> {
    let mut trip = Vec::with_capacity(tuples.len() * dm);
    for (c, &u) in tuples.iter().enumerate() {
        for r in 0..dm {
            trip.push((u * dm + r, c * dm + r, K::one()));
        }
    }
    Matrix::from_triplets(total * dm, tuples.len() * dm, trip)
}

/// `φ^n(f) = res(ι_x f)`: reads `f` on tuples `(x, y_1, …, y_{n-1})`.
fn phi<K: Scalar>(d: usize, k: usize, dm: usize, n: usize) -> Matrix<K> {
    let mut trip = Vec::new();
    for wi in 0..num_tuples(k, n - 1) {
        let mut u = vec![d - 1];
        u.extend(decode(wi, k, n - 1));
        let src = encode(&u, d);
        for r in 0..dm {
            trip.push((wi * dm + r, src * dm + r, K::one()));
        }
    }
    Matrix::from_triplets(num_tuples(k, n - 1) * dm, num_tuples(d, n) * dm, trip)
}

/// `DL^n_1` inside `CL^n(L, M)`.
fn dl1_inclusion<K: Scalar>(d: usize, k: usize, dm: usize, n: usize) -> Matrix<K> {
    phi::<K>(d, k, dm, n).transpose()
}

/// Builds the sequence for the ideal `ideal` and complement vector `x` and
/// checks every claimed identity up to degree `n_max`.
pub fn dixmier_sequence<K: Scalar>(
    m: &Bimodule<K>,
    ideal: &Subspace<K>,
    x: &[K],
    n_max: usize,
) -> Result<DixmierReport<K>> {
    let alg = m.algebra();
    let d = alg.dim();
    if ideal.ambient_dim() != d || x.len() != d {
        return Err(Error::DimensionMismatch("ideal or complement lives in another algebra".into()));
    }
    if !alg.is_ideal(ideal) {
        return Err(Error::NotClosed("an ideal"));
    }
    if ideal.dim() + 1 != d {
        return Err(Error::Precondition(format!("ideal has codimension {}, not 1", d - ideal.dim())));
    }
    if ideal.contains(x) {
        return Err(Error::Precondition("x lies in the ideal".into()));
    }
    let top = n_max + 1;
    check_memory(d, m.dim(), top + 1)?;

    let k = d - 1;
    let dm = m.dim();
    let mut cols: Vec<Vec<K>> = ideal.basis().to_vec();
    cols.push(x.to_vec());
    let m_l = m.change_algebra_basis(&Matrix::from_columns(d, &cols))?;
    let first: Vec<usize> = (0..k).collect();
    let m_i = m_l.restrict_to_subalgebra(&Subspace::coordinate(d, &first))?;

    let cl = CochainComplex::of_bimodule(&m_l, top)?;
    let ci = CochainComplex::of_bimodule(&m_i, top)?;
    let res = ChainMap { maps: (0..=top + 1).map(|n| restriction::<K>(d, k, dm, n)).collect() };
    let res_chain_map = res.commutes(&cl, &ci);

    let incl: Vec<Matrix<K>> =
        (0..=top + 1).map(|n| selection(num_tuples(d, n), dm, &dl_tuples(d, n))).collect();
    let d_dl: Vec<Matrix<K>> = (0..=top)
        .map(|n| incl[n + 1].transpose().checked_mul(&cl.d[n].checked_mul(&incl[n])?))
        .collect::<Result<_>>()?;
    let dl = CochainComplex::new(d_dl)?;
    let dl_dims = dl.dims.clone();
    let les = long_exact_sequence(&dl, &cl, &ci, &ChainMap { maps: incl }, &res, n_max)?;

    let mul = |a: &Matrix<K>, b: &Matrix<K>| a.checked_mul(b).expect("shapes");
    let mut phi_iso = true;
    let mut anticommutation = Vec::new();
    for n in 1..=n_max {
        let j1 = dl1_inclusion::<K>(d, k, dm, n);
        let phi_n = phi::<K>(d, k, dm, n);
        let on_dl1 = mul(&phi_n, &j1);
        phi_iso &= on_dl1 == Matrix::identity(on_dl1.rows());
        let lhs = mul(&mul(&phi::<K>(d, k, dm, n + 1), &cl.d[n]), &j1);
        let rhs = mul(&ci.d[n - 1], &on_dl1).neg();
        anticommutation.push(lhs == rhs);
    }

    let ex = unit::<K>(d, k);
    let mut connecting_vs_theta = Vec::new();
    for n in 1..=n_max {
        let h = ci.cohomology(n);
        let ext = res.maps[n].transpose();
        let phi_next = phi::<K>(d, k, dm, n + 1);
        let th = theta(&m_l, &ex, n);
        let ok = h.cocycles.basis().iter().all(|c| {
            let lifted = ext.mul_vec(c);
            let boundary = phi_next.mul_vec(&cl.d[n].mul_vec(&lifted));
            let via_theta = res.maps[n].mul_vec(&th.mul_vec(&lifted));
            let diff: Vec<K> = boundary.into_iter().zip(via_theta).map(|(a, b)| a - b).collect();
            h.is_coboundary(&diff)
        });
        connecting_vs_theta.push(ok);
    }

    let ideal_dims = les.h_c.iter().map(|h| h.dim_h).collect();
    Ok(DixmierReport { res_chain_map, phi_iso, anticommutation, connecting_vs_theta, les, dl_dims, ideal_dims })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::LeibnizAlgebra;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    #[test]
    fn n_with_trivial_coefficients() {
        let n = Arc::new(LeibnizAlgebra::<Q>::example_n());
        let m = Bimodule::trivial(n, 1);
        let r = dixmier_sequence(&m, &Subspace::coordinate(2, &[0]), &unit(2, 1), 3).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.ideal_dims, vec![1; 4]);
        assert_eq!(r.dl_dims[1], 1);
    }

    #[test]
    fn a_with_trivial_and_adjoint_coefficients() {
        let a = Arc::new(LeibnizAlgebra::<Fp<5>>::example_a());
        let ideal = Subspace::coordinate(2, &[0]);
        for m in [Bimodule::trivial(a.clone(), 1), Bimodule::adjoint(a.clone())] {
            let r = dixmier_sequence(&m, &ideal, &unit(2, 1), 2).unwrap();
            assert!(r.all_pass(), "{r:?}");
            assert_eq!(r.dl_dims[1], m.dim());
        }
    }

    #[test]
    fn rejects_bad_input() {
        let n = Arc::new(LeibnizAlgebra::<Q>::example_n());
        let m = Bimodule::adjoint(n);
        // span{f} is not an ideal
        assert!(dixmier_sequence(&m, &Subspace::coordinate(2, &[1]), &unit(2, 0), 1).is_err());
        assert!(dixmier_sequence(&m, &Subspace::coordinate(2, &[0]), &unit(2, 0), 1).is_err());
        assert!(dixmier_sequence(&m, &Subspace::zero(2), &unit(2, 1), 1).is_err());
    }
}
