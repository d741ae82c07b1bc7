//! The Leibniz cochain complex `CL^n(L, M) = Hom(L^{⊗n}, M)`.
//!
//! A cochain of degree `n` is a flat vector of length `dim M · (dim L)^n`:
//! the value on the basis tensor `e_{i_1} ⊗ … ⊗ e_{i_n}` occupies the block
//! starting at `index(i_1, …, i_n) · dim M`, where tuples are enumerated
//! lexicographically with `i_1` most significant. All matrices act on these
//! vectors from the left (rows: target degree, columns: source degree).

mod complex;
mod dixmier;
mod guard;

pub use complex::{
    long_exact_sequence, ChainMap, CochainComplex, CohomologyResult, DegreeDims, LesNode, LesReport,
};
pub use dixmier::{dixmier_sequence, DixmierReport};
pub use guard::{check_memory, estimate_mb, memory_limit_mb, DEFAULT_MAX_DEGREE, DEFAULT_MEMORY_MB, MEMORY_ENV};

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::algebra::LeibnizAlgebra;

/// `d^n` for `n` the tuple length: `d.pow(n)`.
pub fn num_tuples(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

/// Position of a tuple in the lexicographic enumeration.
pub fn encode(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &i| acc * d + i)
}

pub fn decode(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    t
}

/// Dimension of `CL^n(L, M)`.
pub fn cochain_dim<K: Scalar>(m: &Bimodule<K>, n: usize) -> usize {
    m.dim() * num_tuples(m.algebra().dim(), n)
}

type Acc<K> = Vec<BTreeMap<usize, K>>;

fn add_block<K: Scalar>(acc: &mut Acc<K>, offset: usize, block: &Matrix<K>, scale: &K) {
    for (r, row) in acc.iter_mut().enumerate() {
        for (s, v) in block.row(r) {
            let e = row.entry(offset + s).or_insert_with(K::zero);
            *e = e.clone() + scale.clone() * v.clone();
        }
    }
}

fn add_identity<K: Scalar>(acc: &mut Acc<K>, offset: usize, scale: &K) {
    for (r, row) in acc.iter_mut().enumerate() {
        let e = row.entry(offset + r).or_insert_with(K::zero);
        *e = e.clone() + scale.clone();
    }
}

fn finish_rows<K: Scalar>(acc: Acc<K>) -> Vec<SparseVec<K>> {
    acc.into_iter()
        .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
        .collect()
}

fn sign<K: Scalar>(odd: bool) -> K {
    if odd {
        -K::one()
    } else {
        K::one()
    }
}

/// Assembles a matrix whose rows come in blocks of `dm`, one block per
/// target tuple, in parallel.
fn assemble<K: Scalar, F>(blocks: usize, dm: usize, cols: usize, f: F) -> Matrix<K>
where
    F: Fn(usize, &mut Acc<K>) + Sync + Send,
{
    let rows: Vec<Vec<SparseVec<K>>> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut acc: Acc<K> = vec![BTreeMap::new(); dm];
            f(b, &mut acc);
            finish_rows(acc)
        })
        .collect();
    let data: Vec<SparseVec<K>> = rows.into_iter().flatten().collect();
    Matrix::from_sparse_rows(blocks * dm, cols, data)
}

/// The coboundary `d^n: CL^n → CL^{n+1}`:
///
/// `(d f)(x_1..x_{n+1}) = Σ_{j≤n} (-1)^{j+1} x_j·f(..x̂_j..)
///   + (-1)^{n+1} f(x_1..x_n)·x_{n+1}
///   + Σ_{i<j} (-1)^i f(..x̂_i.., x_i x_j at j, ..)`.
pub fn coboundary<K: Scalar>(m: &Bimodule<K>, n: usize) -> Matrix<K> {
    let a = m.algebra();
    let d = a.dim();
    let dm = m.dim();
    assemble(num_tuples(d, n + 1), dm, cochain_dim(m, n), |ui, acc| {
        let u = decode(ui, d, n + 1);
        for j in 0..n {
            let mut v = u.clone();
            v.remove(j);
            add_block(acc, encode(&v, d) * dm, &m.lambda()[u[j]], &sign(j % 2 == 1));
        }
        add_block(acc, encode(&u[..n], d) * dm, &m.rho()[u[n]], &sign(n % 2 == 0));
        for i in 0..=n {
            for j in i + 1..=n {
                let s: K = sign(i % 2 == 0);
                for (k, c) in a.basis_product(u[i], u[j]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut v = u.clone();
                    v[j] = k;
                    v.remove(i);
                    add_identity(acc, encode(&v, d) * dm, &(s.clone() * c.clone()));
                }
            }
        }
    })
}

/// `θ_a^n(f)(x_1..x_n) = a·f(x_1..x_n) - Σ_j f(x_1..a x_j..x_n)`.
pub fn theta<K: Scalar>(m: &Bimodule<K>, a: &[K], n: usize) -> Matrix<K> {
    let alg = m.algebra();
    let d = alg.dim();
    let dm = m.dim();
    let la = alg.left_mult(a).to_dense();
    let lam = m.lambda_of(a);
    assemble(num_tuples(d, n), dm, cochain_dim(m, n), |ui, acc| {
        let u = decode(ui, d, n);
        add_block(acc, ui * dm, &lam, &K::one());
        for j in 0..n {
            for (k, row) in la.iter().enumerate() {
                let c = &row[u[j]];
                if c.is_zero() {
                    continue;
                }
                let mut v = u.clone();
                v[j] = k;
                add_identity(acc, encode(&v, d) * dm, &-c.clone());
            }
        }
    })
}

/// `ι_a^n(f)(x_1..x_{n-1}) = f(a ⊗ x_1 ⊗ .. ⊗ x_{n-1})`, for `n ≥ 1`.
pub fn iota<K: Scalar>(m: &Bimodule<K>, a: &[K], n: usize) -> Matrix<K> {
    assert!(n >= 1, "ι is defined from degree 1 on");
    let d = m.algebra().dim();
    let dm = m.dim();
    assemble(num_tuples(d, n - 1), dm, cochain_dim(m, n), |ui, acc| {
        let u = decode(ui, d, n - 1);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let mut v = vec![i];
            v.extend_from_slice(&u);
            add_identity(acc, encode(&v, d) * dm, ai);
        }
    })
}

/// `τ_a^n(x_1..x_n) = Σ_j x_1..a x_j..x_n` on `L^{⊗n}`.
pub fn tau<K: Scalar>(alg: &LeibnizAlgebra<K>, a: &[K], n: usize) -> Matrix<K> {
    let d = alg.dim();
    let la = alg.left_mult(a).to_dense();
    let total = num_tuples(d, n);
    let mut trip = Vec::new();
    for ui in 0..total {
        let u = decode(ui, d, n);
        for j in 0..n {
            for (k, row) in la.iter().enumerate() {
                let c = &row[u[j]];
                if !c.is_zero() {
                    let mut v = u.clone();
                    v[j] = k;
                    trip.push((encode(&v, d), ui, c.clone()));
                }
            }
        }
    }
    Matrix::from_triplets(total, total, trip)
}

/// `θ_a^n` rebuilt from `τ` and `λ_a`: `I ⊗ λ_a - τᵀ ⊗ I`.
pub fn theta_from_tau<K: Scalar>(m: &Bimodule<K>, a: &[K], n: usize) -> Matrix<K> {
    let d = m.algebra().dim();
    let id_t = Matrix::identity(num_tuples(d, n));
    let id_m = Matrix::identity(m.dim());
    id_t.kron(&m.lambda_of(a))
        .lincomb(&K::one(), &tau(m.algebra(), a, n).transpose().kron(&id_m), &-K::one())
        .expect("shapes")
}

/// Which structural identity failed and in which degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: &'static str,
    pub degree: usize,
}

pub const SQUARE_ZERO: &str = "d∘d = 0";
pub const CARTAN_HOMOTOPY: &str = "d ι + ι d = θ";
pub const CARTAN_COMMUTE: &str = "θ d = d θ";

/// `d^{n+1} d^n = 0` for `n ≤ n_max`.
pub fn verify_square_zero<K: Scalar>(m: &Bimodule<K>, n_max: usize) -> std::result::Result<(), IdentityFailure> {
    let ds: Vec<Matrix<K>> = (0..=n_max + 1).map(|n| coboundary(m, n)).collect();
    for n in 0..=n_max {
        if !ds[n + 1].checked_mul(&ds[n]).expect("shapes").is_zero() {
            return Err(IdentityFailure { identity: SQUARE_ZERO, degree: n });
        }
    }
    Ok(())
}

/// `d^{n-1} ι^n + ι^{n+1} d^n = θ^n` for `1 ≤ n ≤ n_max` and
/// `θ^{n+1} d^n = d^n θ^n` for `0 ≤ n ≤ n_max`.
pub fn verify_cartan<K: Scalar>(m: &Bimodule<K>, a: &[K], n_max: usize) -> std::result::Result<(), IdentityFailure> {
    let ds: Vec<Matrix<K>> = (0..=n_max).map(|n| coboundary(m, n)).collect();
    let thetas: Vec<Matrix<K>> = (0..=n_max + 1).map(|n| theta(m, a, n)).collect();
    let mul = |x: &Matrix<K>, y: &Matrix<K>| x.checked_mul(y).expect("shapes");
    for n in 1..=n_max {
        let lhs = mul(&ds[n - 1], &iota(m, a, n))
            .checked_add(&mul(&iota(m, a, n + 1), &ds[n]))
            .expect("shapes");
        if lhs != thetas[n] {
            return Err(IdentityFailure { identity: CARTAN_HOMOTOPY, degree: n });
        }
    }
    for n in 0..=n_max {
        if mul(&thetas[n + 1], &ds[n]) != mul(&ds[n], &thetas[n]) {
            return Err(IdentityFailure { identity: CARTAN_COMMUTE, degree: n });
        }
    }
    Ok(())
}

/// `HL^n(L, M)` with representatives.
pub fn hl<K: Scalar>(m: &Bimodule<K>, n: usize) -> Result<CohomologyResult<K>> {
    check_memory(m.algebra().dim(), m.dim(), n)?;
    let cx = CochainComplex::of_bimodule(m, n)?;
    Ok(cx.cohomology(n))
}

/// Dimensions of `ZL^n`, `BL^n`, `HL^n` for `n ≤ n_max`, from ranks only.
pub fn hl_table<K: Scalar>(m: &Bimodule<K>, n_max: usize) -> Result<Vec<DegreeDims>> {
    check_memory(m.algebra().dim(), m.dim(), n_max)?;
    let ranks: Vec<usize> = (0..=n_max)
        .into_par_iter()
        .map(|n| crate::linalg::rank(&coboundary(m, n)))
        .collect();
    Ok((0..=n_max)
        .map(|n| {
            let dim_z = cochain_dim(m, n) - ranks[n];
            let dim_b = if n == 0 { 0 } else { ranks[n - 1] };
            DegreeDims { degree: n, dim_z, dim_b, dim_h: dim_z - dim_b }
        })
        .collect())
}

pub fn hl_dims<K: Scalar>(m: &Bimodule<K>, n_max: usize) -> Result<Vec<usize>> {
    Ok(hl_table(m, n_max)?.into_iter().map(|d| d.dim_h).collect())
}

/// `0 → N → M → M/N → 0` for a sub-bimodule `N`, with its long exact
/// cohomology sequence checked up to degree `n_max`.
pub fn bimodule_les<K: Scalar>(m: &Bimodule<K>, sub: &Subspace<K>, n_max: usize) -> Result<LesReport<K>> {
    if !m.is_sub_bimodule(sub) {
        return Err(Error::NotClosed("a sub-bimodule"));
    }
    let top = n_max + 1;
    check_memory(m.algebra().dim(), m.dim(), top + 1)?;
    let n_mod = m.sub_bimodule(sub)?;
    let q_mod = m.quotient(sub)?;
    let a = CochainComplex::of_bimodule(&n_mod, top)?;
    let b = CochainComplex::of_bimodule(m, top)?;
    let c = CochainComplex::of_bimodule(&q_mod, top)?;
    let d = m.algebra().dim();
    let incl = sub.inclusion_matrix();
    let proj = sub.quotient_matrix();
    let i = ChainMap {
        maps: (0..=top + 1).map(|n| Matrix::identity(num_tuples(d, n)).kron(&incl)).collect(),
    };
    let p = ChainMap {
        maps: (0..=top + 1).map(|n| Matrix::identity(num_tuples(d, n)).kron(&proj)).collect(),
    };
    long_exact_sequence(&a, &b, &c, &i, &p, n_max)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_traits::Zero;

    use super::*;
    use crate::algebra::LeibnizAlgebra;
    use crate::field::{Fp, Rational};
    use crate::linalg::unit;

    type Q = Rational;

    #[test]
    fn tuple_encoding_roundtrip() {
        for i in 0..27 {
            assert_eq!(encode(&decode(i, 3, 3), 3), i);
        }
        assert_eq!(decode(5, 2, 3), vec![1, 0, 1]);
        assert_eq!(decode(0, 4, 0), Vec::<usize>::new());
    }

    #[test]
    fn degree_zero_is_minus_right_action() {
        let m = Bimodule::<Q>::example_a();
        let d0 = coboundary(&m, 0);
        assert_eq!(d0, m.rho()[0].neg());
        // degree one over the one-dimensional Lie algebra: λ + ρ
        let d1 = coboundary(&m, 1);
        assert_eq!(d1, m.lambda()[0].checked_add(&m.rho()[0]).unwrap());
    }

    #[test]
    fn squares_vanish_and_cartan_holds() {
        let n = Arc::new(LeibnizAlgebra::<Q>::example_n());
        let a = Arc::new(LeibnizAlgebra::<Q>::example_a());
        for m in [Bimodule::adjoint(n.clone()), Bimodule::trivial(n, 1), Bimodule::adjoint(a)] {
            assert!(verify_square_zero(&m, 3).is_ok());
            for x in [unit(2, 0), unit(2, 1), vec![Q::from_i64(1), Q::from_i64(-2)]] {
                assert!(verify_cartan(&m, &x, 3).is_ok());
                for k in 0..3 {
                    assert_eq!(theta(&m, &x, k), theta_from_tau(&m, &x, k));
                }
            }
        }
    }

    #[test]
    fn theta_on_n() {
        let n = Arc::new(LeibnizAlgebra::<Q>::example_n());
        let m = Bimodule::trivial(n, 1);
        let th = theta(&m, &unit(2, 1), 1);
        // θ_f(f*)(f) = 0 and θ_f(e*)(f) = -1
        assert!(th.mul_vec(&unit(2, 1))[1].is_zero());
        assert_eq!(th.mul_vec(&unit(2, 0))[1], Q::from_i64(-1));
    }

    #[test]
    fn small_dims() {
        let n = Arc::new(LeibnizAlgebra::<Fp<5>>::example_n());
        assert_eq!(hl_dims(&Bimodule::trivial(n.clone(), 1), 4).unwrap(), vec![1; 5]);
        assert_eq!(hl_dims(&Bimodule::adjoint(n), 2).unwrap(), vec![1, 1, 1]);
        let a = Arc::new(LeibnizAlgebra::<Q>::example_a());
        assert_eq!(hl_dims(&Bimodule::adjoint(a), 2).unwrap(), vec![1, 0, 0]);
    }
}
