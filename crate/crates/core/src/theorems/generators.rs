//! Seeded random algebras and bimodules for the property sweeps.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{check_left_module, LeibnizAlgebra};
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{inverse, Matrix, Subspace};

/// Rejection budget shared by the generators.
pub const GENERATION_ATTEMPTS: u64 = 2_000;

const MODULE_ATTEMPTS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AlgebraClass {
    Nilpotent,
    Solvable,
    Supersolvable,
    Any,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RandomAlgebraSpec {
    pub dim: usize,
    pub class: AlgebraClass,
    pub seed: u64,
}

/// A uniformly random element over a finite field, a small integer in
/// `[-2, 2]` otherwise.
pub fn random_scalar<K: Scalar>(rng: &mut impl Rng) -> K {
    match K::elements() {
        Some(els) => els[rng.gen_range(0..els.len())].clone(),
        None => K::from_i64(rng.gen_range(-2..=2)),
    }
}

fn sparse_scalar<K: Scalar>(rng: &mut impl Rng, density: f64) -> K {
    if rng.gen_bool(density) {
        random_scalar(rng)
    } else {
        K::zero()
    }
}

fn random_invertible<K: Scalar>(rng: &mut impl Rng, n: usize) -> Matrix<K> {
    loop {
        let rows: Vec<Vec<K>> = (0..n).map(|_| (0..n).map(|_| random_scalar(rng)).collect()).collect();
        let m = Matrix::from_dense(&rows);
        if inverse(&m).is_some() {
            return m;
        }
    }
}

fn has_class<K: Scalar>(a: &LeibnizAlgebra<K>, class: AlgebraClass) -> bool {
    match class {
        AlgebraClass::Nilpotent => a.is_nilpotent(),
        AlgebraClass::Solvable => a.is_solvable(),
        AlgebraClass::Supersolvable => a.supersolvability().is_yes(),
        AlgebraClass::Any => true,
    }
}

/// Structure constants supported on `k > max(i, j)` (nilpotent shape) or
/// `k ≥ max(i, j)` (supersolvable shape), or anywhere for `Any`. Candidates
/// are validated and class-checked, then conjugated by a random change of
/// basis half of the time.
pub fn random_algebra<K: Scalar>(spec: RandomAlgebraSpec) -> Result<LeibnizAlgebra<K>> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let d = spec.dim;
    for _ in 0..GENERATION_ATTEMPTS {
        let density = rng.gen_range(0.2..0.7);
        let shape = match spec.class {
            AlgebraClass::Nilpotent => 1,
            AlgebraClass::Supersolvable => 0,
            AlgebraClass::Solvable => {
                if rng.gen_bool(0.7) {
                    rng.gen_range(0..2)
                } else {
                    2
                }
            }
            AlgebraClass::Any => rng.gen_range(0..3),
        };
        let mut c = vec![vec![vec![K::zero(); d]; d]; d];
        for (i, ci) in c.iter_mut().enumerate() {
            for (j, cij) in ci.iter_mut().enumerate() {
                for (k, v) in cij.iter_mut().enumerate() {
                    let allowed = match shape {
                        0 => k >= i.max(j),
                        1 => k > i.max(j),
                        _ => true,
                    };
                    if allowed {
                        *v = sparse_scalar(&mut rng, density);
                    }
                }
            }
        }
        let Ok(a) = LeibnizAlgebra::new(d, c) else { continue };
        let a = if d > 0 && rng.gen_bool(0.5) { a.change_basis(&random_invertible(&mut rng, d))? } else { a };
        if has_class(&a, spec.class) {
            return Ok(a);
        }
    }
    Err(Error::GenerationFailed { attempts: GENERATION_ATTEMPTS, seed: spec.seed })
}

/// A left module structure `λ` on `K^dim`.
///
/// Random upper-triangular matrices are assigned to basis vectors whose
/// product-closure has not determined them yet; `λ` of products follows from
/// `λ_{xy} = [λ_x, λ_y]`. Candidates are checked against the module identity
/// and rejected on failure.
pub fn random_left_module<K: Scalar>(a: &LeibnizAlgebra<K>, dim: usize, rng: &mut impl Rng) -> Result<Vec<Matrix<K>>> {
    let d = a.dim();
    for _ in 0..MODULE_ATTEMPTS {
        let strict = rng.gen_bool(0.3);
        let density = rng.gen_range(0.2..0.8);
        // linearly independent elements with assigned operators, closed
        // under products as they are added
        let mut known: Vec<(Vec<K>, Matrix<K>)> = Vec::new();
        let mut lambda: Vec<Option<Matrix<K>>> = vec![None; d];
        let mut ok = true;
        for i in 0..d {
            let ei = crate::linalg::unit::<K>(d, i);
            if !span_of(&known, d).contains(&ei) {
                known.push((ei.clone(), random_upper(rng, dim, strict, density)));
                ok = close_under_products(a, &mut known)?;
                if !ok {
                    break;
                }
            }
            lambda[i] = Some(op_from_vectors(&known, &ei, dim)?);
        }
        if !ok {
            continue;
        }
        let lambda: Vec<Matrix<K>> = lambda.into_iter().map(|m| m.expect("assigned")).collect();
        let lambda = conjugate_randomly(rng, lambda)?;
        if check_left_module(a, &lambda).is_ok() {
            return Ok(lambda);
        }
    }
    // Non-nilpotent algebras rarely admit random triangular actions; fall
    // back to sums of adjoint and trivial blocks.
    let mut blocks: Vec<Vec<Matrix<K>>> = Vec::new();
    let mut left = dim;
    while left > 0 {
        if d > 0 && d <= left && rng.gen_bool(0.6) {
            blocks.push(a.left_mults().to_vec());
            left -= d;
        } else {
            blocks.push(vec![Matrix::zeros(1, 1); d]);
            left -= 1;
        }
    }
    let lambda: Vec<Matrix<K>> = (0..d)
        .map(|i| Matrix::block_diag(&blocks.iter().map(|b| &b[i]).collect::<Vec<_>>()))
        .collect();
    let lambda = conjugate_randomly(rng, lambda)?;
    check_left_module(a, &lambda)?;
    Ok(lambda)
}

fn conjugate_randomly<K: Scalar>(rng: &mut impl Rng, lambda: Vec<Matrix<K>>) -> Result<Vec<Matrix<K>>> {
    let dim = lambda.first().map_or(0, Matrix::rows);
    if dim == 0 || !rng.gen_bool(0.5) {
        return Ok(lambda);
    }
    let p = random_invertible(rng, dim);
    let pinv = inverse(&p).expect("invertible");
    lambda.iter().map(|l| p.checked_mul(l)?.checked_mul(&pinv)).collect()
}

fn random_upper<K: Scalar>(rng: &mut impl Rng, dim: usize, strict: bool, density: f64) -> Matrix<K> {
    let mut trip = Vec::new();
    for r in 0..dim {
        for c in r..dim {
            if c == r && strict {
                continue;
            }
            let v: K = sparse_scalar(rng, if c == r { 0.8 } else { density });
            if !v.is_zero() {
                trip.push((r, c, v));
            }
        }
    }
    Matrix::from_triplets(dim, dim, trip)
}

fn span_of<K: Scalar>(known: &[(Vec<K>, Matrix<K>)], d: usize) -> Subspace<K> {
    Subspace::span(d, &known.iter().map(|(v, _)| v.clone()).collect::<Vec<_>>())
}

/// Adds `xy` with operator `[λ_x, λ_y]` until the products of known
/// elements stay in their span; `false` if an operator is contradicted.
fn close_under_products<K: Scalar>(a: &LeibnizAlgebra<K>, known: &mut Vec<(Vec<K>, Matrix<K>)>) -> Result<bool> {
    let d = a.dim();
    let dim = known[0].1.rows();
    let mut grew = true;
    while grew {
        grew = false;
        let snapshot = known.clone();
        for (x, lx) in &snapshot {
            for (y, ly) in &snapshot {
                let xy = a.mul(x, y);
                let op = lx.checked_mul(ly)?.lincomb(&K::one(), &ly.checked_mul(lx)?, &-K::one())?;
                if span_of(known, d).contains(&xy) {
                    if op_from_vectors(known, &xy, dim)? != op {
                        return Ok(false);
                    }
                } else {
                    known.push((xy, op));
                    grew = true;
                }
            }
        }
    }
    Ok(true)
}

/// The operator of `v`, expanded in the (independent) known vectors.
fn op_from_vectors<K: Scalar>(known: &[(Vec<K>, Matrix<K>)], v: &[K], dim: usize) -> Result<Matrix<K>> {
    let cols: Vec<Vec<K>> = known.iter().map(|(x, _)| x.clone()).collect();
    let m = Matrix::from_columns(v.len(), &cols);
    let coeffs = crate::linalg::solve(&m, v).ok_or(Error::Precondition("vector outside the known span".into()))?;
    let mut acc = Matrix::zeros(dim, dim);
    for (c, (_, op)) in coeffs.iter().zip(known) {
        acc = acc.lincomb(&K::one(), op, c)?;
    }
    Ok(acc)
}

/// Right actions compatible with `λ` under the (linear) mixed identity
/// `ρ_{xy} = λ_x ρ_y - ρ_y λ_x`, as a basis of solutions.
fn mixed_solutions<K: Scalar>(a: &LeibnizAlgebra<K>, lambda: &[Matrix<K>], dim: usize) -> Vec<Vec<Matrix<K>>> {
    let d = a.dim();
    let dd = dim * dim;
    let unknowns = d * dd;
    // unknown (k, r, c) at k*dd + r*dim + c
    let mut rows: Vec<Vec<(usize, K)>> = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let cij = a.basis_product(i, j);
            let li = lambda[i].to_dense();
            for r in 0..dim {
                for c in 0..dim {
                    let mut row: std::collections::BTreeMap<usize, K> = Default::default();
                    let mut add = |idx: usize, v: K| {
                        let e = row.entry(idx).or_insert_with(K::zero);
                        *e = e.clone() + v;
                    };
                    for (k, ck) in cij.iter().enumerate() {
                        if !ck.is_zero() {
                            add(k * dd + r * dim + c, ck.clone());
                        }
                    }
                    // -(λ_i ρ_j)[r][c] = -Σ_t λ_i[r][t] ρ_j[t][c]
                    for (t, lrt) in li[r].iter().enumerate() {
                        if !lrt.is_zero() {
                            add(j * dd + t * dim + c, -lrt.clone());
                        }
                    }
                    // +(ρ_j λ_i)[r][c] = Σ_t ρ_j[r][t] λ_i[t][c]
                    for (t, lrow) in li.iter().enumerate() {
                        if !lrow[c].is_zero() {
                            add(j * dd + r * dim + t, lrow[c].clone());
                        }
                    }
                    let row: Vec<(usize, K)> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let sys = Matrix::from_sparse_rows(rows.len(), unknowns, rows);
    Subspace::kernel(&sys)
        .basis()
        .iter()
        .map(|v| {
            (0..d)
                .map(|k| {
                    let dense: Vec<Vec<K>> =
                        (0..dim).map(|r| v[k * dd + r * dim..k * dd + (r + 1) * dim].to_vec()).collect();
                    Matrix::from_dense(&dense)
                })
                .collect()
        })
        .collect()
}

/// A random bimodule of dimension `dim`: a random left module `λ`, then a
/// right action that is symmetric, antisymmetric or a random solution of
/// the mixed identity accepted only if the right identity also holds.
pub fn random_bimodule<K: Scalar>(a: Arc<LeibnizAlgebra<K>>, dim: usize, seed: u64) -> Result<Bimodule<K>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lambda = random_left_module(&a, dim, &mut rng).map_err(|_| Error::GenerationFailed {
        attempts: GENERATION_ATTEMPTS,
        seed,
    })?;
    match rng.gen_range(0..4) {
        0 => return Bimodule::symmetric(a, lambda),
        1 => return Bimodule::antisymmetric(a, lambda),
        _ => {}
    }
    let sols = mixed_solutions(&a, &lambda, dim);
    let d = a.dim();
    for _ in 0..64 {
        let mut rho: Vec<Matrix<K>> = vec![Matrix::zeros(dim, dim); d];
        for s in &sols {
            let c: K = sparse_scalar(&mut rng, 0.5);
            if c.is_zero() {
                continue;
            }
            for (r, sk) in rho.iter_mut().zip(s) {
                *r = r.lincomb(&K::one(), sk, &c)?;
            }
        }
        if let Ok(m) = Bimodule::new(a.clone(), lambda.clone(), rho) {
            if !m.is_symmetric() && !m.is_antisymmetric() || rng.gen_bool(0.2) {
                return Ok(m);
            }
        }
    }
    if rng.gen_bool(0.5) {
        Bimodule::symmetric(a, lambda)
    } else {
        Bimodule::antisymmetric(a, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    #[test]
    fn algebra_contract() {
        let a = random_algebra::<Fp<5>>(RandomAlgebraSpec { dim: 2, class: AlgebraClass::Nilpotent, seed: 1 }).unwrap();
        assert!(a.validate().is_ok() && a.is_nilpotent());
        let a = random_algebra::<Fp<2>>(RandomAlgebraSpec { dim: 1, class: AlgebraClass::Any, seed: 0 }).unwrap();
        assert!(a.validate().is_ok());
        let a = random_algebra::<Fp<3>>(RandomAlgebraSpec { dim: 3, class: AlgebraClass::Solvable, seed: 7 }).unwrap();
        assert!(a.validate().is_ok() && a.is_solvable());
        let a = random_algebra::<Rational>(RandomAlgebraSpec { dim: 3, class: AlgebraClass::Supersolvable, seed: 3 })
            .unwrap();
        assert!(a.supersolvability().is_yes());
    }

    #[test]
    fn deterministic_per_seed() {
        for seed in 0..5 {
            let spec = RandomAlgebraSpec { dim: 3, class: AlgebraClass::Any, seed };
            assert_eq!(random_algebra::<Fp<3>>(spec).unwrap(), random_algebra::<Fp<3>>(spec).unwrap());
            let a = Arc::new(random_algebra::<Fp<3>>(spec).unwrap());
            let m1 = random_bimodule(a.clone(), 3, seed).unwrap();
            let m2 = random_bimodule(a, 3, seed).unwrap();
            assert_eq!(m1.lambda(), m2.lambda());
            assert_eq!(m1.rho(), m2.rho());
        }
    }

    #[test]
    fn bimodules_validate_and_vary() {
        let mut kinds = [0usize; 3];
        for seed in 0..60 {
            let a = Arc::new(
                random_algebra::<Fp<3>>(RandomAlgebraSpec { dim: 1 + (seed as usize % 3), class: AlgebraClass::Any, seed })
                    .unwrap(),
            );
            let m = random_bimodule(a, 1 + (seed as usize % 3), seed).unwrap();
            assert!(m.validate().is_ok());
            let k = if m.is_symmetric() { 0 } else if m.is_antisymmetric() { 1 } else { 2 };
            kinds[k] += 1;
        }
        assert!(kinds.iter().all(|&k| k > 0), "{kinds:?}");
    }
}

/// Over `GF(p)` with `p ≤ 5`: the two-dimensional Lie algebra `h e = e` and
/// a symmetric bimodule of dim `p` on which `h` acts by `diag(c, c+1, …)` and
/// `e` by the cyclic shift, in a random basis. `e` acts invertibly, so
/// `M^{LL} = 0`; nothing of the kind exists in characteristic zero.
pub(crate) fn shift_pair<K: Scalar>(rng: &mut impl Rng) -> Option<(Arc<LeibnizAlgebra<K>>, Bimodule<K>)> {
    let p = K::field().characteristic() as usize;
    if !(2..=5).contains(&p) {
        return None;
    }
    let alg = Arc::new(LeibnizAlgebra::from_int_products(2, &[(0, 1, &[0, 1]), (1, 0, &[0, -1])]).ok()?);
    let c = rng.gen_range(0..p) as i64;
    let h = Matrix::from_triplets(p, p, (0..p).map(|i| (i, i, K::from_i64(i as i64 + c))).collect());
    let e = Matrix::from_triplets(p, p, (0..p).map(|i| ((i + 1) % p, i, K::one())).collect());
    let m = Bimodule::symmetric(alg.clone(), vec![h, e]).ok()?;
    let m = m.change_module_basis(&random_invertible(rng, p)).ok()?;
    Some((alg, m))
}
