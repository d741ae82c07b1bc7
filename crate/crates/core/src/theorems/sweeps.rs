//! Randomized sweeps, structural identity suites, and the report-only
//! modes (Hom shift, hemi-semidirect products, periodicity scan).

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::LeibnizAlgebra;
use crate::bimodule::Bimodule;
use crate::cohomology::{hl_dims, theta, verify_cartan, verify_square_zero, CochainComplex};
use crate::error::{Error, Result};
use crate::field::{Fp, Scalar};

use super::generators::{random_algebra, random_bimodule, random_left_module, random_scalar, shift_pair};
use super::{check, AlgebraClass, RandomAlgebraSpec, TheoremId, Verdict};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub theorem: String,
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub vacuously_true: usize,
    pub not_applicable: usize,
    pub generation_failures: usize,
    /// `(seed, notes)` of every Fail.
    pub failures: Vec<(u64, Vec<String>)>,
}

impl SweepSummary {
    fn merge(mut self, other: SweepSummary) -> SweepSummary {
        self.instances += other.instances;
        self.pass += other.pass;
        self.fail += other.fail;
        self.vacuously_true += other.vacuously_true;
        self.not_applicable += other.not_applicable;
        self.generation_failures += other.generation_failures;
        self.failures.extend(other.failures);
        self
    }
}

fn instance_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
}

fn class_for(id: TheoremId, rng: &mut impl Rng) -> AlgebraClass {
    use TheoremId::*;
    match id {
        Vannilp | Dixmier | Nonvannilp | Nonvantriv | Adj | Adjlie | Fitting0 | Fitting1 | Fitting | Fittinghh
        | Vanhh | Cohfitting | Van => {
            if rng.gen_bool(0.8) {
                AlgebraClass::Nilpotent
            } else {
                AlgebraClass::Any
            }
        }
        Vansupsolv | Barnes => AlgebraClass::Supersolvable,
        Vansolv | Splitsolv | Frattini | Max | Maxchain => {
            if rng.gen_bool(0.7) {
                AlgebraClass::Solvable
            } else {
                AlgebraClass::Any
            }
        }
        _ => AlgebraClass::Any,
    }
}

/// A random instance shaped for `id`: the algebra class favours the
/// hypotheses, dims are at most 3 (the module at most 4 for `ab`, and `p` for
/// the shift modules used by `vansupsolv`).
pub fn random_instance<K: Scalar>(id: TheoremId, seed: u64) -> Result<(Arc<LeibnizAlgebra<K>>, Option<Bimodule<K>>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // random modules almost never have M^{LL} = 0
    if id == TheoremId::Vansupsolv && rng.gen_bool(0.5) {
        if let Some((alg, m)) = shift_pair::<K>(&mut rng) {
            return Ok((alg, Some(m)));
        }
    }
    let alg = if id == TheoremId::Ab {
        LeibnizAlgebra::one_dim_lie()
    } else {
        let class = class_for(id, &mut rng);
        let dim = rng.gen_range(1..=3);
        let alg = random_algebra::<K>(RandomAlgebraSpec { dim, class, seed: rng.gen() })?;
        if id == TheoremId::Adjlie {
            alg.canonical_lie()
        } else {
            alg
        }
    };
    let alg = Arc::new(alg);
    if !id.needs_module() {
        return Ok((alg, None));
    }
    let dim = if id == TheoremId::Ab { rng.gen_range(1..=4) } else { rng.gen_range(1..=3) };
    let m = random_bimodule(alg.clone(), dim, rng.gen())?;
    Ok((alg, Some(m)))
}

/// Runs `count` seeded instances of `id` in parallel over `K`.
pub fn sweep<K: Scalar>(id: TheoremId, count: usize, seed: u64, n_max: usize) -> Result<SweepSummary> {
    let results: Vec<Result<(u64, Option<(Verdict, Vec<String>)>)>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let s = instance_seed(seed, i);
            match random_instance::<K>(id, s) {
                Ok((alg, m)) => {
                    let r = check(id, &alg, m.as_ref(), n_max)?;
                    Ok((s, Some((r.verdict, r.notes))))
                }
                Err(Error::GenerationFailed { .. }) => Ok((s, None)),
                Err(e) => Err(e),
            }
        })
        .collect();
    let mut out = SweepSummary { theorem: id.to_string(), ..Default::default() };
    for r in results {
        let (s, v) = r?;
        out.instances += 1;
        match v {
            None => out.generation_failures += 1,
            Some((Verdict::Pass, _)) => out.pass += 1,
            Some((Verdict::VacuouslyTrue, _)) => out.vacuously_true += 1,
            Some((Verdict::NotApplicable, _)) => out.not_applicable += 1,
            Some((Verdict::Fail, notes)) => {
                out.fail += 1;
                out.failures.push((s, notes));
            }
        }
    }
    Ok(out)
}

/// `count` instances split over GF(2), GF(3) and GF(5).
pub fn sweep_fields(id: TheoremId, count: usize, seed: u64, n_max: usize) -> Result<SweepSummary> {
    let per = count / 3;
    let a = sweep::<Fp<2>>(id, per, seed, n_max)?;
    let b = sweep::<Fp<3>>(id, per, seed.wrapping_add(1), n_max)?;
    let c = sweep::<Fp<5>>(id, count - 2 * per, seed.wrapping_add(2), n_max)?;
    Ok(a.merge(b).merge(c))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub instances: usize,
    pub square_zero_failures: usize,
    pub cartan_failures: usize,
    /// `θ_a` maps some cocycle of positive degree outside the coboundaries.
    pub theta_failures: usize,
}

impl StructuralReport {
    pub fn clean(&self) -> bool {
        self.square_zero_failures == 0 && self.cartan_failures == 0 && self.theta_failures == 0
    }
}

/// `d∘d = 0`, both Cartan identities for a random `a`, and `θ_a` acting as
/// zero on `HL^n` for `n ≥ 1` (in degree 0 it is `λ_a` on `M^L`), on `count`
/// random pairs with dims at most 3.
pub fn structural_identities<K: Scalar>(count: usize, seed: u64, n_max: usize) -> Result<StructuralReport> {
    let rows: Vec<Result<Option<(bool, bool, bool)>>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let s = instance_seed(seed, i);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let spec = RandomAlgebraSpec { dim: rng.gen_range(1..=3), class: AlgebraClass::Any, seed: rng.gen() };
            let alg = match random_algebra::<K>(spec) {
                Ok(a) => Arc::new(a),
                Err(Error::GenerationFailed { .. }) => return Ok(None),
                Err(e) => return Err(e),
            };
            let m = match random_bimodule(alg.clone(), rng.gen_range(1..=3), rng.gen()) {
                Ok(m) => m,
                Err(Error::GenerationFailed { .. }) => return Ok(None),
                Err(e) => return Err(e),
            };
            let a: Vec<K> = (0..alg.dim()).map(|_| random_scalar(&mut rng)).collect();
            let sq = verify_square_zero(&m, n_max).is_ok();
            let cartan = verify_cartan(&m, &a, n_max).is_ok();
            let cx = CochainComplex::of_bimodule(&m, n_max)?;
            let th = (1..=n_max).all(|n| {
                let h = cx.cohomology(n);
                let t = theta(&m, &a, n);
                h.cocycles.basis().iter().all(|z| h.is_coboundary(&t.mul_vec(z)))
            });
            Ok(Some((sq, cartan, th)))
        })
        .collect();
    let mut out = StructuralReport::default();
    for r in rows {
        if let Some((sq, cartan, th)) = r? {
            out.instances += 1;
            out.square_zero_failures += usize::from(!sq);
            out.cartan_failures += usize::from(!cartan);
            out.theta_failures += usize::from(!th);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomShiftReport {
    /// `dim HL^n(L, M)` for `n = 1..=n_max`.
    pub module_dims: Vec<usize>,
    /// `dim HL^{n-1}(L, Hom(L, M)_s)` for the same `n`.
    pub hom_dims: Vec<usize>,
    pub equal: bool,
}

/// Compares the cohomology of an antisymmetric `M` with that of the
/// symmetric bimodule `Hom(L, M)_s` shifted down by one degree.
pub fn hom_shift_check<K: Scalar>(m: &Bimodule<K>, n_max: usize) -> Result<HomShiftReport> {
    if !m.is_antisymmetric() {
        return Err(Error::Precondition("the Hom shift needs an antisymmetric bimodule".into()));
    }
    if n_max == 0 {
        return Ok(HomShiftReport { module_dims: vec![], hom_dims: vec![], equal: true });
    }
    let hom = m.hom_symmetric()?;
    let module_dims = hl_dims(m, n_max)?[1..].to_vec();
    let hom_dims = hl_dims(&hom, n_max - 1)?;
    let equal = module_dims == hom_dims;
    Ok(HomShiftReport { module_dims, hom_dims, equal })
}

/// Dimensions only, for the open questions where no verdict is claimed.
pub fn conjecture_dims<K: Scalar>(m: &Bimodule<K>, n_max: usize) -> Result<Vec<usize>> {
    hl_dims(m, n_max)
}

/// Adjoint cohomology of random `𝔤 ⋉ V` (hemi-semidirect) products, with
/// `𝔤 = L / Leib(L)` for a random `L` of dim ≤ 2 and `dim V ≤ 2`.
pub fn hemi_semidirect_sweep<K: Scalar>(count: usize, seed: u64, n_max: usize) -> Result<Vec<(String, Vec<usize>)>> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let s = instance_seed(seed, i);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let spec = RandomAlgebraSpec { dim: rng.gen_range(1..=2), class: AlgebraClass::Any, seed: rng.gen() };
            let lie = random_algebra::<K>(spec)?.canonical_lie();
            let v = rng.gen_range(1..=2);
            let action = random_left_module(&lie, v, &mut rng)?;
            let h = Arc::new(LeibnizAlgebra::hemi_semidirect(&lie, &action)?);
            let dims = hl_dims(&Bimodule::adjoint(h.clone()), n_max)?;
            Ok((format!("seed {s}: dim g = {}, dim V = {v}, dim = {}", lie.dim(), h.dim()), dims))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityRow {
    pub name: String,
    pub trivial: Vec<usize>,
    pub adjoint: Vec<usize>,
    pub periodic_trivial: bool,
    pub periodic_adjoint: bool,
}

fn two_periodic(d: &[usize]) -> bool {
    d.windows(3).all(|w| w[0] == w[2])
}

/// Lists which algebras have `dim HL^n = dim HL^{n+2}` for trivial and
/// adjoint coefficients up to `n_max`. Heuristic only.
pub fn scan_periodicity<K: Scalar>(algebras: &[(String, Arc<LeibnizAlgebra<K>>)], n_max: usize) -> Result<Vec<PeriodicityRow>> {
    algebras
        .par_iter()
        .map(|(name, a)| {
            let trivial = hl_dims(&Bimodule::trivial(a.clone(), 1), n_max)?;
            let adjoint = hl_dims(&Bimodule::adjoint(a.clone()), n_max)?;
            Ok(PeriodicityRow {
                name: name.clone(),
                periodic_trivial: two_periodic(&trivial),
                periodic_adjoint: two_periodic(&adjoint),
                trivial,
                adjoint,
            })
        })
        .collect()
}
