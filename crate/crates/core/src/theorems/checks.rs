//! One function per result: hypotheses first, then the conclusion.

use std::sync::Arc;

use crate::algebra::{LeibnizAlgebra, Supersolvability};
use crate::bimodule::{Bimodule, CompositionSeries, Irreducibility};
use crate::cohomology::{check_memory, hl_dims};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::fitting::{fitting_claims, fitting_operator, fitting_set, verify_nilpotency_identities};
use crate::linalg::enumerate::{all_vectors, subspaces_of_dim};
use crate::linalg::{Matrix, Search, Subspace};

use super::structure::{
    abelian_ideal, candidate_subspaces, closed_field_gate, nilpotent_right_ideals, vanhh_witness, witness_elements,
    SUBSPACE_BUDGET,
};
use super::{ReportBuilder, Status, TheoremId, TheoremReport};

/// Complement enumeration cap for the splitting check.
pub const COMPLEMENT_BUDGET: u64 = 100_000;

const CLOSED_FIELD: &str = "closed-field caveat: stated over algebraically closed fields, checked over GF(p)";

/// Runs the hypothesis predicates of `id` on the instance and, when they
/// hold, verifies the conclusion for every degree up to `n_max`.
///
/// `m` is required for results about bimodules and ignored otherwise.
pub fn check<K: Scalar>(
    id: TheoremId,
    alg: &Arc<LeibnizAlgebra<K>>,
    m: Option<&Bimodule<K>>,
    n_max: usize,
) -> Result<TheoremReport> {
    let mut b = ReportBuilder::new(id);
    if !id.needs_module() {
        return algebra_check(id, &mut b, alg, n_max);
    }
    let m = m.ok_or_else(|| Error::Precondition(format!("{id} needs a bimodule")))?;
    if m.algebra() != alg.as_ref() {
        return Err(Error::DimensionMismatch("the bimodule belongs to another algebra".into()));
    }
    check_memory(alg.dim(), m.dim(), n_max)?;
    let alg = alg.as_ref();
    match id {
        TheoremId::Inv => inv(&mut b, alg, m),
        TheoremId::Sym => sym(&mut b, alg, m),
        TheoremId::Triv => b.finish(None, |_| {
            let lhs = m.invariants().is_zero();
            Ok(lhs == (m.is_symmetric() && m.trivial_part().is_zero()))
        }),
        TheoremId::OneDim => one_dim(&mut b, alg, m),
        TheoremId::Nontriv => {
            factor_hyp(&mut b, m, "every composition factor is non-trivial", |s| !s.has_trivial_factor());
            b.finish(None, |_| {
                let inv = m.invariants();
                Ok(inv == m.antisymmetric_kernel() && (!m.is_symmetric() || inv.is_zero()))
            })
        }
        TheoremId::Non1dim => {
            b.hyp("field algebraically closed", closed_field_gate(m));
            factor_hyp(&mut b, m, "no composition factor is one-dimensional", |s| !s.has_one_dim_factor());
            b.finish(None, |_| {
                let inv = m.right_invariants(&alg.derived_subalgebra());
                Ok(inv == m.antisymmetric_kernel() && (!m.is_symmetric() || inv.is_zero()))
            })
        }
        TheoremId::Identities => b.finish(None, |notes| {
            for x in witness_elements::<K>(alg.dim()) {
                for n in 1..=4 {
                    if let Err(f) = verify_nilpotency_identities(m, &x, n) {
                        notes.push(format!("{} fails for x = {x:?}, n = {n}, y = e{}", f.identity, f.y + 1));
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }),
        TheoremId::Fitting0 | TheoremId::Fitting1 => {
            let nil = nilpotent_witnesses(alg);
            b.flag("some tested a has L_a nilpotent", !nil.is_empty());
            b.finish(None, |_| {
                Ok(nil.iter().all(|a| {
                    let p = fitting_operator(&m.lambda_of(a));
                    let part = if id == TheoremId::Fitting0 { p.zero_part } else { p.one_part };
                    m.is_sub_bimodule(&part)
                }))
            })
        }
        TheoremId::Fitting => {
            let nil = nilpotent_witnesses(alg);
            b.flag("L_s nilpotent for every s in S", !nil.is_empty());
            b.finish(None, |notes| {
                let mut sets: Vec<Vec<Vec<K>>> = nil.iter().map(|a| vec![a.clone()]).collect();
                sets.push(nil.clone());
                for s in &sets {
                    let (_, claims) = fitting_claims(m, s)?;
                    if !claims.all() {
                        notes.push(format!("claims {claims:?} for S = {s:?}"));
                        return Ok(false);
                    }
                }
                Ok(true)
            })
        }
        TheoremId::Vanhh => {
            let w = vanhh_witness(m);
            b.flag("some a has L_a nilpotent and λ_a invertible", w.is_some());
            if let Some(a) = &w {
                b.note(format!("witness a = {}", fmt_vec(a)));
            }
            let from = if m.is_symmetric() { 0 } else { 1 };
            b.finish(Some(n_max), |notes| vanishing(m, from, n_max, notes))
        }
        TheoremId::Fittinghh => {
            let nil = nilpotent_witnesses(alg);
            b.flag("L_s nilpotent for every s in S", !nil.is_empty());
            b.flag("dim M/M_0(S) finite", true);
            b.note("degree 1 included: M is finite-dimensional");
            b.finish(Some(n_max), |notes| {
                let zero = fitting_set(m, &nil)?.zero_part;
                same_dims_as_sub(m, &zero, n_max, notes)
            })
        }
        TheoremId::Cohfitting => {
            let (ideals, exhaustive) = nilpotent_right_ideals(alg, SUBSPACE_BUDGET);
            b.flag("N is a nonzero nilpotent right ideal", !ideals.is_empty());
            if !exhaustive {
                b.note("right ideals drawn from canonical candidates only");
            }
            b.finish(Some(n_max), |notes| {
                let mut seen: Vec<Subspace<K>> = Vec::new();
                for n in &ideals {
                    let zero = fitting_set(m, n.basis())?.zero_part;
                    if seen.contains(&zero) {
                        continue;
                    }
                    if !same_dims_as_sub(m, &zero, n_max, notes)? {
                        return Ok(false);
                    }
                    seen.push(zero);
                }
                Ok(true)
            })
        }
        TheoremId::Van => {
            let (ideals, _) = nilpotent_right_ideals(alg, SUBSPACE_BUDGET);
            let hit = ideals.iter().find(|n| m.right_invariants(n).is_zero());
            b.flag("N nilpotent right ideal with M^N = 0", hit.is_some());
            b.finish(Some(n_max), |notes| vanishing(m, 0, n_max, notes))
        }
        TheoremId::Cohnonsemisim => {
            b.flag("M right faithful", m.is_right_faithful());
            irreducible_hyp(&mut b, m);
            let st = match abelian_ideal(alg, SUBSPACE_BUDGET) {
                Search::Found(_) => Status::Satisfied,
                Search::None => Status::Violated,
                Search::Inconclusive => Status::NotCheckable("abelian ideal search out of budget".into()),
            };
            b.hyp("L is non-Lie or a non-semisimple Lie algebra", st);
            b.finish(Some(n_max), |notes| vanishing(m, 0, n_max, notes))
        }
        TheoremId::Whitehead => {
            b.flag("characteristic zero", K::field().characteristic() == 0);
            b.flag("M right faithful", m.is_right_faithful());
            irreducible_hyp(&mut b, m);
            b.finish(Some(n_max), |notes| vanishing(m, 0, n_max, notes))
        }
        TheoremId::Farnsteiner => farnsteiner(&mut b, alg, m, n_max),
        TheoremId::Vannilp => {
            b.flag("L nilpotent", alg.is_nilpotent());
            b.flag("M^L = 0", m.invariants().is_zero());
            b.finish(Some(n_max), |notes| vanishing(m, 0, n_max, notes))
        }
        TheoremId::Dixmier => {
            b.flag("L nilpotent", alg.is_nilpotent());
            factor_hyp(&mut b, m, "every composition factor is non-trivial", |s| !s.has_trivial_factor());
            b.finish(Some(n_max), |notes| degree_zero_is_m0(m, m.invariants(), n_max, notes))
        }
        TheoremId::Ab => ab(&mut b, alg, m, n_max),
        TheoremId::Nonvannilp => nonvannilp(&mut b, alg, m, n_max),
        TheoremId::Vansupsolv => {
            supersolvable_hyp(&mut b, alg);
            b.flag("M^{LL} = 0", m.right_invariants(&alg.derived_subalgebra()).is_zero());
            b.finish(Some(n_max), |notes| vanishing(m, 0, n_max, notes))
        }
        TheoremId::Barnes => {
            b.hyp("field algebraically closed", closed_field_gate(m));
            supersolvable_hyp(&mut b, alg);
            factor_hyp(&mut b, m, "no composition factor is one-dimensional", |s| !s.has_one_dim_factor());
            b.finish(Some(n_max), |notes| degree_zero_is_m0(m, m.invariants(), n_max, notes))
        }
        TheoremId::Vansolv => {
            b.flag("L nonzero", alg.dim() > 0);
            b.flag("L solvable", alg.is_solvable());
            b.flag("M right faithful", m.is_right_faithful());
            irreducible_hyp(&mut b, m);
            b.finish(Some(n_max), |notes| vanishing(m, 0, n_max, notes))
        }
        _ => unreachable!("algebra-only results are dispatched above"),
    }
}

fn algebra_check<K: Scalar>(
    id: TheoremId,
    b: &mut ReportBuilder,
    alg: &Arc<LeibnizAlgebra<K>>,
    n_max: usize,
) -> Result<TheoremReport> {
    match id {
        TheoremId::Nonvantriv | TheoremId::Adj | TheoremId::Adjlie => {
            let a = alg.as_ref();
            let nil = a.is_nilpotent();
            let module = match id {
                TheoremId::Nonvantriv => {
                    b.flag("L nonzero", a.dim() > 0).flag("L nilpotent", nil);
                    Bimodule::trivial(alg.clone(), 1)
                }
                TheoremId::Adj => {
                    b.flag("L nilpotent", nil).flag("C^ℓ(L) ≠ Leib(L)", a.left_center() != a.leibniz_kernel());
                    Bimodule::adjoint(alg.clone())
                }
                _ => {
                    b.flag("L nonzero", a.dim() > 0).flag("L nilpotent", nil).flag("L is a Lie algebra", a.is_lie());
                    Bimodule::adjoint(alg.clone())
                }
            };
            if b.blocked() {
                return b.finish(None, |_| Ok(true));
            }
            check_memory(a.dim(), module.dim(), n_max)?;
            b.finish(Some(n_max), |notes| {
                let dims = hl_dims(&module, n_max)?;
                notes.push(format!("dims {dims:?}"));
                Ok(dims.iter().all(|&x| x > 0))
            })
        }
        TheoremId::Frattini | TheoremId::Max | TheoremId::Maxchain => {
            let a = alg.as_ref();
            finite_field_hyp::<K>(b);
            b.hyp("field algebraically closed", Status::Caveat(CLOSED_FIELD.into()));
            if b.blocked() {
                return b.finish(None, |_| Ok(true));
            }
            let superso = a.supersolvability().is_yes();
            match id {
                TheoremId::Frattini => {
                    let f = a.frattini(SUBSPACE_BUDGET)?;
                    b.note(format!("dim F(L) = {}", f.dim()));
                    let mut found = false;
                    for i in subspaces_in(&f)? {
                        if !i.is_zero() && a.is_ideal(&i) && a.quotient(&i)?.algebra.supersolvability().is_yes() {
                            found = true;
                            b.note(format!("I of dimension {}", i.dim()));
                            break;
                        }
                    }
                    b.flag("nonzero ideal I ⊆ F(L) with L/I supersolvable", found);
                    b.finish(None, |_| Ok(superso))
                }
                TheoremId::Max => b.finish(None, |notes| {
                    let maxs = a.maximal_subalgebras(SUBSPACE_BUDGET)?;
                    let codim_one = maxs.iter().all(|s| s.dim() + 1 == a.dim());
                    notes.push(format!("maximal subalgebra dims {:?}", maxs.iter().map(Subspace::dim).collect::<Vec<_>>()));
                    Ok(superso == (a.is_solvable() && codim_one))
                }),
                _ => b.finish(None, |notes| {
                    let lengths = a.maximal_chain_lengths(SUBSPACE_BUDGET)?;
                    notes.push(format!("maximal chain lengths {lengths:?}"));
                    Ok(superso == (a.is_solvable() && lengths.len() == 1))
                }),
            }
        }
        TheoremId::Splitsolv => splitsolv(b, alg.as_ref()),
        _ => unreachable!("bimodule results need a module"),
    }
}

// -- shared predicates ------------------------------------------------------

fn fmt_vec<K: Scalar>(v: &[K]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn nilpotent_witnesses<K: Scalar>(alg: &LeibnizAlgebra<K>) -> Vec<Vec<K>> {
    witness_elements::<K>(alg.dim()).into_iter().filter(|a| alg.left_mult(a).is_nilpotent()).collect()
}

fn finite_field_hyp<K: Scalar>(b: &mut ReportBuilder) {
    if !K::field().is_finite() {
        b.hyp("finite ground field", Status::NotCheckable("needs exhaustive enumeration over GF(p)".into()));
    }
}

fn factor_hyp<K: Scalar>(b: &mut ReportBuilder, m: &Bimodule<K>, name: &str, pred: impl Fn(&CompositionSeries<K>) -> bool) {
    let s = m.composition_series();
    let st = if !s.all_certified() {
        Status::NotCheckable("composition factors not certified irreducible".into())
    } else if pred(&s) {
        Status::Satisfied
    } else {
        Status::Violated
    };
    b.hyp(name, st);
}

fn irreducible_hyp<K: Scalar>(b: &mut ReportBuilder, m: &Bimodule<K>) {
    let st = match m.irreducibility(crate::bimodule::LINE_BUDGET) {
        Some(Irreducibility::Certified) => Status::Satisfied,
        Some(Irreducibility::Heuristic) => Status::NotCheckable("irreducibility not certified over this field".into()),
        None => Status::Violated,
    };
    b.hyp("M irreducible", st);
}

fn supersolvable_hyp<K: Scalar>(b: &mut ReportBuilder, alg: &LeibnizAlgebra<K>) {
    let st = match alg.supersolvability() {
        Supersolvability::Yes(_) => Status::Satisfied,
        Supersolvability::No => Status::Violated,
        Supersolvability::Unknown => Status::NotCheckable("eigenvalue search incomplete".into()),
    };
    b.hyp("L supersolvable", st);
}

fn vanishing<K: Scalar>(m: &Bimodule<K>, from: usize, n_max: usize, notes: &mut Vec<String>) -> Result<bool> {
    let dims = hl_dims(m, n_max)?;
    notes.push(format!("dims {dims:?}"));
    Ok(dims.iter().skip(from).all(|&x| x == 0))
}

/// `HL^0 = M^L` equals `M_0` and `HL^n = 0` for `n ≥ 1`.
fn degree_zero_is_m0<K: Scalar>(
    m: &Bimodule<K>,
    inv: Subspace<K>,
    n_max: usize,
    notes: &mut Vec<String>,
) -> Result<bool> {
    let m0 = m.antisymmetric_kernel();
    let dims = hl_dims(m, n_max)?;
    notes.push(format!("dims {dims:?}, dim M_0 = {}", m0.dim()));
    Ok(inv == m0 && dims[0] == m0.dim() && dims.iter().skip(1).all(|&x| x == 0))
}

/// Compares `HL^n(L, M)` with `HL^n(L, W)` from degree 1 on (from 0 when
/// `M` is symmetric).
fn same_dims_as_sub<K: Scalar>(m: &Bimodule<K>, w: &Subspace<K>, n_max: usize, notes: &mut Vec<String>) -> Result<bool> {
    let sub = m.sub_bimodule(w)?;
    let from = if m.is_symmetric() { 0 } else { 1 };
    let full = hl_dims(m, n_max)?;
    let part = hl_dims(&sub, n_max)?;
    notes.push(format!("dims {full:?} vs M_0 part {part:?}"));
    Ok(full[from..] == part[from..])
}

fn subspaces_in<K: Scalar>(s: &Subspace<K>) -> Result<Vec<Subspace<K>>> {
    let d = s.ambient_dim();
    let emb = s.inclusion_matrix();
    let mut out = Vec::new();
    for k in 0..=s.dim() {
        for t in subspaces_of_dim::<K>(s.dim(), k, SUBSPACE_BUDGET)? {
            let vecs: Vec<Vec<K>> = t.basis().iter().map(|v| emb.mul_vec(v)).collect();
            out.push(Subspace::span(d, &vecs));
        }
    }
    Ok(out)
}

// -- individual results -----------------------------------------------------

fn inv<K: Scalar>(b: &mut ReportBuilder, alg: &LeibnizAlgebra<K>, m: &Bimodule<K>) -> Result<TheoremReport> {
    let (cands, exhaustive) = candidate_subspaces(alg, SUBSPACE_BUDGET);
    let left: Vec<Subspace<K>> = cands.into_iter().filter(|s| alg.is_left_ideal(s)).collect();
    b.flag("I is a left ideal", !left.is_empty());
    b.note(format!("{} left ideals tested{}", left.len(), if exhaustive { " (all)" } else { "" }));
    b.finish(None, |_| Ok(left.iter().all(|i| m.is_sub_bimodule(&m.right_invariants(i)))))
}

fn sym<K: Scalar>(b: &mut ReportBuilder, alg: &LeibnizAlgebra<K>, m: &Bimodule<K>) -> Result<TheoremReport> {
    let (cands, _) = candidate_subspaces(alg, SUBSPACE_BUDGET);
    let hits = cands.iter().filter(|s| m.right_invariants(s).is_zero()).count();
    b.flag("M^S = 0 for some tested S", hits > 0);
    b.finish(None, |_| {
        Ok(m.is_symmetric() && alg.leibniz_kernel().is_subspace_of(&m.annihilators().both))
    })
}

fn one_dim<K: Scalar>(b: &mut ReportBuilder, alg: &LeibnizAlgebra<K>, m: &Bimodule<K>) -> Result<TheoremReport> {
    b.hyp("field algebraically closed", closed_field_gate(m));
    let line = m.one_dim_submodule();
    if line == Search::Inconclusive {
        b.hyp("one-dimensional sub-bimodule search decidable", Status::NotCheckable("eigenvalue search incomplete".into()));
    }
    b.finish(None, |_| {
        let lhs = m.right_invariants(&alg.derived_subalgebra()).is_zero();
        let no_line = !matches!(line, Search::Found(_));
        Ok(lhs == (m.is_symmetric() && no_line))
    })
}

fn farnsteiner<K: Scalar>(
    b: &mut ReportBuilder,
    alg: &LeibnizAlgebra<K>,
    m: &Bimodule<K>,
    n_max: usize,
) -> Result<TheoremReport> {
    b.flag("M right faithful", m.is_right_faithful());
    irreducible_hyp(b, m);
    let dims = hl_dims(m, n_max)?;
    b.flag("HL^n(L, M) ≠ 0 for some n", dims.iter().any(|&x| x > 0));
    b.note(format!("dims {dims:?}"));
    let ab = abelian_ideal(alg, SUBSPACE_BUDGET);
    if ab == Search::Inconclusive {
        b.hyp("semisimplicity decidable", Status::NotCheckable("abelian ideal search out of budget".into()));
    }
    b.finish(None, |_| {
        Ok(K::field().characteristic() > 0 && alg.is_lie() && !matches!(ab, Search::Found(_)))
    })
}

fn ab<K: Scalar>(b: &mut ReportBuilder, alg: &LeibnizAlgebra<K>, m: &Bimodule<K>, n_max: usize) -> Result<TheoremReport> {
    b.flag("L is the one-dimensional Lie algebra", alg.dim() == 1 && alg.is_lie());
    if b.blocked() {
        return b.finish(None, |_| Ok(true));
    }
    b.finish(Some(n_max), |notes| {
        let lam = &m.lambda()[0];
        let rho = &m.rho()[0];
        let sum = lam.checked_add(rho)?;
        let inv = Subspace::kernel(rho);
        let ml = Subspace::image(rho);
        let upper0 = Subspace::kernel(&sum);
        let lower0 = Subspace::image(&sum);
        let expected = |n: usize| -> usize {
            if n == 0 {
                inv.dim()
            } else if n % 2 == 1 {
                upper0.dim() - ml.dim().min(upper0.dim())
            } else {
                inv.dim() - lower0.dim().min(inv.dim())
            }
        };
        let dims = hl_dims(m, n_max)?;
        let closed: Vec<usize> = (0..=n_max).map(expected).collect();
        notes.push(format!("complex {dims:?}, closed form {closed:?}"));
        let inclusions = ml.is_subspace_of(&upper0) && lower0.is_subspace_of(&inv);
        let balance = inclusions && upper0.dim() - ml.dim() == inv.dim() - lower0.dim();
        Ok(inclusions && balance && dims == closed)
    })
}

fn nonvannilp<K: Scalar>(
    b: &mut ReportBuilder,
    alg: &LeibnizAlgebra<K>,
    m: &Bimodule<K>,
    n_max: usize,
) -> Result<TheoremReport> {
    let base = alg.dim() > 0 && alg.is_nilpotent();
    b.flag("L nonzero", alg.dim() > 0);
    b.flag("L nilpotent", alg.is_nilpotent());
    let differs = m.invariants() != m.antisymmetric_kernel();
    b.flag("M^L ≠ M_0", differs);
    if base && !differs {
        let dims = hl_dims(m, n_max)?;
        if dims.iter().skip(1).any(|&x| x > 0) {
            b.note(format!("hypothesis not necessary: M^L = M_0 yet dims {dims:?}"));
        }
    }
    b.finish(Some(n_max), |notes| {
        let dims = hl_dims(m, n_max)?;
        notes.push(format!("dims {dims:?}"));
        Ok(dims.iter().all(|&x| x > 0))
    })
}

/// Minimal ideals `A` of a solvable `L` with `C^r(A) = A`: the induced
/// `L/A`-bimodule has `HL^1 = HL^2 = 0`, complements exist, and each is
/// `exp(L_a)` of a fixed one for some `a ∈ A`.
fn splitsolv<K: Scalar>(b: &mut ReportBuilder, alg: &LeibnizAlgebra<K>) -> Result<TheoremReport> {
    finite_field_hyp::<K>(b);
    if b.blocked() {
        return b.finish(None, |_| Ok(true));
    }
    b.flag("L solvable", alg.is_solvable());
    let ideals: Vec<Subspace<K>> = candidate_subspaces(alg, SUBSPACE_BUDGET)
        .0
        .into_iter()
        .filter(|s| !s.is_zero() && alg.is_ideal(s))
        .collect();
    let minimal: Vec<Subspace<K>> = ideals
        .iter()
        .filter(|a| !ideals.iter().any(|j| j.dim() < a.dim() && j.is_subspace_of(a)))
        .filter(|a| alg.right_centralizer(a) == **a)
        .cloned()
        .collect();
    b.flag("A minimal ideal with C^r(A) = A", !minimal.is_empty());
    if b.blocked() {
        return b.finish(None, |_| Ok(true));
    }
    b.finish(Some(2), |notes| {
        for a in &minimal {
            let q = alg.quotient(a)?;
            let lifts = q.lift.columns();
            let lambda: Vec<Matrix<K>> = lifts.iter().map(|x| a.restrict(&alg.left_mult(x))).collect::<Result<_>>()?;
            let rho: Vec<Matrix<K>> = lifts.iter().map(|x| a.restrict(&alg.right_mult(x))).collect::<Result<_>>()?;
            let module = Bimodule::new(Arc::new(q.algebra.clone()), lambda, rho)?;
            let dims = hl_dims(&module, 2)?;
            notes.push(format!("dim A = {}, HL(L/A, A) dims {dims:?}", a.dim()));
            if dims[1] != 0 || dims[2] != 0 {
                return Ok(false);
            }
            let d = alg.dim();
            let comps: Vec<Subspace<K>> = subspaces_of_dim::<K>(d, d - a.dim(), COMPLEMENT_BUDGET)?
                .into_iter()
                .filter(|k| alg.is_subalgebra(k) && k.intersect(a).map(|x| x.is_zero()).unwrap_or(false))
                .collect();
            let Some(k0) = comps.first() else {
                notes.push("no complement".into());
                return Ok(false);
            };
            let elems: Vec<Vec<K>> = all_vectors::<K>(a.dim(), COMPLEMENT_BUDGET)?.iter().map(|c| a.combine(c)).collect();
            for k in &comps {
                let witness = elems.iter().find(|x| alg.exp_conjugate(x, k0).map(|img| img == *k).unwrap_or(false));
                match witness {
                    Some(x) => notes.push(format!("complement {:?} = exp(L_a) K0 with a = {}", k.basis(), fmt_vec(x))),
                    None => {
                        notes.push(format!("complement {:?} not conjugate to K0", k.basis()));
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::theorems::Verdict;

    type F5 = Fp<5>;

    fn run<K: Scalar>(id: TheoremId, m: &Bimodule<K>, n: usize) -> TheoremReport {
        check(id, m.algebra_arc(), Some(m), n).unwrap()
    }

    #[test]
    fn vannilp_on_n_with_invariant_free_module() {
        let n = Arc::new(LeibnizAlgebra::<F5>::example_n());
        let lf = Matrix::from_i64(&[&[1, 1], &[0, 2]]);
        let m = Bimodule::symmetric(n, vec![Matrix::zeros(2, 2), lf]).unwrap();
        assert!(m.invariants().is_zero());
        let r = run(TheoremId::Vannilp, &m, 4);
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.conclusion_verified_up_to, Some(4));
        assert_eq!(run(TheoremId::Vanhh, &m, 4).verdict, Verdict::Pass);
        assert_eq!(run(TheoremId::Van, &m, 4).verdict, Verdict::Pass);
    }

    #[test]
    fn nonvannilp_on_n() {
        let n = Arc::new(LeibnizAlgebra::<Rational>::example_n());
        let r = run(TheoremId::Nonvannilp, &Bimodule::trivial(n.clone(), 1), 4);
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        // adjoint: M^L = M_0 but the cohomology does not vanish
        let r = run(TheoremId::Nonvannilp, &Bimodule::adjoint(n.clone()), 3);
        assert_eq!(r.verdict, Verdict::VacuouslyTrue);
        assert!(r.notes.iter().any(|s| s.starts_with("hypothesis not necessary")), "{r:?}");
        let r = check(TheoremId::Nonvantriv, &n, None, 4).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        // the last left central term of N is Leib(N)
        let r = check(TheoremId::Adj, &n, None, 2).unwrap();
        assert_eq!(r.verdict, Verdict::VacuouslyTrue, "{r:?}");
        let h = Arc::new(
            LeibnizAlgebra::<Rational>::from_int_products(3, &[(0, 1, &[0, 0, 1]), (1, 0, &[0, 0, -1])]).unwrap(),
        );
        let r = check(TheoremId::Adj, &h, None, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    }

    #[test]
    fn dixmier_vacuous_with_trivial_factors() {
        let n = Arc::new(LeibnizAlgebra::<F5>::example_n());
        let r = run(TheoremId::Dixmier, &Bimodule::adjoint(n), 3);
        assert_eq!(r.verdict, Verdict::VacuouslyTrue);
    }

    #[test]
    fn ab_on_example_a() {
        let m = Bimodule::<Rational>::example_a();
        let r = run(TheoremId::Ab, &m, 5);
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!(r.notes[0].contains("[2, 0, 0, 0, 0, 0]"));
    }

    #[test]
    fn closed_field_results_over_q() {
        let n = Arc::new(LeibnizAlgebra::<Rational>::example_n());
        let m = Bimodule::trivial(n.clone(), 1);
        for id in [TheoremId::Barnes, TheoremId::OneDim, TheoremId::Non1dim] {
            assert_eq!(run(id, &m, 2).verdict, Verdict::NotApplicable);
        }
        let r = check(TheoremId::Frattini, &n, None, 2).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn section_one_lemmas_on_examples() {
        let m = Bimodule::<Fp<3>>::example_a();
        for id in [TheoremId::Inv, TheoremId::Triv, TheoremId::Nontriv, TheoremId::Identities, TheoremId::Fitting] {
            let r = run(id, &m, 2);
            assert_ne!(r.verdict, Verdict::Fail, "{r:?}");
        }
        let b = Bimodule::<Rational>::example_b();
        for id in [TheoremId::Sym, TheoremId::Fitting0, TheoremId::Fitting1, TheoremId::Fittinghh] {
            let r = run(id, &b, 3);
            assert_ne!(r.verdict, Verdict::Fail, "{r:?}");
        }
    }

    #[test]
    fn splitting_on_two_dim_lie() {
        // he = e, eh = -e with A = span{e}
        let a = Arc::new(
            LeibnizAlgebra::<Fp<3>>::from_int_products(2, &[(0, 1, &[0, 1]), (1, 0, &[0, -1])]).unwrap(),
        );
        let r = check(TheoremId::Splitsolv, &a, None, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.notes.iter().filter(|s| s.contains("exp(L_a)")).count(), 3);
        for id in [TheoremId::Frattini, TheoremId::Max, TheoremId::Maxchain] {
            assert_ne!(check(id, &a, None, 2).unwrap().verdict, Verdict::Fail);
        }
    }

    #[test]
    fn semisimple_and_faithful() {
        let s = Arc::new(LeibnizAlgebra::<Fp<5>>::sl2());
        let ad = Bimodule::adjoint(s.clone());
        let r = run(TheoremId::Cohnonsemisim, &ad, 1);
        assert_eq!(r.verdict, Verdict::VacuouslyTrue, "{r:?}");
        let r = run(TheoremId::Farnsteiner, &ad, 1);
        assert_ne!(r.verdict, Verdict::Fail, "{r:?}");
        let r = run(TheoremId::Whitehead, &ad, 1);
        assert_eq!(r.verdict, Verdict::VacuouslyTrue);
    }

    #[test]
    fn missing_module_is_an_error() {
        let n = Arc::new(LeibnizAlgebra::<Rational>::example_n());
        assert!(check(TheoremId::Vannilp, &n, None, 2).is_err());
    }
}
