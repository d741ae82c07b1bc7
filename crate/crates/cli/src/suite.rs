//! Expected-versus-computed lines for the worked examples.

use std::sync::Arc;

use leibniz_core::cohomology::{encode, hl_dims, CochainComplex, CohomologyResult};
use leibniz_core::fitting::fitting_set;
use leibniz_core::linalg::unit;
use leibniz_core::theorems::{check, hemi_semidirect_sweep, TheoremId};
use leibniz_core::{Bimodule, Gf5, LeibnizAlgebra, Rational, Scalar, Subspace};
use serde::Serialize;

use crate::error::CliError;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteLine {
    pub paper_anchor: &'static str,
    pub check: String,
    pub field: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

struct Lines(Vec<SuiteLine>);

impl Lines {
    fn push<K: Scalar>(&mut self, anchor: &'static str, check: &str, expected: String, computed: String) {
        let pass = expected == computed;
        self.0.push(SuiteLine {
            paper_anchor: anchor,
            check: check.to_string(),
            field: K::field().to_string(),
            expected,
            computed,
            pass,
        });
    }
}

fn span<K: Scalar>(ambient: usize, idx: &[usize]) -> Subspace<K> {
    Subspace::coordinate(ambient, idx)
}

fn show<K: Scalar>(s: &Subspace<K>, names: &[&str]) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let vecs: Vec<String> = s
        .basis()
        .iter()
        .map(|v| {
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| if c.is_one() { names[i].to_string() } else { format!("{c}{}", names[i]) })
                .collect();
            terms.join("+")
        })
        .collect();
    format!("span{{{}}}", vecs.join(", "))
}

/// The cochain `x_{t_1}^* ⊗ … ⊗ x_{t_n}^*` with trivial one-dimensional
/// coefficients.
fn dual_tensor<K: Scalar>(d: usize, t: &[usize]) -> Vec<K> {
    unit(d.pow(t.len() as u32), encode(t, d))
}

/// Whether the classes of `target` span the same subspace of `HL^n` as the
/// computed representatives.
fn same_classes<K: Scalar>(h: &CohomologyResult<K>, target: &[Vec<K>]) -> bool {
    if !target.iter().all(|v| h.is_cocycle(v)) {
        return false;
    }
    let amb = h.cocycles.ambient_dim();
    let ours = h.representatives.sum(&h.coboundaries).expect("same ambient");
    let theirs = Subspace::span(amb, target).sum(&h.coboundaries).expect("same ambient");
    ours == theirs
}

fn example_a<K: Scalar>(out: &mut Lines) -> Result<(), CliError> {
    let m = Bimodule::<K>::example_a();
    let names = ["e1", "e2", "e3"];
    let target = span::<K>(3, &[0, 1]);
    out.push::<K>("Example A", "M^L", show(&target, &names), show(&m.invariants(), &names));
    out.push::<K>("Example A", "M_0", show(&target, &names), show(&m.antisymmetric_kernel(), &names));
    out.push::<K>(
        "Example A",
        "largest trivial sub-bimodule",
        show(&span::<K>(3, &[0]), &names),
        show(&m.trivial_part(), &names),
    );
    let dims = hl_dims(&m, 5)?;
    out.push::<K>("Example A", "dim HL^n(Fe, M), n = 1..5", format!("{:?}", [0; 5]), format!("{:?}", &dims[1..]));
    let r = check(TheoremId::Ab, m.algebra_arc(), Some(&m), 5)?;
    out.push::<K>(anchor(TheoremId::Ab), "closed forms on Example A", "Pass".into(), format!("{:?}", r.verdict));
    Ok(())
}

fn example_b<K: Scalar>(out: &mut Lines) -> Result<(), CliError> {
    let m = Bimodule::<K>::example_b();
    let s = vec![unit(2, 0), unit(2, 1)];
    let fp = fitting_set(&m, &s)?;
    let names = ["m1", "m2"];
    out.push::<K>("Example B", "M_0(S), S = {E, I}", "0".into(), show(&fp.zero_part, &names));
    out.push::<K>("Example B", "M_1(S), S = {E, I}", show(&Subspace::<K>::full(2), &names), show(&fp.one_part, &names));
    Ok(())
}

fn example_c<K: Scalar>(out: &mut Lines, top: usize) -> Result<(), CliError> {
    let n = Arc::new(LeibnizAlgebra::<K>::example_n());
    let triv = Bimodule::trivial(n.clone(), 1);
    let dims = hl_dims(&triv, top)?;
    out.push::<K>("Example C", "dim HL^n(N, F), n = 0..3", format!("{:?}", [1; 4]), format!("{:?}", &dims[..4]));
    if top > 3 {
        out.push::<K>(
            "Example C",
            &format!("dim HL^n(N, F), n = 4..{top}"),
            format!("{:?}", vec![1; top - 3]),
            format!("{:?}", &dims[4..]),
        );
    }
    let cx = CochainComplex::of_bimodule(&triv, 3)?;
    let (e, f) = (0, 1);
    for (deg, t, label) in [(1, vec![f], "f*"), (2, vec![f, e], "f*⊗e*"), (3, vec![f, e, f], "f*⊗e*⊗f*")] {
        let h = cx.cohomology(deg);
        let ok = same_classes(&h, &[dual_tensor::<K>(2, &t)]);
        out.push::<K>(
            "Example C",
            &format!("HL^{deg}(N, F) spanned by the class of {label}"),
            "true".into(),
            ok.to_string(),
        );
    }
    let ad = Bimodule::adjoint(n.clone());
    let dims = hl_dims(&ad, 2)?;
    out.push::<K>("Example C", "dim HL^n(N, N_ad), n = 0..2", format!("{:?}", [1; 3]), format!("{dims:?}"));
    out.push::<K>("Example C", "HL^0(N, N_ad)", "span{e}".into(), show(&ad.invariants(), &["e", "f"]));
    let r = check(TheoremId::Nonvannilp, &n, Some(&triv), 3)?;
    out.push::<K>(anchor(TheoremId::Nonvannilp), "non-vanishing for N with F", "Pass".into(), format!("{:?}", r.verdict));
    Ok(())
}

fn example_d<K: Scalar>(out: &mut Lines) -> Result<(), CliError> {
    let a = Arc::new(LeibnizAlgebra::<K>::example_a());
    let dims = hl_dims(&Bimodule::trivial(a.clone(), 1), 5)?;
    out.push::<K>("Example D", "dim HL^n(A, F), n = 0..5", format!("{:?}", [1; 6]), format!("{dims:?}"));
    let ad = Bimodule::adjoint(a.clone());
    let dims = hl_dims(&ad, 2)?;
    out.push::<K>("Example D", "dim HL^n(A, A_ad), n = 1, 2", format!("{:?}", [0; 2]), format!("{:?}", &dims[1..]));
    out.push::<K>("Example D", "HL^0(A, A_ad)", "span{e}".into(), show(&ad.invariants(), &["e", "h"]));
    let fe = Arc::new(LeibnizAlgebra::<K>::one_dim_lie());
    let dims = hl_dims(&Bimodule::trivial(fe, 1), 4)?;
    out.push::<K>("Example A", "dim HL^n(Fe, F), n = 0..4", format!("{:?}", [1; 5]), format!("{dims:?}"));
    Ok(())
}

/// Runs every anchor over `Q` (Example C also over `GF(5)`).
pub fn paper_suite(top: usize) -> Result<Vec<SuiteLine>, CliError> {
    let mut out = Lines(Vec::new());
    example_a::<Rational>(&mut out)?;
    example_b::<Rational>(&mut out)?;
    example_c::<Rational>(&mut out, top)?;
    example_c::<Gf5>(&mut out, top)?;
    example_d::<Rational>(&mut out)?;
    Ok(out.0)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub paper_anchor: &'static str,
    pub instance: String,
    pub dims: Vec<usize>,
}

/// Reporting mode: dimensions only, no verdict.
pub fn conjecture(which: &str, top: usize, seed: u64) -> Result<Vec<ConjectureRow>, CliError> {
    match which {
        "C" => {
            let n = Arc::new(LeibnizAlgebra::<Rational>::example_n());
            Ok(vec![ConjectureRow {
                paper_anchor: "Example C",
                instance: "dim HL^n(N, N_ad) over Q".into(),
                dims: hl_dims(&Bimodule::adjoint(n), top)?,
            }])
        }
        "D" => {
            let a = Arc::new(LeibnizAlgebra::<Rational>::example_a());
            let mut rows = vec![ConjectureRow {
                paper_anchor: "Example D",
                instance: "dim HL^n(A, A_ad) over Q".into(),
                dims: hl_dims(&Bimodule::adjoint(a), top)?,
            }];
            for (name, dims) in hemi_semidirect_sweep::<Gf5>(8, seed, top)? {
                rows.push(ConjectureRow { paper_anchor: "Example D", instance: format!("{name} over GF(5)"), dims });
            }
            Ok(rows)
        }
        other => Err(CliError::Input(format!("unknown conjecture {other:?} (use C or D)"))),
    }
}

/// Numbered statement each theorem id refers to.
pub fn anchor(id: TheoremId) -> &'static str {
    use TheoremId::*;
    match id {
        Inv => "Lemma 1.1",
        Sym => "Lemma 1.2",
        Triv => "Lemma 1.3",
        OneDim => "Lemma 1.4",
        Nontriv => "Proposition 1.5",
        Non1dim => "Proposition 1.6",
        Identities => "identities (2.1)-(2.4)",
        Fitting0 => "Lemma 2.1",
        Fitting1 => "Lemma 2.2",
        Fitting => "Theorem 2.3",
        Vanhh => "Theorem 3.2",
        Fittinghh => "Theorem 3.3",
        Cohfitting => "Corollary 3.4",
        Van => "Corollary 3.5",
        Cohnonsemisim => "Corollary 3.6",
        Whitehead => "Corollary 3.7",
        Farnsteiner => "Corollary 3.8",
        Vannilp => "Theorem 4.1",
        Dixmier => "Theorem 4.2",
        Ab => "Theorem 4.3",
        Nonvannilp => "Theorem 4.4",
        Nonvantriv => "Corollary 4.5",
        Adj => "Corollary 4.6",
        Adjlie => "Corollary 4.7",
        Vansupsolv => "Theorem 4.8",
        Barnes => "Theorem 4.9",
        Vansolv => "Theorem 4.10",
        Frattini => "Theorem 5.1",
        Max => "Corollary 5.2",
        Maxchain => "Corollary 5.3",
        Splitsolv => "Theorem 5.4",
    }
}
