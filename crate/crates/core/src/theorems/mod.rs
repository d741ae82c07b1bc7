//! Hypothesis tracking and conclusion checks for the vanishing,
//! non-vanishing and structure results, plus random instance generators.

mod checks;
mod generators;
mod structure;
mod sweeps;

pub use checks::{check, COMPLEMENT_BUDGET};
pub use generators::{
    random_algebra, random_bimodule, random_left_module, random_scalar, AlgebraClass, RandomAlgebraSpec,
    GENERATION_ATTEMPTS,
};
pub use structure::{
    abelian_ideal, candidate_subspaces, nilpotent_right_ideals, vanhh_witness, witness_elements, SUBSPACE_BUDGET,
};
pub use sweeps::{
    conjecture_dims, hemi_semidirect_sweep, hom_shift_check, random_instance, scan_periodicity, structural_identities, sweep,
    sweep_fields, HomShiftReport, PeriodicityRow, StructuralReport, SweepSummary,
};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// The results the harness knows how to check. Identifiers follow the short
/// labels used in the CLI (`ab`, `nonvannilp`, …).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    Inv,
    Sym,
    Triv,
    #[serde(rename = "1dim")]
    OneDim,
    Nontriv,
    Non1dim,
    Identities,
    Fitting0,
    Fitting1,
    Fitting,
    Vanhh,
    Fittinghh,
    Cohfitting,
    Van,
    Cohnonsemisim,
    Whitehead,
    Farnsteiner,
    Vannilp,
    Dixmier,
    Ab,
    Nonvannilp,
    Nonvantriv,
    Adj,
    Adjlie,
    Vansupsolv,
    Barnes,
    Vansolv,
    Frattini,
    Max,
    Maxchain,
    Splitsolv,
}

impl TheoremId {
    pub const ALL: [TheoremId; 31] = [
        TheoremId::Inv,
        TheoremId::Sym,
        TheoremId::Triv,
        TheoremId::OneDim,
        TheoremId::Nontriv,
        TheoremId::Non1dim,
        TheoremId::Identities,
        TheoremId::Fitting0,
        TheoremId::Fitting1,
        TheoremId::Fitting,
        TheoremId::Vanhh,
        TheoremId::Fittinghh,
        TheoremId::Cohfitting,
        TheoremId::Van,
        TheoremId::Cohnonsemisim,
        TheoremId::Whitehead,
        TheoremId::Farnsteiner,
        TheoremId::Vannilp,
        TheoremId::Dixmier,
        TheoremId::Ab,
        TheoremId::Nonvannilp,
        TheoremId::Nonvantriv,
        TheoremId::Adj,
        TheoremId::Adjlie,
        TheoremId::Vansupsolv,
        TheoremId::Barnes,
        TheoremId::Vansolv,
        TheoremId::Frattini,
        TheoremId::Max,
        TheoremId::Maxchain,
        TheoremId::Splitsolv,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Inv => "inv",
            TheoremId::Sym => "sym",
            TheoremId::Triv => "triv",
            TheoremId::OneDim => "1dim",
            TheoremId::Nontriv => "nontriv",
            TheoremId::Non1dim => "non1dim",
            TheoremId::Identities => "identities",
            TheoremId::Fitting0 => "fitting0",
            TheoremId::Fitting1 => "fitting1",
            TheoremId::Fitting => "fitting",
            TheoremId::Vanhh => "vanhh",
            TheoremId::Fittinghh => "fittinghh",
            TheoremId::Cohfitting => "cohfitting",
            TheoremId::Van => "van",
            TheoremId::Cohnonsemisim => "cohnonsemisim",
            TheoremId::Whitehead => "whitehead",
            TheoremId::Farnsteiner => "farnsteiner",
            TheoremId::Vannilp => "vannilp",
            TheoremId::Dixmier => "dixmier",
            TheoremId::Ab => "ab",
            TheoremId::Nonvannilp => "nonvannilp",
            TheoremId::Nonvantriv => "nonvantriv",
            TheoremId::Adj => "adj",
            TheoremId::Adjlie => "adjlie",
            TheoremId::Vansupsolv => "vansupsolv",
            TheoremId::Barnes => "barnes",
            TheoremId::Vansolv => "vansolv",
            TheoremId::Frattini => "frattini",
            TheoremId::Max => "max",
            TheoremId::Maxchain => "maxchain",
            TheoremId::Splitsolv => "splitsolv",
        }
    }

    /// Whether the statement involves a bimodule (otherwise only the
    /// algebra is inspected).
    pub fn needs_module(self) -> bool {
        !matches!(
            self,
            TheoremId::Nonvantriv
                | TheoremId::Adj
                | TheoremId::Adjlie
                | TheoremId::Frattini
                | TheoremId::Max
                | TheoremId::Maxchain
                | TheoremId::Splitsolv
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum Status {
    Satisfied,
    Violated,
    /// Cannot be decided here (infinite field, enumeration out of reach,
    /// uncertified irreducibility).
    NotCheckable(String),
    /// Stated over algebraically closed fields, checked over the given field
    /// anyway; a failed conclusion is then not a contradiction.
    Caveat(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    #[serde(flatten)]
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    VacuouslyTrue,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub hypotheses: Vec<Hypothesis>,
    /// Highest degree up to which a cohomological conclusion was verified.
    pub conclusion_verified_up_to: Option<usize>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

/// Collects hypotheses and decides the verdict.
pub(crate) struct ReportBuilder {
    id: TheoremId,
    hypotheses: Vec<Hypothesis>,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub(crate) fn new(id: TheoremId) -> Self {
        ReportBuilder { id, hypotheses: Vec::new(), notes: Vec::new() }
    }

    pub(crate) fn hyp(&mut self, name: &str, status: Status) -> &mut Self {
        self.hypotheses.push(Hypothesis { name: name.to_string(), status });
        self
    }

    pub(crate) fn flag(&mut self, name: &str, ok: bool) -> &mut Self {
        self.hyp(name, if ok { Status::Satisfied } else { Status::Violated })
    }

    pub(crate) fn note(&mut self, s: impl Into<String>) -> &mut Self {
        self.notes.push(s.into());
        self
    }

    pub(crate) fn blocked(&self) -> bool {
        self.hypotheses.iter().any(|h| matches!(h.status, Status::NotCheckable(_) | Status::Violated))
    }

    fn report(&mut self, verdict: Verdict, up_to: Option<usize>) -> TheoremReport {
        TheoremReport {
            theorem_id: self.id,
            hypotheses: std::mem::take(&mut self.hypotheses),
            conclusion_verified_up_to: up_to,
            verdict,
            notes: std::mem::take(&mut self.notes),
        }
    }

    /// The verdict once the hypotheses are in: the conclusion closure runs
    /// only when every hypothesis is satisfied (or carries a caveat).
    pub(crate) fn finish<F>(&mut self, up_to: Option<usize>, conclusion: F) -> crate::error::Result<TheoremReport>
    where
        F: FnOnce(&mut Vec<String>) -> crate::error::Result<bool>,
    {
        if self.hypotheses.iter().any(|h| matches!(h.status, Status::NotCheckable(_))) {
            return Ok(self.report(Verdict::NotApplicable, None));
        }
        if self.hypotheses.iter().any(|h| h.status == Status::Violated) {
            return Ok(self.report(Verdict::VacuouslyTrue, None));
        }
        let ok = conclusion(&mut self.notes)?;
        let caveat = self.hypotheses.iter().any(|h| matches!(h.status, Status::Caveat(_)));
        let verdict = match (ok, caveat) {
            (true, _) => Verdict::Pass,
            (false, true) => {
                self.notes.push("conclusion fails over this field; not a contradiction (closed-field caveat)".into());
                Verdict::NotApplicable
            }
            (false, false) => Verdict::Fail,
        };
        Ok(self.report(verdict, if ok { up_to } else { None }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_roundtrip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            assert_eq!(serde_json::to_string(&t).unwrap(), format!("\"{}\"", t.as_str()));
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }

    #[test]
    fn verdict_logic() {
        let mut b = ReportBuilder::new(TheoremId::Van);
        b.flag("h", true);
        assert_eq!(b.finish(Some(3), |_| Ok(false)).unwrap().verdict, Verdict::Fail);
        let mut b = ReportBuilder::new(TheoremId::Van);
        b.flag("h", false);
        assert_eq!(b.finish(Some(3), |_| unreachable!()).unwrap().verdict, Verdict::VacuouslyTrue);
        let mut b = ReportBuilder::new(TheoremId::Van);
        b.hyp("h", Status::Caveat("closed".into()));
        assert_eq!(b.finish(None, |_| Ok(false)).unwrap().verdict, Verdict::NotApplicable);
        let mut b = ReportBuilder::new(TheoremId::Van);
        b.hyp("h", Status::NotCheckable("x".into())).flag("g", false);
        assert_eq!(b.finish(None, |_| Ok(true)).unwrap().verdict, Verdict::NotApplicable);
    }
}
