//! Command line front end: document parsing, cohomology tables, theorem
//! verification and the worked-example suite.

pub mod builtin;
pub mod doc;
pub mod error;
pub mod suite;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leibniz_core::cohomology::{check_memory, decode, hl_table, CochainComplex, DEFAULT_MAX_DEGREE};
use leibniz_core::field::{set_runtime_prime, FieldSpec};
use leibniz_core::theorems::{
    check, random_algebra, scan_periodicity, sweep, sweep_fields, AlgebraClass, RandomAlgebraSpec, SweepSummary,
    TheoremId, TheoremReport, Verdict,
};
use leibniz_core::{Bimodule, Gf2, Gf3, Gf5, Gf7, LeibnizAlgebra, Rational, RuntimeFp, Scalar};
use serde::Serialize;

pub use doc::{AlgebraDocument, BimoduleDocument};
pub use error::CliError;

/// Runs `$body` with `$k` bound to the scalar type of `$spec`.
macro_rules! with_field {
    ($spec:expr, $k:ident => $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                type $k = Rational;
                $body
            }
            FieldSpec::PrimeField(2) => {
                type $k = Gf2;
                $body
            }
            FieldSpec::PrimeField(3) => {
                type $k = Gf3;
                $body
            }
            FieldSpec::PrimeField(5) => {
                type $k = Gf5;
                $body
            }
            FieldSpec::PrimeField(7) => {
                type $k = Gf7;
                $body
            }
            FieldSpec::PrimeField(p) => {
                set_runtime_prime(u64::from(p))?;
                type $k = RuntimeFp;
                $body
            }
        }
    };
}

#[derive(Parser, Debug)]
#[command(name = "leibniz-coh", version, about = "Exact Leibniz cohomology of small algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Source {
    /// Built-in example: A-alg, A-mod, B, N, D or one-dim.
    #[arg(long)]
    pub example: Option<String>,
    /// Algebra document (JSON).
    #[arg(long, conflicts_with = "example")]
    pub algebra: Option<PathBuf>,
    /// Ground field for built-ins and random sweeps: Q or a prime.
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Leibniz and bimodule identities of documents or built-ins.
    Validate {
        /// Algebra documents.
        paths: Vec<PathBuf>,
        #[command(flatten)]
        source: Source,
        /// Bimodule document over the (single) algebra given.
        #[arg(long)]
        bimodule: Option<PathBuf>,
    },
    /// Dimensions of ZL^n, BL^n and HL^n.
    Cohomology {
        #[command(flatten)]
        source: Source,
        /// trivial, adjoint, or a bimodule document; defaults to the
        /// example's own module, else trivial.
        #[arg(long)]
        coeffs: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Also print a basis of cocycle representatives.
        #[arg(long)]
        representatives: bool,
    },
    /// Check theorem hypotheses and conclusions.
    Verify {
        /// Theorem id (ab, nonvannilp, ...).
        #[arg(long, conflicts_with = "all")]
        theorem: Option<String>,
        /// Every theorem id.
        #[arg(long)]
        all: bool,
        /// Random instances per theorem.
        #[arg(long, default_value_t = 0)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Run on every built-in (algebra, module) pair.
        #[arg(long)]
        all_builtin: bool,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        coeffs: Option<String>,
    },
    /// Expected against computed values for the worked examples.
    PaperSuite {
        /// Print dimensions for an open question instead (C or D).
        #[arg(long)]
        conjecture: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Report algebras with dim HL^n = dim HL^{n+2} up to the cap.
    ScanPeriodicity {
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        /// Add this many random algebras of dimension at most 2.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Field of the random algebras.
        #[arg(long, default_value = "5")]
        field: String,
    },
    /// Print the canonical documents of an algebra and its coefficients.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        coeffs: Option<String>,
    },
}

/// Parses the arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Validate { paths, source, bimodule } => validate(fmt, paths, source, bimodule.as_ref(), out),
        Command::Cohomology { source, coeffs, max_degree, representatives } => {
            let src = resolve(source)?;
            with_field!(src.field, K => cohomology::<K>(fmt, &src, coeffs.as_deref(), *max_degree, *representatives, out))
        }
        Command::Verify { theorem, all, instances, seed, max_degree, all_builtin, source, coeffs } => {
            let ids: Vec<TheoremId> = match (theorem, all) {
                (Some(t), _) => vec![t.parse()?],
                (None, true) => TheoremId::ALL.to_vec(),
                (None, false) => return Err(CliError::Input("give --theorem ID or --all".into())),
            };
            let opts = VerifyOpts {
                instances: *instances,
                seed: *seed,
                n_max: *max_degree,
                all_builtin: *all_builtin,
                coeffs: coeffs.clone(),
            };
            verify(fmt, &ids, source, &opts, out)
        }
        Command::PaperSuite { conjecture, max_degree, seed } => paper_suite(fmt, conjecture.as_deref(), *max_degree, *seed, out),
        Command::ScanPeriodicity { max_degree, random, seed, field } => {
            let spec = parse_field(field)?;
            with_field!(spec, K => periodicity::<K>(fmt, *max_degree, *random, *seed, out))
        }
        Command::Export { source, coeffs } => {
            let src = resolve(source)?;
            with_field!(src.field, K => export::<K>(&src, coeffs.as_deref(), out))
        }
    }
}

// -- sources ---------------------------------------------------------------

fn parse_field(s: &str) -> Result<FieldSpec, CliError> {
    if s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let p: u64 = s.parse().map_err(|_| CliError::Input(format!("field must be Q or a prime, got {s:?}")))?;
    Ok(FieldSpec::prime(p)?)
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

enum Origin {
    Builtin(String),
    Document(AlgebraDocument, String),
    /// Nothing given on the command line.
    None,
}

struct Resolved {
    origin: Origin,
    field: FieldSpec,
}

fn resolve(source: &Source) -> Result<Resolved, CliError> {
    let flag = source.field.as_deref().map(parse_field).transpose()?;
    if let Some(path) = &source.algebra {
        let d = AlgebraDocument::from_json(&read(path)?)?;
        let field = d.field.spec()?;
        if flag.is_some_and(|f| f != field) {
            return Err(CliError::Input(format!("--field disagrees with the document field {field}")));
        }
        return Ok(Resolved { origin: Origin::Document(d, path.display().to_string()), field });
    }
    let field = flag.unwrap_or(FieldSpec::Rationals);
    match &source.example {
        Some(name) if builtin::NAMES.contains(&name.as_str()) => {
            Ok(Resolved { origin: Origin::Builtin(name.clone()), field })
        }
        Some(name) => Err(CliError::Input(format!(
            "unknown example {name:?}; choose one of {}",
            builtin::NAMES.join(", ")
        ))),
        None => Ok(Resolved { origin: Origin::None, field }),
    }
}

struct Instance<K> {
    label: String,
    algebra: Arc<LeibnizAlgebra<K>>,
    module: Option<Bimodule<K>>,
    basis: Vec<String>,
    anchor: Option<&'static str>,
}

fn algebra_violation<K: Scalar>(a: &LeibnizAlgebra<K>) -> Option<String> {
    a.violations().first().map(|&(i, j, k)| {
        format!(
            "left Leibniz identity fails on basis triple ({}, {}, {}): x(yz) != (xy)z + y(xz) with x = e{}, y = e{}, z = e{}",
            i + 1,
            j + 1,
            k + 1,
            i + 1,
            j + 1,
            k + 1
        )
    })
}

fn bimodule_violation<K: Scalar>(m: &Bimodule<K>) -> Option<String> {
    m.violations().first().map(|&(id, x, y)| {
        format!("bimodule identity {id} fails for basis pair ({}, {}) of the algebra", x + 1, y + 1)
    })
}

fn instance<K: Scalar>(src: &Resolved) -> Result<Instance<K>, CliError> {
    match &src.origin {
        Origin::Builtin(name) => {
            let b = builtin::builtin::<K>(name).expect("checked name");
            Ok(Instance {
                label: b.name.to_string(),
                algebra: b.algebra,
                module: b.module,
                basis: b.basis,
                anchor: Some(b.anchor),
            })
        }
        Origin::Document(d, path) => {
            let a = d.build::<K>()?;
            if let Some(v) = algebra_violation(&a) {
                return Err(CliError::Math(format!("{path}: {v}")));
            }
            Ok(Instance {
                label: path.clone(),
                basis: (1..=a.dim()).map(|i| format!("e{i}")).collect(),
                algebra: Arc::new(a),
                module: None,
                anchor: None,
            })
        }
        Origin::None => Err(CliError::Input("give --example NAME or --algebra FILE".into())),
    }
}

fn coefficients<K: Scalar>(inst: &Instance<K>, coeffs: Option<&str>) -> Result<(String, Bimodule<K>), CliError> {
    let a = inst.algebra.clone();
    Ok(match coeffs {
        Some("trivial") => ("trivial F".into(), Bimodule::trivial(a, 1)),
        Some("adjoint") => ("adjoint".into(), Bimodule::adjoint(a)),
        Some(path) => {
            let d = BimoduleDocument::from_json(&read(&PathBuf::from(path))?)?;
            let m = d.build(a)?;
            if let Some(v) = bimodule_violation(&m) {
                return Err(CliError::Math(format!("{path}: {v}")));
            }
            (path.to_string(), m)
        }
        None => match &inst.module {
            Some(m) => ("built-in module".into(), m.clone()),
            None => ("trivial F".into(), Bimodule::trivial(a, 1)),
        },
    })
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let s = serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

/// `serialize(parse(doc))`: reduced scalars, residues in `[0, p)`, zero
/// products dropped, products ordered by index. Does not check identities.
pub fn canonical_algebra(doc: &AlgebraDocument) -> Result<AlgebraDocument, CliError> {
    with_field!(doc.field.spec()?, K => Ok(AlgebraDocument::from_algebra(&doc.build::<K>()?)))
}

/// Canonical form of a bimodule document over the algebra `alg`.
pub fn canonical_bimodule(alg: &AlgebraDocument, doc: &BimoduleDocument) -> Result<BimoduleDocument, CliError> {
    with_field!(alg.field.spec()?, K => {
        let a = Arc::new(alg.build::<K>()?);
        Ok(BimoduleDocument::from_bimodule(&doc.build(a)?))
    })
}

// -- validate --------------------------------------------------------------

#[derive(Serialize)]
struct ValidationRecord {
    source: String,
    kind: &'static str,
    ok: bool,
    violation: Option<String>,
    paper_anchor: Option<&'static str>,
}

fn validate_one<K: Scalar>(src: &Resolved, bimodule: Option<&PathBuf>) -> Result<Vec<ValidationRecord>, CliError> {
    let mut records = Vec::new();
    let inst = match instance::<K>(src) {
        Ok(i) => i,
        Err(CliError::Math(v)) => {
            let source = match &src.origin {
                Origin::Document(_, p) => p.clone(),
                _ => String::new(),
            };
            let v = v.strip_prefix(&format!("{source}: ")).unwrap_or(&v).to_string();
            records.push(ValidationRecord { source, kind: "algebra", ok: false, violation: Some(v), paper_anchor: None });
            return Ok(records);
        }
        Err(e) => return Err(e),
    };
    records.push(ValidationRecord {
        source: inst.label.clone(),
        kind: "algebra",
        ok: true,
        violation: None,
        paper_anchor: inst.anchor,
    });
    if let Some(m) = &inst.module {
        records.push(ValidationRecord {
            source: format!("{} module", inst.label),
            kind: "bimodule",
            ok: m.validate().is_ok(),
            violation: bimodule_violation(m),
            paper_anchor: inst.anchor,
        });
    }
    if let Some(path) = bimodule {
        let d = BimoduleDocument::from_json(&read(path)?)?;
        let m = d.build(inst.algebra.clone())?;
        let violation = bimodule_violation(&m);
        records.push(ValidationRecord {
            source: path.display().to_string(),
            kind: "bimodule",
            ok: violation.is_none(),
            violation,
            paper_anchor: None,
        });
    }
    Ok(records)
}

fn validate(
    fmt: Format,
    paths: &[PathBuf],
    source: &Source,
    bimodule: Option<&PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut sources = Vec::new();
    if source.example.is_some() || source.algebra.is_some() {
        sources.push(resolve(source)?);
    }
    for p in paths {
        sources.push(resolve(&Source { algebra: Some(p.clone()), field: source.field.clone(), ..Source::default() })?);
    }
    if sources.is_empty() {
        return Err(CliError::Input("nothing to validate".into()));
    }
    if bimodule.is_some() && sources.len() != 1 {
        return Err(CliError::Input("--bimodule needs exactly one algebra".into()));
    }
    let mut records = Vec::new();
    for src in &sources {
        records.extend(with_field!(src.field, K => validate_one::<K>(src, bimodule))?);
    }
    if fmt == Format::Json {
        emit_json(out, &records)?;
    } else {
        for r in &records {
            match &r.violation {
                None => writeln!(out, "ok        {} {}", r.kind, r.source)?,
                Some(v) => writeln!(out, "VIOLATED  {} {}: {v}", r.kind, r.source)?,
            }
        }
    }
    Ok(if records.iter().all(|r| r.ok) { 0 } else { 2 })
}

// -- cohomology ------------------------------------------------------------

#[derive(Serialize)]
struct DegreeRecord {
    degree: usize,
    dim_z: usize,
    dim_b: usize,
    dim_h: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    representatives: Option<Vec<String>>,
}

#[derive(Serialize)]
struct CohomologyReport {
    algebra: String,
    coefficients: String,
    field: String,
    paper_anchor: Option<&'static str>,
    degrees: Vec<DegreeRecord>,
}

/// `c x_{t_1}^*⊗…⊗x_{t_n}^* ⊗ m_r` notation for a cochain.
fn render_cochain<K: Scalar>(v: &[K], basis: &[String], dm: usize, n: usize) -> String {
    let d = basis.len();
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| {
            let (t, r) = (decode(idx / dm, d, n), idx % dm);
            let mut parts: Vec<String> = t.iter().map(|&i| format!("{}*", basis[i])).collect();
            if dm > 1 || parts.is_empty() {
                parts.push(if dm > 1 { format!("m{}", r + 1) } else { "1".into() });
            }
            let body = parts.join("⊗");
            if c.is_one() {
                body
            } else {
                format!("({c})·{body}")
            }
        })
        .collect();
    terms.join(" + ")
}

fn cohomology<K: Scalar>(
    fmt: Format,
    src: &Resolved,
    coeffs: Option<&str>,
    n_max: usize,
    reps: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let inst = instance::<K>(src)?;
    let (coeff_label, m) = coefficients(&inst, coeffs)?;
    check_memory(inst.algebra.dim(), m.dim(), n_max)?;
    let degrees: Vec<DegreeRecord> = if reps {
        let cx = CochainComplex::of_bimodule(&m, n_max)?;
        cx.cohomology_all()
            .into_iter()
            .map(|h| DegreeRecord {
                degree: h.degree,
                dim_z: h.dim_z,
                dim_b: h.dim_b,
                dim_h: h.dim_h,
                representatives: Some(
                    h.representatives.basis().iter().map(|v| render_cochain(v, &inst.basis, m.dim(), h.degree)).collect(),
                ),
            })
            .collect()
    } else {
        hl_table(&m, n_max)?
            .into_iter()
            .map(|d| DegreeRecord { degree: d.degree, dim_z: d.dim_z, dim_b: d.dim_b, dim_h: d.dim_h, representatives: None })
            .collect()
    };
    let report = CohomologyReport {
        algebra: inst.label.clone(),
        coefficients: coeff_label,
        field: K::field().to_string(),
        paper_anchor: inst.anchor,
        degrees,
    };
    if fmt == Format::Json {
        emit_json(out, &report)?;
        return Ok(0);
    }
    let anchor = report.paper_anchor.map(|a| format!("  [{a}]")).unwrap_or_default();
    writeln!(out, "HL^n({}, {}) over {}{anchor}", report.algebra, report.coefficients, report.field)?;
    writeln!(out, "{:>3} {:>8} {:>8} {:>8}", "n", "dim ZL", "dim BL", "dim HL")?;
    for d in &report.degrees {
        writeln!(out, "{:>3} {:>8} {:>8} {:>8}", d.degree, d.dim_z, d.dim_b, d.dim_h)?;
        for r in d.representatives.iter().flatten() {
            writeln!(out, "      {r}")?;
        }
    }
    Ok(0)
}

// -- verify ----------------------------------------------------------------

struct VerifyOpts {
    instances: usize,
    seed: u64,
    n_max: usize,
    all_builtin: bool,
    coeffs: Option<String>,
}

#[derive(Serialize)]
struct InstanceRecord {
    instance: String,
    paper_anchor: &'static str,
    #[serde(flatten)]
    report: TheoremReport,
}

#[derive(Serialize)]
struct SweepRecord {
    paper_anchor: &'static str,
    field: String,
    seed: u64,
    #[serde(flatten)]
    summary: SweepSummary,
}

#[derive(Serialize, Default)]
struct VerifyOutput {
    reports: Vec<InstanceRecord>,
    sweeps: Vec<SweepRecord>,
}

fn check_instances<K: Scalar>(
    ids: &[TheoremId],
    targets: &[(String, Arc<LeibnizAlgebra<K>>, Bimodule<K>)],
    n_max: usize,
    acc: &mut VerifyOutput,
) -> Result<(), CliError> {
    for &id in ids {
        let mut seen_algebras = BTreeSet::new();
        for (label, a, m) in targets {
            let (label, m) = if id.needs_module() {
                (label.clone(), Some(m))
            } else {
                let name = label.split(" with ").next().unwrap_or(label).to_string();
                if !seen_algebras.insert(name.clone()) {
                    continue;
                }
                (name, None)
            };
            let report = check(id, a, m, n_max)?;
            acc.reports.push(InstanceRecord { instance: label, paper_anchor: suite::anchor(id), report });
        }
    }
    Ok(())
}

fn verify_named<K: Scalar>(
    ids: &[TheoremId],
    src: &Resolved,
    opts: &VerifyOpts,
    acc: &mut VerifyOutput,
) -> Result<(), CliError> {
    if opts.all_builtin {
        check_instances::<K>(ids, &builtin::instances::<K>(), opts.n_max, acc)?;
    }
    if !matches!(src.origin, Origin::None) {
        let inst = instance::<K>(src)?;
        let (coeff_label, m) = coefficients(&inst, opts.coeffs.as_deref())?;
        let target = (format!("{} with {coeff_label}", inst.label), inst.algebra.clone(), m);
        check_instances::<K>(ids, &[target], opts.n_max, acc)?;
    }
    Ok(())
}

fn verify(
    fmt: Format,
    ids: &[TheoremId],
    source: &Source,
    opts: &VerifyOpts,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let src = resolve(source)?;
    let mut acc = VerifyOutput::default();
    let named = opts.all_builtin || !matches!(src.origin, Origin::None);
    if named {
        with_field!(src.field, K => verify_named::<K>(ids, &src, opts, &mut acc))?;
    }
    if opts.instances > 0 {
        for &id in ids {
            let (field, summary) = match &source.field {
                Some(_) => (src.field.to_string(), with_field!(src.field, K => sweep::<K>(id, opts.instances, opts.seed, opts.n_max))?),
                None => ("GF(2), GF(3), GF(5)".to_string(), sweep_fields(id, opts.instances, opts.seed, opts.n_max)?),
            };
            acc.sweeps.push(SweepRecord { paper_anchor: suite::anchor(id), field, seed: opts.seed, summary });
        }
    }
    if !named && opts.instances == 0 {
        with_field!(src.field, K => verify_named::<K>(ids, &src, &VerifyOpts { all_builtin: true, coeffs: None, ..*opts }, &mut acc))?;
    }
    let failed = acc.reports.iter().any(|r| r.report.verdict == Verdict::Fail) || acc.sweeps.iter().any(|s| s.summary.fail > 0);
    if fmt == Format::Json {
        emit_json(out, &acc)?;
    } else {
        for r in &acc.reports {
            let up_to = r.report.conclusion_verified_up_to.map(|n| format!(" (n <= {n})")).unwrap_or_default();
            writeln!(out, "{:<14} {:<13} {:<26} {:?}{up_to}", r.report.theorem_id.as_str(), r.paper_anchor, r.instance, r.report.verdict)?;
            for h in &r.report.hypotheses {
                writeln!(out, "    {}: {}", h.name, status_text(&h.status))?;
            }
            for n in &r.report.notes {
                writeln!(out, "    note: {n}")?;
            }
        }
        for s in &acc.sweeps {
            let t = &s.summary;
            writeln!(
                out,
                "{:<14} {:<13} {} random over {}: pass {} vacuous {} n/a {} fail {} (generation failures {})",
                t.theorem.to_string(), s.paper_anchor, t.instances, s.field, t.pass, t.vacuously_true, t.not_applicable, t.fail,
                t.generation_failures
            )?;
            for (seed, notes) in &t.failures {
                writeln!(out, "    FAIL at instance seed {seed}: {}", notes.join("; "))?;
            }
        }
    }
    Ok(if failed { 2 } else { 0 })
}

fn status_text(s: &leibniz_core::theorems::Status) -> String {
    use leibniz_core::theorems::Status;
    match s {
        Status::Satisfied => "satisfied".into(),
        Status::Violated => "violated".into(),
        Status::NotCheckable(r) => format!("not checkable ({r})"),
        Status::Caveat(r) => format!("caveat ({r})"),
    }
}

// -- worked-example suite --------------------------------------------------

fn paper_suite(fmt: Format, conjecture: Option<&str>, top: usize, seed: u64, out: &mut dyn Write) -> Result<i32, CliError> {
    check_memory(2, 2, top)?;
    if let Some(which) = conjecture {
        let rows = suite::conjecture(which, top, seed)?;
        if fmt == Format::Json {
            emit_json(out, &rows)?;
        } else {
            for r in &rows {
                writeln!(out, "{:<10} {:<40} {:?}", r.paper_anchor, r.instance, r.dims)?;
            }
        }
        return Ok(0);
    }
    let lines = suite::paper_suite(top.max(3))?;
    if fmt == Format::Json {
        emit_json(out, &lines)?;
    } else {
        for l in &lines {
            writeln!(
                out,
                "{}  {:<16} {:<7} {:<48} expected {}  computed {}",
                if l.pass { "PASS" } else { "FAIL" },
                l.paper_anchor,
                l.field,
                l.check,
                l.expected,
                l.computed
            )?;
        }
    }
    Ok(if lines.iter().all(|l| l.pass) { 0 } else { 2 })
}

// -- periodicity -----------------------------------------------------------

fn periodicity<K: Scalar>(fmt: Format, n_max: usize, random: usize, seed: u64, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut algebras: Vec<(String, Arc<LeibnizAlgebra<K>>)> = ["N", "D", "one-dim", "B"]
        .iter()
        .map(|n| (n.to_string(), builtin::builtin::<K>(n).expect("known").algebra))
        .collect();
    for i in 0..random {
        let s = seed.wrapping_add(i as u64);
        let spec = RandomAlgebraSpec { dim: 1 + i % 2, class: AlgebraClass::Any, seed: s };
        if let Ok(a) = random_algebra::<K>(spec.clone()) {
            algebras.push((format!("random dim {} seed {s}", spec.dim), Arc::new(a)));
        }
    }
    let rows = scan_periodicity(&algebras, n_max)?;
    if fmt == Format::Json {
        emit_json(out, &rows)?;
    } else {
        writeln!(out, "heuristic: dim HL^n = dim HL^(n+2) for all n up to the cap ({n_max}), over {}", K::field())?;
        for r in &rows {
            writeln!(
                out,
                "{:<24} trivial {:?}{}  adjoint {:?}{}",
                r.name,
                r.trivial,
                if r.periodic_trivial { " periodic" } else { "" },
                r.adjoint,
                if r.periodic_adjoint { " periodic" } else { "" }
            )?;
        }
    }
    Ok(0)
}

// -- export ----------------------------------------------------------------

fn export<K: Scalar>(src: &Resolved, coeffs: Option<&str>, out: &mut dyn Write) -> Result<i32, CliError> {
    let inst = instance::<K>(src)?;
    writeln!(out, "{}", AlgebraDocument::from_algebra(&inst.algebra).to_json())?;
    if coeffs.is_some() || inst.module.is_some() {
        let (_, m) = coefficients(&inst, coeffs)?;
        writeln!(out, "{}", BimoduleDocument::from_bimodule(&m).to_json())?;
    }
    Ok(0)
}
