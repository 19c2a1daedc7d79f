use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use tower_core::algebra::MatrixF;
use tower_core::arith::{Rational, Scalar};
use tower_core::combinatorics::{partitions_of, Partition, PathTableau};
use tower_core::murphy::{cell_module, murphy_level, MurphyError, ReducerKind};
use tower_core::oracle::{kronecker, littlewood_richardson, mn_character, skew_kostka, stable_kronecker, OracleError};
use tower_core::seminormal::{JmFamily, Seminormal, SeminormalError};
use tower_core::skew::{
    lr_coefficients, permutation_multiplicity, sample_kronecker_triples, skew_multiplicities, CoefficientFamily,
    MultiplicityEntry, MultiplicityTable, PartitionKronecker, RightModule, SkewError, SkewModule,
};
use tower_core::tower::checks::check_levels;
use tower_core::tower::Tower;

use crate::job::{parse_partition, parse_point, Command, Format, JobError, JobSpec};

/// Largest `r` accepted by `kronecker` without `allow_large` (internal partition level `2r`).
pub const KRONECKER_CAP: usize = 4;

/// The stable report schema.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tower: Option<String>,
    pub level: Option<usize>,
    pub command: &'static str,
    pub results: Value,
    pub timings: Map<String, Value>,
    pub seed: u64,
    pub version: &'static str,
}

pub struct Outcome {
    pub report: Report,
    pub passed: bool,
    pub csv: Option<String>,
    pub text: Option<String>,
}

impl Outcome {
    /// The bytes written to stdout for `format`.
    pub fn render(&self, format: Format) -> Result<String, JobError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.csv.clone().ok_or_else(|| JobError::Invalid("no CSV form for this result".into())),
            Format::Text => {
                self.text.as_ref().map(|t| format!("{t}\n")).ok_or_else(|| JobError::Invalid("no text form for this result".into()))
            }
        }
    }
}

/// Input errors stop the job; mathematical failures become a failing report with a witness.
enum Failure {
    Job(JobError),
    Math(String),
}

impl From<JobError> for Failure {
    fn from(e: JobError) -> Self {
        Failure::Job(e)
    }
}

impl From<MurphyError> for Failure {
    fn from(e: MurphyError) -> Self {
        Failure::Math(e.to_string())
    }
}

impl From<SeminormalError> for Failure {
    fn from(e: SeminormalError) -> Self {
        Failure::Math(e.to_string())
    }
}

impl From<SkewError> for Failure {
    fn from(e: SkewError) -> Self {
        Failure::Math(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::SizeMismatch(m) => Failure::Job(JobError::Invalid(format!("sizes do not match: {m}"))),
            e => Failure::Math(e.to_string()),
        }
    }
}

struct Timer {
    redact: bool,
    phases: Map<String, Value>,
    start: Instant,
}

impl Timer {
    fn new(redact: bool) -> Self {
        Timer { redact, phases: Map::new(), start: Instant::now() }
    }

    /// Closes the current phase under `name` and starts the next one.
    fn lap(&mut self, name: &str) {
        let ms = if self.redact { 0.0 } else { (self.start.elapsed().as_secs_f64() * 1e6).round() / 1e3 };
        self.phases.insert(name.into(), json!(ms));
        self.start = Instant::now();
    }
}

struct Produced {
    tower: Option<String>,
    level: Option<usize>,
    results: Value,
    passed: bool,
    csv: Option<String>,
    text: Option<String>,
}

impl Produced {
    fn new(tower: Option<String>, level: Option<usize>, results: Value) -> Self {
        Produced { tower, level, results, passed: true, csv: None, text: None }
    }
}

pub fn run(job: &JobSpec) -> Result<Outcome, JobError> {
    job.validate()?;
    let command = job.command()?;
    let mut timer = Timer::new(job.redact_timings);
    let produced = match command {
        Command::Axioms => axioms(job, &mut timer),
        Command::Murphy => murphy(job, &mut timer),
        Command::Gram => gram(job, &mut timer),
        Command::Seminormal => seminormal(job, &mut timer),
        Command::Skew => skew(job, &mut timer),
        Command::Multiplicities => multiplicities(job, &mut timer),
        Command::Kronecker => kronecker_job(job, &mut timer),
        Command::Oracle => oracle(job, &mut timer),
    };
    let produced = match produced {
        Ok(p) => p,
        Err(Failure::Job(e)) => return Err(e),
        Err(Failure::Math(msg)) => {
            timer.lap("failed");
            let witness = json!({ "error": msg, "job": job });
            let mut p = Produced::new(job.tower.clone(), job.level.or(job.r), json!({ "passed": false, "witness": witness }));
            p.passed = false;
            p
        }
    };
    let report = Report {
        tower: produced.tower,
        level: produced.level,
        command: command.name(),
        results: produced.results,
        timings: timer.phases,
        seed: job.seed,
        version: env!("CARGO_PKG_VERSION"),
    };
    Ok(Outcome { report, passed: produced.passed, csv: produced.csv, text: produced.text })
}

fn csv_string(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("in-memory CSV write");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("CSV is UTF-8")
}

fn scalar_text(c: &Scalar, at: Option<&Rational>) -> Result<String, Failure> {
    match at {
        None => Ok(c.to_string()),
        Some(p) => c
            .evaluate_at(p)
            .map(|v| v.to_string())
            .map_err(|e| Failure::Job(JobError::Invalid(format!("cannot specialize at {p}: {e}")))),
    }
}

fn matrix_rows(m: &MatrixF, at: Option<&Rational>) -> Result<Vec<Vec<String>>, Failure> {
    m.to_rows().iter().map(|row| row.iter().map(|c| scalar_text(c, at)).collect()).collect()
}

fn labeled_matrix_csv(paths: &[PathTableau], rows: &[Vec<String>]) -> String {
    let mut out = vec![std::iter::once("path".to_string()).chain(paths.iter().map(|t| t.to_string())).collect()];
    for (t, row) in paths.iter().zip(rows) {
        out.push(std::iter::once(t.to_string()).chain(row.iter().cloned()).collect());
    }
    csv_string(out)
}

fn point(job: &JobSpec) -> Result<Option<Rational>, Failure> {
    Ok(job.at.as_deref().map(parse_point).transpose()?)
}

fn label_at(tower: &Tower, level: usize, s: &str) -> Result<Partition, Failure> {
    let lambda = parse_partition(s)?;
    if !tower.graph().contains(level, &lambda) {
        return Err(JobError::Invalid(format!("{lambda} is not a label at level {level} of {}", tower.name())).into());
    }
    Ok(lambda)
}

fn selected_labels(tower: &Tower, level: usize, cell: Option<&str>) -> Result<Vec<Partition>, Failure> {
    match cell {
        Some(c) => Ok(vec![label_at(tower, level, c)?]),
        None => Ok(tower.graph().labels(level).to_vec()),
    }
}

fn axioms(job: &JobSpec, timer: &mut Timer) -> Result<Produced, Failure> {
    let level = job.require_level()?;
    let tower = job.build_tower(level)?;
    timer.lap("build");
    let report = check_levels(&tower, level);
    timer.lap("checks");
    let mut rows = vec![vec!["axiom".into(), "level".into(), "status".into()]];
    for e in &report.entries {
        rows.push(vec![e.axiom.clone(), e.level.to_string(), if e.passed() { "pass" } else { "fail" }.into()]);
    }
    let mut p = Produced::new(Some(tower.name()), Some(level), json!({ "passed": report.passed(), "entries": report }));
    p.passed = report.passed();
    p.csv = Some(csv_string(rows));
    Ok(p)
}

fn murphy(job: &JobSpec, timer: &mut Timer) -> Result<Produced, Failure> {
    let level = job.require_level()?;
    let tower = job.build_tower(level)?;
    let labels = selected_labels(&tower, level, job.cell.as_deref())?;
    timer.lap("build");
    let ml = murphy_level(&tower, level);
    let alg = tower.algebra(level);
    timer.lap("murphy");
    let mut cells = Vec::new();
    let mut rows = vec![vec!["cell".into(), "index".into(), "path".into()]];
    for lambda in &labels {
        let data = ml.label(lambda)?;
        for (i, t) in data.paths.iter().enumerate() {
            rows.push(vec![lambda.to_string(), i.to_string(), t.to_string()]);
        }
        cells.push(json!({
            "cell": lambda.to_string(),
            "dim": data.dim(),
            "paths": data.paths.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "representatives": data.reps.iter().map(|m| alg.to_json(m)).collect::<Vec<_>>(),
        }));
    }
    let factorization = ml.check_u_factorization(&tower);
    timer.lap("checks");
    let passed = factorization.is_ok();
    let mut results = json!({ "passed": passed, "cells": cells });
    if let Err(e) = factorization {
        results["witness"] = json!({ "error": e.to_string() });
    }
    let mut p = Produced::new(Some(tower.name()), Some(level), results);
    p.passed = passed;
    p.csv = Some(csv_string(rows));
    Ok(p)
}

fn gram(job: &JobSpec, timer: &mut Timer) -> Result<Produced, Failure> {
    let level = job.require_level()?;
    let tower = job.build_tower(level)?;
    let cell = job.cell.as_deref().ok_or_else(|| JobError::Invalid("gram needs a cell".into()))?;
    let lambda = label_at(&tower, level, cell)?;
    let at = point(job)?;
    timer.lap("build");
    let module = cell_module(&tower, level, &lambda, ReducerKind::Accelerated)?;
    let g = module.gram(&tower)?;
    let det = g.det();
    timer.lap("gram");
    let rows = matrix_rows(&g, at.as_ref())?;
    let results = json!({
        "cell": lambda.to_string(),
        "paths": module.paths().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "gram": rows,
        "determinant": scalar_text(&det, at.as_ref())?,
    });
    let mut p = Produced::new(Some(tower.name()), Some(level), results);
    p.csv = Some(labeled_matrix_csv(module.paths(), &rows));
    Ok(p)
}

const DEFAULT_EMIT: &[&str] = &["paths", "transition", "gammas"];

fn seminormal(job: &JobSpec, timer: &mut Timer) -> Result<Produced, Failure> {
    let level = job.require_level()?;
    let tower = job.build_tower(level)?;
    let labels = selected_labels(&tower, level, job.cell.as_deref())?;
    let at = point(job)?;
    let emit: Vec<&str> = if job.emit.is_empty() { DEFAULT_EMIT.to_vec() } else { job.emit.iter().map(String::as_str).collect() };
    timer.lap("build");
    let sn = Seminormal::new(&tower, level)?;
    timer.lap("seminormal");
    let mut cells = Vec::new();
    for lambda in &labels {
        let b = sn.cells().iter().position(|c| c.label() == lambda).expect("every label has a cell");
        let cell = &sn.cells()[b];
        let mut out = Map::new();
        out.insert("cell".into(), json!(lambda.to_string()));
        for target in &emit {
            let v = match *target {
                "paths" => json!(cell.paths().iter().map(|t| t.to_string()).collect::<Vec<_>>()),
                "transition" => json!(matrix_rows(cell.transition(), at.as_ref())?),
                "gammas" => json!(cell.gammas().iter().map(|g| scalar_text(g, at.as_ref())).collect::<Result<Vec<_>, _>>()?),
                "jm" => json!((1..=level)
                    .map(|k| matrix_rows(sn.jm_rep(k).block(b), at.as_ref()))
                    .collect::<Result<Vec<_>, _>>()?),
                "kappa" => json!(cell
                    .paths()
                    .iter()
                    .map(|t| sn.family().sequence(t).iter().map(|c| scalar_text(c, at.as_ref())).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?),
                _ => continue,
            };
            out.insert((*target).into(), v);
        }
        cells.push(Value::Object(out));
    }
    let mut results = json!({ "cells": cells });
    let mut passed = true;
    if emit.contains(&"checks") {
        let report = Seminormal::report(&tower, level);
        timer.lap("checks");
        passed = report.passed();
        results["checks"] = serde_json::to_value(&report).expect("report serializes");
    }
    results["passed"] = json!(passed);
    let mut p = Produced::new(Some(tower.name()), Some(level), results);
    p.passed = passed;
    if let ([lambda], [target]) = (labels.as_slice(), emit.as_slice()) {
        let cell = sn.cell(lambda).expect("label has a cell");
        p.csv = match *target {
            "transition" => Some(labeled_matrix_csv(cell.paths(), &matrix_rows(cell.transition(), at.as_ref())?)),
            "gammas" => {
                let mut rows = vec![vec!["path".to_string(), "gamma".to_string()]];
                for (t, g) in cell.paths().iter().zip(cell.gammas()) {
                    rows.push(vec![t.to_string(), scalar_text(g, at.as_ref())?]);
                }
                Some(csv_string(rows))
            }
            _ => None,
        };
    }
    Ok(p)
}

fn skew(job: &JobSpec, timer: &mut Timer) -> Result<Produced, Failure> {
    let name = job.tower_name()?;
    let nu = parse_partition(job.nu.as_deref().ok_or_else(|| JobError::Invalid("skew needs nu".into()))?)?;
    let lambda = parse_partition(job.lambda.as_deref().ok_or_else(|| JobError::Invalid("skew needs lambda".into()))?)?;
    let (r, s) = match (job.r, job.s) {
        (Some(r), Some(s)) => (r, s),
        (None, None) if name.is_perm() => (nu.size(), lambda.size()),
        _ => return Err(JobError::Invalid("diagram towers need both r and s".into()).into()),
    };
    if s > r {
        return Err(JobError::Invalid(format!("s = {s} exceeds r = {r}")).into());
    }
    let tower = job.build_tower(r)?;
    label_at(&tower, r, &nu.to_string())?;
    label_at(&tower, s, &lambda.to_string())?;
    timer.lap("build");
    let module = SkewModule::new(&tower, &nu, r, &lambda, s)?;
    timer.lap("skew");
    let jm = JmFamily::new(&tower, r - s)?;
    let mults = skew_multiplicities(&tower, &jm, &nu, r, &lambda, s)?;
    timer.lap("multiplicities");
    let table = MultiplicityTable {
        family: CoefficientFamily::Cell,
        tower: tower.name(),
        entries: mults
            .into_iter()
            .map(|(mu, n)| MultiplicityEntry { lambda: lambda.clone(), mu, nu: nu.clone(), value: n as u64 })
            .collect(),
    };
    let results = json!({
        "nu": nu.to_string(),
        "lambda": lambda.to_string(),
        "r": r,
        "s": s,
        "dim": module.dim(),
        "maximal_path": module.maximal_path().to_string(),
        "paths": module.paths().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "multiplicities": table,
    });
    let mut p = Produced::new(Some(tower.name()), Some(r), results);
    p.csv = Some(table.to_csv());
    Ok(p)
}

fn multiplicities(job: &JobSpec, timer: &mut Timer) -> Result<Produced, Failure> {
    let name = job.tower_name()?;
    if !name.is_perm() {
        return Err(JobError::Invalid("multiplicity tables need a tower labelled by partitions of r".into()).into());
    }
    let level = job.require_level()?;
    let tower = job.build_tower(level)?;
    let family = match job.family.as_deref().unwrap_or("a") {
        "a" => CoefficientFamily::Cell,
        "A" => CoefficientFamily::Permutation,
        f => return Err(JobError::Invalid(format!("multiplicities family must be `a` or `A`, not `{f}`")).into()),
    };
    timer.lap("build");
    let jm = JmFamily::new(&tower, level)?;
    let table = match family {
        CoefficientFamily::Cell => lr_coefficients(&tower, &jm, level)?,
        _ => {
            let mut entries = Vec::new();
            for r in 0..=level {
                for nu in partitions_of(r) {
                    for s in 0..=r {
                        for lambda in partitions_of(s) {
                            for mu in partitions_of(r - s) {
                                let value = permutation_multiplicity(&tower, &jm, &nu, r, &lambda, s, &mu)? as u64;
                                entries.push(MultiplicityEntry { lambda: lambda.clone(), mu, nu: nu.clone(), value });
                            }
                        }
                    }
                }
            }
            MultiplicityTable { family, tower: tower.name(), entries }
        }
    };
    timer.lap("multiplicities");
    let mut disagreements = Vec::new();
    for e in &table.entries {
        let expected = match family {
            CoefficientFamily::Cell => littlewood_richardson(&e.lambda, &e.mu, &e.nu)?,
            _ => skew_kostka(&e.nu, &e.lambda, &e.mu)?,
        };
        if expected != e.value {
            disagreements.push(json!({ "entry": e, "oracle": expected }));
        }
    }
    timer.lap("oracle");
    let passed = disagreements.is_empty();
    let mut p = Produced::new(
        Some(tower.name()),
        Some(level),
        json!({ "passed": passed, "table": table, "oracle_disagreements": disagreements }),
    );
    p.passed = passed;
    p.csv = Some(table.to_csv());
    Ok(p)
}

fn kronecker_job(job: &JobSpec, timer: &mut Timer) -> Result<Produced, Failure> {
    let r = job.r.ok_or_else(|| JobError::Invalid("kronecker needs r".into()))?;
    if !job.allow_large && r > KRONECKER_CAP {
        return Err(JobError::TooLarge { tower: "partition".into(), level: r, cap: KRONECKER_CAP }.into());
    }
    let family = match job.family.as_deref().unwrap_or("p") {
        "p" => CoefficientFamily::PartitionCell,
        "P" => CoefficientFamily::PartitionPermutation,
        f => return Err(JobError::Invalid(format!("kronecker family must be `p` or `P`, not `{f}`")).into()),
    };
    let triples = match job.sample {
        Some(count) => {
            if job.lambda.is_some() || job.mu.is_some() || job.nu.is_some() {
                return Err(JobError::Invalid("sample draws its own triples".into()).into());
            }
            sample_kronecker_triples(r, 1, count, job.seed)
        }
        None => {
            let get = |f: &Option<String>, n: &str| -> Result<Partition, Failure> {
                Ok(parse_partition(f.as_deref().ok_or_else(|| JobError::Invalid(format!("kronecker needs {n}")))?)?)
            };
            vec![(get(&job.lambda, "lambda")?, get(&job.mu, "mu")?, get(&job.nu, "nu")?)]
        }
    };
    for (lambda, mu, nu) in &triples {
        if lambda.size() + mu.size() > r || nu.size() > r {
            return Err(JobError::Invalid(format!("need |λ| + |μ| ≤ r and |ν| ≤ r for r = {r}: {lambda}, {mu}, {nu}")).into());
        }
    }
    let pk = PartitionKronecker::new(r);
    timer.lap("build");
    let mut entries = Vec::new();
    let mut oracle_values = Vec::new();
    for (lambda, mu, nu) in &triples {
        let value = match family {
            CoefficientFamily::PartitionCell => pk.cell(lambda, mu, nu)?,
            _ => pk.permutation(lambda, mu, nu)?,
        };
        entries.push(MultiplicityEntry { lambda: lambda.clone(), mu: mu.clone(), nu: nu.clone(), value });
    }
    timer.lap("engine");
    let mut passed = true;
    for e in &entries {
        let g = stable_kronecker(&e.lambda, &e.mu, &e.nu)?;
        passed &= match family {
            CoefficientFamily::PartitionCell => g == e.value,
            _ => e.value >= g,
        };
        oracle_values.push(g);
    }
    timer.lap("oracle");
    let table = MultiplicityTable { family, tower: pk.tower().name(), entries };
    let mut p = Produced::new(
        Some(pk.tower().name()),
        Some(r),
        json!({ "passed": passed, "r": r, "n": (2 * r).max(1), "table": table, "oracle": oracle_values }),
    );
    p.passed = passed;
    p.csv = Some(table.to_csv());
    if job.sample.is_none() {
        p.text = Some(table.entries[0].value.to_string());
    }
    Ok(p)
}

fn oracle(job: &JobSpec, timer: &mut Timer) -> Result<Produced, Failure> {
    let get = |f: &Option<String>, n: &str| -> Result<Partition, Failure> {
        Ok(parse_partition(f.as_deref().ok_or_else(|| JobError::Invalid(format!("oracle needs {n}")))?)?)
    };
    let family = job.family.as_deref().ok_or_else(|| JobError::Invalid("oracle needs a family".into()))?;
    let (value, args) = match family {
        "character" => {
            let (lambda, rho) = (get(&job.lambda, "lambda")?, get(&job.mu, "rho")?);
            if lambda.size() != rho.size() {
                return Err(JobError::Invalid(format!("|{lambda}| ≠ |{rho}|")).into());
            }
            (mn_character(&lambda, &rho).to_string(), json!({ "lambda": lambda.to_string(), "rho": rho.to_string() }))
        }
        "kronecker" => {
            let (a, b, c) = (get(&job.lambda, "alpha")?, get(&job.mu, "beta")?, get(&job.nu, "gamma")?);
            let args = json!({ "alpha": a.to_string(), "beta": b.to_string(), "gamma": c.to_string() });
            (kronecker(&a, &b, &c)?.to_string(), args)
        }
        "stable" | "lr" | "kostka" => {
            let (lambda, mu) = (get(&job.lambda, "lambda")?, get(&job.mu, "mu")?);
            let nu = get(&job.nu, "nu")?;
            let args = json!({ "lambda": lambda.to_string(), "mu": mu.to_string(), "nu": nu.to_string() });
            let v = match family {
                "stable" => stable_kronecker(&lambda, &mu, &nu)?,
                "lr" => littlewood_richardson(&lambda, &mu, &nu)?,
                _ => skew_kostka(&nu, &lambda, &mu)?,
            };
            (v.to_string(), args)
        }
        f => return Err(JobError::Invalid(format!("unknown oracle family `{f}`")).into()),
    };
    timer.lap("oracle");
    let mut p = Produced::new(None, None, json!({ "family": family, "arguments": args, "value": value }));
    p.csv = Some(csv_string(vec![vec!["family".into(), "value".into()], vec![family.into(), value.clone()]]));
    p.text = Some(value);
    Ok(p)
}

