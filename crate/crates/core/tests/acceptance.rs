use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use serde_json::{json, Value};

use tower_core::arith::{Param, Rational, Scalar};
use tower_core::combinatorics::{dominance_cmp, maximal_paths, partitions_of, PathOrder, PathTableau};
use tower_core::murphy::{cell_module, check_filtration, ReducerKind};
use tower_core::oracle::{littlewood_richardson, stable_kronecker};
use tower_core::providers::{DiagramTower, PermTower};
use tower_core::seminormal::{JmFamily, Seminormal};
use tower_core::skew::{
    adjunction_dimensions, isomorphic, kronecker_triples, lr_coefficients, realization_dimensions,
    sample_kronecker_triples, IdempotentRealization, PartitionKronecker, RightModule, SkewModule,
};
use tower_core::tower::checks::check_levels;
use tower_core::tower::report::AxiomReport;
use tower_core::tower::Tower;

const KRONECKER_SEED: u64 = 20_240_601;
const KRONECKER_SAMPLE: usize = 24;

type Outcome = Result<String, String>;

fn hecke(r: usize) -> Tower {
    Tower::new(Arc::new(PermTower::hecke()), r)
}

fn symmetric(r: usize) -> Tower {
    Tower::new(Arc::new(PermTower::symmetric()), r)
}

/// Every shipped tower at its capped level; partition levels are internal.
fn capped() -> Vec<(Tower, usize)> {
    vec![
        (hecke(5), 5),
        (symmetric(5), 5),
        (Tower::new(Arc::new(DiagramTower::temperley_lieb()), 4), 4),
        (Tower::new(Arc::new(DiagramTower::brauer()), 4), 4),
        (Tower::new(Arc::new(DiagramTower::partition()), 6), 6),
    ]
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn failures(report: &AxiomReport) -> String {
    report.failures().map(|f| format!("{}@{}: {}", f.axiom, f.level, f.witness.clone().unwrap_or(Value::Null))).collect::<Vec<_>>().join("; ")
}

/// Seminormal reports for every tower and every level up to its cap, shared by several criteria.
struct SeminormalReports {
    entries: Vec<(String, usize, AxiomReport)>,
}

impl SeminormalReports {
    fn compute(towers: &[(Tower, usize)]) -> Self {
        let mut entries = Vec::new();
        for (t, cap) in towers {
            for r in 1..=*cap {
                entries.push((t.name(), r, Seminormal::report(t, r)));
            }
        }
        SeminormalReports { entries }
    }

    /// Every result named `axiom` at levels `≤ max_level`, counted and required to pass.
    fn require(&self, axiom: &str, max_level: usize) -> Outcome {
        let mut count = 0;
        for (name, r, report) in &self.entries {
            if *r > max_level {
                continue;
            }
            for e in report.entries.iter().filter(|e| e.axiom == axiom) {
                count += 1;
                ensure(e.passed(), || format!("{name} level {r}: {}", failures(report)))?;
            }
            if report.find(axiom, *r).is_none() && !report.passed() {
                return Err(format!("{name} level {r} stopped early: {}", failures(report)));
            }
        }
        ensure(count > 0, || format!("no `{axiom}` results"))?;
        Ok(format!("{count} `{axiom}` results"))
    }
}

fn axiom_suite(towers: &[(Tower, usize)]) -> Outcome {
    let mut total = 0;
    for (t, cap) in towers {
        let report = check_levels(t, *cap);
        ensure(report.passed(), || format!("{}: {}", t.name(), failures(&report)))?;
        total += report.entries.len();
    }
    Ok(format!("{total} axiom checks on {} towers", towers.len()))
}

fn unitriangularity(towers: &[(Tower, usize)], reports: &SeminormalReports) -> Outcome {
    reports.require("transition-unitriangular", usize::MAX)?;
    let mut cells = 0;
    for (t, cap) in towers {
        for r in 1..=*cap {
            let sn = Seminormal::new(t, r).map_err(|e| format!("{} level {r}: {e}", t.name()))?;
            for cell in sn.cells() {
                let (paths, m) = (cell.paths(), cell.transition());
                for s in 0..paths.len() {
                    for u in 0..paths.len() {
                        let v = m.get(s, u);
                        let ok = if s == u {
                            v.is_one()
                        } else {
                            v.is_zero() || dominance_cmp(t.graph(), &paths[s], &paths[u]) == Ok(PathOrder::Greater)
                        };
                        ensure(ok, || format!("{} {} entry ({}, {}) = {v}", t.name(), cell.label(), paths[s], paths[u]))?;
                    }
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells unitriangular"))
}

fn content_of_added_box(t: &PathTableau, k: usize) -> i64 {
    let (a, b) = (t.at(k - 1), t.at(k));
    let row = (0..b.len()).find(|&i| a.row(i) != b.row(i)).expect("a box was added");
    b.row(row) as i64 - 1 - row as i64
}

fn jm_spectra(reports: &SeminormalReports) -> Outcome {
    let t = hecke(5);
    let jm = JmFamily::new(&t, 5).map_err(|e| e.to_string())?;
    let q = Scalar::var(Param::Q);
    let mut paths = 0;
    for r in 1..=5 {
        let spec = jm.spectrum(&t, r).map_err(|e| e.to_string())?;
        for (path, seq) in &spec.sequences {
            for k in 1..=r {
                let expected = q.pow(content_of_added_box(path, k));
                ensure(seq[k - 1] == expected, || format!("{path} at {k}: {} ≠ {expected}", seq[k - 1]))?;
            }
            paths += 1;
        }
    }
    reports.require("jm-spectrum", usize::MAX)?;
    let tri = reports.require("jm-triangular", usize::MAX)?;
    Ok(format!("{paths} Hecke paths at q^content; {tri}"))
}

fn gz_laws(reports: &SeminormalReports) -> Outcome {
    reports.require("gz-idempotents", usize::MAX)
}

fn matrix_units(reports: &SeminormalReports) -> Outcome {
    reports.require("matrix-units", 4)
}

fn filtration(towers: &[(Tower, usize)]) -> Outcome {
    let mut cells = 0;
    for (t, cap) in towers {
        for r in 1..=(*cap).min(4) {
            for lambda in t.graph().labels(r).to_vec() {
                let steps = check_filtration(t, r, &lambda).map_err(|e| format!("{} {lambda}: {e}", t.name()))?;
                for s in &steps {
                    ensure(s.stable && s.exact, || format!("{} level {r} {lambda}: {s:?}", t.name()))?;
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells filtered"))
}

fn gram_determinants() -> Outcome {
    let t = hecke(4);
    let one = Rational::from_integer(1.into());
    let mut cells = 0;
    for r in 1..=4 {
        for lambda in partitions_of(r) {
            let m = cell_module(&t, r, &lambda, ReducerKind::Accelerated).map_err(|e| e.to_string())?;
            let phi = m.gram(&t).map_err(|e| e.to_string())?.det();
            let at_one = phi.evaluate_at(&one).map_err(|e| format!("{lambda}: {e}"))?;
            ensure(at_one != Rational::from_integer(0.into()), || format!("φ_{lambda}(1) = 0"))?;
            cells += 1;
        }
    }
    let m = cell_module(&t, 2, &partitions_of(2)[0], ReducerKind::Accelerated).map_err(|e| e.to_string())?;
    let phi = m.gram(&t).map_err(|e| e.to_string())?.det();
    let expected = &Scalar::one() + &Scalar::var(Param::Q);
    ensure(phi == expected, || format!("φ_(2) = {phi}"))?;
    Ok(format!("{cells} cells with φ(1) ≠ 0; φ_(2) = {phi}"))
}

/// Skew shapes need flips at levels `r` and `r − s`; partition algebras have them at whole levels only.
fn skew_dimensions(towers: &[(Tower, usize)]) -> Outcome {
    let mut shapes = 0;
    let mut ties = 0;
    for (t, cap) in towers {
        let step = if t.name() == "partition" { 2 } else { 1 };
        for r in (0..=*cap).step_by(step) {
            for nu in t.graph().labels(r).to_vec() {
                for s in (0..=r).step_by(step) {
                    for lambda in t.graph().labels(s).to_vec() {
                        let m = SkewModule::new(t, &nu, r, &lambda, s).map_err(|e| format!("{} {nu}∖{lambda}: {e}", t.name()))?;
                        ensure(m.dim() == m.paths().len(), || format!("{} {nu}∖{lambda}", t.name()))?;
                        for other in maximal_paths(t.graph(), &lambda, s).iter().skip(1) {
                            let alt = SkewModule::with_maximal_path(t, &nu, r, other.clone()).map_err(|e| e.to_string())?;
                            ensure(isomorphic(t, &m, &alt).map_err(|e| e.to_string())?, || format!("{nu}∖{lambda} via {other}"))?;
                            ties += 1;
                        }
                        shapes += 1;
                    }
                }
            }
        }
    }
    let mut realizations = 0;
    for t in [symmetric(4), hecke(4)] {
        let sn = Seminormal::new(&t, 4).map_err(|e| e.to_string())?;
        for nu in t.graph().labels(4).to_vec() {
            for s in 1..=3 {
                for lambda in t.graph().labels(s).to_vec() {
                    let skew = SkewModule::new(&t, &nu, 4, &lambda, s).map_err(|e| e.to_string())?;
                    let dims = realization_dimensions(&t, &sn, &nu, &lambda, s).map_err(|e| e.to_string())?;
                    ensure(dims.iter().all(|(_, d)| *d == skew.dim()), || format!("{nu}∖{lambda}: {dims:?}"))?;
                    for (u, _) in dims.iter().take(2) {
                        let real = IdempotentRealization::new(&t, &sn, &nu, u).map_err(|e| e.to_string())?;
                        ensure(isomorphic(&t, &skew, &real).map_err(|e| e.to_string())?, || format!("{nu}∖{lambda} via {u}"))?;
                        realizations += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{shapes} shapes, {ties} maximal-path ties, {realizations} realizations compared"))
}

fn lr_cross_check() -> Outcome {
    let t = symmetric(6);
    let jm = JmFamily::new(&t, 6).map_err(|e| e.to_string())?;
    let table = lr_coefficients(&t, &jm, 6).map_err(|e| e.to_string())?;
    for e in &table.entries {
        let c = littlewood_richardson(&e.lambda, &e.mu, &e.nu).map_err(|e| e.to_string())?;
        ensure(c == e.value, || format!("{}∖{}, {}: a = {}, c = {c}", e.nu, e.lambda, e.mu, e.value))?;
    }
    Ok(format!("{} triples with |ν| ≤ 6", table.entries.len()))
}

fn kronecker_cross_check() -> Outcome {
    let mut count = 0;
    let mut check = |pk: &PartitionKronecker, triples: Vec<_>| -> Result<(), String> {
        for (lambda, mu, nu) in triples {
            let p = pk.cell(&lambda, &mu, &nu).map_err(|e| e.to_string())?;
            let g = stable_kronecker(&lambda, &mu, &nu).map_err(|e| e.to_string())?;
            ensure(p == g, || format!("r = {}: p({lambda}, {mu}, {nu}) = {p}, oracle {g}", pk.r()))?;
            count += 1;
        }
        Ok(())
    };
    for r in 0..=3 {
        check(&PartitionKronecker::new(r), kronecker_triples(r, 0))?;
    }
    let sample = sample_kronecker_triples(4, 1, KRONECKER_SAMPLE, KRONECKER_SEED);
    ensure(sample.len() >= 20, || "sample too small".into())?;
    check(&PartitionKronecker::new(4), sample)?;
    Ok(format!("{count} triples (all r ≤ 3, {KRONECKER_SAMPLE} sampled at r = 4, seed {KRONECKER_SEED})"))
}

fn adjunction() -> Outcome {
    let t = symmetric(4);
    let mut count = 0;
    for r in 2..=4 {
        for s in [1, 2].into_iter().filter(|&s| s < r) {
            for nu in partitions_of(r) {
                for lambda in partitions_of(s) {
                    for mu in partitions_of(r - s) {
                        let (left, right) = adjunction_dimensions(&t, &nu, r, &lambda, s, &mu).map_err(|e| e.to_string())?;
                        ensure(left == right, || format!("{nu} {lambda} {mu}: {left} ≠ {right}"))?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} triples"))
}

/// A report assembled from fresh towers: axioms, seminormal cells, and a seeded Kronecker sample.
fn deterministic_report() -> String {
    let t = hecke(4);
    let sn = Seminormal::new(&t, 4).expect("Hecke level 4 is semisimple");
    let cells: Vec<Value> = t.graph().labels(4).iter().map(|l| sn.cell_json(l).expect("cell")).collect();
    let pk = PartitionKronecker::new(3);
    let sample: Vec<Value> = sample_kronecker_triples(3, 1, 8, KRONECKER_SEED)
        .into_iter()
        .map(|(l, m, n)| json!([l, m, n, pk.cell(&l, &m, &n).expect("in range")]))
        .collect();
    let report = json!({ "axioms": check_levels(&t, 4), "cells": cells, "kronecker": sample });
    serde_json::to_string_pretty(&report).expect("report serializes")
}

fn determinism() -> Outcome {
    let first = deterministic_report();
    let second = deterministic_report();
    let threaded = std::thread::spawn(deterministic_report).join().map_err(|_| "thread panicked".to_string())?;
    ensure(first == second && first == threaded, || "reports differ between runs".into())?;
    Ok(format!("{} identical bytes across three runs", first.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let towers = capped();
    let reports = SeminormalReports::compute(&towers);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("axiom suite", Box::new(|| axiom_suite(&towers))),
        ("dominance unitriangularity", Box::new(|| unitriangularity(&towers, &reports))),
        ("GZ idempotent laws", Box::new(|| gz_laws(&reports))),
        ("JM spectra", Box::new(|| jm_spectra(&reports))),
        ("matrix units", Box::new(|| matrix_units(&reports))),
        ("restriction filtration", Box::new(|| filtration(&towers))),
        ("Gram determinants", Box::new(gram_determinants)),
        ("skew dimensions", Box::new(|| skew_dimensions(&towers))),
        ("Littlewood-Richardson oracle", Box::new(lr_cross_check)),
        ("stable Kronecker oracle", Box::new(kronecker_cross_check)),
        ("adjunction", Box::new(adjunction)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
