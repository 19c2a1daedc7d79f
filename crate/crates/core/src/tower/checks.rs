//! Executable checks of the cellular tower axioms, each producing report entries with witnesses.

use serde_json::{json, Value};

use crate::algebra::{Element, MatrixF};
use crate::arith::Scalar;
use crate::combinatorics::{Partition, PathTableau};
use crate::murphy::{cell_module, check_filtration, murphy_level, ReducerKind};

use super::report::{AxiomReport, AxiomResult};
use super::{JmKind, Tower};

fn elem(tower: &Tower, a: &Element) -> Value {
    json!({ "level": a.level(), "element": tower.algebra(a.level()).to_json(a) })
}

fn matrix_json(m: &MatrixF) -> Value {
    Value::Array(
        m.to_rows().iter().map(|row| Value::Array(row.iter().map(|c| Value::String(c.to_string())).collect())).collect(),
    )
}

/// `A_0` is the ground ring.
pub fn check_unit_level(tower: &Tower) -> AxiomResult {
    let alg = tower.algebra(0);
    let w = (alg.dim() != 1 || alg.mul(&alg.one(), &alg.one()) != alg.one()).then(|| json!({ "dimension": alg.dim() }));
    AxiomResult::from_witness("unit-level", 0, w)
}

/// Dimension equals the closed form and the sum of squared path counts.
pub fn check_dimension(tower: &Tower, r: usize) -> AxiomResult {
    let dim = tower.algebra(r).dim();
    let declared = tower.provider().declared_dimension(r);
    let paths: usize = tower.graph().labels(r).iter().map(|l| tower.standard_paths(r, l).len().pow(2)).sum();
    let w = (dim != declared || dim != paths)
        .then(|| json!({ "dimension": dim, "declared": declared, "sum_of_squared_path_counts": paths }));
    AxiomResult::from_witness("dimension", r, w)
}

/// The involution is an anti-automorphism of order two.
pub fn check_involution(tower: &Tower, r: usize) -> AxiomResult {
    let alg = tower.algebra(r);
    for i in 0..alg.dim() as u32 {
        if alg.involution_index(alg.involution_index(i)) != i {
            return AxiomResult::fail("involution", r, json!({ "basis": alg.basis_id(i).to_string() }));
        }
    }
    let gens = tower.generators(r);
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate() {
            if alg.involve(&alg.mul(a, b)) != alg.mul(&alg.involve(b), &alg.involve(a)) {
                return AxiomResult::fail("involution", r, json!({ "generators": [i, j] }));
            }
        }
    }
    AxiomResult::pass("involution", r)
}

/// The inclusion `A_{r-1} → A_r` is a unital algebra map compatible with the involutions.
pub fn check_inclusion(tower: &Tower, r: usize) -> AxiomResult {
    if r == 0 {
        return AxiomResult::pass("inclusion", r);
    }
    let lower = tower.algebra(r - 1);
    if tower.embed(&lower.one(), r) != tower.one(r) {
        return AxiomResult::fail("inclusion", r, json!({ "reason": "not unital" }));
    }
    for i in 0..lower.dim() as u32 {
        let x = Element::basis(r - 1, i);
        if tower.embed(&lower.involve(&x), r) != tower.involve(&tower.embed(&x, r)) {
            return AxiomResult::fail("inclusion", r, json!({ "basis": lower.basis_id(i).to_string() }));
        }
    }
    let gens = tower.generators(r - 1);
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate() {
            if tower.embed(&lower.mul(a, b), r) != tower.mul(&tower.embed(a, r), &tower.embed(b, r)) {
                return AxiomResult::fail("inclusion", r, json!({ "generators": [i, j] }));
            }
        }
    }
    AxiomResult::pass("inclusion", r)
}

/// `c_λ = c_λ*` for every label.
pub fn check_symmetric_generators(tower: &Tower, r: usize) -> AxiomResult {
    for lambda in tower.graph().labels(r) {
        let c = tower.cell_generator(r, lambda);
        if tower.involve(&c) != c {
            return AxiomResult::fail("symmetric-generator", r, json!({ "label": lambda.to_string(), "c": elem(tower, &c) }));
        }
    }
    AxiomResult::pass("symmetric-generator", r)
}

/// Cellularity of the Murphy basis `m_st = d_s* c_λ d_t`, all checked against the generic ideals.
///
/// Produces `cellular-basis` (full rank), `cyclic-cellular` (the `m_t` are independent modulo
/// `A^{⊳λ}`), `cellularity-4a` (the right action on `m_st` only changes `t`, with integral
/// coefficients independent of `s`) and `cellularity-4b` (`m_st* ≡ m_ts`).
pub fn check_cellularity(tower: &Tower, r: usize) -> Vec<AxiomResult> {
    let ml = murphy_level(tower, r);
    let mut out = Vec::new();
    let rank = ml.cellular_rank(tower);
    let dim = tower.algebra(r).dim();
    out.push(AxiomResult::from_witness(
        "cellular-basis",
        r,
        (rank != dim).then(|| json!({ "rank": rank, "dimension": dim })),
    ));

    let mut cyclic = None;
    let mut four_a = None;
    let mut four_b = None;
    'labels: for data in ml.labels() {
        let lambda = &data.label;
        let module = match cell_module(tower, r, lambda, ReducerKind::Generic) {
            Ok(m) => m,
            Err(e) => {
                cyclic.get_or_insert(json!({ "label": lambda.to_string(), "error": e.to_string() }));
                continue;
            }
        };
        let reducer = module.reducer();
        let cellular = ml.cellular_elements(tower, lambda).expect("own label");
        let n = data.dim();
        let stars: Vec<Element> = data.d.iter().map(|d| tower.involve(d)).collect();
        for (gi, a) in tower.generators(r).iter().enumerate() {
            if four_a.is_some() {
                break;
            }
            let act = match module.act(tower, a) {
                Ok(m) => m,
                Err(e) => {
                    four_a = Some(json!({ "label": lambda.to_string(), "generator": gi, "error": e.to_string() }));
                    break;
                }
            };
            if let Some(c) = act.to_rows().iter().flatten().find(|c| !c.is_integral()) {
                four_a = Some(json!({ "label": lambda.to_string(), "generator": gi, "coefficient": c.to_string() }));
                break;
            }
            for t in 0..n {
                let mut y = tower.mul(&data.reps[t], a);
                for v in 0..n {
                    let c = act.get(t, v);
                    if !c.is_zero() {
                        y.add_scaled(&-c.clone(), &data.reps[v]);
                    }
                }
                for (s, ds) in stars.iter().enumerate() {
                    let z = tower.mul(ds, &y);
                    if !reducer.reduce(&z).is_empty() {
                        four_a = Some(json!({
                            "label": lambda.to_string(),
                            "generator": gi,
                            "s": data.paths[s].to_string(),
                            "t": data.paths[t].to_string(),
                            "residual": elem(tower, &z),
                        }));
                        continue 'labels;
                    }
                }
            }
        }
        if four_b.is_none() {
            'b: for s in 0..n {
                for t in 0..n {
                    let diff = tower.involve(&cellular[s * n + t]).sub(&cellular[t * n + s]);
                    if !reducer.reduce(&diff).is_empty() {
                        four_b = Some(json!({
                            "label": lambda.to_string(),
                            "s": data.paths[s].to_string(),
                            "t": data.paths[t].to_string(),
                        }));
                        break 'b;
                    }
                }
            }
        }
    }
    out.push(AxiomResult::from_witness("cyclic-cellular", r, cyclic));
    out.push(AxiomResult::from_witness("cellularity-4a", r, four_a));
    out.push(AxiomResult::from_witness("cellularity-4b", r, four_b));
    out
}

/// `c_λ d_{μ→λ} = u*_{μ→λ} c_μ` exactly, for one edge into level `r`.
pub fn check_compatibility(tower: &Tower, r: usize, mu: &Partition, lambda: &Partition) -> Option<Value> {
    let (d, u) = tower.branching_factors(r, mu, lambda);
    let lhs = tower.mul(&tower.cell_generator(r, lambda), &d);
    let rhs = tower.mul_mixed(&[&tower.involve(&u), &tower.cell_generator(r - 1, mu)]);
    (lhs != rhs).then(|| {
        json!({
            "edge": format!("{mu}→{lambda}"),
            "d": elem(tower, &d),
            "u": elem(tower, &u),
            "lhs": elem(tower, &lhs),
            "rhs": elem(tower, &rhs),
        })
    })
}

pub fn check_compatibility_level(tower: &Tower, r: usize) -> AxiomResult {
    let w = if r == 0 {
        None
    } else {
        tower.graph().edges(r).iter().find_map(|(mu, lambda)| check_compatibility(tower, r, mu, lambda))
    };
    AxiomResult::from_witness("compatibility", r, w)
}

/// `u*_t = u*_{t[s,r]} u*_{t[0,s]}` and `u*_{t[0,s]} = c_{t(s)} d_{t[0,s]}`, exactly.
pub fn check_path_factorization(tower: &Tower, t: &PathTableau, s: usize) -> bool {
    let r = t.end_level();
    let head = t.segment(0, s);
    let tail = t.segment(s, r);
    let head_u = tower.u_star_path(&head);
    let whole = tower.u_star_path(t);
    let split = tower.mul_mixed(&[&tower.u_star_path(&tail), &head_u]);
    let head_c = tower.mul(&tower.cell_generator(s, t.at(s)), &tower.d_path(&head));
    whole == split && head_u == head_c
}

pub fn check_path_factorization_level(tower: &Tower, r: usize) -> AxiomResult {
    for lambda in tower.graph().labels(r) {
        for t in tower.standard_paths(r, lambda) {
            for s in 0..=r {
                if !check_path_factorization(tower, &t, s) {
                    return AxiomResult::fail("path-factorization", r, json!({ "path": t.to_string(), "s": s }));
                }
            }
        }
    }
    AxiomResult::pass("path-factorization", r)
}

/// Split semisimplicity over the fraction field: every Gram determinant is nonzero.
pub fn check_semisimple(tower: &Tower, r: usize) -> AxiomResult {
    for lambda in tower.graph().labels(r) {
        let det = cell_module(tower, r, lambda, ReducerKind::Accelerated).and_then(|m| m.gram(tower)).map(|g| g.det());
        match det {
            Ok(d) if !d.is_zero() => {}
            Ok(_) => return AxiomResult::fail("semisimple", r, json!({ "label": lambda.to_string(), "gram_det": "0" })),
            Err(e) => return AxiomResult::fail("semisimple", r, json!({ "label": lambda.to_string(), "error": e.to_string() })),
        }
    }
    AxiomResult::pass("semisimple", r)
}

/// Restriction coherence through its computable consequence: the Murphy basis of each restricted
/// cell module is filtered by the cell modules of the in-neighbours, in dominance order.
pub fn check_restriction_coherent(tower: &Tower, r: usize) -> AxiomResult {
    if r == 0 {
        return AxiomResult::pass("restriction-coherent", r);
    }
    for lambda in tower.graph().labels(r) {
        match check_filtration(tower, r, lambda) {
            Ok(steps) => {
                if let Some(bad) = steps.iter().find(|s| !(s.stable && s.exact)) {
                    return AxiomResult::fail(
                        "restriction-coherent",
                        r,
                        json!({ "label": lambda.to_string(), "subquotient": bad.label.to_string(), "stable": bad.stable, "exact": bad.exact }),
                    );
                }
            }
            Err(e) => {
                return AxiomResult::fail("restriction-coherent", r, json!({ "label": lambda.to_string(), "error": e.to_string() }))
            }
        }
    }
    AxiomResult::pass("restriction-coherent", r)
}

/// The flip is an involutive automorphism and `f_r(f_{r-s}(A_{r-s}))` commutes with `A_s`.
///
/// Only levels `s` with a flip on `A_{r-s}` are considered.
pub fn check_flip(tower: &Tower, r: usize) -> AxiomResult {
    let p = tower.provider();
    if !p.has_flip(r) {
        return AxiomResult::pass("flip", r);
    }
    let alg = tower.algebra(r);
    for b in alg.basis() {
        let once = p.flip(r, b);
        if once.as_ref().and_then(|x| p.flip(r, x)).as_ref() != Some(b) {
            return AxiomResult::fail("flip", r, json!({ "reason": "not an involution", "basis": b.to_string() }));
        }
    }
    let f = |x: &Element| tower.flip(x).expect("flip defined at this level");
    if f(&alg.one()) != alg.one() {
        return AxiomResult::fail("flip", r, json!({ "reason": "not unital" }));
    }
    let gens = tower.generators(r);
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate() {
            if f(&alg.mul(a, b)) != alg.mul(&f(a), &f(b)) {
                return AxiomResult::fail("flip", r, json!({ "reason": "not multiplicative", "generators": [i, j] }));
            }
        }
    }
    for s in 1..r {
        if !p.has_flip(r - s) {
            continue;
        }
        for (i, b) in tower.generators(r - s).iter().enumerate() {
            let x = tower.shifted(b, r).expect("flip defined at both levels");
            for (j, a) in tower.generators(s).iter().enumerate() {
                if !alg.commutator(&x, &tower.embed(a, r)).is_zero() {
                    return AxiomResult::fail(
                        "flip",
                        r,
                        json!({ "reason": "shifted subalgebra does not commute", "s": s, "shifted_generator": i, "generator": j }),
                    );
                }
            }
        }
    }
    AxiomResult::pass("flip", r)
}

/// Scalar by which the JM sum (additive) or product (multiplicative) of `L_1, …, L_r` acts on each
/// cell module of level `r`. `ls[k]` is `L_k` at level `k`.
pub fn jm_central_scalars(
    tower: &Tower,
    r: usize,
    kind: JmKind,
    ls: &[Element],
) -> Result<Vec<(Partition, Scalar)>, Value> {
    let alg = tower.algebra(r);
    let mut z = match kind {
        JmKind::Additive => alg.zero(),
        JmKind::Multiplicative => alg.one(),
    };
    for l in &ls[1..=r] {
        let l = tower.embed(l, r);
        z = match kind {
            JmKind::Additive => z.add(&l),
            JmKind::Multiplicative => alg.mul(&z, &l),
        };
    }
    let mut out = Vec::new();
    for lambda in tower.graph().labels(r) {
        let module = cell_module(tower, r, lambda, ReducerKind::Accelerated)
            .map_err(|e| json!({ "label": lambda.to_string(), "error": e.to_string() }))?;
        let m = module.act(tower, &z).map_err(|e| json!({ "label": lambda.to_string(), "error": e.to_string() }))?;
        let d = m.get(0, 0).clone();
        if m != MatrixF::identity(module.dim()).scale(&d) {
            return Err(json!({ "label": lambda.to_string(), "reason": "not a scalar", "action": matrix_json(&m) }));
        }
        out.push((lambda.clone(), d));
    }
    Ok(out)
}

/// A Jucys–Murphy family at level `r`: `L_r* = L_r`, `L_r` commutes with `A_{r-1}`, the `L_k`
/// commute pairwise, and their sum or product acts by a scalar on every cell module.
pub fn check_jm_family(tower: &Tower, r: usize, kind: JmKind, ls: &[Element]) -> AxiomResult {
    if r == 0 {
        return AxiomResult::pass("jm-family", 0);
    }
    let alg = tower.algebra(r);
    let lr = &ls[r];
    if tower.involve(lr) != *lr {
        return AxiomResult::fail("jm-family", r, json!({ "reason": "not involution invariant", "L": elem(tower, lr) }));
    }
    for (i, g) in tower.generators(r - 1).iter().enumerate() {
        if !alg.commutator(lr, &tower.embed(g, r)).is_zero() {
            return AxiomResult::fail("jm-family", r, json!({ "reason": "does not commute with A_{r-1}", "generator": i }));
        }
    }
    for k in 1..r {
        if !alg.commutator(lr, &tower.embed(&ls[k], r)).is_zero() {
            return AxiomResult::fail("jm-family", r, json!({ "reason": "JM elements do not commute", "k": k }));
        }
    }
    match jm_central_scalars(tower, r, kind, ls) {
        Ok(_) => AxiomResult::pass("jm-family", r),
        Err(w) => AxiomResult::fail("jm-family", r, w),
    }
}

/// Every structural check at level `r` (the JM family is checked separately, as it may be derived).
pub fn check_level(tower: &Tower, r: usize) -> AxiomReport {
    let mut report = AxiomReport::default();
    if r == 0 {
        report.push(check_unit_level(tower));
    }
    report.push(check_dimension(tower, r));
    report.push(check_involution(tower, r));
    report.push(check_inclusion(tower, r));
    report.push(check_symmetric_generators(tower, r));
    report.extend(check_cellularity(tower, r));
    report.push(check_compatibility_level(tower, r));
    report.push(check_path_factorization_level(tower, r));
    report.push(check_semisimple(tower, r));
    report.push(check_restriction_coherent(tower, r));
    report.push(check_flip(tower, r));
    report
}

pub fn check_levels(tower: &Tower, max: usize) -> AxiomReport {
    let mut report = AxiomReport::default();
    for r in 0..=max {
        report.extend(check_level(tower, r).entries);
    }
    report
}
