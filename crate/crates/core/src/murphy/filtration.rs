use std::cmp::Ordering;

use serde::Serialize;

use crate::algebra::{Element, MatrixF};
use crate::combinatorics::{dominance_cmp, PathOrder, Partition, PathTableau};
use crate::tower::Tower;

use super::{cell_module, MurphyError, ReducerKind};

/// One subquotient `M_j / M_{j-1}` of the restriction of a cell module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationStep {
    pub label: Partition,
    pub dim: usize,
    /// `M_j` is stable under the generators of `A_{r-1}`.
    pub stable: bool,
    /// The subquotient action agrees entrywise with `Δ_{r-1}(μ_j)` under `m_t ↦ m_{t[0,r-1]}`.
    pub exact: bool,
}

/// Restriction filtration of `Δ_r(λ)` along the in-neighbours `μ_1 ⊳ μ_2 ⊳ ⋯` of `λ`.
pub fn check_filtration(tower: &Tower, r: usize, lambda: &Partition) -> Result<Vec<FiltrationStep>, MurphyError> {
    if r == 0 {
        return Err(MurphyError::Unsupported("level 0 has no restriction".into()));
    }
    let g = tower.graph();
    let module = cell_module(tower, r, lambda, ReducerKind::Accelerated)?;
    let mut mus = g.in_edges(r, lambda);
    mus.sort_by(|a, b| match g.cmp_labels(a, b) {
        Some(Ordering::Greater) => Ordering::Less,
        Some(Ordering::Less) => Ordering::Greater,
        _ => Ordering::Equal,
    });
    for w in mus.windows(2) {
        if g.cmp_labels(&w[0], &w[1]) != Some(Ordering::Greater) {
            return Err(MurphyError::Unsupported(format!("in-neighbours {} and {} are not comparable", w[0], w[1])));
        }
    }
    let gens: Vec<Element> = tower.generators(r - 1).iter().map(|x| tower.embed(x, r)).collect();
    let actions: Vec<MatrixF> = gens.iter().map(|x| module.act(tower, x)).collect::<Result<_, _>>()?;
    let rank: Vec<usize> = module
        .paths()
        .iter()
        .map(|t| mus.iter().position(|m| m == t.at(r - 1)).expect("penultimate step is an in-neighbour"))
        .collect();

    let mut steps = Vec::new();
    for (j, mu) in mus.iter().enumerate() {
        let inside: Vec<usize> = (0..module.dim()).filter(|&t| rank[t] <= j).collect();
        let stable = actions
            .iter()
            .all(|m| inside.iter().all(|&t| (0..module.dim()).all(|v| rank[v] <= j || m.get(t, v).is_zero())));
        let layer: Vec<usize> = (0..module.dim()).filter(|&t| rank[t] == j).collect();
        let lower = cell_module(tower, r - 1, mu, ReducerKind::Accelerated)?;
        let target: Vec<usize> = layer
            .iter()
            .map(|&t| {
                let head = module.paths()[t].segment(0, r - 1);
                lower.paths().iter().position(|p| p == &head).expect("restricted path")
            })
            .collect();
        let mut exact = true;
        for (x, m) in tower.generators(r - 1).iter().zip(&actions) {
            let low = lower.act(tower, x)?;
            for (a, &t) in layer.iter().enumerate() {
                for (b, &v) in layer.iter().enumerate() {
                    if m.get(t, v) != low.get(target[a], target[b]) {
                        exact = false;
                    }
                }
            }
        }
        steps.push(FiltrationStep { label: mu.clone(), dim: layer.len(), stable, exact });
    }
    Ok(steps)
}

/// A coefficient of `m_t a` that violates a support rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportViolation {
    pub from: PathTableau,
    pub to: PathTableau,
}

fn dominates_or_equal(tower: &Tower, a: &PathTableau, b: &PathTableau) -> bool {
    matches!(dominance_cmp(tower.graph(), a, b), Ok(PathOrder::Greater | PathOrder::Equal))
}

/// For `a ∈ A_s`: `m_t a` involves `m_{s∘t[s,r]}` with the coefficients of `m_{t[0,s]} a` in
/// `Δ_s(t(s))`, plus terms `m_z` with `z[s,r] ⊳ t[s,r]` and `z(s) ⊳ t(s)`.
pub fn check_restriction_support(
    tower: &Tower,
    r: usize,
    nu: &Partition,
    a: &Element,
) -> Result<Vec<SupportViolation>, MurphyError> {
    let s = a.level();
    let g = tower.graph();
    let module = cell_module(tower, r, nu, ReducerKind::Accelerated)?;
    let action = module.act(tower, &tower.embed(a, r))?;
    let mut out = Vec::new();
    for (ti, t) in module.paths().iter().enumerate() {
        let lambda = t.at(s);
        let lower = cell_module(tower, s, lambda, ReducerKind::Accelerated)?;
        let head = t.segment(0, s);
        let tail = t.segment(s, r);
        let low_row = lower.coordinates(&tower.mul(&lower.representatives()[lower_index(&lower, &head)], a))?;
        for (zi, z) in module.paths().iter().enumerate() {
            let c = action.get(ti, zi);
            let ztail = z.segment(s, r);
            let ok = if ztail == tail {
                let k = lower_index(&lower, &z.segment(0, s));
                c == &low_row[k]
            } else {
                c.is_zero()
                    || (dominance_cmp(g, &ztail, &tail) == Ok(PathOrder::Greater)
                        && g.cmp_labels(z.at(s), lambda) == Some(Ordering::Greater))
            };
            if !ok {
                out.push(SupportViolation { from: t.clone(), to: z.clone() });
            }
        }
    }
    Ok(out)
}

fn lower_index(lower: &super::CellModule, head: &PathTableau) -> usize {
    lower.paths().iter().position(|p| p == head).expect("restricted path")
}

/// For `x` commuting with `A_s`: `m_t x` only involves `m_w` with `w[0,s] ⊵ t[0,s]`.
pub fn check_commutant_support(
    tower: &Tower,
    nu: &Partition,
    s: usize,
    x: &Element,
) -> Result<Vec<SupportViolation>, MurphyError> {
    let r = x.level();
    let module = cell_module(tower, r, nu, ReducerKind::Accelerated)?;
    let action = module.act(tower, x)?;
    let mut out = Vec::new();
    for (ti, t) in module.paths().iter().enumerate() {
        let head = t.segment(0, s);
        for (wi, w) in module.paths().iter().enumerate() {
            if !action.get(ti, wi).is_zero() && !dominates_or_equal(tower, &w.segment(0, s), &head) {
                out.push(SupportViolation { from: t.clone(), to: w.clone() });
            }
        }
    }
    Ok(out)
}
