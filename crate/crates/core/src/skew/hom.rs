use crate::algebra::{sparse_nullspace, sparse_rank, MatrixF, SparseVec};
use crate::arith::Scalar;
use crate::combinatorics::Partition;
use crate::murphy::{cell_module, ReducerKind};
use crate::seminormal::{JmFamily, SeminormalError};
use crate::tower::Tower;

use super::{shift, RightModule, SkewError};

/// Equations `X_g P = P Y_g` for `P` of shape `dim X × dim Y`, unknown `P[i,j]` at `i·dim Y + j`.
fn intertwiner_rows(xs: &[MatrixF], ys: &[MatrixF]) -> (Vec<SparseVec>, usize) {
    let (n, m) = match (xs.first(), ys.first()) {
        (Some(x), Some(y)) => (x.nrows(), y.nrows()),
        _ => return (Vec::new(), 0),
    };
    let var = |i: usize, j: usize| (i * m + j) as u32;
    let mut rows = Vec::new();
    for (x, y) in xs.iter().zip(ys) {
        for i in 0..n {
            for j in 0..m {
                let mut row = SparseVec::new();
                for k in 0..n {
                    let c = x.get(i, k);
                    if !c.is_zero() {
                        crate::algebra::add_entry(&mut row, var(k, j), c);
                    }
                }
                for k in 0..m {
                    let c = y.get(k, j);
                    if !c.is_zero() {
                        crate::algebra::add_entry(&mut row, var(i, k), &-c.clone());
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    (rows, n * m)
}

/// `dim Hom(X, Y)` for right modules given by matching lists of generator matrices.
pub fn hom_dimension(xs: &[MatrixF], ys: &[MatrixF], dim_x: usize, dim_y: usize) -> usize {
    if xs.is_empty() {
        return dim_x * dim_y;
    }
    let (rows, n) = intertwiner_rows(xs, ys);
    n - sparse_rank(&rows)
}

/// A basis of `Hom(X, Y)`, each intertwiner as a `dim X × dim Y` matrix.
pub fn intertwiners(xs: &[MatrixF], ys: &[MatrixF]) -> Vec<MatrixF> {
    let (rows, n) = intertwiner_rows(xs, ys);
    let m = ys.first().map_or(0, MatrixF::nrows);
    sparse_nullspace(&rows, n)
        .into_iter()
        .map(|v| {
            let mut p = MatrixF::zeros(n / m.max(1), m);
            for (k, c) in v {
                p.set(k as usize / m, k as usize % m, c);
            }
            p
        })
        .collect()
}

/// Whether two modules over the same algebra are isomorphic: an intertwiner with nonzero determinant
/// among small integer combinations of a basis of `Hom`.
pub fn isomorphic(tower: &Tower, a: &dyn RightModule, b: &dyn RightModule) -> Result<bool, SkewError> {
    if a.dim() != b.dim() || a.level() != b.level() {
        return Ok(false);
    }
    if a.dim() == 0 {
        return Ok(true);
    }
    let (xs, ys) = (a.generator_actions(tower)?, b.generator_actions(tower)?);
    let basis = if xs.is_empty() { vec![MatrixF::identity(a.dim())] } else { intertwiners(&xs, &ys) };
    for base in 1..=8i64 {
        let mut p = MatrixF::zeros(a.dim(), b.dim());
        let mut w = Scalar::one();
        for q in &basis {
            p = p.add(&q.scale(&w));
            w = &w * &Scalar::int(base);
        }
        if !p.det().is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `M ≅ ⊕_μ Δ(μ)^{n_μ}` over the fraction field: `n_μ = rank(z_μ) / dim Δ(μ)` with
/// `z_μ = Σ F_t` over paths to `μ`, the `F_t` interpolated from the action of `L_1, …, L_k`.
pub fn decompose(tower: &Tower, jm: &JmFamily, m: &dyn RightModule) -> Result<Vec<(Partition, usize)>, SkewError> {
    let k = m.level();
    if jm.max_level() < k {
        return Err(SkewError::Unsupported(format!("Jucys–Murphy family stops below level {k}")));
    }
    let n = m.dim();
    let root = tower.graph().labels(0)[0].clone();
    let mut frontier: Vec<(Partition, MatrixF)> = vec![(root, MatrixF::identity(n))];
    for j in 1..=k {
        let l = m.act(tower, jm.element(j))?;
        let mut next = Vec::new();
        for (mu, f) in &frontier {
            let children = tower.graph().out_edges(j - 1, mu);
            let kappas: Vec<Scalar> = children.iter().map(|c| jm.kappa(j, mu, c)).collect();
            for (i, child) in children.iter().enumerate() {
                let mut g = f.clone();
                for (o, c) in kappas.iter().enumerate() {
                    if o == i {
                        continue;
                    }
                    let d = &kappas[i] - c;
                    if d.is_zero() {
                        return Err(SeminormalError::Separation {
                            level: j,
                            first: child.to_string(),
                            second: children[o].to_string(),
                        }
                        .into());
                    }
                    g = g.mul(&l.sub(&MatrixF::identity(n).scale(c))).scale(&d.inv());
                }
                if !g.is_zero() {
                    next.push((child.clone(), g));
                }
            }
        }
        frontier = next;
    }
    let mut out = Vec::new();
    let mut accounted = 0;
    for mu in tower.graph().labels(k) {
        let mut z = MatrixF::zeros(n, n);
        for (label, f) in &frontier {
            if label == mu {
                z = z.add(f);
            }
        }
        let rank = z.rank();
        let dim = tower.standard_paths(k, mu).len();
        if rank % dim != 0 {
            return Err(SkewError::NonIntegral { label: mu.to_string(), rank, dim });
        }
        accounted += rank;
        out.push((mu.clone(), rank / dim));
    }
    if accounted != n {
        return Err(SkewError::NonIntegral { label: "total".into(), rank: accounted, dim: n });
    }
    Ok(out)
}

/// `dim Hom(Δ(μ), M)` over the fraction field.
pub fn hom_multiplicity(tower: &Tower, jm: &JmFamily, m: &dyn RightModule, mu: &Partition) -> Result<usize, SkewError> {
    Ok(decompose(tower, jm, m)?.into_iter().find(|(l, _)| l == mu).map_or(0, |(_, n)| n))
}

/// Both sides of the adjunction for `M = Δ_{r−s}(μ)`, each by an intertwiner solve:
/// `dim Hom_{A_s ⊗ A_{r−s}}(Δ_s(λ) ⊗ M, Res Δ_r(ν))` and `dim Hom_{A_{r−s}}(M, Δ(ν∖λ))`.
pub fn adjunction_dimensions(
    tower: &Tower,
    nu: &Partition,
    r: usize,
    lambda: &Partition,
    s: usize,
    mu: &Partition,
) -> Result<(usize, usize), SkewError> {
    let k = r - s;
    let delta_lambda = cell_module(tower, s, lambda, ReducerKind::Accelerated)?;
    let m = cell_module(tower, k, mu, ReducerKind::Accelerated)?;
    let delta_nu = cell_module(tower, r, nu, ReducerKind::Accelerated)?;
    let (dl, dm) = (delta_lambda.dim(), m.dim());
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for a in tower.generators(s) {
        xs.push(delta_lambda.act(tower, a)?.kron(&MatrixF::identity(dm)));
        ys.push(delta_nu.act(tower, &tower.embed(a, r))?);
    }
    for b in tower.generators(k) {
        xs.push(MatrixF::identity(dl).kron(&m.act(tower, b)?));
        ys.push(delta_nu.act(tower, &shift(tower, b, k, r)?)?);
    }
    let left = hom_dimension(&xs, &ys, dl * dm, delta_nu.dim());
    let skew = super::SkewModule::new(tower, nu, r, lambda, s)?;
    let right = hom_dimension(&m.generator_actions(tower)?, &skew.generator_actions(tower)?, dm, skew.dim());
    Ok((left, right))
}
