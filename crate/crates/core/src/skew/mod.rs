//! Skew cell modules `Δ(ν∖λ)` over `A_{r−s}`, their idempotent realizations, and Hom multiplicities.

mod coefficients;
mod hom;

use std::sync::Arc;

pub use coefficients::{
    kronecker_triples, lr_coefficients, permutation_multiplicity, sample_kronecker_triples, skew_multiplicities,
    CoefficientFamily, MultiplicityEntry, MultiplicityTable, PartitionKronecker,
};
pub use hom::{adjunction_dimensions, decompose, hom_dimension, hom_multiplicity, intertwiners, isomorphic};

use crate::algebra::{Element, MatrixF, SparseVec, SubspaceBasis};
use crate::arith::Scalar;
use crate::combinatorics::{enumerate_paths, maximal_path, Partition, PathTableau, SkewShape};
use crate::murphy::{cell_module, CellModule, MurphyError, ReducerKind};
use crate::seminormal::{Seminormal, SeminormalError};
use crate::tower::Tower;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SkewError {
    #[error(transparent)]
    Murphy(#[from] MurphyError),
    #[error(transparent)]
    Seminormal(#[from] SeminormalError),
    #[error("span for {nu}∖{lambda} is not stable: m_{path} leaves it")]
    Instability { nu: String, lambda: String, path: String },
    #[error("multiplicity of {label}: rank {rank} is not a multiple of {dim}")]
    NonIntegral { label: String, rank: usize, dim: usize },
    #[error("{0}")]
    Unsupported(String),
}

/// A finite-dimensional right module over `A_k` with an action computable for any element.
pub trait RightModule {
    /// Level `k` of the acting algebra.
    fn level(&self) -> usize;
    fn dim(&self) -> usize;
    /// Matrix of `x ∈ A_j`, `j ≤ k` (embedded into `A_k`); row `i` holds the coordinates of `b_i x`.
    fn act(&self, tower: &Tower, x: &Element) -> Result<MatrixF, SkewError>;

    /// Matrices of the generators of `A_k`.
    fn generator_actions(&self, tower: &Tower) -> Result<Vec<MatrixF>, SkewError> {
        tower.generators(self.level()).iter().map(|g| self.act(tower, g)).collect()
    }
}

impl RightModule for CellModule {
    fn level(&self) -> usize {
        CellModule::level(self)
    }

    fn dim(&self) -> usize {
        CellModule::dim(self)
    }

    fn act(&self, tower: &Tower, x: &Element) -> Result<MatrixF, SkewError> {
        Ok(CellModule::act(self, tower, &tower.embed(x, CellModule::level(self)))?)
    }
}

/// `Δ(ν∖λ) = (Δ(ν; t^λ) + Δ(ν; ⊳λ)) / Δ(ν; ⊳λ)` as an `A_{r−s}`-module through the shift `f_r ∘ f_{r−s}`.
pub struct SkewModule {
    nu: Partition,
    lambda: Partition,
    s: usize,
    r: usize,
    t_lambda: PathTableau,
    paths: Vec<PathTableau>,
    indices: Vec<usize>,
    cell: Arc<CellModule>,
}

fn shift(tower: &Tower, x: &Element, k: usize, r: usize) -> Result<Element, SkewError> {
    tower
        .shifted(&tower.embed(x, k), r)
        .ok_or_else(|| SkewError::Unsupported(format!("{} has no flip at levels {k} and {r}", tower.name())))
}

impl SkewModule {
    /// Uses the preferred dominance-maximal path to `λ`.
    pub fn new(tower: &Tower, nu: &Partition, r: usize, lambda: &Partition, s: usize) -> Result<Self, SkewError> {
        let t = maximal_path(tower.graph(), lambda, s)
            .ok_or_else(|| SkewError::Unsupported(format!("{lambda} is not reachable at level {s}")))?;
        Self::with_maximal_path(tower, nu, r, t)
    }

    /// Uses a given dominance-maximal path `t^λ`; verifies stability of both spans under the shifted generators.
    pub fn with_maximal_path(tower: &Tower, nu: &Partition, r: usize, t_lambda: PathTableau) -> Result<Self, SkewError> {
        let s = t_lambda.end_level();
        let lambda = t_lambda.shape().clone();
        if s > r || !tower.graph().contains(r, nu) {
            return Err(SkewError::Unsupported(format!("{nu} at level {r} over {lambda} at level {s}")));
        }
        if !tower.provider().has_flip(r) || !tower.provider().has_flip(r - s) {
            return Err(SkewError::Unsupported(format!("{} has no flip at levels {} and {r}", tower.name(), r - s)));
        }
        let cell = cell_module(tower, r, nu, ReducerKind::Accelerated)?;
        let paths = enumerate_paths(tower.graph(), &SkewShape { inner: lambda.clone(), outer: nu.clone(), s, r });
        let indices: Vec<usize> = paths
            .iter()
            .map(|p| cell.paths().iter().position(|w| w == &t_lambda.concat(p)).expect("skew path extends t^λ"))
            .collect();
        let denominator: Vec<usize> = (0..cell.dim())
            .filter(|&i| tower.graph().cmp_labels(cell.paths()[i].at(s), &lambda) == Some(std::cmp::Ordering::Greater))
            .collect();
        let module = SkewModule { nu: nu.clone(), lambda, s, r, t_lambda, paths, indices, cell };
        module.check_stability(tower, &denominator)?;
        Ok(module)
    }

    fn check_stability(&self, tower: &Tower, denominator: &[usize]) -> Result<(), SkewError> {
        let k = self.r - self.s;
        for g in tower.generators(k) {
            let action = self.cell.act(tower, &shift(tower, g, k, self.r)?)?;
            for (rows, allowed) in [(denominator, denominator.to_vec()), (&self.indices[..], [denominator, &self.indices].concat())] {
                for &i in rows {
                    if (0..self.cell.dim()).any(|j| !action.get(i, j).is_zero() && !allowed.contains(&j)) {
                        return Err(SkewError::Instability {
                            nu: self.nu.to_string(),
                            lambda: self.lambda.to_string(),
                            path: self.cell.paths()[i].to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn levels(&self) -> (usize, usize) {
        (self.s, self.r)
    }

    pub fn maximal_path(&self) -> &PathTableau {
        &self.t_lambda
    }

    /// Basis labels `Std_{s,r}(ν∖λ)`.
    pub fn paths(&self) -> &[PathTableau] {
        &self.paths
    }
}

impl RightModule for SkewModule {
    fn level(&self) -> usize {
        self.r - self.s
    }

    fn dim(&self) -> usize {
        self.paths.len()
    }

    fn act(&self, tower: &Tower, x: &Element) -> Result<MatrixF, SkewError> {
        let full = self.cell.act(tower, &shift(tower, x, self.r - self.s, self.r)?)?;
        Ok(MatrixF::from_rows(
            self.indices.iter().map(|&i| self.indices.iter().map(|&j| full.get(i, j).clone()).collect()).collect(),
        ))
    }
}

/// `Δ^F_r(ν) F_u` for a path `u` from level 0 to level `s`, as an `A_{r−s}`-module.
pub struct IdempotentRealization {
    s: usize,
    r: usize,
    basis: MatrixF,
    cell: Arc<CellModule>,
}

impl IdempotentRealization {
    pub fn new(tower: &Tower, sn: &Seminormal, nu: &Partition, u: &PathTableau) -> Result<Self, SkewError> {
        let r = sn.level();
        let cell = sn.cell(nu).ok_or_else(|| MurphyError::UnknownLabel { level: r, label: nu.to_string() })?;
        let b = sn.cells().iter().position(|c| c.label() == nu).expect("cell exists");
        let f = sn
            .idempotent(u)
            .ok_or_else(|| SkewError::Unsupported(format!("no idempotent for {u}")))?
            .block(b);
        let mut span = SubspaceBasis::new(false);
        let mut rows = Vec::new();
        for i in 0..f.nrows() {
            if span.insert(&f.sparse_row(i)) {
                rows.push(f.row(i).to_vec());
            }
        }
        let basis = if rows.is_empty() { MatrixF::zeros(0, f.ncols()) } else { MatrixF::from_rows(rows) };
        let cell = cell_module(tower, r, cell.label(), ReducerKind::Accelerated)?;
        Ok(IdempotentRealization { s: u.end_level(), r, basis, cell })
    }
}

impl RightModule for IdempotentRealization {
    fn level(&self) -> usize {
        self.r - self.s
    }

    fn dim(&self) -> usize {
        self.basis.nrows()
    }

    fn act(&self, tower: &Tower, x: &Element) -> Result<MatrixF, SkewError> {
        if self.dim() == 0 {
            return Ok(MatrixF::zeros(0, 0));
        }
        let m = self.cell.act(tower, &shift(tower, x, self.r - self.s, self.r)?)?;
        let image = self.basis.mul(&m);
        let rows = (0..image.nrows())
            .map(|i| {
                self.basis
                    .solve_left(image.row(i))
                    .ok_or_else(|| SkewError::Unsupported("Δ F_u is not stable under the commutant".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MatrixF::from_rows(rows))
    }
}

/// The regular right module `A_k`.
pub struct RegularModule {
    level: usize,
    dim: usize,
}

impl RegularModule {
    pub fn new(tower: &Tower, k: usize) -> Self {
        RegularModule { level: k, dim: tower.algebra(k).dim() }
    }
}

impl RightModule for RegularModule {
    fn level(&self) -> usize {
        self.level
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn act(&self, tower: &Tower, x: &Element) -> Result<MatrixF, SkewError> {
        let alg = tower.algebra(self.level);
        let x = tower.embed(x, self.level);
        let rows: Vec<SparseVec> =
            (0..self.dim as u32).map(|i| alg.mul(&Element::basis(self.level, i), &x).into_terms()).collect();
        Ok(MatrixF::from_sparse_rows(&rows, self.dim))
    }
}

/// The right ideal `c A_k` for an element `c ∈ A_k`.
pub struct RightIdeal {
    level: usize,
    basis: Vec<Element>,
    span: SubspaceBasis,
}

impl RightIdeal {
    pub fn new(tower: &Tower, c: &Element) -> Self {
        let k = c.level();
        let alg = tower.algebra(k);
        let mut probe = SubspaceBasis::new(false);
        let mut basis = Vec::new();
        for i in 0..alg.dim() as u32 {
            let v = alg.mul(c, &Element::basis(k, i));
            if probe.insert(v.terms()) {
                basis.push(v);
            }
        }
        let mut span = SubspaceBasis::new(true);
        for v in &basis {
            span.insert(v.terms());
        }
        RightIdeal { level: k, basis, span }
    }
}

impl RightModule for RightIdeal {
    fn level(&self) -> usize {
        self.level
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn act(&self, tower: &Tower, x: &Element) -> Result<MatrixF, SkewError> {
        let x = tower.embed(x, self.level);
        let rows = self
            .basis
            .iter()
            .map(|v| {
                let w = tower.mul(v, &x);
                let coords = self.span.solve(w.terms()).expect("right ideal is closed");
                (0..self.dim()).map(|j| coords.get(&(j as u32)).cloned().unwrap_or_else(Scalar::zero)).collect()
            })
            .collect();
        Ok(if self.basis.is_empty() { MatrixF::zeros(0, 0) } else { MatrixF::from_rows(rows) })
    }
}

/// `dim Δ(ν∖λ)` against `#Std_{s,r}(ν∖λ)`, and the dimension of `Δ^F_r(ν) F_u` for every `u ∈ Std_s(λ)`.
pub fn realization_dimensions(
    tower: &Tower,
    sn: &Seminormal,
    nu: &Partition,
    lambda: &Partition,
    s: usize,
) -> Result<Vec<(PathTableau, usize)>, SkewError> {
    tower
        .standard_paths(s, lambda)
        .into_iter()
        .map(|u| Ok((u.clone(), IdempotentRealization::new(tower, sn, nu, &u)?.dim())))
        .collect()
}
