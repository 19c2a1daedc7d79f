//! Murphy cellular bases `m_st = d_s* c_λ d_t`, cell modules, Gram matrices and restriction filtrations.

mod cell;
mod filtration;
mod reducer;

use std::sync::{Arc, OnceLock};

pub use cell::CellModule;
pub use filtration::{check_commutant_support, check_filtration, check_restriction_support, FiltrationStep, SupportViolation};
pub use reducer::{Reducer, ReducerKind};

use crate::algebra::{sparse_rank, Element, SparseVec};
use crate::combinatorics::{sort_revlex_descending, Partition, PathTableau};
use crate::tower::Tower;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MurphyError {
    #[error("{label} is not a label at level {level}")]
    UnknownLabel { level: usize, label: String },
    #[error("Murphy representatives of {label} at level {level} have rank {got}, expected {expected}")]
    RankDeficient { level: usize, label: String, expected: usize, got: usize },
    #[error("element lies outside the cell module of {label} at level {level}")]
    OutsideCell { level: usize, label: String },
    #[error("c d_t differs from the product of u-factors for path {path}")]
    Compatibility { path: String },
    #[error("{0}")]
    Unsupported(String),
}

/// Murphy data of one label: paths in revlex-descending order, `d_t`, and `m_t = c_λ d_t`.
pub struct LabelData {
    pub label: Partition,
    pub paths: Vec<PathTableau>,
    pub d: Vec<Element>,
    pub reps: Vec<Element>,
    cellular: OnceLock<Vec<Element>>,
}

impl LabelData {
    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn path_index(&self, t: &PathTableau) -> Option<usize> {
        self.paths.iter().position(|p| p == t)
    }
}

/// Murphy data of every label of one level.
pub struct MurphyLevel {
    level: usize,
    labels: Vec<LabelData>,
}

impl MurphyLevel {
    pub fn new(tower: &Tower, r: usize) -> Self {
        let labels = tower
            .graph()
            .labels(r)
            .iter()
            .map(|lambda| {
                let mut paths = tower.standard_paths(r, lambda);
                sort_revlex_descending(tower.graph(), &mut paths);
                let c = tower.cell_generator(r, lambda);
                let d: Vec<Element> = paths.iter().map(|t| tower.d_path(t)).collect();
                let reps = d.iter().map(|dt| tower.mul(&c, dt)).collect();
                LabelData { label: lambda.clone(), paths, d, reps, cellular: OnceLock::new() }
            })
            .collect();
        MurphyLevel { level: r, labels }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn labels(&self) -> &[LabelData] {
        &self.labels
    }

    pub fn label(&self, lambda: &Partition) -> Result<&LabelData, MurphyError> {
        self.labels
            .iter()
            .find(|l| &l.label == lambda)
            .ok_or_else(|| MurphyError::UnknownLabel { level: self.level, label: lambda.to_string() })
    }

    /// `m^λ_{st}` for all `s, t`, stored row-major in `s`.
    pub fn cellular_elements(&self, tower: &Tower, lambda: &Partition) -> Result<&[Element], MurphyError> {
        let data = self.label(lambda)?;
        Ok(data.cellular.get_or_init(|| {
            let mut out = Vec::with_capacity(data.dim() * data.dim());
            for ds in &data.d {
                let ds_star = tower.involve(ds);
                for rep in &data.reps {
                    out.push(tower.mul(&ds_star, rep));
                }
            }
            out
        }))
    }

    /// Rank of the whole Murphy cellular basis; equals the dimension when it is a basis.
    pub fn cellular_rank(&self, tower: &Tower) -> usize {
        let mut rows: Vec<SparseVec> = Vec::new();
        for l in &self.labels {
            let elems = self.cellular_elements(tower, &l.label).expect("own label");
            rows.extend(elems.iter().map(|e| e.terms().clone()));
        }
        sparse_rank(&rows)
    }

    /// Verifies `c_λ d_t = u*_t` for every path.
    pub fn check_u_factorization(&self, tower: &Tower) -> Result<(), MurphyError> {
        for l in &self.labels {
            for (t, rep) in l.paths.iter().zip(&l.reps) {
                if &tower.u_star_path(t) != rep {
                    return Err(MurphyError::Compatibility { path: t.to_string() });
                }
            }
        }
        Ok(())
    }
}

/// The Murphy data of level `r`, cached on the tower.
pub fn murphy_level(tower: &Tower, r: usize) -> Arc<MurphyLevel> {
    tower.cached_murphy_level(r, || MurphyLevel::new(tower, r))
}

/// The cell module of `lambda` at level `r`, cached on the tower.
pub fn cell_module(tower: &Tower, r: usize, lambda: &Partition, kind: ReducerKind) -> Result<Arc<CellModule>, MurphyError> {
    tower.cached_cell_module(r, lambda, kind, || CellModule::new(tower, r, lambda, kind))
}
