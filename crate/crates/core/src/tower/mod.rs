//! The provider interface, the lazily materialized tower, and the axiom checkers.

mod provider;

pub mod checks;
pub mod report;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub use provider::{JmKind, JmSource, ReducerHint, TowerProvider};

use crate::algebra::{BasisId, Element, LevelAlgebra, ProductRule, SparseVec};
use crate::arith::{Param, Scalar};
use crate::combinatorics::{standard_paths, BranchingGraph, PathTableau, Partition};
use crate::murphy::{CellModule, MurphyError, MurphyLevel, ReducerKind};

struct LevelRule {
    provider: Arc<dyn TowerProvider>,
    level: usize,
}

impl ProductRule for LevelRule {
    fn product(&self, a: &BasisId, b: &BasisId) -> Vec<(BasisId, Scalar)> {
        self.provider.product(self.level, a, b)
    }
}

type EdgeKey = (usize, Partition, Partition);
type CellKey = (usize, Partition, ReducerKind);

/// A provider together with lazily built level algebras and cached cell data.
pub struct Tower {
    provider: Arc<dyn TowerProvider>,
    graph: BranchingGraph,
    levels: Vec<OnceLock<Arc<LevelAlgebra>>>,
    inclusions: Vec<OnceLock<Vec<u32>>>,
    generators: Vec<OnceLock<Vec<Element>>>,
    cells: Mutex<HashMap<(usize, Partition), Element>>,
    factors: Mutex<HashMap<EdgeKey, (Element, Element)>>,
    murphy: Vec<OnceLock<Arc<MurphyLevel>>>,
    cell_modules: Mutex<HashMap<CellKey, Arc<CellModule>>>,
}

impl Tower {
    pub fn new(provider: Arc<dyn TowerProvider>, max_level: usize) -> Self {
        let labels: Vec<Vec<Partition>> = (0..=max_level).map(|r| provider.labels(r)).collect();
        let edges: Vec<Vec<(Partition, Partition)>> =
            (0..=max_level).map(|r| if r == 0 { Vec::new() } else { provider.edges(r) }).collect();
        let graph = BranchingGraph::new(provider.order(), labels, edges);
        Tower {
            graph,
            levels: (0..=max_level).map(|_| OnceLock::new()).collect(),
            inclusions: (0..=max_level).map(|_| OnceLock::new()).collect(),
            generators: (0..=max_level).map(|_| OnceLock::new()).collect(),
            cells: Mutex::new(HashMap::new()),
            factors: Mutex::new(HashMap::new()),
            murphy: (0..=max_level).map(|_| OnceLock::new()).collect(),
            cell_modules: Mutex::new(HashMap::new()),
            provider,
        }
    }

    pub fn provider(&self) -> &Arc<dyn TowerProvider> {
        &self.provider
    }

    pub fn name(&self) -> String {
        self.provider.name()
    }

    pub fn param(&self) -> Option<Param> {
        self.provider.param()
    }

    pub fn graph(&self) -> &BranchingGraph {
        &self.graph
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn algebra(&self, r: usize) -> Arc<LevelAlgebra> {
        assert!(r <= self.max_level(), "level {r} beyond the materialized tower");
        self.levels[r]
            .get_or_init(|| {
                let p = self.provider.clone();
                let one = p.one(r);
                let pi = p.clone();
                Arc::new(LevelAlgebra::new(
                    r,
                    p.basis(r),
                    &one,
                    move |b| pi.involution(r, b),
                    Box::new(LevelRule { provider: p, level: r }),
                ))
            })
            .clone()
    }

    fn inclusion_map(&self, r: usize) -> &[u32] {
        self.inclusions[r].get_or_init(|| {
            let lower = self.algebra(r - 1);
            let upper = self.algebra(r);
            lower
                .basis()
                .iter()
                .map(|b| {
                    let img = self.provider.include(r, b);
                    upper.index_of(&img).unwrap_or_else(|| panic!("inclusion of {b} leaves level {r}"))
                })
                .collect()
        })
    }

    /// The image of `a` under the inclusions into level `target`.
    pub fn embed(&self, a: &Element, target: usize) -> Element {
        assert!(a.level() <= target, "cannot embed downwards");
        let mut cur = a.clone();
        for r in a.level() + 1..=target {
            let map = self.inclusion_map(r);
            let v: SparseVec = cur.terms().iter().map(|(i, c)| (map[*i as usize], c.clone())).collect();
            cur = Element::from_vec(r, v);
        }
        cur
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.algebra(a.level()).mul(a, b)
    }

    /// Product of elements possibly living at different levels, computed at the highest one.
    pub fn mul_mixed(&self, factors: &[&Element]) -> Element {
        let top = factors.iter().map(|f| f.level()).max().expect("at least one factor");
        let alg = self.algebra(top);
        let mut acc = alg.one();
        for f in factors {
            acc = alg.mul(&acc, &self.embed(f, top));
        }
        acc
    }

    pub fn involve(&self, a: &Element) -> Element {
        self.algebra(a.level()).involve(a)
    }

    pub fn one(&self, r: usize) -> Element {
        self.algebra(r).one()
    }

    pub fn generators(&self, r: usize) -> &[Element] {
        self.generators[r].get_or_init(|| self.provider.generators(self, r))
    }

    pub fn cell_generator(&self, r: usize, lambda: &Partition) -> Element {
        let key = (r, lambda.clone());
        if let Some(c) = self.cells.lock().expect("cell cache poisoned").get(&key) {
            return c.clone();
        }
        let c = self.provider.cell_generator(self, r, lambda);
        self.cells.lock().expect("cell cache poisoned").insert(key, c.clone());
        c
    }

    /// `(d, u)` for the edge `mu → lambda` into level `r`.
    pub fn branching_factors(&self, r: usize, mu: &Partition, lambda: &Partition) -> (Element, Element) {
        let key = (r, mu.clone(), lambda.clone());
        if let Some(f) = self.factors.lock().expect("factor cache poisoned").get(&key) {
            return f.clone();
        }
        let f = self.provider.branching_factors(self, r, mu, lambda);
        self.factors.lock().expect("factor cache poisoned").insert(key, f.clone());
        f
    }

    /// `d_t = d_{t(r-1)→t(r)} ⋯ d_{t(s)→t(s+1)}` in the level of the endpoint.
    pub fn d_path(&self, t: &PathTableau) -> Element {
        let r = t.end_level();
        let alg = self.algebra(r);
        let mut acc = alg.one();
        for k in (t.start + 1..=r).rev() {
            let (d, _) = self.branching_factors(k, t.at(k - 1), t.at(k));
            acc = alg.mul(&acc, &self.embed(&d, r));
        }
        acc
    }

    /// `u*_t = u*_{t(r-1)→t(r)} ⋯ u*_{t(s)→t(s+1)}` in the level of the endpoint.
    pub fn u_star_path(&self, t: &PathTableau) -> Element {
        let r = t.end_level();
        let alg = self.algebra(r);
        let mut acc = alg.one();
        for k in (t.start + 1..=r).rev() {
            let (_, u) = self.branching_factors(k, t.at(k - 1), t.at(k));
            acc = alg.mul(&acc, &self.embed(&self.involve(&u), r));
        }
        acc
    }

    pub fn standard_paths(&self, r: usize, lambda: &Partition) -> Vec<PathTableau> {
        standard_paths(&self.graph, r, lambda)
    }

    /// Applies the flip of level `r` to an element of level `r`.
    pub fn flip(&self, a: &Element) -> Option<Element> {
        let r = a.level();
        let alg = self.algebra(r);
        let mut v = SparseVec::new();
        for (i, c) in a.terms() {
            let img = self.provider.flip(r, alg.basis_id(*i))?;
            v.insert(alg.index_of(&img)?, c.clone());
        }
        Some(Element::from_vec(r, v))
    }

    /// `f_r(f_{r-s}(b))` for `b` at level `r - s`, landing in level `r`.
    pub fn shifted(&self, b: &Element, r: usize) -> Option<Element> {
        let inner = self.flip(b)?;
        self.flip(&self.embed(&inner, r))
    }

    pub fn basis_element(&self, r: usize, b: &BasisId) -> Element {
        self.algebra(r).basis_element(b)
    }

    pub(crate) fn cached_murphy_level(&self, r: usize, build: impl FnOnce() -> MurphyLevel) -> Arc<MurphyLevel> {
        self.murphy[r].get_or_init(|| Arc::new(build())).clone()
    }

    pub(crate) fn cached_cell_module(
        &self,
        r: usize,
        lambda: &Partition,
        kind: ReducerKind,
        build: impl FnOnce() -> Result<CellModule, MurphyError>,
    ) -> Result<Arc<CellModule>, MurphyError> {
        let key = (r, lambda.clone(), kind);
        if let Some(m) = self.cell_modules.lock().expect("cell module cache poisoned").get(&key) {
            return Ok(m.clone());
        }
        let m = Arc::new(build()?);
        self.cell_modules.lock().expect("cell module cache poisoned").insert(key, m.clone());
        Ok(m)
    }
}
