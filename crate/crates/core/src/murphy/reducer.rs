use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::algebra::{add_entry, Element, LevelAlgebra, SparseVec, SubspaceBasis};
use crate::arith::Scalar;
use crate::combinatorics::Partition;
use crate::providers::{diagram, young, PermTower};
use crate::tower::{ReducerHint, Tower};

use super::{murphy_level, MurphyError};

/// How `A^{⊳λ}` is represented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReducerKind {
    /// A semi-echelon basis of the span of `m^μ_st` for `μ ⊳ λ`.
    Generic,
    /// The provider's structural shortcut, falling back to generic when there is none.
    Accelerated,
}

enum Inner {
    Generic(SubspaceBasis),
    /// Pairing `y ↦ (⟨{t^λ} y, e_u⟩)_u` with the standard polytabloids; valid on `c_λ A`.
    Symmetric { rows_of_reading: Vec<u8>, polytabloids: Vec<HashMap<Vec<u8>, i64>> },
    /// Propagating-number filtration with the symmetric-group ideal on rank-`p` diagrams.
    Diagram { p: usize, ideal: SubspaceBasis, sp: Arc<LevelAlgebra> },
}

/// Canonical reduction modulo `A^{⊳λ}` at one level.
pub struct Reducer {
    alg: Arc<LevelAlgebra>,
    inner: Inner,
}

fn generic_ideal(tower: &Tower, r: usize, lambda: &Partition) -> Result<SubspaceBasis, MurphyError> {
    let ml = murphy_level(tower, r);
    ml.label(lambda)?;
    let mut sb = SubspaceBasis::new(false);
    for l in ml.labels() {
        if tower.graph().cmp_labels(&l.label, lambda) == Some(Ordering::Greater) {
            for e in ml.cellular_elements(tower, &l.label)? {
                sb.insert(e.terms());
            }
        }
    }
    Ok(sb)
}

/// Row index of each entry `1..=n` in a tableau given by its rows.
fn row_of_entries(rows: &[Vec<usize>], n: usize) -> Vec<u8> {
    let mut out = vec![0u8; n];
    for (i, row) in rows.iter().enumerate() {
        for &e in row {
            out[e - 1] = i as u8;
        }
    }
    out
}

/// Rows of the standard tableau recorded by a path of partitions.
pub(crate) fn tableau_rows(steps: &[Partition]) -> Vec<Vec<usize>> {
    let shape = steps.last().expect("nonempty path");
    let mut rows = vec![Vec::new(); shape.len()];
    for (k, w) in steps.windows(2).enumerate() {
        let row = (0..w[1].len()).find(|&j| w[1].row(j) != w[0].row(j)).expect("one box added");
        rows[row].push(k + 1);
    }
    rows
}

fn polytabloid(rows: &[Vec<usize>], n: usize) -> HashMap<Vec<u8>, i64> {
    let base = row_of_entries(rows, n);
    let width = rows.first().map_or(0, |r| r.len());
    let columns: Vec<Vec<usize>> =
        (0..width).map(|j| rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect()).collect();
    let mut out = HashMap::new();
    let mut acc: Vec<(Vec<u8>, i64)> = vec![(base, 1)];
    for col in &columns {
        let mut next = Vec::new();
        for perm in young::all_perms(col.len()) {
            let sign = young::sign(&perm);
            for (tab, s) in &acc {
                let mut t = tab.clone();
                for (a, &p) in perm.iter().enumerate() {
                    t[col[p as usize - 1] - 1] = tab[col[a] - 1];
                }
                next.push((t, s * sign));
            }
        }
        acc = next;
    }
    for (t, s) in acc {
        *out.entry(t).or_insert(0) += s;
    }
    out
}

impl Reducer {
    pub fn new(tower: &Tower, r: usize, lambda: &Partition, kind: ReducerKind) -> Result<Self, MurphyError> {
        let alg = tower.algebra(r);
        let hint = match kind {
            ReducerKind::Generic => ReducerHint::Generic,
            ReducerKind::Accelerated => tower.provider().reducer_hint(r),
        };
        let inner = match hint {
            ReducerHint::Generic => Inner::Generic(generic_ideal(tower, r, lambda)?),
            ReducerHint::SymmetricGroup => {
                let reading: Vec<Vec<usize>> = {
                    let mut next = 1;
                    lambda
                        .parts()
                        .iter()
                        .map(|&len| {
                            let row: Vec<usize> = (next..next + len).collect();
                            next += len;
                            row
                        })
                        .collect()
                };
                let paths = tower.standard_paths(r, lambda);
                let polytabloids = paths.iter().map(|t| polytabloid(&tableau_rows(&t.steps), r)).collect();
                Inner::Symmetric { rows_of_reading: row_of_entries(&reading, r), polytabloids }
            }
            ReducerHint::DiagramRank => {
                let p = lambda.size();
                let sym = Tower::new(Arc::new(PermTower::symmetric()), p);
                let ideal = generic_ideal(&sym, p, lambda)?;
                Inner::Diagram { p, ideal, sp: sym.algebra(p) }
            }
        };
        Ok(Reducer { alg, inner })
    }

    /// A canonical vector that vanishes exactly when `x ∈ A^{⊳λ}`, linear in `x`.
    ///
    /// The accelerated forms are only valid for `x` in `A^{⊵λ}` (symmetric groups: in `c_λ A`).
    pub fn reduce(&self, x: &Element) -> SparseVec {
        match &self.inner {
            Inner::Generic(sb) => sb.reduce(x.terms()),
            Inner::Symmetric { rows_of_reading, polytabloids } => {
                let mut out = SparseVec::new();
                let mut tabloids: Vec<(Vec<u8>, &Scalar)> = Vec::with_capacity(x.len());
                for (i, c) in x.terms() {
                    let w = self.alg.basis_id(*i).code();
                    let mut tab = vec![0u8; w.len()];
                    for (j, &wj) in w.iter().enumerate() {
                        tab[wj as usize - 1] = rows_of_reading[j];
                    }
                    tabloids.push((tab, c));
                }
                for (u, poly) in polytabloids.iter().enumerate() {
                    let mut acc = Scalar::zero();
                    for (tab, c) in &tabloids {
                        if let Some(&s) = poly.get(tab) {
                            acc += &(*c * &Scalar::int(s));
                        }
                    }
                    add_entry(&mut out, u as u32, &acc);
                }
                out
            }
            Inner::Diagram { p, ideal, sp } => {
                let mut out = SparseVec::new();
                let mut groups: BTreeMap<Vec<u8>, SparseVec> = BTreeMap::new();
                for (i, c) in x.terms() {
                    let d = self.alg.basis_id(*i).code();
                    let rank = diagram::propagating_number(d);
                    match rank.cmp(p) {
                        Ordering::Less => {}
                        Ordering::Greater => add_entry(&mut out, *i, c),
                        Ordering::Equal => {
                            let (d0, sigma) = diagram::split_propagating(d);
                            let j = sp.index_of(&crate::algebra::BasisId::perm(&sigma)).expect("permutation of rank");
                            add_entry(groups.entry(d0).or_default(), j, c);
                        }
                    }
                }
                for (d0, v) in groups {
                    for (j, c) in ideal.reduce(&v) {
                        let sigma = sp.basis_id(j).code();
                        let d = diagram::join_propagating(&d0, sigma);
                        let k = self.alg.index_of(&crate::algebra::BasisId::diagram(&d)).expect("diagram of the level");
                        add_entry(&mut out, k, &c);
                    }
                }
                out
            }
        }
    }

    pub fn is_accelerated(&self) -> bool {
        !matches!(self.inner, Inner::Generic(_))
    }
}
