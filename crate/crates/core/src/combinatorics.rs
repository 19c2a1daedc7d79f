//! Partitions, branching graphs, and the dominance and reverse-lexicographic orders on paths.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombError {
    #[error("paths have different lengths or start levels")]
    LengthMismatch,
    #[error("{1} is not obtained from {0} by adding one box")]
    NotOneBoxAddition(Partition, Partition),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("label {0} not present at level {1}")]
    UnknownLabel(Partition, usize),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<usize>) -> Result<Self, CombError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(CombError::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombError::InvalidPartition("parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    /// Like [`Partition::new`] but panics on invalid input; meant for literals.
    pub fn from_slice(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row length, zero beyond the last part. Rows are 0-indexed.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Rows (0-indexed) where a box may be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.0.len()).filter(|&i| i == 0 || self.row(i) < self.row(i - 1)).collect()
    }

    /// Rows (0-indexed) whose last box may be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.row(i) > self.row(i + 1)).collect()
    }

    pub fn add_box(&self, row: usize) -> Partition {
        let mut p = self.0.clone();
        if row == p.len() {
            p.push(1);
        } else {
            p[row] += 1;
        }
        debug_assert!(p.windows(2).all(|w| w[0] >= w[1]));
        Partition(p)
    }

    pub fn remove_box(&self, row: usize) -> Partition {
        let mut p = self.0.clone();
        p[row] -= 1;
        if p[row] == 0 {
            p.pop();
        }
        Partition(p)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Dominance comparison of partitions of equal size; `None` when incomparable.
    pub fn dominance(&self, other: &Partition) -> Option<Ordering> {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        let (mut ge, mut le) = (true, true);
        for i in 0..n {
            a += self.row(i);
            b += other.row(i);
            ge &= a >= b;
            le &= a <= b;
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// Parses `2,1`, `(2,1)`, `[2,1]`, or an empty string for the empty partition.
    pub fn parse(s: &str) -> Result<Self, CombError> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| CombError::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }

    /// Compact form used on the command line: `2,1`.
    pub fn to_csv(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        write!(f, "({})", self.to_csv())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse lexicographic order, a linear extension of dominance.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Content `j - i` of the box added to `lambda` to obtain `mu`.
pub fn content(lambda: &Partition, mu: &Partition) -> Result<i64, CombError> {
    let err = || CombError::NotOneBoxAddition(lambda.clone(), mu.clone());
    if mu.size() != lambda.size() + 1 {
        return Err(err());
    }
    let row = lambda.addable_rows().into_iter().find(|&i| &lambda.add_box(i) == mu).ok_or_else(err)?;
    Ok(lambda.row(row) as i64 - row as i64)
}

/// The partial order on labels of one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LevelOrder {
    /// Dominance of partitions of a fixed size.
    Dominance,
    /// Smaller partitions lie strictly above larger ones; equal sizes compare by dominance.
    SizeThenDominance,
}

impl LevelOrder {
    /// `Some(Greater)` means `a ⊳ b`.
    pub fn cmp(self, a: &Partition, b: &Partition) -> Option<Ordering> {
        match self {
            LevelOrder::Dominance if a.size() != b.size() => None,
            LevelOrder::Dominance => a.dominance(b),
            LevelOrder::SizeThenDominance => match a.size().cmp(&b.size()) {
                Ordering::Less => Some(Ordering::Greater),
                Ordering::Greater => Some(Ordering::Less),
                Ordering::Equal => a.dominance(b),
            },
        }
    }

    /// A total order refining [`LevelOrder::cmp`]; `Less` means `a` is ranked first (more dominant).
    pub fn rank_cmp(self, a: &Partition, b: &Partition) -> Ordering {
        a.size().cmp(&b.size()).then_with(|| b.parts().cmp(a.parts()))
    }
}

/// Graded, multiplicity-free branching graph with partition labels.
#[derive(Debug, Clone)]
pub struct BranchingGraph {
    pub order: LevelOrder,
    /// Labels per level, sorted by [`LevelOrder::rank_cmp`].
    levels: Vec<Vec<Partition>>,
    /// `edges[r]` holds pairs `(i, j)` for label `i` at level `r - 1` and `j` at level `r`.
    edges: Vec<Vec<(usize, usize)>>,
    index: Vec<BTreeMap<Partition, usize>>,
}

impl BranchingGraph {
    /// Builds a graph from labels and edges; labels are re-sorted by rank.
    pub fn new(order: LevelOrder, levels: Vec<Vec<Partition>>, edges: Vec<Vec<(Partition, Partition)>>) -> Self {
        let mut levels = levels;
        for l in levels.iter_mut() {
            l.sort_by(|a, b| order.rank_cmp(a, b));
            l.dedup();
        }
        let index: Vec<BTreeMap<Partition, usize>> =
            levels.iter().map(|l| l.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()).collect();
        let mut idx_edges = vec![Vec::new()];
        for (r, es) in edges.into_iter().enumerate().skip(1) {
            let mut v: Vec<(usize, usize)> = es.iter().map(|(a, b)| (index[r - 1][a], index[r][b])).collect();
            v.sort();
            v.dedup();
            idx_edges.push(v);
        }
        BranchingGraph { order, levels, edges: idx_edges, index }
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn labels(&self, r: usize) -> &[Partition] {
        &self.levels[r]
    }

    pub fn label_index(&self, r: usize, label: &Partition) -> Option<usize> {
        self.index.get(r)?.get(label).copied()
    }

    pub fn contains(&self, r: usize, label: &Partition) -> bool {
        self.label_index(r, label).is_some()
    }

    pub fn has_edge(&self, r: usize, from: &Partition, to: &Partition) -> bool {
        match (self.label_index(r - 1, from), self.label_index(r, to)) {
            (Some(i), Some(j)) => self.edges[r].binary_search(&(i, j)).is_ok(),
            _ => false,
        }
    }

    /// Labels at level `r - 1` with an edge into `label`, in rank order.
    pub fn in_edges(&self, r: usize, label: &Partition) -> Vec<Partition> {
        let j = match self.label_index(r, label) {
            Some(j) => j,
            None => return Vec::new(),
        };
        self.edges[r].iter().filter(|e| e.1 == j).map(|e| self.levels[r - 1][e.0].clone()).collect()
    }

    /// Labels at level `r + 1` reached from `label`, in rank order.
    pub fn out_edges(&self, r: usize, label: &Partition) -> Vec<Partition> {
        let i = match self.label_index(r, label) {
            Some(i) => i,
            None => return Vec::new(),
        };
        let mut out: Vec<usize> = self.edges[r + 1].iter().filter(|e| e.0 == i).map(|e| e.1).collect();
        out.sort();
        out.into_iter().map(|j| self.levels[r + 1][j].clone()).collect()
    }

    pub fn edges(&self, r: usize) -> Vec<(Partition, Partition)> {
        self.edges[r].iter().map(|&(i, j)| (self.levels[r - 1][i].clone(), self.levels[r][j].clone())).collect()
    }

    pub fn cmp_labels(&self, a: &Partition, b: &Partition) -> Option<Ordering> {
        self.order.cmp(a, b)
    }
}

/// Young's lattice truncated at level `r`.
pub fn young_graph(r: usize) -> BranchingGraph {
    let levels: Vec<Vec<Partition>> = (0..=r).map(partitions_of).collect();
    let mut edges = vec![Vec::new()];
    for k in 1..=r {
        let mut es = Vec::new();
        for lam in &levels[k - 1] {
            for row in lam.addable_rows() {
                es.push((lam.clone(), lam.add_box(row)));
            }
        }
        edges.push(es);
    }
    BranchingGraph::new(LevelOrder::Dominance, levels, edges)
}

/// A directed path `t(s) → t(s+1) → … → t(r)` in a branching graph.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathTableau {
    pub start: usize,
    pub steps: Vec<Partition>,
}

impl PathTableau {
    pub fn end_level(&self) -> usize {
        self.start + self.steps.len() - 1
    }

    pub fn at(&self, level: usize) -> &Partition {
        &self.steps[level - self.start]
    }

    pub fn shape(&self) -> &Partition {
        self.steps.last().expect("nonempty path")
    }

    /// The subpath between levels `a` and `b`.
    pub fn segment(&self, a: usize, b: usize) -> PathTableau {
        PathTableau { start: a, steps: self.steps[a - self.start..=b - self.start].to_vec() }
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn concat(&self, other: &PathTableau) -> PathTableau {
        assert_eq!(self.end_level(), other.start);
        assert_eq!(self.shape(), &other.steps[0]);
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps[1..]);
        PathTableau { start: self.start, steps }
    }
}

impl fmt::Display for PathTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join("→"))
    }
}

impl fmt::Debug for PathTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub inner: Partition,
    pub outer: Partition,
    pub s: usize,
    pub r: usize,
}

impl SkewShape {
    pub fn validate(&self) -> Result<(), CombError> {
        if self.s > self.r {
            return Err(CombError::InvalidPartition(format!("start level {} exceeds end level {}", self.s, self.r)));
        }
        Ok(())
    }
}

/// All paths from `shape.inner` at level `s` to `shape.outer` at level `r`, ordered
/// lexicographically by step rank.
pub fn enumerate_paths(g: &BranchingGraph, shape: &SkewShape) -> Vec<PathTableau> {
    if shape.s > shape.r
        || shape.r > g.max_level()
        || !g.contains(shape.s, &shape.inner)
        || !g.contains(shape.r, &shape.outer)
    {
        return Vec::new();
    }
    // reach[k] = labels at level k from which shape.outer is reachable
    let mut reach = vec![Vec::new(); shape.r + 1];
    reach[shape.r] = vec![shape.outer.clone()];
    for k in (shape.s..shape.r).rev() {
        let mut here = Vec::new();
        for lab in g.labels(k) {
            if g.out_edges(k, lab).iter().any(|m| reach[k + 1].contains(m)) {
                here.push(lab.clone());
            }
        }
        reach[k] = here;
    }
    let mut out = Vec::new();
    let mut cur = vec![shape.inner.clone()];
    fn dfs(g: &BranchingGraph, reach: &[Vec<Partition>], k: usize, r: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if k == r {
            out.push(cur.clone());
            return;
        }
        for next in g.out_edges(k, cur.last().unwrap()) {
            if reach[k + 1].contains(&next) {
                cur.push(next);
                dfs(g, reach, k + 1, r, cur, out);
                cur.pop();
            }
        }
    }
    if reach[shape.s].contains(&shape.inner) {
        dfs(g, &reach, shape.s, shape.r, &mut cur, &mut out);
    }
    out.into_iter().map(|steps| PathTableau { start: shape.s, steps }).collect()
}

/// Standard paths from ∅ to `label` at level `r`.
pub fn standard_paths(g: &BranchingGraph, r: usize, label: &Partition) -> Vec<PathTableau> {
    enumerate_paths(g, &SkewShape { inner: Partition::empty(), outer: label.clone(), s: 0, r })
}

/// Result of comparing two paths under a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PathOrder {
    Greater,
    Equal,
    Less,
    Incomparable,
}

impl PathOrder {
    pub fn symbol(self) -> &'static str {
        match self {
            PathOrder::Greater => "⊳",
            PathOrder::Equal => "=",
            PathOrder::Less => "⊲",
            PathOrder::Incomparable => "incomparable",
        }
    }
}

fn check_lengths(a: &PathTableau, b: &PathTableau) -> Result<(), CombError> {
    if a.start != b.start || a.steps.len() != b.steps.len() {
        return Err(CombError::LengthMismatch);
    }
    Ok(())
}

/// Componentwise comparison of two paths under the level order.
pub fn dominance_cmp(g: &BranchingGraph, a: &PathTableau, b: &PathTableau) -> Result<PathOrder, CombError> {
    check_lengths(a, b)?;
    let (mut ge, mut le) = (true, true);
    for (x, y) in a.steps.iter().zip(&b.steps) {
        match g.cmp_labels(x, y) {
            Some(Ordering::Equal) => {}
            Some(Ordering::Greater) => le = false,
            Some(Ordering::Less) => ge = false,
            None => return Ok(PathOrder::Incomparable),
        }
    }
    Ok(match (ge, le) {
        (true, true) => PathOrder::Equal,
        (true, false) => PathOrder::Greater,
        (false, true) => PathOrder::Less,
        (false, false) => PathOrder::Incomparable,
    })
}

/// Comparison at the last level where the paths differ.
pub fn revlex_cmp(g: &BranchingGraph, a: &PathTableau, b: &PathTableau) -> Result<PathOrder, CombError> {
    check_lengths(a, b)?;
    for (x, y) in a.steps.iter().zip(&b.steps).rev() {
        if x != y {
            return Ok(match g.cmp_labels(x, y) {
                Some(Ordering::Greater) => PathOrder::Greater,
                Some(Ordering::Less) => PathOrder::Less,
                _ => PathOrder::Incomparable,
            });
        }
    }
    Ok(PathOrder::Equal)
}

/// Total order refining [`revlex_cmp`]: compare ranks from the last level backwards.
/// `Less` means `a` is ranked first (larger).
pub fn revlex_rank_cmp(g: &BranchingGraph, a: &PathTableau, b: &PathTableau) -> Ordering {
    for (x, y) in a.steps.iter().zip(&b.steps).rev() {
        let c = g.order.rank_cmp(x, y);
        if c != Ordering::Equal {
            return c;
        }
    }
    Ordering::Equal
}

/// Sorts paths so that revlex-larger paths come first.
pub fn sort_revlex_descending(g: &BranchingGraph, paths: &mut [PathTableau]) {
    paths.sort_by(|a, b| revlex_rank_cmp(g, a, b));
}

/// A dominance-maximal path from ∅ to `label` at level `s`, ties broken by revlex then rank.
pub fn maximal_path(g: &BranchingGraph, label: &Partition, s: usize) -> Option<PathTableau> {
    let paths = standard_paths(g, s, label);
    let maximal: Vec<&PathTableau> = paths
        .iter()
        .filter(|p| !paths.iter().any(|q| dominance_cmp(g, q, p) == Ok(PathOrder::Greater)))
        .collect();
    maximal.into_iter().min_by(|a, b| revlex_rank_cmp(g, a, b)).cloned()
}

/// All dominance-maximal paths from ∅ to `label`, best first.
pub fn maximal_paths(g: &BranchingGraph, label: &Partition, s: usize) -> Vec<PathTableau> {
    let paths = standard_paths(g, s, label);
    let mut maximal: Vec<PathTableau> = paths
        .iter()
        .filter(|p| !paths.iter().any(|q| dominance_cmp(g, q, p) == Ok(PathOrder::Greater)))
        .cloned()
        .collect();
    maximal.sort_by(|a, b| revlex_rank_cmp(g, a, b));
    maximal
}
