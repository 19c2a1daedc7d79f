//! Temperley–Lieb, Brauer and partition algebras as towers obtained by iterated basic constructions.
//!
//! Each level `i ≥ 2` contains an essential idempotent multiple `E_{i-1}` with
//! `A_i / A_i E_{i-1} A_i` a symmetric group algebra (trivial for Temperley–Lieb). Labels of level `i`
//! are the labels of that quotient together with the labels of level `i - 2`.

use crate::algebra::{BasisId, Element};
use crate::arith::{Param, Scalar};
use crate::combinatorics::{partitions_of, LevelOrder, Partition};
use crate::tower::{JmKind, JmSource, ReducerHint, Tower, TowerProvider};

use super::diagram::{self, DiagramFamily};
use super::young;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramKind {
    TemperleyLieb,
    Brauer,
    /// Internal level `2j` is `P_j`, level `2j + 1` is `P_{j+1/2}`.
    Partition,
}

/// The loop parameter: an indeterminate or an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopValue {
    Symbolic(Param),
    Integer(i64),
}

#[derive(Debug, Clone, Copy)]
pub struct DiagramTower {
    kind: DiagramKind,
    value: LoopValue,
}

fn catalan(n: usize) -> usize {
    let mut c = 1usize;
    for i in 0..n {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

fn double_factorial_odd(r: usize) -> usize {
    (1..r).map(|i| 2 * i + 1).product()
}

fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

fn one_row(n: usize) -> Partition {
    if n == 0 {
        Partition::empty()
    } else {
        Partition::from_slice(&[n])
    }
}

impl DiagramTower {
    pub fn new(kind: DiagramKind, value: LoopValue) -> Self {
        DiagramTower { kind, value }
    }

    pub fn temperley_lieb() -> Self {
        Self::new(DiagramKind::TemperleyLieb, LoopValue::Symbolic(Param::Delta))
    }

    pub fn brauer() -> Self {
        Self::new(DiagramKind::Brauer, LoopValue::Symbolic(Param::Delta))
    }

    pub fn partition() -> Self {
        Self::new(DiagramKind::Partition, LoopValue::Symbolic(Param::N))
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn loop_value(&self) -> Scalar {
        match self.value {
            LoopValue::Symbolic(p) => Scalar::var(p),
            LoopValue::Integer(n) => Scalar::int(n),
        }
    }

    /// Strand count of internal level `i`.
    pub fn strands(&self, i: usize) -> usize {
        match self.kind {
            DiagramKind::Partition => i.div_ceil(2),
            _ => i,
        }
    }

    fn family(&self, i: usize) -> DiagramFamily {
        match self.kind {
            DiagramKind::TemperleyLieb => DiagramFamily::TemperleyLieb,
            DiagramKind::Brauer => DiagramFamily::Brauer,
            DiagramKind::Partition if i % 2 == 1 => DiagramFamily::HalfPartition,
            DiagramKind::Partition => DiagramFamily::Partition,
        }
    }

    /// Size of the labels that are new at level `i`.
    fn new_size(&self, i: usize) -> usize {
        match self.kind {
            DiagramKind::Partition => i / 2,
            _ => i,
        }
    }

    pub fn is_new_label(&self, i: usize, lambda: &Partition) -> bool {
        lambda.size() == self.new_size(i)
    }

    fn new_labels(&self, i: usize) -> Vec<Partition> {
        match self.kind {
            DiagramKind::TemperleyLieb => vec![one_row(i)],
            _ => partitions_of(self.new_size(i)),
        }
    }

    fn diagram_element(&self, tower: &Tower, i: usize, terms: Vec<(Vec<u8>, Scalar)>) -> Element {
        let terms: Vec<(BasisId, Scalar)> = terms.into_iter().map(|(d, c)| (BasisId::diagram(&d), c)).collect();
        tower.algebra(i).element(&terms)
    }

    fn single(&self, tower: &Tower, i: usize, d: Vec<u8>) -> Element {
        self.diagram_element(tower, i, vec![(d, Scalar::one())])
    }

    /// A permutation of the first `w.len()` strands at level `i`, fixing the remaining strands.
    fn perm_diagram(&self, i: usize, w: &[u8]) -> Vec<u8> {
        let mut w = w.to_vec();
        for x in w.len()..self.strands(i) {
            w.push(x as u8 + 1);
        }
        diagram::permutation(&w)
    }

    /// `E_{i-1}`, the idempotent multiple of level `i` generating the ideal of old labels.
    pub fn essential(&self, tower: &Tower, i: usize) -> Element {
        assert!(i >= 2, "level {i} has no essential idempotent");
        let k = self.strands(i);
        let d = match self.kind {
            DiagramKind::Partition if i % 2 == 1 => diagram::merge(k, k - 1),
            DiagramKind::Partition => diagram::cut(k, k),
            _ => diagram::cup_cap(k, i - 1),
        };
        self.single(tower, i, d)
    }
}

impl TowerProvider for DiagramTower {
    fn name(&self) -> String {
        match self.kind {
            DiagramKind::TemperleyLieb => "temperley-lieb",
            DiagramKind::Brauer => "brauer",
            DiagramKind::Partition => "partition",
        }
        .into()
    }

    fn param(&self) -> Option<Param> {
        match self.value {
            LoopValue::Symbolic(p) => Some(p),
            LoopValue::Integer(_) => None,
        }
    }

    fn order(&self) -> LevelOrder {
        LevelOrder::SizeThenDominance
    }

    fn basis(&self, i: usize) -> Vec<BasisId> {
        diagram::enumerate(self.family(i), self.strands(i)).iter().map(|d| BasisId::diagram(d)).collect()
    }

    fn one(&self, i: usize) -> BasisId {
        BasisId::diagram(&diagram::identity(self.strands(i)))
    }

    fn product(&self, _i: usize, a: &BasisId, b: &BasisId) -> Vec<(BasisId, Scalar)> {
        let (d, loops) = diagram::compose(a.code(), b.code());
        vec![(BasisId::diagram(&d), self.loop_value().pow(loops as i64))]
    }

    fn involution(&self, _i: usize, a: &BasisId) -> BasisId {
        BasisId::diagram(&diagram::reflect(a.code()))
    }

    fn include(&self, i: usize, a: &BasisId) -> BasisId {
        if self.strands(i) == a.strands() {
            a.clone()
        } else {
            BasisId::diagram(&diagram::add_strand(a.code()))
        }
    }

    fn declared_dimension(&self, i: usize) -> usize {
        match self.kind {
            DiagramKind::TemperleyLieb => catalan(i),
            DiagramKind::Brauer => double_factorial_odd(i),
            DiagramKind::Partition => bell(i),
        }
    }

    fn generators(&self, tower: &Tower, i: usize) -> Vec<Element> {
        let k = self.strands(i);
        let mut out = Vec::new();
        match self.kind {
            DiagramKind::TemperleyLieb => {
                for a in 1..k {
                    out.push(diagram::cup_cap(k, a));
                }
            }
            DiagramKind::Brauer => {
                for a in 1..k {
                    out.push(diagram::permutation(&young::times_generator(&young::identity(k), a)));
                    out.push(diagram::cup_cap(k, a));
                }
            }
            DiagramKind::Partition => {
                let whole = if i % 2 == 1 { k - 1 } else { k };
                for a in 1..whole {
                    out.push(diagram::permutation(&young::times_generator(&young::identity(k), a)));
                    out.push(diagram::merge(k, a));
                }
                for a in 1..=whole {
                    out.push(diagram::cut(k, a));
                }
                if i % 2 == 1 && k >= 2 {
                    out.push(diagram::merge(k, k - 1));
                }
            }
        }
        out.into_iter().map(|d| self.single(tower, i, d)).collect()
    }

    fn labels(&self, i: usize) -> Vec<Partition> {
        let mut out = self.new_labels(i);
        if i >= 2 {
            out.extend(self.labels(i - 2));
        }
        out
    }

    fn edges(&self, i: usize) -> Vec<(Partition, Partition)> {
        let mut out = Vec::new();
        for lambda in self.new_labels(i) {
            match self.kind {
                DiagramKind::TemperleyLieb => out.push((one_row(i - 1), lambda)),
                DiagramKind::Partition if i % 2 == 1 => out.push((lambda.clone(), lambda)),
                _ => {
                    for row in lambda.removable_rows() {
                        out.push((lambda.remove_box(row), lambda.clone()));
                    }
                }
            }
        }
        if i >= 2 {
            out.extend(self.edges(i - 1).into_iter().map(|(lambda, mu)| (mu, lambda)));
        }
        out
    }

    fn cell_generator(&self, tower: &Tower, i: usize, lambda: &Partition) -> Element {
        if !self.is_new_label(i, lambda) {
            let inner = tower.embed(&tower.cell_generator(i - 2, lambda), i);
            return tower.mul(&self.essential(tower, i), &inner);
        }
        let terms = match self.kind {
            DiagramKind::TemperleyLieb => vec![(diagram::identity(self.strands(i)), Scalar::one())],
            _ => young::young_subgroup(lambda, lambda.size())
                .into_iter()
                .map(|w| (self.perm_diagram(i, &w), Scalar::one()))
                .collect(),
        };
        self.diagram_element(tower, i, terms)
    }

    fn branching_factors(&self, tower: &Tower, i: usize, mu: &Partition, lambda: &Partition) -> (Element, Element) {
        if !self.is_new_label(i, lambda) {
            let (d, u) = tower.branching_factors(i - 1, lambda, mu);
            let down = tower.embed(&u, i);
            let up = tower.mul(&tower.embed(&d, i), &self.essential(tower, i));
            return (down, up);
        }
        let trivial = matches!(self.kind, DiagramKind::TemperleyLieb)
            || (self.kind == DiagramKind::Partition && i % 2 == 1);
        if trivial {
            return (tower.one(i), tower.one(i));
        }
        let n = lambda.size();
        let words = young::branch_words(mu, lambda);
        let word_diagram = |w: &[usize]| self.perm_diagram(i, &young::from_word(n, w));
        let d = self.single(tower, i, word_diagram(&words.d));
        let u = self.diagram_element(tower, i, words.u.iter().map(|w| (word_diagram(w), Scalar::one())).collect());
        (d, u)
    }

    fn jm_source(&self) -> JmSource {
        match self.kind {
            DiagramKind::Brauer => JmSource::Explicit(JmKind::Additive),
            _ => JmSource::CentralDifference,
        }
    }

    fn jm_element(&self, tower: &Tower, k: usize) -> Option<Element> {
        if self.kind != DiagramKind::Brauer {
            return None;
        }
        let mut terms = Vec::new();
        for a in 1..k {
            let mut w = young::identity(k);
            w.swap(a - 1, k - 1);
            terms.push((diagram::permutation(&w), Scalar::one()));
            terms.push((diagram::contraction(k, a, k), -Scalar::one()));
        }
        Some(self.diagram_element(tower, k, terms))
    }

    fn flip(&self, i: usize, a: &BasisId) -> Option<BasisId> {
        self.has_flip(i).then(|| BasisId::diagram(&diagram::flip(a.code())))
    }

    fn has_flip(&self, i: usize) -> bool {
        self.kind != DiagramKind::Partition || i % 2 == 0
    }

    fn reducer_hint(&self, i: usize) -> ReducerHint {
        match self.kind {
            DiagramKind::Brauer => ReducerHint::DiagramRank,
            DiagramKind::Partition if i % 2 == 0 => ReducerHint::DiagramRank,
            _ => ReducerHint::Generic,
        }
    }

    fn level_stride(&self) -> usize {
        match self.kind {
            DiagramKind::Partition => 2,
            _ => 1,
        }
    }
}
