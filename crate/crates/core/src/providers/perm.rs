//! Iwahori–Hecke algebras of type A and symmetric group algebras, on the `T_w` basis.

use std::collections::BTreeMap;

use crate::algebra::{BasisId, Element};
use crate::arith::{Param, Scalar};
use crate::combinatorics::{partitions_of, LevelOrder, Partition};
use crate::tower::{JmKind, JmSource, ReducerHint, Tower, TowerProvider};

use super::young::{self, Perm};

/// `H_r(q)` with `(T_i - q)(T_i + 1) = 0`, or the group algebra `Z S_r` when `symbolic` is false.
#[derive(Debug, Clone, Copy)]
pub struct PermTower {
    symbolic: bool,
}

impl PermTower {
    pub fn hecke() -> Self {
        PermTower { symbolic: true }
    }

    pub fn symmetric() -> Self {
        PermTower { symbolic: false }
    }

    pub fn is_hecke(&self) -> bool {
        self.symbolic
    }

    fn q(&self) -> Scalar {
        if self.symbolic {
            Scalar::var(Param::Q)
        } else {
            Scalar::one()
        }
    }

    /// Right multiplication of a combination of `T_w` by `T_i`.
    pub fn mul_generator(&self, elem: &BTreeMap<Perm, Scalar>, i: usize) -> BTreeMap<Perm, Scalar> {
        let q = self.q();
        let qm1 = &q - &Scalar::one();
        let mut out: BTreeMap<Perm, Scalar> = BTreeMap::new();
        let mut push = |w: Perm, c: Scalar| {
            let e = out.entry(w).or_insert_with(Scalar::zero);
            *e += &c;
        };
        for (w, c) in elem {
            let ws = young::times_generator(w, i);
            if !self.symbolic || young::is_ascent(w, i) {
                push(ws, c.clone());
            } else {
                push(ws, c * &q);
                push(w.clone(), c * &qm1);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn word_product(&self, start: &Perm, word: &[usize]) -> BTreeMap<Perm, Scalar> {
        let mut acc = BTreeMap::from([(start.clone(), Scalar::one())]);
        for &i in word {
            acc = self.mul_generator(&acc, i);
        }
        acc
    }

    /// `T_{i_1} ⋯ T_{i_k}` at level `r`.
    pub fn word_element(&self, tower: &Tower, r: usize, word: &[usize]) -> Element {
        let terms: Vec<(BasisId, Scalar)> =
            self.word_product(&young::identity(r), word).into_iter().map(|(w, c)| (BasisId::perm(&w), c)).collect();
        tower.algebra(r).element(&terms)
    }
}

impl TowerProvider for PermTower {
    fn name(&self) -> String {
        if self.symbolic { "hecke" } else { "symmetric" }.into()
    }

    fn param(&self) -> Option<Param> {
        self.symbolic.then_some(Param::Q)
    }

    fn order(&self) -> LevelOrder {
        LevelOrder::Dominance
    }

    fn basis(&self, r: usize) -> Vec<BasisId> {
        young::all_perms(r).iter().map(|w| BasisId::perm(w)).collect()
    }

    fn one(&self, r: usize) -> BasisId {
        BasisId::perm(&young::identity(r))
    }

    fn product(&self, _r: usize, a: &BasisId, b: &BasisId) -> Vec<(BasisId, Scalar)> {
        if !self.symbolic {
            return vec![(BasisId::perm(&young::then(a.code(), b.code())), Scalar::one())];
        }
        let word = young::reduced_word(b.code());
        self.word_product(&a.code().to_vec(), &word).into_iter().map(|(w, c)| (BasisId::perm(&w), c)).collect()
    }

    fn involution(&self, _r: usize, a: &BasisId) -> BasisId {
        BasisId::perm(&young::inverse(a.code()))
    }

    fn include(&self, r: usize, a: &BasisId) -> BasisId {
        let mut w = a.code().to_vec();
        w.push(r as u8);
        BasisId::perm(&w)
    }

    fn declared_dimension(&self, r: usize) -> usize {
        (1..=r).product()
    }

    fn generators(&self, tower: &Tower, r: usize) -> Vec<Element> {
        (1..r).map(|i| self.word_element(tower, r, &[i])).collect()
    }

    fn labels(&self, r: usize) -> Vec<Partition> {
        partitions_of(r)
    }

    fn edges(&self, r: usize) -> Vec<(Partition, Partition)> {
        let mut out = Vec::new();
        for mu in partitions_of(r - 1) {
            for row in mu.addable_rows() {
                out.push((mu.clone(), mu.add_box(row)));
            }
        }
        out
    }

    fn cell_generator(&self, tower: &Tower, r: usize, lambda: &Partition) -> Element {
        let terms: Vec<(BasisId, Scalar)> =
            young::young_subgroup(lambda, r).into_iter().map(|w| (BasisId::perm(&w), Scalar::one())).collect();
        tower.algebra(r).element(&terms)
    }

    fn branching_factors(&self, tower: &Tower, r: usize, mu: &Partition, lambda: &Partition) -> (Element, Element) {
        let words = young::branch_words(mu, lambda);
        let d = self.word_element(tower, r, &words.d);
        let mut u = Element::zero(r);
        for w in &words.u {
            u = u.add(&self.word_element(tower, r, w));
        }
        (d, u)
    }

    fn jm_source(&self) -> JmSource {
        if self.symbolic {
            JmSource::Explicit(JmKind::Multiplicative)
        } else {
            JmSource::Explicit(JmKind::Additive)
        }
    }

    fn jm_element(&self, tower: &Tower, k: usize) -> Option<Element> {
        let alg = tower.algebra(k);
        if k == 0 {
            return Some(if self.symbolic { alg.one() } else { alg.zero() });
        }
        if !self.symbolic {
            let terms: Vec<(BasisId, Scalar)> = (1..k)
                .map(|i| {
                    let mut w = young::identity(k);
                    w.swap(i - 1, k - 1);
                    (BasisId::perm(&w), Scalar::one())
                })
                .collect();
            return Some(alg.element(&terms));
        }
        let mut word: Vec<usize> = (1..k).rev().collect();
        word.extend(1..k);
        let e = self.word_element(tower, k, &word);
        Some(e.scale(&Scalar::var(Param::Q).pow(1 - k as i64)))
    }

    fn flip(&self, _r: usize, a: &BasisId) -> Option<BasisId> {
        Some(BasisId::perm(&young::conjugate_by_longest(a.code())))
    }

    fn reducer_hint(&self, _r: usize) -> ReducerHint {
        if self.symbolic {
            ReducerHint::Generic
        } else {
            ReducerHint::SymmetricGroup
        }
    }
}
