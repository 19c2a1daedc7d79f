use std::collections::BTreeMap;

use crate::arith::Scalar;

/// Sparse coordinate vector indexed by basis position.
pub type SparseVec = BTreeMap<u32, Scalar>;

/// `acc += c * v`, dropping cancelled entries.
pub fn axpy(acc: &mut SparseVec, c: &Scalar, v: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        add_entry(acc, *k, &(c * x));
    }
}

pub fn add_entry(acc: &mut SparseVec, k: u32, x: &Scalar) {
    if x.is_zero() {
        return;
    }
    match acc.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(x.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = &*e.get() + x;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub fn scale_vec(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, x)| (*k, x * c)).collect()
}

/// An element of the level-`r` algebra of some tower, in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    level: usize,
    terms: SparseVec,
}

impl Element {
    pub fn zero(level: usize) -> Self {
        Element { level, terms: SparseVec::new() }
    }

    pub fn basis(level: usize, index: u32) -> Self {
        Element::term(level, index, Scalar::one())
    }

    pub fn term(level: usize, index: u32, c: Scalar) -> Self {
        let mut terms = SparseVec::new();
        if !c.is_zero() {
            terms.insert(index, c);
        }
        Element { level, terms }
    }

    pub fn from_vec(level: usize, mut terms: SparseVec) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Element { level, terms }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn terms(&self) -> &SparseVec {
        &self.terms
    }

    pub fn into_terms(self) -> SparseVec {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: u32) -> Scalar {
        self.terms.get(&index).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element { level: self.level, terms: scale_vec(&self.terms, c) }
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.level, other.level, "level mismatch");
        let mut terms = self.terms.clone();
        axpy(&mut terms, &Scalar::one(), &other.terms);
        Element { level: self.level, terms }
    }

    pub fn sub(&self, other: &Element) -> Element {
        assert_eq!(self.level, other.level, "level mismatch");
        let mut terms = self.terms.clone();
        axpy(&mut terms, &-Scalar::one(), &other.terms);
        Element { level: self.level, terms }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Element) {
        assert_eq!(self.level, other.level, "level mismatch");
        axpy(&mut self.terms, c, &other.terms);
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Scalar::one())
    }

    /// Applies a scalar map to every coefficient, e.g. a specialization.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Element {
        Element::from_vec(self.level, self.terms.iter().map(|(k, c)| (*k, f(c))).collect())
    }
}
