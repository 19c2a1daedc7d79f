use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde_json::{Map, Value};

use super::basis::BasisId;
use super::element::{add_entry, Element, SparseVec};
use super::linalg::SubspaceBasis;
use crate::arith::Scalar;

/// Structure constants of one level: the product of two basis elements.
pub trait ProductRule: Send + Sync {
    fn product(&self, a: &BasisId, b: &BasisId) -> Vec<(BasisId, Scalar)>;
}

type ProductTable = HashMap<(u32, u32), Arc<[(u32, Scalar)]>>;

/// Levels larger than this compute basis products on demand instead of memoizing them.
const MEMO_LIMIT: usize = 1500;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
    #[error("unknown basis element {0}")]
    UnknownBasis(String),
    #[error("malformed element: {0}")]
    Malformed(String),
}

/// A finite-dimensional algebra with involution, given by a sorted basis and a product rule.
pub struct LevelAlgebra {
    level: usize,
    basis: Vec<BasisId>,
    index: HashMap<BasisId, u32>,
    one: u32,
    involution: Vec<u32>,
    rule: Box<dyn ProductRule>,
    memo: Option<RwLock<ProductTable>>,
}

impl LevelAlgebra {
    /// `basis` is sorted internally; `involution` maps each basis element to its image.
    pub fn new(
        level: usize,
        mut basis: Vec<BasisId>,
        one: &BasisId,
        involution: impl Fn(&BasisId) -> BasisId,
        rule: Box<dyn ProductRule>,
    ) -> Self {
        basis.sort();
        basis.dedup();
        let index: HashMap<BasisId, u32> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i as u32)).collect();
        let one = index[one];
        let involution = basis.iter().map(|b| index[&involution(b)]).collect();
        let memo = (basis.len() <= MEMO_LIMIT).then(|| RwLock::new(HashMap::new()));
        LevelAlgebra { level, basis, index, one, involution, rule, memo }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisId] {
        &self.basis
    }

    pub fn basis_id(&self, i: u32) -> &BasisId {
        &self.basis[i as usize]
    }

    pub fn index_of(&self, b: &BasisId) -> Option<u32> {
        self.index.get(b).copied()
    }

    pub fn one(&self) -> Element {
        Element::basis(self.level, self.one)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.level)
    }

    pub fn basis_element(&self, b: &BasisId) -> Element {
        Element::basis(self.level, self.index[b])
    }

    /// Builds an element from `(basis id, coefficient)` pairs.
    pub fn element(&self, terms: &[(BasisId, Scalar)]) -> Element {
        let mut v = SparseVec::new();
        for (b, c) in terms {
            let i = *self.index.get(b).unwrap_or_else(|| panic!("{b} is not a basis element at level {}", self.level));
            add_entry(&mut v, i, c);
        }
        Element::from_vec(self.level, v)
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        Element::term(self.level, self.one, c)
    }

    fn basis_product(&self, i: u32, j: u32) -> Arc<[(u32, Scalar)]> {
        if let Some(memo) = &self.memo {
            if let Some(hit) = memo.read().expect("product table poisoned").get(&(i, j)) {
                return hit.clone();
            }
        }
        let raw = self.rule.product(&self.basis[i as usize], &self.basis[j as usize]);
        let mut v = SparseVec::new();
        for (b, c) in raw {
            let k = *self.index.get(&b).unwrap_or_else(|| panic!("product produced {b} outside level {}", self.level));
            add_entry(&mut v, k, &c);
        }
        let out: Arc<[(u32, Scalar)]> = v.into_iter().collect::<Vec<_>>().into();
        if let Some(memo) = &self.memo {
            memo.write().expect("product table poisoned").insert((i, j), out.clone());
        }
        out
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        assert_eq!(a.level(), self.level, "left factor at wrong level");
        assert_eq!(b.level(), self.level, "right factor at wrong level");
        let mut acc = SparseVec::new();
        for (&i, x) in a.terms() {
            for (&j, y) in b.terms() {
                let xy = x * y;
                for (k, c) in self.basis_product(i, j).iter() {
                    let term = if c.is_one() { xy.clone() } else { &xy * c };
                    add_entry(&mut acc, *k, &term);
                }
            }
        }
        Element::from_vec(self.level, acc)
    }

    pub fn try_mul(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        if a.level() != b.level() {
            return Err(AlgebraError::LevelMismatch(a.level(), b.level()));
        }
        if a.level() != self.level {
            return Err(AlgebraError::LevelMismatch(a.level(), self.level));
        }
        Ok(self.mul(a, b))
    }

    pub fn mul_all(&self, factors: &[&Element]) -> Element {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn involve(&self, a: &Element) -> Element {
        let v: SparseVec = a.terms().iter().map(|(i, c)| (self.involution[*i as usize], c.clone())).collect();
        Element::from_vec(self.level, v)
    }

    pub fn involution_index(&self, i: u32) -> u32 {
        self.involution[i as usize]
    }

    pub fn rank_of_span(&self, vectors: &[Element]) -> usize {
        let mut sb = SubspaceBasis::new(false);
        for v in vectors {
            sb.insert(v.terms());
        }
        sb.rank()
    }

    /// Coordinates of `target` in terms of `vectors`, if it lies in their span.
    /// With dependent vectors, the coordinates use only an independent prefix-greedy subset.
    pub fn solve_in_span(&self, target: &Element, vectors: &[Element]) -> Option<Vec<Scalar>> {
        let mut sb = SubspaceBasis::new(true);
        for v in vectors {
            sb.insert(v.terms());
        }
        let coords = sb.solve(target.terms())?;
        Some((0..vectors.len() as u32).map(|i| coords.get(&i).cloned().unwrap_or_else(Scalar::zero)).collect())
    }

    pub fn reduce_mod(&self, a: &Element, ideal: &SubspaceBasis) -> Element {
        Element::from_vec(self.level, ideal.reduce(a.terms()))
    }

    pub fn to_json(&self, a: &Element) -> Value {
        let mut m = Map::new();
        for (i, c) in a.terms() {
            m.insert(self.basis[*i as usize].to_string(), Value::String(c.to_string()));
        }
        Value::Object(m)
    }

    pub fn from_json(&self, v: &Value) -> Result<Element, AlgebraError> {
        let obj = v.as_object().ok_or_else(|| AlgebraError::Malformed("expected a JSON object".into()))?;
        let mut terms = SparseVec::new();
        for (k, c) in obj {
            let b = BasisId::parse(k).map_err(|e| AlgebraError::UnknownBasis(e.0))?;
            let i = self.index_of(&b).ok_or_else(|| AlgebraError::UnknownBasis(k.chars().take(64).collect()))?;
            let s = c.as_str().ok_or_else(|| AlgebraError::Malformed("coefficients must be strings".into()))?;
            let c: Scalar = s.parse().map_err(|e: crate::arith::ArithError| AlgebraError::Malformed(e.to_string()))?;
            add_entry(&mut terms, i, &c);
        }
        Ok(Element::from_vec(self.level, terms))
    }

    /// Human-readable form `c*[2,1] + ...`.
    pub fn format(&self, a: &Element) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = a
            .terms()
            .iter()
            .map(|(i, c)| {
                let b = &self.basis[*i as usize];
                if c.is_one() {
                    b.to_string()
                } else {
                    format!("({c})*{b}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}
