//! Jucys–Murphy families: explicit provider data, or differences of separating central elements.

use num_integer::Integer;
use num_traits::One;

use crate::algebra::{add_entry, sparse_nullspace, Element, MatrixF, SparseVec};
use crate::arith::{Rational, Scalar};
use crate::combinatorics::{Partition, PathTableau};
use crate::murphy::{cell_module, ReducerKind};
use crate::tower::checks::jm_central_scalars;
use crate::tower::{JmKind, JmSource, Tower};

use super::SeminormalError;

/// `L_0, …, L_r` with the scalars `d(λ)` by which their partial sums or products act on cells.
#[derive(Debug, Clone)]
pub struct JmFamily {
    kind: JmKind,
    derived: bool,
    elements: Vec<Element>,
    scalars: Vec<Vec<(Partition, Scalar)>>,
}

/// `C_k` for `1 ≤ k ≤ r` (index 0 is empty) and `κ_t(1..r)` for every path `t` of level `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct JmSpectrum {
    pub levels: Vec<Vec<Scalar>>,
    pub sequences: Vec<(PathTableau, Vec<Scalar>)>,
}

/// A scalar `m` in the base ring such that `m * s` is integral.
fn integral_multiplier(s: &Scalar) -> Scalar {
    match s {
        Scalar::Rat(r) => Scalar::Rat(Rational::from_integer(r.denom().clone())),
        Scalar::Func(f) => {
            if !f.denominator().is_one() {
                return Scalar::from_poly(f.denominator().clone());
            }
            let num = f.numerator();
            if !num.param().is_laurent() && num.min_exp().unwrap_or(0) < 0 {
                return Scalar::var(num.param()).pow(-num.min_exp().unwrap_or(0));
            }
            let l = num.terms().iter().fold(num_bigint::BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
            Scalar::Rat(Rational::from_integer(l))
        }
    }
}

fn make_integral(mut v: SparseVec) -> SparseVec {
    for _ in 0..256 {
        let Some(bad) = v.values().find(|c| !c.is_integral()).cloned() else {
            return v;
        };
        let m = integral_multiplier(&bad);
        v = v.into_iter().map(|(k, c)| (k, &c * &m)).collect();
    }
    panic!("could not clear denominators of a central element");
}

/// An integral basis of the centre of level `k`, each element fixed by the involution.
pub fn central_basis(tower: &Tower, k: usize) -> Vec<Element> {
    let alg = tower.algebra(k);
    let n = alg.dim();
    let gens = tower.generators(k);
    let mut rows: Vec<SparseVec> = Vec::new();
    // Row (g, j): the j-th coordinate of x g - g x, as a linear form in x.
    let mut forms: Vec<Vec<SparseVec>> = vec![vec![SparseVec::new(); n]; gens.len()];
    for i in 0..n as u32 {
        let x = Element::basis(k, i);
        for (gi, g) in gens.iter().enumerate() {
            let c = alg.commutator(&x, g);
            for (j, v) in c.terms() {
                add_entry(&mut forms[gi][*j as usize], i, v);
            }
        }
    }
    for f in forms {
        rows.extend(f.into_iter().filter(|r| !r.is_empty()));
    }
    sparse_nullspace(&rows, n)
        .into_iter()
        .map(|v| {
            let z = Element::from_vec(k, make_integral(v));
            let sym = z.add(&alg.involve(&z));
            if sym.is_zero() {
                z
            } else {
                sym
            }
        })
        .collect()
}

fn central_character(tower: &Tower, k: usize, z: &Element) -> Result<Vec<Scalar>, SeminormalError> {
    let mut out = Vec::new();
    for lambda in tower.graph().labels(k) {
        let module = cell_module(tower, k, lambda, ReducerKind::Accelerated)?;
        let m = module.act(tower, z)?;
        let c = m.get(0, 0).clone();
        if m != MatrixF::identity(module.dim()).scale(&c) {
            return Err(SeminormalError::NotScalar { level: k, label: lambda.to_string() });
        }
        out.push(c);
    }
    Ok(out)
}

fn all_distinct(xs: &[Scalar]) -> bool {
    xs.iter().enumerate().all(|(i, a)| xs[i + 1..].iter().all(|b| a != b))
}

/// An integral, involution-fixed central element of level `k` whose central characters
/// separate the labels of level `k`.
pub fn separating_central_element(tower: &Tower, k: usize) -> Result<Element, SeminormalError> {
    let alg = tower.algebra(k);
    if tower.graph().labels(k).len() <= 1 {
        return Ok(alg.zero());
    }
    let basis = central_basis(tower, k);
    let chars: Vec<Vec<Scalar>> = basis.iter().map(|z| central_character(tower, k, z)).collect::<Result<_, _>>()?;
    let labels = tower.graph().labels(k).len();
    let mut clash = (0, 1);
    for base in 1..=64i64 {
        let mut z = alg.zero();
        let mut chi = vec![Scalar::zero(); labels];
        let mut w = Scalar::one();
        for (b, c) in basis.iter().zip(&chars) {
            w = &w * &Scalar::int(base);
            z.add_scaled(&w, b);
            for (x, y) in chi.iter_mut().zip(c) {
                *x += &(&w * y);
            }
        }
        if all_distinct(&chi) {
            return Ok(z);
        }
        clash = (0..labels)
            .flat_map(|i| (i + 1..labels).map(move |j| (i, j)))
            .find(|&(i, j)| chi[i] == chi[j])
            .expect("a repeated character");
    }
    let names = tower.graph().labels(k);
    Err(SeminormalError::Inseparable { level: k, first: names[clash.0].to_string(), second: names[clash.1].to_string() })
}

impl JmFamily {
    /// The family of the tower's provider up to level `r`.
    pub fn new(tower: &Tower, r: usize) -> Result<Self, SeminormalError> {
        match tower.provider().jm_source() {
            JmSource::Explicit(kind) => {
                let elements = (0..=r)
                    .map(|k| match tower.provider().jm_element(tower, k) {
                        Some(l) => l,
                        None if k == 0 => match kind {
                            JmKind::Additive => tower.algebra(0).zero(),
                            JmKind::Multiplicative => tower.algebra(0).one(),
                        },
                        None => panic!("explicit JM family is missing L_{k}"),
                    })
                    .collect();
                Self::from_elements(tower, kind, elements, false)
            }
            JmSource::CentralDifference => {
                let mut elements = vec![tower.algebra(0).zero()];
                let mut prev = tower.algebra(0).zero();
                for k in 1..=r {
                    let z = separating_central_element(tower, k)?;
                    elements.push(z.sub(&tower.embed(&prev, k)));
                    prev = z;
                }
                Self::from_elements(tower, JmKind::Additive, elements, true)
            }
            JmSource::None => Err(SeminormalError::Unsupported(format!("{} has no Jucys–Murphy family", tower.name()))),
        }
    }

    /// Wraps given elements `L_0..=L_r`, extracting the cell scalars `d(λ)` level by level.
    pub fn from_elements(
        tower: &Tower,
        kind: JmKind,
        elements: Vec<Element>,
        derived: bool,
    ) -> Result<Self, SeminormalError> {
        let mut scalars = Vec::new();
        for k in 0..elements.len() {
            let s = jm_central_scalars(tower, k, kind, &elements)
                .map_err(|w| SeminormalError::NotScalar { level: k, label: w.to_string() })?;
            scalars.push(s);
        }
        Ok(JmFamily { kind, derived, elements, scalars })
    }

    pub fn kind(&self) -> JmKind {
        self.kind
    }

    /// Whether the elements were derived from central elements rather than supplied.
    pub fn is_derived(&self) -> bool {
        self.derived
    }

    pub fn max_level(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn element(&self, k: usize) -> &Element {
        &self.elements[k]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// `d(λ)` for a label of level `k`.
    pub fn d(&self, k: usize, lambda: &Partition) -> &Scalar {
        &self.scalars[k].iter().find(|(l, _)| l == lambda).unwrap_or_else(|| panic!("{lambda} at level {k}")).1
    }

    /// `κ_{μ→λ}` for an edge into level `k`.
    pub fn kappa(&self, k: usize, mu: &Partition, lambda: &Partition) -> Scalar {
        let (a, b) = (self.d(k, lambda), self.d(k - 1, mu));
        match self.kind {
            JmKind::Additive => a - b,
            JmKind::Multiplicative => a / b,
        }
    }

    /// `(κ_t(1), …, κ_t(r))` for a path from level 0.
    pub fn sequence(&self, t: &PathTableau) -> Vec<Scalar> {
        (t.start + 1..=t.end_level()).map(|k| self.kappa(k, t.at(k - 1), t.at(k))).collect()
    }

    /// The family `L_0..=L_s`.
    pub fn truncate(&self, s: usize) -> JmFamily {
        JmFamily {
            kind: self.kind,
            derived: self.derived,
            elements: self.elements[..=s].to_vec(),
            scalars: self.scalars[..=s].to_vec(),
        }
    }

    /// Eigenvalue sets `C_k` and the sequences of every path of level `r`.
    pub fn spectrum(&self, tower: &Tower, r: usize) -> Result<JmSpectrum, SeminormalError> {
        self.check_separation(tower, r)?;
        let mut levels: Vec<Vec<Scalar>> = vec![Vec::new(); r + 1];
        let mut sequences = Vec::new();
        for lambda in tower.graph().labels(r) {
            for t in tower.standard_paths(r, lambda) {
                let seq = self.sequence(&t);
                for (k, c) in seq.iter().enumerate() {
                    if !levels[k + 1].contains(c) {
                        levels[k + 1].push(c.clone());
                    }
                }
                sequences.push((t, seq));
            }
        }
        Ok(JmSpectrum { levels, sequences })
    }

    /// Distinct paths of level `r` have distinct eigenvalue sequences.
    pub fn check_separation(&self, tower: &Tower, r: usize) -> Result<(), SeminormalError> {
        let mut seen: Vec<(Vec<Scalar>, PathTableau)> = Vec::new();
        for lambda in tower.graph().labels(r) {
            for t in tower.standard_paths(r, lambda) {
                let seq = self.sequence(&t);
                if let Some((_, other)) = seen.iter().find(|(s, _)| s == &seq) {
                    return Err(SeminormalError::Separation { level: r, first: other.to_string(), second: t.to_string() });
                }
                seen.push((seq, t));
            }
        }
        Ok(())
    }
}
