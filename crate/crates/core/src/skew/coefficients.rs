use std::sync::{Arc, Mutex};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{partitions_of, Partition};
use crate::providers::{DiagramKind, DiagramTower, LoopValue};
use crate::seminormal::JmFamily;
use crate::tower::Tower;

use super::{decompose, RightIdeal, SkewError, SkewModule};

/// Which multiplicity a table holds: `a`/`A` over the tower itself, `p`/`P` over the partition algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoefficientFamily {
    /// `dim Hom(Δ(μ), Δ(ν∖λ))`.
    #[serde(rename = "a")]
    Cell,
    /// `dim Hom(c_μ A, Δ(ν∖λ))`.
    #[serde(rename = "A")]
    Permutation,
    #[serde(rename = "p")]
    PartitionCell,
    #[serde(rename = "P")]
    PartitionPermutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityTable {
    pub family: CoefficientFamily,
    pub tower: String,
    pub entries: Vec<MultiplicityEntry>,
}

impl MultiplicityTable {
    pub fn get(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Option<u64> {
        self.entries.iter().find(|e| &e.lambda == lambda && &e.mu == mu && &e.nu == nu).map(|e| e.value)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,lambda,mu,nu,value\n");
        let family = serde_json::to_value(self.family).expect("family serializes");
        for e in &self.entries {
            out.push_str(&format!(
                "{},\"{}\",\"{}\",\"{}\",{}\n",
                family.as_str().unwrap_or_default(),
                e.lambda,
                e.mu,
                e.nu,
                e.value
            ));
        }
        out
    }
}

/// `a^ν_{λμ}` for every `μ` at level `r − s`.
pub fn skew_multiplicities(
    tower: &Tower,
    jm: &JmFamily,
    nu: &Partition,
    r: usize,
    lambda: &Partition,
    s: usize,
) -> Result<Vec<(Partition, usize)>, SkewError> {
    decompose(tower, jm, &SkewModule::new(tower, nu, r, lambda, s)?)
}

/// `A^ν_{λμ} = Σ_{μ'} n_{μ'} a^ν_{λμ'}` where `c_μ A_{r−s} ≅ ⊕ Δ(μ')^{n_{μ'}}`.
pub fn permutation_multiplicity(
    tower: &Tower,
    jm: &JmFamily,
    nu: &Partition,
    r: usize,
    lambda: &Partition,
    s: usize,
    mu: &Partition,
) -> Result<usize, SkewError> {
    let ideal = RightIdeal::new(tower, &tower.cell_generator(r - s, mu));
    let parts = decompose(tower, jm, &ideal)?;
    let a = skew_multiplicities(tower, jm, nu, r, lambda, s)?;
    Ok(parts.iter().map(|(m, n)| n * a.iter().find(|(l, _)| l == m).map_or(0, |(_, x)| *x)).sum())
}

/// `a^ν_{λμ}` for all `|λ| + |μ| = |ν| ≤ max` on a tower whose level-`k` labels are the partitions of `k`.
pub fn lr_coefficients(tower: &Tower, jm: &JmFamily, max: usize) -> Result<MultiplicityTable, SkewError> {
    let mut entries = Vec::new();
    for r in 0..=max {
        for nu in partitions_of(r) {
            for s in 0..=r {
                for lambda in partitions_of(s) {
                    let mults = skew_multiplicities(tower, jm, &nu, r, &lambda, s)?;
                    for mu in partitions_of(r - s) {
                        let value = mults.iter().find(|(l, _)| l == &mu).map_or(0, |(_, n)| *n) as u64;
                        entries.push(MultiplicityEntry { lambda: lambda.clone(), mu, nu: nu.clone(), value });
                    }
                }
            }
        }
    }
    Ok(MultiplicityTable { family: CoefficientFamily::Cell, tower: tower.name(), entries })
}

/// `p^ν_{λμ}` and `P^ν_{λμ}` with `|λ| + |μ| ≤ r`, `|ν| ≤ r`, over the partition algebras at `n = 2r`.
pub struct PartitionKronecker {
    r: usize,
    tower: Tower,
    jm: Mutex<Option<JmFamily>>,
}

impl PartitionKronecker {
    pub fn new(r: usize) -> Self {
        let n = (2 * r).max(1) as i64;
        let provider = DiagramTower::new(DiagramKind::Partition, LoopValue::Integer(n));
        PartitionKronecker { r, tower: Tower::new(Arc::new(provider), 2 * r), jm: Mutex::new(None) }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    /// The Jucys–Murphy family up to internal level `k`, computed once for the largest level asked.
    pub fn family(&self, k: usize) -> Result<JmFamily, SkewError> {
        let mut guard = self.jm.lock().expect("family lock");
        if guard.as_ref().map_or(true, |f| f.max_level() < k) {
            *guard = Some(JmFamily::new(&self.tower, k)?);
        }
        Ok(guard.as_ref().expect("just set").truncate(k))
    }

    fn check(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<(), SkewError> {
        if lambda.size() + mu.size() > self.r || nu.size() > self.r {
            return Err(SkewError::Unsupported(format!(
                "need |λ| + |μ| ≤ {} and |ν| ≤ {}: got {lambda}, {mu}, {nu}",
                self.r, self.r
            )));
        }
        Ok(())
    }

    /// `p^ν_{λμ} = dim Hom(Δ(μ), Δ(ν∖λ))` over `P_{r−s}(n)`, `s = |λ|`.
    pub fn cell(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64, SkewError> {
        self.check(lambda, mu, nu)?;
        let (s, r) = (2 * lambda.size(), 2 * self.r);
        let jm = self.family(r - s)?;
        let mults = skew_multiplicities(&self.tower, &jm, nu, r, lambda, s)?;
        Ok(mults.into_iter().find(|(l, _)| l == mu).map_or(0, |(_, n)| n) as u64)
    }

    /// `P^ν_{λμ} = dim Hom(c_μ P_{r−s}(n), Δ(ν∖λ))`.
    pub fn permutation(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64, SkewError> {
        self.check(lambda, mu, nu)?;
        let (s, r) = (2 * lambda.size(), 2 * self.r);
        let jm = self.family(r - s)?;
        Ok(permutation_multiplicity(&self.tower, &jm, nu, r, lambda, s, mu)? as u64)
    }
}

/// All `(λ, μ, ν)` with `|λ| + |μ| = r`, `|λ| ≥ min_s` and `|ν| ≤ r`, in a fixed order.
pub fn kronecker_triples(r: usize, min_s: usize) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for s in min_s..=r {
        for lambda in partitions_of(s) {
            for mu in partitions_of(r - s) {
                for size in 0..=r {
                    for nu in partitions_of(size) {
                        out.push((lambda.clone(), mu.clone(), nu));
                    }
                }
            }
        }
    }
    out
}

/// `count` distinct triples of `kronecker_triples(r, min_s)`, chosen by a ChaCha8 shuffle of `seed`.
pub fn sample_kronecker_triples(
    r: usize,
    min_s: usize,
    count: usize,
    seed: u64,
) -> Vec<(Partition, Partition, Partition)> {
    let mut all = kronecker_triples(r, min_s);
    all.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    all.truncate(count);
    all
}
