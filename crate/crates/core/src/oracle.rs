//! Symmetric-group characters by the Murnaghan–Nakayama rule, and the Kronecker,
//! stable Kronecker, Littlewood–Richardson and (skew) Kostka numbers derived from them.
//!
//! Shares nothing with the algebra engine beyond [`Partition`].

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{partitions_of, Partition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("sizes do not match: {0}")]
    SizeMismatch(String),
    #[error("stable value not reached: {first} at n = {n} but {second} at n = {next}", next = n + 1)]
    Unstable { n: usize, first: u64, second: u64 },
    #[error("{0} is not a non-negative integer")]
    NotNatural(String),
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `z_ρ = Π i^{m_i} m_i!`, the centralizer order of the class of cycle type `ρ`.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts.into_iter().fold(BigInt::one(), |acc, (i, m)| acc * BigInt::from(i).pow(m as u32) * factorial(m))
}

/// `n! / z_ρ`.
pub fn class_size(rho: &Partition) -> BigInt {
    factorial(rho.size()) / centralizer_order(rho)
}

fn beta_set(lambda: &Partition) -> BTreeSet<usize> {
    let l = lambda.len();
    lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect()
}

fn from_beta(beta: &BTreeSet<usize>) -> Partition {
    let l = beta.len();
    let parts: Vec<usize> = beta.iter().rev().enumerate().map(|(i, &b)| b - (l - 1 - i)).filter(|&p| p > 0).collect();
    Partition::from_slice(&parts)
}

/// Memoized Murnaghan–Nakayama evaluator.
#[derive(Default)]
pub struct Characters {
    memo: HashMap<(Partition, Vec<usize>), BigInt>,
}

impl Characters {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ(ρ)`; zero unless `|λ| = |ρ|`.
    pub fn value(&mut self, lambda: &Partition, rho: &Partition) -> BigInt {
        if lambda.size() != rho.size() {
            return BigInt::zero();
        }
        self.eval(lambda, rho.parts())
    }

    fn eval(&mut self, lambda: &Partition, cycles: &[usize]) -> BigInt {
        let Some((&k, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        let key = (lambda.clone(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let beta = beta_set(lambda);
        let mut total = BigInt::zero();
        for &b in &beta {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let height = beta.range(b - k + 1..b).count();
            let mut next = beta.clone();
            next.remove(&b);
            next.insert(b - k);
            let v = self.eval(&from_beta(&next), rest);
            if height % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> BigInt {
    Characters::new().value(lambda, rho)
}

/// Character table of `S_n`: rows and columns indexed by [`partitions_of`].
pub struct CharacterTable {
    pub n: usize,
    pub labels: Vec<Partition>,
    pub values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let labels = partitions_of(n);
        let mut chars = Characters::new();
        let values = labels.iter().map(|l| labels.iter().map(|rho| chars.value(l, rho)).collect()).collect();
        CharacterTable { n, labels, values }
    }

    /// Column orthogonality: `Σ_λ χ^λ(ρ) χ^λ(σ) = δ_{ρσ} z_ρ`.
    pub fn check_orthogonality(&self) -> bool {
        let k = self.labels.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let s: BigInt = (0..k).map(|l| &self.values[l][a] * &self.values[l][b]).sum();
                let expect = if a == b { centralizer_order(&self.labels[a]) } else { BigInt::zero() };
                s == expect
            })
        })
    }
}

fn natural(x: BigRational, what: impl Fn() -> String) -> Result<u64, OracleError> {
    if !x.is_integer() || x.is_negative() {
        return Err(OracleError::NotNatural(what()));
    }
    x.to_integer().to_u64().ok_or_else(|| OracleError::NotNatural(what()))
}

/// `g_{αβγ} = Σ_ρ χ^α(ρ) χ^β(ρ) χ^γ(ρ) / z_ρ`.
pub fn kronecker(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u64, OracleError> {
    let n = alpha.size();
    if beta.size() != n || gamma.size() != n {
        return Err(OracleError::SizeMismatch(format!("{alpha}, {beta}, {gamma}")));
    }
    let mut chars = Characters::new();
    let mut sum = BigRational::zero();
    for rho in partitions_of(n) {
        let num = chars.value(alpha, &rho) * chars.value(beta, &rho) * chars.value(gamma, &rho);
        sum += BigRational::new(num, centralizer_order(&rho));
    }
    natural(sum, || format!("g({alpha}, {beta}, {gamma})"))
}

/// `λ_{[n]} = (n − |λ|, λ_1, λ_2, …)`, if that is a partition.
pub fn padded(lambda: &Partition, n: usize) -> Option<Partition> {
    let first = n.checked_sub(lambda.size())?;
    if lambda.parts().first().is_some_and(|&p| p > first) {
        return None;
    }
    let mut parts = vec![first];
    parts.extend_from_slice(lambda.parts());
    Some(Partition::from_slice(&parts))
}

/// `ḡ^ν_{λμ} = g(λ_{[n]}, μ_{[n]}, ν_{[n]})` at `n = 2r` and `n = 2r + 1`, `r = max(|λ| + |μ|, |ν|)`;
/// the two values must agree.
pub fn stable_kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64, OracleError> {
    let r = (lambda.size() + mu.size()).max(nu.size());
    let at = |n: usize| -> Result<u64, OracleError> {
        let pad = |p: &Partition| padded(p, n).expect("n ≥ 2r pads every partition of size ≤ r");
        kronecker(&pad(lambda), &pad(mu), &pad(nu))
    };
    let n = (2 * r).max(1);
    let (first, second) = (at(n)?, at(n + 1)?);
    if first != second {
        return Err(OracleError::Unstable { n, first, second });
    }
    Ok(first)
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_slice(&parts)
}

/// `c^ν_{λμ} = ⟨χ^ν, Ind(χ^λ × χ^μ)⟩`.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64, OracleError> {
    if lambda.size() + mu.size() != nu.size() {
        return Err(OracleError::SizeMismatch(format!("|{lambda}| + |{mu}| ≠ |{nu}|")));
    }
    let mut chars = Characters::new();
    let mut sum = BigRational::zero();
    for a in partitions_of(lambda.size()) {
        let ca = chars.value(lambda, &a);
        if ca.is_zero() {
            continue;
        }
        for b in partitions_of(mu.size()) {
            let num = &ca * chars.value(mu, &b) * chars.value(nu, &union(&a, &b));
            sum += BigRational::new(num, centralizer_order(&a) * centralizer_order(&b));
        }
    }
    natural(sum, || format!("c^{nu}_{{{lambda},{mu}}}"))
}

/// Value at a class of type `ρ` of the permutation character on the cosets of `S_μ`:
/// the number of ways to distribute the cycles of `ρ` into blocks of sizes `μ_i`.
fn young_permutation_character(mu: &Partition, rho: &Partition) -> BigInt {
    fn fill(cycles: &[usize], blocks: &mut Vec<usize>) -> BigInt {
        let Some((&c, rest)) = cycles.split_first() else {
            return if blocks.iter().all(|&b| b == 0) { BigInt::one() } else { BigInt::zero() };
        };
        let mut total = BigInt::zero();
        for i in 0..blocks.len() {
            if blocks[i] >= c {
                blocks[i] -= c;
                total += fill(rest, blocks);
                blocks[i] += c;
            }
        }
        total
    }
    fill(rho.parts(), &mut mu.parts().to_vec())
}

/// Kostka number `K_{ρμ} = ⟨χ^ρ, Ind_{S_μ} 1⟩`.
pub fn kostka(rho: &Partition, mu: &Partition) -> Result<u64, OracleError> {
    if rho.size() != mu.size() {
        return Err(OracleError::SizeMismatch(format!("{rho}, {mu}")));
    }
    let mut chars = Characters::new();
    let mut sum = BigRational::zero();
    for c in partitions_of(rho.size()) {
        sum += BigRational::new(chars.value(rho, &c) * young_permutation_character(mu, &c), centralizer_order(&c));
    }
    natural(sum, || format!("K({rho}, {mu})"))
}

/// Skew Kostka number `K_{ν/λ, μ} = Σ_ρ c^ν_{λρ} K_{ρμ}`.
pub fn skew_kostka(nu: &Partition, lambda: &Partition, mu: &Partition) -> Result<u64, OracleError> {
    if lambda.size() + mu.size() != nu.size() {
        return Err(OracleError::SizeMismatch(format!("|{nu}| ≠ |{lambda}| + |{mu}|")));
    }
    let mut total = 0;
    for rho in partitions_of(mu.size()) {
        let c = littlewood_richardson(lambda, &rho, nu)?;
        if c > 0 {
            total += c * kostka(&rho, mu)?;
        }
    }
    Ok(total)
}

/// Whether `ν / λ` is a horizontal strip of size `k`.
pub fn is_horizontal_strip(lambda: &Partition, nu: &Partition, k: usize) -> bool {
    if nu.size() != lambda.size() + k || nu.len() < lambda.len() {
        return false;
    }
    (0..nu.len()).all(|i| {
        let inner = lambda.row(i);
        let above = if i == 0 { usize::MAX } else { nu.row(i - 1) };
        let below_inner = if i == 0 { usize::MAX } else { lambda.row(i - 1) };
        nu.row(i) >= inner && nu.row(i) <= above && nu.row(i) <= below_inner
    })
}
