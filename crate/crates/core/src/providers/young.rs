//! Symmetric-group combinatorics shared by the permutation and diagram providers.

use crate::combinatorics::Partition;

/// Permutation in one-line notation with 1-based values.
pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (1..=n as u8).collect()
}

/// Product "apply `w`, then `v`".
pub fn then(w: &[u8], v: &[u8]) -> Perm {
    w.iter().map(|&x| v[x as usize - 1]).collect()
}

pub fn inverse(w: &[u8]) -> Perm {
    let mut out = vec![0u8; w.len()];
    for (i, &x) in w.iter().enumerate() {
        out[x as usize - 1] = i as u8 + 1;
    }
    out
}

/// `w · s_i`: exchanges the values `i` and `i + 1`.
pub fn times_generator(w: &[u8], i: usize) -> Perm {
    w.iter()
        .map(|&x| match x as usize {
            v if v == i => (i + 1) as u8,
            v if v == i + 1 => i as u8,
            _ => x,
        })
        .collect()
}

/// Whether `ℓ(w s_i) > ℓ(w)`, i.e. the value `i` precedes `i + 1`.
pub fn is_ascent(w: &[u8], i: usize) -> bool {
    let pos = |v: usize| w.iter().position(|&x| x as usize == v).unwrap();
    pos(i) < pos(i + 1)
}

pub fn length(w: &[u8]) -> usize {
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// A reduced word `[i_1, …, i_k]` with `w = s_{i_1} ⋯ s_{i_k}` in the "then" product.
pub fn reduced_word(w: &[u8]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut word = Vec::new();
    'outer: loop {
        for i in 1..w.len() {
            if !is_ascent(&w, i) {
                w = times_generator(&w, i);
                word.push(i);
                continue 'outer;
            }
        }
        break;
    }
    word.reverse();
    word
}

pub fn from_word(n: usize, word: &[usize]) -> Perm {
    word.iter().fold(identity(n), |w, &i| times_generator(&w, i))
}

/// All permutations of `{1..n}` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        let i = match (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
            Some(i) => i,
            None => break,
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// `w0 w w0`.
pub fn conjugate_by_longest(w: &[u8]) -> Perm {
    let n = w.len();
    (0..n).map(|j| (n + 1 - w[n - 1 - j] as usize) as u8).collect()
}

/// Sign of a permutation.
pub fn sign(w: &[u8]) -> i64 {
    if length(w) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The Young subgroup fixing the rows of the row-reading tableau of `lambda`, inside `S_n`.
pub fn young_subgroup(lambda: &Partition, n: usize) -> Vec<Perm> {
    let mut blocks = Vec::new();
    let mut start = 1usize;
    for &p in lambda.parts() {
        blocks.push((start, p));
        start += p;
    }
    let mut out = vec![identity(n)];
    for (s, len) in blocks {
        let local = all_perms(len);
        let mut next = Vec::with_capacity(out.len() * local.len());
        for w in &out {
            for l in &local {
                let mut v = w.clone();
                for k in 0..len {
                    v[s - 1 + k] = (s + l[k] as usize - 1) as u8;
                }
                next.push(v);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Words for the add-a-box branching factors of the Hecke tower.
pub struct BranchWords {
    pub d: Vec<usize>,
    pub u: Vec<Vec<usize>>,
}

/// For `mu → lambda` with the new box in row `j`: `a = λ_1 + … + λ_j`, `i = |λ|`,
/// `d = T_a T_{a+1} ⋯ T_{i-1}` and `u = T_{i-1} ⋯ T_a · Σ_{k=0}^{μ_j} T_{a-1} ⋯ T_{a-k}`.
pub fn branch_words(mu: &Partition, lambda: &Partition) -> BranchWords {
    let row = (0..lambda.len()).find(|&j| lambda.row(j) != mu.row(j)).expect("lambda = mu + box");
    let a: usize = lambda.parts()[..=row].iter().sum();
    let i = lambda.size();
    let d: Vec<usize> = (a..i).collect();
    let prefix: Vec<usize> = (a..i).rev().collect();
    let u = (0..=mu.row(row))
        .map(|k| {
            let mut w = prefix.clone();
            w.extend((a - k..a).rev());
            w
        })
        .collect();
    BranchWords { d, u }
}

/// The permutation `w(t)` with `w(t^λ(b)) = t(b)` for every box `b`, where `t^λ` is the row reading
/// tableau and `t` is the standard tableau recorded by a path of partitions.
pub fn tableau_permutation(steps: &[Partition]) -> Perm {
    let lambda = steps.last().unwrap();
    let n = lambda.size();
    let mut entry = vec![Vec::new(); lambda.len()];
    for (k, w) in steps.windows(2).enumerate() {
        let row = (0..w[1].len()).find(|&j| w[1].row(j) != w[0].row(j)).unwrap();
        entry[row].push(k + 1);
    }
    let mut perm = vec![0u8; n];
    let mut reading = 1usize;
    for row in &entry {
        for &val in row {
            perm[reading - 1] = val as u8;
            reading += 1;
        }
    }
    perm
}
