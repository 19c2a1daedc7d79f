//! Set-partition diagrams on `k` top and `k` bottom points.
//!
//! A diagram is a block label per point: positions `0..k` are the top points `1..k`,
//! positions `k..2k` the bottom points `1'..k'`. Labels are kept in restricted-growth form.

use crate::algebra::canonical_rgs;

/// Which diagrams a family admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramFamily {
    TemperleyLieb,
    Brauer,
    Partition,
    /// Partition diagrams on `k` strands in which `k` and `k'` share a block.
    HalfPartition,
}

pub fn strands(d: &[u8]) -> usize {
    d.len() / 2
}

fn block_sizes(d: &[u8]) -> Vec<usize> {
    let n = d.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut sizes = vec![0; n];
    for &l in d {
        sizes[l as usize] += 1;
    }
    sizes
}

/// Position of a point in the cyclic order `1, …, k, k', …, 1'`.
fn cyclic_position(i: usize, k: usize) -> usize {
    if i < k {
        i
    } else {
        3 * k - 1 - i
    }
}

pub fn is_planar(d: &[u8]) -> bool {
    let k = strands(d);
    let mut by_pos = vec![0u8; d.len()];
    for (i, &l) in d.iter().enumerate() {
        by_pos[cyclic_position(i, k)] = l;
    }
    let n = by_pos.len();
    for a in 0..n {
        for b in a + 1..n {
            if by_pos[b] == by_pos[a] {
                continue;
            }
            for c in b + 1..n {
                if by_pos[c] != by_pos[a] {
                    continue;
                }
                if (c + 1..n).any(|e| by_pos[e] == by_pos[b]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn belongs_to(d: &[u8], family: DiagramFamily) -> bool {
    let k = strands(d);
    match family {
        DiagramFamily::Brauer => block_sizes(d).iter().all(|&s| s == 2),
        DiagramFamily::TemperleyLieb => block_sizes(d).iter().all(|&s| s == 2) && is_planar(d),
        DiagramFamily::Partition => true,
        DiagramFamily::HalfPartition => k > 0 && d[k - 1] == d[2 * k - 1],
    }
}

/// All set partitions of `n` points in restricted-growth form, lexicographically.
pub fn set_partitions(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; n];
    fn rec(i: usize, max: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max + 1 {
            cur[i] = l;
            rec(i + 1, max.max(l), cur, out);
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(1, 0, &mut cur, &mut out);
    }
    out
}

/// Perfect matchings of `n` points, as restricted-growth labels.
fn matchings(n: usize) -> Vec<Vec<u8>> {
    fn rec(cur: &mut Vec<u8>, next: u8, out: &mut Vec<Vec<u8>>) {
        let Some(i) = cur.iter().position(|&x| x == u8::MAX) else {
            out.push(canonical_rgs(cur));
            return;
        };
        cur[i] = next;
        for j in i + 1..cur.len() {
            if cur[j] == u8::MAX {
                cur[j] = next;
                rec(cur, next + 1, out);
                cur[j] = u8::MAX;
            }
        }
        cur[i] = u8::MAX;
    }
    let mut out = Vec::new();
    if n % 2 == 0 {
        rec(&mut vec![u8::MAX; n], 0, &mut out);
    }
    out.sort();
    out
}

/// All diagrams of a family on `k` strands, sorted.
pub fn enumerate(family: DiagramFamily, k: usize) -> Vec<Vec<u8>> {
    match family {
        DiagramFamily::Brauer => matchings(2 * k),
        DiagramFamily::TemperleyLieb => matchings(2 * k).into_iter().filter(|d| is_planar(d)).collect(),
        DiagramFamily::Partition => set_partitions(2 * k),
        DiagramFamily::HalfPartition => {
            set_partitions(2 * k).into_iter().filter(|d| belongs_to(d, DiagramFamily::HalfPartition)).collect()
        }
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Stacks `top` over `bottom`; returns the resulting diagram and the number of components
/// that touch only the middle row.
pub fn compose(top: &[u8], bottom: &[u8]) -> (Vec<u8>, usize) {
    let k = strands(top);
    assert_eq!(k, strands(bottom), "diagrams on different strand counts");
    let mut parent: Vec<usize> = (0..3 * k).collect();
    let mut first = [usize::MAX; 256];
    for (i, &l) in top.iter().enumerate() {
        let f = &mut first[l as usize];
        if *f == usize::MAX {
            *f = i;
        } else {
            union(&mut parent, *f, i);
        }
    }
    let mut first = [usize::MAX; 256];
    for (i, &l) in bottom.iter().enumerate() {
        let p = i + k;
        let f = &mut first[l as usize];
        if *f == usize::MAX {
            *f = p;
        } else {
            union(&mut parent, *f, p);
        }
    }
    let mut outer = vec![false; 3 * k];
    let mut labels = Vec::with_capacity(2 * k);
    for i in (0..k).chain(2 * k..3 * k) {
        let r = find(&mut parent, i);
        outer[r] = true;
        labels.push(r as u8);
    }
    let mut loops = 0;
    for m in k..2 * k {
        let r = find(&mut parent, m);
        if r == m && !outer[r] {
            loops += 1;
        }
    }
    (canonical_rgs(&labels), loops)
}

/// Top-bottom mirror image.
pub fn reflect(d: &[u8]) -> Vec<u8> {
    let k = strands(d);
    let mut v = d[k..].to_vec();
    v.extend_from_slice(&d[..k]);
    canonical_rgs(&v)
}

/// Relabels strands `i ↦ k + 1 - i` on both rows.
pub fn flip(d: &[u8]) -> Vec<u8> {
    let k = strands(d);
    let mut v: Vec<u8> = d[..k].iter().rev().copied().collect();
    v.extend(d[k..].iter().rev());
    canonical_rgs(&v)
}

/// Adds a through strand `{k+1, (k+1)'}` on the right.
pub fn add_strand(d: &[u8]) -> Vec<u8> {
    let k = strands(d);
    let fresh = d.iter().copied().max().map_or(0, |m| m + 1);
    let mut v = d[..k].to_vec();
    v.push(fresh);
    v.extend_from_slice(&d[k..]);
    v.push(fresh);
    canonical_rgs(&v)
}

pub fn identity(k: usize) -> Vec<u8> {
    permutation(&(1..=k as u8).collect::<Vec<_>>())
}

/// The diagram joining top `j` to bottom `w(j)`.
pub fn permutation(w: &[u8]) -> Vec<u8> {
    let k = w.len();
    let mut v = vec![0u8; 2 * k];
    for (j, &x) in w.iter().enumerate() {
        v[j] = j as u8;
        v[k + x as usize - 1] = j as u8;
    }
    canonical_rgs(&v)
}

/// `e_i`: top `i` joined to top `i+1`, bottom `i'` to `(i+1)'`, other strands vertical.
pub fn cup_cap(k: usize, i: usize) -> Vec<u8> {
    let mut v: Vec<u8> = (0..k as u8).chain(0..k as u8).collect();
    v[i] = v[i - 1];
    v[k + i - 1] = k as u8;
    v[k + i] = k as u8;
    canonical_rgs(&v)
}

/// `e_{ij}`: top `i` joined to top `j`, bottom `i'` to `j'`, other strands vertical.
pub fn contraction(k: usize, i: usize, j: usize) -> Vec<u8> {
    let mut v: Vec<u8> = (0..k as u8).chain(0..k as u8).collect();
    v[j - 1] = v[i - 1];
    v[k + i - 1] = k as u8;
    v[k + j - 1] = k as u8;
    canonical_rgs(&v)
}

/// `p_i`: strand `i` cut into the singletons `{i}` and `{i'}`.
pub fn cut(k: usize, i: usize) -> Vec<u8> {
    let mut v: Vec<u8> = (0..k as u8).chain(0..k as u8).collect();
    v[k + i - 1] = k as u8;
    canonical_rgs(&v)
}

/// `p_{i+1/2}`: strands `i` and `i+1` merged into one block.
pub fn merge(k: usize, i: usize) -> Vec<u8> {
    let mut v: Vec<u8> = (0..k as u8).chain(0..k as u8).collect();
    v[i] = v[i - 1];
    v[k + i] = v[i - 1];
    canonical_rgs(&v)
}

/// Number of blocks meeting both rows.
pub fn propagating_number(d: &[u8]) -> usize {
    let k = strands(d);
    let n = d.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut top = vec![false; n];
    let mut bot = vec![false; n];
    for i in 0..k {
        top[d[i] as usize] = true;
        bot[d[k + i] as usize] = true;
    }
    (0..n).filter(|&b| top[b] && bot[b]).count()
}

/// Writes a diagram of propagating number `p` as a representative `d0`, whose `j`-th propagating top
/// block meets the `j`-th propagating bottom block, together with the permutation `σ ∈ S_p` sending
/// the `j`-th top block to the position of its bottom block. Blocks are ordered by their least point.
pub fn split_propagating(d: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let k = strands(d);
    let n = d.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut on_top = vec![false; n];
    for &l in &d[..k] {
        on_top[l as usize] = true;
    }
    let mut bottom_order: Vec<u8> = Vec::new();
    for &l in &d[k..] {
        if on_top[l as usize] && !bottom_order.contains(&l) {
            bottom_order.push(l);
        }
    }
    let mut top_order = bottom_order.clone();
    top_order.sort();
    let sigma: Vec<u8> = top_order.iter().map(|l| bottom_order.iter().position(|b| b == l).unwrap() as u8 + 1).collect();
    let mut d0 = d.to_vec();
    for x in d0[k..].iter_mut() {
        if let Some(pos) = bottom_order.iter().position(|b| b == x) {
            *x = top_order[pos];
        }
    }
    (canonical_rgs(&d0), sigma)
}

/// Inverse of [`split_propagating`].
pub fn join_propagating(d0: &[u8], sigma: &[u8]) -> Vec<u8> {
    let k = strands(d0);
    let n = d0.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut on_top = vec![false; n];
    for &l in &d0[..k] {
        on_top[l as usize] = true;
    }
    let mut bottom_order: Vec<u8> = Vec::new();
    for &l in &d0[k..] {
        if on_top[l as usize] && !bottom_order.contains(&l) {
            bottom_order.push(l);
        }
    }
    let mut top_order = bottom_order.clone();
    top_order.sort();
    let mut sigma_inv = vec![0usize; sigma.len()];
    for (i, &j) in sigma.iter().enumerate() {
        sigma_inv[j as usize - 1] = i;
    }
    let mut d = d0.to_vec();
    for x in d[k..].iter_mut() {
        if let Some(pos) = bottom_order.iter().position(|b| b == x) {
            *x = top_order[sigma_inv[pos]];
        }
    }
    canonical_rgs(&d)
}
