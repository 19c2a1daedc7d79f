use std::collections::HashMap;
use std::fmt;

use super::element::{axpy, scale_vec, SparseVec};
use crate::arith::Scalar;

struct Row {
    vec: SparseVec,
    pivot: u32,
    comb: SparseVec,
}

/// Prefix-stable semi-echelon basis of a subspace of sparse vectors.
///
/// Each stored row has coefficient 1 at its pivot and 0 at the pivots of all earlier rows.
/// Optionally records every row as a combination of the inserted vectors.
pub struct SubspaceBasis {
    rows: Vec<Row>,
    pivots: HashMap<u32, usize>,
    track: bool,
    inserted: u32,
}

impl SubspaceBasis {
    pub fn new(track: bool) -> Self {
        SubspaceBasis { rows: Vec::new(), pivots: HashMap::new(), track, inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().map(|r| r.pivot)
    }

    fn reduce_tracked(&self, v: &SparseVec, want_mult: bool) -> (SparseVec, Vec<(usize, Scalar)>) {
        let mut v = v.clone();
        let mut mult = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(c) = v.get(&row.pivot).cloned() {
                axpy(&mut v, &-c.clone(), &row.vec);
                debug_assert!(!v.contains_key(&row.pivot));
                if want_mult {
                    mult.push((i, c));
                }
            }
        }
        (v, mult)
    }

    /// Canonical representative of `v` modulo the span; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_tracked(v, false).0
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` as the next input vector; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let k = self.inserted;
        self.inserted += 1;
        let (res, mult) = self.reduce_tracked(v, self.track);
        if res.is_empty() {
            return false;
        }
        let pivot = res
            .iter()
            .find(|(_, c)| c.is_unit_of_base())
            .or_else(|| res.iter().next())
            .map(|(k, _)| *k)
            .unwrap();
        let inv = res[&pivot].inv();
        let vec = scale_vec(&res, &inv);
        let comb = if self.track {
            let mut comb = SparseVec::new();
            comb.insert(k, Scalar::one());
            for (i, c) in mult {
                axpy(&mut comb, &-c, &self.rows[i].comb);
            }
            scale_vec(&comb, &inv)
        } else {
            SparseVec::new()
        };
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(Row { vec, pivot, comb });
        true
    }

    /// Coordinates of `v` with respect to the inserted vectors, or `None` outside the span.
    /// Requires tracking.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.track, "solve requires a tracking basis");
        let (res, mult) = self.reduce_tracked(v, true);
        if !res.is_empty() {
            return None;
        }
        let mut out = SparseVec::new();
        for (i, c) in mult {
            axpy(&mut out, &c, &self.rows[i].comb);
        }
        Some(out)
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.iter().map(|r| &r.vec)
    }
}

/// Dense matrix over the scalar field.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixF {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for MatrixF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixF {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl MatrixF {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixF { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatrixF::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        MatrixF { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds an `rows x cols` matrix from sparse rows.
    pub fn from_sparse_rows(rows: &[SparseVec], cols: usize) -> Self {
        let mut m = MatrixF::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r {
                m.set(i, *j as usize, c.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn sparse_row(&self, i: usize) -> SparseVec {
        self.row(i).iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j as u32, c.clone())).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> MatrixF {
        let mut t = MatrixF::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &MatrixF) -> MatrixF {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = MatrixF::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &MatrixF) -> MatrixF {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        MatrixF { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &MatrixF) -> MatrixF {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        MatrixF { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> MatrixF {
        MatrixF { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> MatrixF {
        MatrixF { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[MatrixF]) -> MatrixF {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = MatrixF::zeros(r, c);
        let (mut oi, mut oj) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(oi + i, oj + j, b.get(i, j).clone());
                }
            }
            oi += b.rows;
            oj += b.cols;
        }
        m
    }

    /// Kronecker product.
    pub fn kron(&self, other: &MatrixF) -> MatrixF {
        let mut m = MatrixF::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        m
    }

    /// Row echelon form by Gaussian elimination; returns the reduced matrix, pivot columns,
    /// and the determinant factor accumulated from row swaps and pivots.
    fn eliminate(&self, reduce_above: bool) -> (MatrixF, Vec<usize>, Scalar) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det = Scalar::one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let best = (r..m.rows).filter(|&i| !m.get(i, c).is_zero()).min_by_key(|&i| m.get(i, c).weight());
            let p = match best {
                Some(p) => p,
                None => continue,
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
                det = -det;
            }
            let pv = m.get(r, c).clone();
            det = &det * &pv;
            let inv = pv.inv();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            let range: Vec<usize> = if reduce_above { (0..m.rows).filter(|&i| i != r).collect() } else { (r + 1..m.rows).collect() };
            for i in range {
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let rj = m.get(r, j);
                    if rj.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * rj);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate(false).1.len()
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let (_, pivots, det) = self.eliminate(false);
        if pivots.len() < self.rows {
            Scalar::zero()
        } else {
            det
        }
    }

    pub fn inverse(&self) -> Option<MatrixF> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = MatrixF::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (red, pivots, _) = aug.eliminate(true);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = MatrixF::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Basis of the right null space `{x : self * x = 0}`, as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots, _) = self.eliminate(true);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Scalar::zero(); self.cols];
                x[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = -red.get(r, f).clone();
                }
                x
            })
            .collect()
    }

    /// Solves `self * x = b` for a column vector `x`.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = MatrixF::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (red, pivots, _) = aug.eliminate(true);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = red.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Solves `x * self = b` for a row vector `x`.
    pub fn solve_left(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        self.transpose().solve(b)
    }
}

/// Rank of a family of sparse rows.
pub fn sparse_rank(rows: &[SparseVec]) -> usize {
    let mut sb = SubspaceBasis::new(false);
    for r in rows {
        sb.insert(r);
    }
    sb.rank()
}

/// Basis of `{x : r · x = 0 for every row r}`, for vectors with `ncols` coordinates.
pub fn sparse_nullspace(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut sb = SubspaceBasis::new(false);
    for r in rows {
        sb.insert(r);
    }
    let echelon: Vec<(u32, &SparseVec)> = sb.pivots().zip(sb.row_vectors()).collect();
    let pivot_set: std::collections::HashSet<u32> = echelon.iter().map(|(p, _)| *p).collect();
    (0..ncols as u32)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut x = SparseVec::new();
            x.insert(free, Scalar::one());
            for (p, row) in echelon.iter().rev() {
                let mut acc = Scalar::zero();
                for (j, c) in row.iter() {
                    if j != p {
                        if let Some(v) = x.get(j) {
                            acc -= &(c * v);
                        }
                    }
                }
                if !acc.is_zero() {
                    x.insert(*p, acc);
                }
            }
            x
        })
        .collect()
}

/// `v * m` for a row vector `v`.
pub fn row_times(v: &[Scalar], m: &MatrixF) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); m.ncols()];
    for (k, a) in v.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            let b = m.get(k, j);
            if !b.is_zero() {
                *o = &*o + &(a * b);
            }
        }
    }
    out
}
