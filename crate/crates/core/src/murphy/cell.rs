use crate::algebra::{Element, MatrixF, SparseVec, SubspaceBasis};
use crate::arith::Scalar;
use crate::combinatorics::{Partition, PathTableau};
use crate::tower::Tower;

use super::{murphy_level, MurphyError, Reducer, ReducerKind};

/// The cell module `Δ_r(λ)` realized as `c_λ A_r` modulo `A^{⊳λ}`, with basis `m_t = c_λ d_t`.
pub struct CellModule {
    level: usize,
    label: Partition,
    paths: Vec<PathTableau>,
    reps: Vec<Element>,
    reducer: Reducer,
    span: SubspaceBasis,
    reduced_c: SparseVec,
}

impl CellModule {
    pub fn new(tower: &Tower, r: usize, lambda: &Partition, kind: ReducerKind) -> Result<Self, MurphyError> {
        let ml = murphy_level(tower, r);
        let data = ml.label(lambda)?;
        let reducer = Reducer::new(tower, r, lambda, kind)?;
        let mut span = SubspaceBasis::new(true);
        let mut got = 0;
        for m in &data.reps {
            if span.insert(&reducer.reduce(m)) {
                got += 1;
            }
        }
        if got != data.dim() {
            return Err(MurphyError::RankDeficient { level: r, label: lambda.to_string(), expected: data.dim(), got });
        }
        let reduced_c = reducer.reduce(&tower.cell_generator(r, lambda));
        Ok(CellModule {
            level: r,
            label: lambda.clone(),
            paths: data.paths.clone(),
            reps: data.reps.clone(),
            reducer,
            span,
            reduced_c,
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn label(&self) -> &Partition {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    /// Basis paths, in revlex-descending order.
    pub fn paths(&self) -> &[PathTableau] {
        &self.paths
    }

    pub fn representatives(&self) -> &[Element] {
        &self.reps
    }

    pub fn reducer(&self) -> &Reducer {
        &self.reducer
    }

    /// Coordinates of `x + A^{⊳λ}` in the basis `m_t`, for `x` in `c_λ A_r`.
    pub fn coordinates(&self, x: &Element) -> Result<Vec<Scalar>, MurphyError> {
        let v = self.reducer.reduce(x);
        let sol = self
            .span
            .solve(&v)
            .ok_or_else(|| MurphyError::OutsideCell { level: self.level, label: self.label.to_string() })?;
        let mut out = vec![Scalar::zero(); self.dim()];
        for (k, c) in sol {
            out[k as usize] = c;
        }
        Ok(out)
    }

    /// Right action of `a ∈ A_r`: row `t` holds the coordinates of `m_t a`.
    pub fn act(&self, tower: &Tower, a: &Element) -> Result<MatrixF, MurphyError> {
        let rows = self
            .reps
            .iter()
            .map(|m| self.coordinates(&tower.mul(m, a)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MatrixF::from_rows(rows))
    }

    /// Scalar `α` with `x ≡ α c_λ` modulo `A^{⊳λ}`, if it exists.
    pub fn scalar_multiple_of_c(&self, x: &Element) -> Option<Scalar> {
        let v = self.reducer.reduce(x);
        let (k, c0) = self.reduced_c.iter().next()?;
        let alpha = v.get(k).cloned().unwrap_or_else(Scalar::zero) / c0;
        let keys_match = v.keys().all(|j| self.reduced_c.contains_key(j));
        (keys_match && self.reduced_c.iter().all(|(j, c)| v.get(j).cloned().unwrap_or_else(Scalar::zero) == &alpha * c))
            .then_some(alpha)
    }

    /// Gram matrix: `c_λ d_s d_t* c_λ ≡ ⟨m_s, m_t⟩ c_λ`.
    pub fn gram(&self, tower: &Tower) -> Result<MatrixF, MurphyError> {
        let n = self.dim();
        let stars: Vec<Element> = self.reps.iter().map(|m| tower.involve(m)).collect();
        let mut g = MatrixF::zeros(n, n);
        for s in 0..n {
            for t in s..n {
                let x = tower.mul(&self.reps[s], &stars[t]);
                let alpha = self
                    .scalar_multiple_of_c(&x)
                    .ok_or_else(|| MurphyError::OutsideCell { level: self.level, label: self.label.to_string() })?;
                g.set(s, t, alpha.clone());
                g.set(t, s, alpha);
            }
        }
        Ok(g)
    }
}
