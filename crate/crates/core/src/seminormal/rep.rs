use crate::algebra::MatrixF;
use crate::arith::{Rational, Scalar};

/// Block-diagonal matrix, one block per cell module of a level.
#[derive(Debug, Clone, PartialEq)]
pub struct RepMatrix {
    blocks: Vec<MatrixF>,
}

impl RepMatrix {
    pub fn new(blocks: Vec<MatrixF>) -> Self {
        RepMatrix { blocks }
    }

    pub fn identity(dims: &[usize]) -> Self {
        RepMatrix { blocks: dims.iter().map(|&d| MatrixF::identity(d)).collect() }
    }

    pub fn zero(dims: &[usize]) -> Self {
        RepMatrix { blocks: dims.iter().map(|&d| MatrixF::zeros(d, d)).collect() }
    }

    pub fn scalar(dims: &[usize], c: &Scalar) -> Self {
        Self::identity(dims).scale(c)
    }

    pub fn blocks(&self) -> &[MatrixF] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &MatrixF {
        &self.blocks[i]
    }

    pub fn set_block(&mut self, i: usize, m: MatrixF) {
        self.blocks[i] = m;
    }

    fn zip(&self, other: &Self, f: impl Fn(&MatrixF, &MatrixF) -> MatrixF) -> Self {
        assert_eq!(self.blocks.len(), other.blocks.len());
        RepMatrix { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip(other, MatrixF::mul)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, MatrixF::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, MatrixF::sub)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        RepMatrix { blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(MatrixF::is_zero)
    }

    /// Specialization of every entry; `None` where a denominator vanishes.
    pub fn evaluate_at(&self, point: &Rational) -> Option<Self> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let rows = b
                    .to_rows()
                    .into_iter()
                    .map(|r| r.iter().map(|x| x.evaluate_at(point).map(Scalar::Rat).ok()).collect::<Option<Vec<_>>>())
                    .collect::<Option<Vec<_>>>()?;
                Some(if rows.is_empty() { MatrixF::zeros(0, 0) } else { MatrixF::from_rows(rows) })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(RepMatrix { blocks })
    }
}
