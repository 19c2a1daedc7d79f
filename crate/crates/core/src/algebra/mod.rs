//! Sparse elements of finite-dimensional algebras with involution and exact linear algebra.

mod basis;
mod element;
mod level;
mod linalg;

pub use basis::{BasisId, BasisKind, BasisParseError};
pub use element::{add_entry, axpy, scale_vec, Element, SparseVec};
pub use level::{AlgebraError, LevelAlgebra, ProductRule};
pub use linalg::{row_times, sparse_nullspace, sparse_rank, MatrixF, SubspaceBasis};

pub(crate) use basis::canonical_rgs;
