//! Concrete towers: Hecke and symmetric group algebras, and diagram algebras via the basic construction.

pub mod young;
mod basic;
pub mod diagram;
mod perm;

pub use basic::{DiagramKind, DiagramTower, LoopValue};
pub use perm::PermTower;
