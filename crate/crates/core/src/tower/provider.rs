use serde::{Deserialize, Serialize};

use crate::algebra::{BasisId, Element};
use crate::arith::{Param, Scalar};
use crate::combinatorics::{LevelOrder, Partition};

use super::Tower;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JmKind {
    /// `L_1 + … + L_r` acts by scalars on cell modules.
    Additive,
    /// `L_1 ⋯ L_r` acts by scalars on cell modules.
    Multiplicative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JmSource {
    /// The provider supplies `L_k` directly.
    Explicit(JmKind),
    /// `L_k = Z_k - Z_{k-1}` for integral central elements `Z_k` separating the cells of level `k`.
    CentralDifference,
    None,
}

/// How cell modules of a level may be reduced modulo `A^{⊳λ}` without materializing the ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducerHint {
    Generic,
    /// Group algebra of a symmetric group: reduce through tabloids and polytabloids.
    SymmetricGroup,
    /// Diagram algebra whose ideals are filtered by propagating rank.
    DiagramRank,
}

/// The data of a tower of cellular algebras: multiplication, involution, inclusions,
/// branching graph, cell generators, branching factors, Jucys–Murphy family and flip.
pub trait TowerProvider: Send + Sync {
    fn name(&self) -> String;

    /// The indeterminate of the ground ring, if any.
    fn param(&self) -> Option<Param>;

    fn order(&self) -> LevelOrder;

    fn basis(&self, r: usize) -> Vec<BasisId>;

    fn one(&self, r: usize) -> BasisId;

    fn product(&self, r: usize, a: &BasisId, b: &BasisId) -> Vec<(BasisId, Scalar)>;

    fn involution(&self, r: usize, a: &BasisId) -> BasisId;

    /// The image in level `r` of a basis element of level `r - 1`.
    fn include(&self, r: usize, a: &BasisId) -> BasisId;

    /// Closed-form dimension of level `r`.
    fn declared_dimension(&self, r: usize) -> usize;

    /// Algebra generators of level `r`.
    fn generators(&self, tower: &Tower, r: usize) -> Vec<Element>;

    fn labels(&self, r: usize) -> Vec<Partition>;

    /// Edges from level `r - 1` into level `r`.
    fn edges(&self, r: usize) -> Vec<(Partition, Partition)>;

    /// The symmetric generator `c_λ` of the cell module of `λ` at level `r`.
    fn cell_generator(&self, tower: &Tower, r: usize, lambda: &Partition) -> Element;

    /// `(d, u)` for the edge `mu → lambda` from level `r - 1` to level `r`.
    fn branching_factors(&self, tower: &Tower, r: usize, mu: &Partition, lambda: &Partition) -> (Element, Element);

    fn jm_source(&self) -> JmSource;

    /// `L_k` as an element of level `k`, for explicit families.
    fn jm_element(&self, _tower: &Tower, _k: usize) -> Option<Element> {
        None
    }

    /// The order-two automorphism of level `r`, where defined.
    fn flip(&self, r: usize, a: &BasisId) -> Option<BasisId>;

    /// Whether `r` is a level at which the flip is defined.
    fn has_flip(&self, r: usize) -> bool {
        let _ = r;
        true
    }

    fn reducer_hint(&self, _r: usize) -> ReducerHint {
        ReducerHint::Generic
    }

    /// Number of internal levels per user-facing level (2 for towers with half levels).
    fn level_stride(&self) -> usize {
        1
    }
}
