use std::sync::Arc;

use tower_core::algebra::{BasisId, Element};
use tower_core::arith::{Param, Scalar};
use tower_core::combinatorics::{LevelOrder, Partition};
use tower_core::providers::{DiagramTower, PermTower};
use tower_core::tower::checks::{
    check_cellularity, check_compatibility, check_compatibility_level, check_flip, check_jm_family, check_levels,
    check_path_factorization, jm_central_scalars,
};
use tower_core::tower::report::{AxiomReport, Status};
use tower_core::tower::{JmKind, JmSource, Tower, TowerProvider};

fn p(parts: &[usize]) -> Partition {
    Partition::from_slice(parts)
}

fn assert_all_pass(report: &AxiomReport, name: &str) {
    let failures: Vec<_> = report.failures().collect();
    assert!(failures.is_empty(), "{name}: {failures:?}");
}

#[test]
fn hecke_and_symmetric_towers_pass_every_axiom() {
    for provider in [PermTower::hecke(), PermTower::symmetric()] {
        let t = Tower::new(Arc::new(provider), 4);
        let report = check_levels(&t, 4);
        assert_all_pass(&report, &t.name());
        assert!(report.find("cellularity-4a", 3).is_some_and(|r| r.passed()));
    }
}

#[test]
fn diagram_towers_pass_every_axiom() {
    for (provider, r) in [(DiagramTower::temperley_lieb(), 4), (DiagramTower::brauer(), 4), (DiagramTower::partition(), 6)] {
        let t = Tower::new(Arc::new(provider), r);
        assert_all_pass(&check_levels(&t, r), &t.name());
    }
}

#[test]
fn first_hecke_edges_are_compatible() {
    let t = Tower::new(Arc::new(PermTower::hecke()), 2);
    let (d, u) = t.branching_factors(2, &p(&[1]), &p(&[2]));
    let t1 = t.generators(2)[0].clone();
    assert_eq!(d, t.one(2));
    assert_eq!(u, t.one(2).add(&t1));
    assert!(check_compatibility(&t, 2, &p(&[1]), &p(&[2])).is_none());
    let (d, u) = t.branching_factors(2, &p(&[1]), &p(&[1, 1]));
    assert_eq!((d, u), (t.one(2), t.one(2)));
    assert!(check_compatibility(&t, 2, &p(&[1]), &p(&[1, 1])).is_none());
}

#[test]
fn path_factorization_trivial_ends() {
    let t = Tower::new(Arc::new(PermTower::hecke()), 4);
    for lambda in t.graph().labels(4).to_vec() {
        for path in t.standard_paths(4, &lambda) {
            for s in [0, 2, 4] {
                assert!(check_path_factorization(&t, &path, s));
            }
        }
    }
}

#[test]
fn jm_families_pass_and_symmetric_contents_sum() {
    for provider in [PermTower::hecke(), PermTower::symmetric()] {
        let t = Tower::new(Arc::new(provider), 4);
        let JmSource::Explicit(kind) = t.provider().jm_source() else { panic!("explicit family") };
        let ls: Vec<Element> = (0..=4).map(|k| t.provider().jm_element(&t, k).unwrap()).collect();
        for r in 0..=4 {
            let res = check_jm_family(&t, r, kind, &ls);
            assert!(res.passed(), "{} {res:?}", t.name());
        }
    }
    let t = Tower::new(Arc::new(PermTower::symmetric()), 3);
    let ls: Vec<Element> = (0..=3).map(|k| t.provider().jm_element(&t, k).unwrap()).collect();
    let scalars = jm_central_scalars(&t, 3, JmKind::Additive, &ls).unwrap();
    let hook = scalars.iter().find(|(l, _)| l == &p(&[2, 1])).unwrap();
    assert_eq!(hook.1, Scalar::zero());
    let row = scalars.iter().find(|(l, _)| l == &p(&[3])).unwrap();
    assert_eq!(row.1, Scalar::int(3));
}

#[test]
fn brauer_jm_family_passes() {
    let t = Tower::new(Arc::new(DiagramTower::brauer()), 4);
    let ls: Vec<Element> = (0..=4)
        .map(|k| if k == 0 { t.algebra(0).zero() } else { t.provider().jm_element(&t, k).unwrap() })
        .collect();
    for r in 1..=4 {
        assert!(check_jm_family(&t, r, JmKind::Additive, &ls).passed());
    }
}

#[test]
fn replacing_a_jm_element_by_a_generator_fails() {
    let t = Tower::new(Arc::new(PermTower::hecke()), 3);
    let mut ls: Vec<Element> = (0..=3).map(|k| t.provider().jm_element(&t, k).unwrap()).collect();
    ls[2] = t.generators(2)[0].clone();
    let res = check_jm_family(&t, 3, JmKind::Multiplicative, &ls);
    assert_eq!(res.status, Status::Fail);
    assert!(res.witness.is_some());
}

#[test]
fn brauer_flip_commutes_with_left_strands() {
    let t = Tower::new(Arc::new(DiagramTower::brauer()), 3);
    assert!(check_flip(&t, 3).passed());
    let h = Tower::new(Arc::new(PermTower::hecke()), 4);
    let t1 = &h.generators(2)[0];
    let shifted = h.shifted(t1, 4).unwrap();
    assert_eq!(shifted, h.generators(4)[2]);
}

/// Hecke provider whose u-factor on one edge is replaced by `0`.
struct CorruptU {
    inner: PermTower,
    edge: (usize, Partition, Partition),
}

impl TowerProvider for CorruptU {
    fn name(&self) -> String {
        "corrupt".into()
    }
    fn param(&self) -> Option<Param> {
        self.inner.param()
    }
    fn order(&self) -> LevelOrder {
        self.inner.order()
    }
    fn basis(&self, r: usize) -> Vec<BasisId> {
        self.inner.basis(r)
    }
    fn one(&self, r: usize) -> BasisId {
        self.inner.one(r)
    }
    fn product(&self, r: usize, a: &BasisId, b: &BasisId) -> Vec<(BasisId, Scalar)> {
        self.inner.product(r, a, b)
    }
    fn involution(&self, r: usize, a: &BasisId) -> BasisId {
        self.inner.involution(r, a)
    }
    fn include(&self, r: usize, a: &BasisId) -> BasisId {
        self.inner.include(r, a)
    }
    fn declared_dimension(&self, r: usize) -> usize {
        self.inner.declared_dimension(r)
    }
    fn generators(&self, tower: &Tower, r: usize) -> Vec<Element> {
        self.inner.generators(tower, r)
    }
    fn labels(&self, r: usize) -> Vec<Partition> {
        self.inner.labels(r)
    }
    fn edges(&self, r: usize) -> Vec<(Partition, Partition)> {
        self.inner.edges(r)
    }
    fn cell_generator(&self, tower: &Tower, r: usize, lambda: &Partition) -> Element {
        self.inner.cell_generator(tower, r, lambda)
    }
    fn branching_factors(&self, tower: &Tower, r: usize, mu: &Partition, lambda: &Partition) -> (Element, Element) {
        let (d, u) = self.inner.branching_factors(tower, r, mu, lambda);
        if (r, mu, lambda) == (self.edge.0, &self.edge.1, &self.edge.2) {
            (d, tower.algebra(r).zero())
        } else {
            (d, u)
        }
    }
    fn jm_source(&self) -> JmSource {
        self.inner.jm_source()
    }
    fn flip(&self, r: usize, a: &BasisId) -> Option<BasisId> {
        self.inner.flip(r, a)
    }
}

#[test]
fn corrupted_u_factor_is_reported_with_witness() {
    let provider = CorruptU { inner: PermTower::hecke(), edge: (3, p(&[2]), p(&[2, 1])) };
    let t = Tower::new(Arc::new(provider), 3);
    let res = check_compatibility_level(&t, 3);
    assert_eq!(res.status, Status::Fail);
    let w = res.witness.unwrap();
    assert_eq!(w["edge"], "(2)→(2,1)");
    assert!(check_compatibility_level(&t, 2).passed());
    assert!(check_cellularity(&t, 3).iter().all(|r| r.passed()));
    let report = check_levels(&t, 3);
    assert!(!report.passed());
    let json = serde_json::to_string(&report).unwrap();
    assert!(json.contains("\"status\":\"fail\""));
}
