use std::sync::Arc;

use tower_core::combinatorics::{maximal_paths, partitions_of, Partition};
use tower_core::murphy::{cell_module, ReducerKind};
use tower_core::oracle::{littlewood_richardson, skew_kostka, stable_kronecker};
use tower_core::providers::{DiagramTower, PermTower};
use tower_core::seminormal::{JmFamily, Seminormal};
use tower_core::skew::{
    adjunction_dimensions, decompose, hom_multiplicity, isomorphic, permutation_multiplicity, realization_dimensions,
    skew_multiplicities, IdempotentRealization, PartitionKronecker, RegularModule, RightModule, SkewModule,
};
use tower_core::tower::Tower;

fn p(parts: &[usize]) -> Partition {
    Partition::from_slice(parts)
}

fn symmetric(r: usize) -> Tower {
    Tower::new(Arc::new(PermTower::symmetric()), r)
}

#[test]
fn skew_dimensions_small_cases() {
    let t = symmetric(4);
    let m = SkewModule::new(&t, &p(&[2, 1]), 3, &p(&[1]), 1).unwrap();
    assert_eq!(m.dim(), 2);
    let full = SkewModule::new(&t, &p(&[2, 1]), 3, &Partition::empty(), 0).unwrap();
    assert_eq!(full.dim(), 2);
    let same = SkewModule::new(&t, &p(&[2, 1]), 3, &p(&[2, 1]), 3).unwrap();
    assert_eq!(same.dim(), 1);
    let m = SkewModule::new(&t, &p(&[2, 2]), 4, &p(&[1, 1]), 2).unwrap();
    assert_eq!(m.dim(), 1);
}

#[test]
fn skew_dimensions_count_paths_on_every_tower() {
    let towers = [
        (symmetric(4), 4, 1),
        (Tower::new(Arc::new(PermTower::hecke()), 4), 4, 1),
        (Tower::new(Arc::new(DiagramTower::brauer()), 4), 4, 1),
        (Tower::new(Arc::new(DiagramTower::temperley_lieb()), 4), 4, 1),
        (Tower::new(Arc::new(DiagramTower::partition()), 6), 6, 2),
    ];
    for (t, max, step) in towers {
        for r in (0..=max).step_by(step) {
            for nu in t.graph().labels(r).to_vec() {
                for s in (0..=r).step_by(step) {
                    for lambda in t.graph().labels(s).to_vec() {
                        let m = SkewModule::new(&t, &nu, r, &lambda, s).unwrap();
                        assert_eq!(m.dim(), m.paths().len());
                    }
                }
            }
        }
    }
}

#[test]
fn skew_module_is_independent_of_maximal_path() {
    let towers = [
        (symmetric(4), 4, 1),
        (Tower::new(Arc::new(DiagramTower::brauer()), 4), 4, 1),
        (Tower::new(Arc::new(DiagramTower::temperley_lieb()), 4), 4, 1),
        (Tower::new(Arc::new(DiagramTower::partition()), 6), 6, 2),
    ];
    for (t, r, step) in towers {
        for s in (0..=r).step_by(step) {
            for lambda in t.graph().labels(s).to_vec() {
                let choices = maximal_paths(t.graph(), &lambda, s);
                assert!(!choices.is_empty());
                for nu in t.graph().labels(r).to_vec() {
                    let default = SkewModule::new(&t, &nu, r, &lambda, s).unwrap();
                    assert_eq!(default.maximal_path(), &choices[0]);
                    for other in &choices[1..] {
                        let alt = SkewModule::with_maximal_path(&t, &nu, r, other.clone()).unwrap();
                        assert!(isomorphic(&t, &default, &alt).unwrap(), "{nu}∖{lambda} via {other}");
                    }
                }
            }
        }
    }
}

#[test]
fn idempotent_realizations_match_skew_modules() {
    for t in [symmetric(4), Tower::new(Arc::new(PermTower::hecke()), 4)] {
        let sn = Seminormal::new(&t, 4).unwrap();
        for nu in t.graph().labels(4).to_vec() {
            for s in 1..=3 {
                for lambda in t.graph().labels(s).to_vec() {
                    let skew = SkewModule::new(&t, &nu, 4, &lambda, s).unwrap();
                    let dims = realization_dimensions(&t, &sn, &nu, &lambda, s).unwrap();
                    assert!(dims.iter().all(|(_, d)| *d == skew.dim()), "{nu}∖{lambda}: {dims:?}");
                    for (u, _) in dims.iter().take(2) {
                        let real = IdempotentRealization::new(&t, &sn, &nu, u).unwrap();
                        assert!(isomorphic(&t, &skew, &real).unwrap(), "{nu}∖{lambda} via {u}");
                    }
                }
            }
        }
    }
}

#[test]
fn hom_multiplicity_trivial_cases() {
    let t = symmetric(4);
    let jm = JmFamily::new(&t, 4).unwrap();
    for mu in partitions_of(3) {
        let cell = cell_module(&t, 3, &mu, ReducerKind::Accelerated).unwrap();
        for other in partitions_of(3) {
            assert_eq!(hom_multiplicity(&t, &jm, cell.as_ref(), &other).unwrap(), usize::from(mu == other));
        }
    }
    let h = Tower::new(Arc::new(PermTower::hecke()), 3);
    let hjm = JmFamily::new(&h, 3).unwrap();
    let regular = RegularModule::new(&h, 3);
    for (mu, n) in decompose(&h, &hjm, &regular).unwrap() {
        assert_eq!(n, h.standard_paths(3, &mu).len());
    }
}

#[test]
fn hook_over_one_box_splits_into_both_shapes() {
    let t = symmetric(3);
    let jm = JmFamily::new(&t, 3).unwrap();
    let mults = skew_multiplicities(&t, &jm, &p(&[2, 1]), 3, &p(&[1]), 1).unwrap();
    assert_eq!(mults, vec![(p(&[2]), 1), (p(&[1, 1]), 1)]);
}

#[test]
fn permutation_module_multiplicities_are_skew_kostka() {
    let t = symmetric(5);
    let jm = JmFamily::new(&t, 5).unwrap();
    assert_eq!(permutation_multiplicity(&t, &jm, &p(&[2, 1]), 3, &p(&[1]), 1, &p(&[1, 1])).unwrap(), 2);
    for r in 1..=5 {
        for nu in partitions_of(r) {
            for s in 0..r {
                for lambda in partitions_of(s) {
                    let a = skew_multiplicities(&t, &jm, &nu, r, &lambda, s).unwrap();
                    for mu in partitions_of(r - s) {
                        let big = permutation_multiplicity(&t, &jm, &nu, r, &lambda, s, &mu).unwrap();
                        assert_eq!(big as u64, skew_kostka(&nu, &lambda, &mu).unwrap(), "{nu}∖{lambda}, {mu}");
                        let small = a.iter().find(|(l, _)| l == &mu).unwrap().1;
                        assert!(small <= big);
                        if mu.len() == 1 {
                            assert_eq!(small, big);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn symmetric_skew_multiplicities_are_lr_up_to_five() {
    let t = symmetric(5);
    let jm = JmFamily::new(&t, 5).unwrap();
    for r in 0..=5 {
        for nu in partitions_of(r) {
            for s in 0..=r {
                for lambda in partitions_of(s) {
                    let mults = skew_multiplicities(&t, &jm, &nu, r, &lambda, s).unwrap();
                    for (mu, n) in mults {
                        assert_eq!(n as u64, littlewood_richardson(&lambda, &mu, &nu).unwrap(), "{nu}∖{lambda}, {mu}");
                    }
                }
            }
        }
    }
}

#[test]
fn adjunction_holds_for_small_symmetric_triples() {
    let t = symmetric(4);
    assert_eq!(adjunction_dimensions(&t, &p(&[2, 1]), 3, &p(&[1]), 1, &p(&[2])).unwrap(), (1, 1));
    assert_eq!(adjunction_dimensions(&t, &p(&[3]), 3, &p(&[1]), 1, &p(&[1, 1])).unwrap(), (0, 0));
    for r in 2..=4 {
        for s in [1, 2] {
            if s >= r {
                continue;
            }
            for nu in partitions_of(r) {
                for lambda in partitions_of(s) {
                    for mu in partitions_of(r - s) {
                        let (left, right) = adjunction_dimensions(&t, &nu, r, &lambda, s, &mu).unwrap();
                        assert_eq!(left, right, "{nu} {lambda} {mu}");
                    }
                }
            }
        }
    }
}

#[test]
fn partition_algebra_below_capacity_still_gives_stable_kronecker() {
    let pk = PartitionKronecker::new(3);
    for (l, m, n) in [(&[1][..], &[1][..], &[2][..]), (&[1], &[1], &[1]), (&[1], &[], &[1]), (&[], &[], &[])] {
        assert_eq!(pk.cell(&p(l), &p(m), &p(n)).unwrap(), stable_kronecker(&p(l), &p(m), &p(n)).unwrap());
    }
    assert!(pk.cell(&p(&[2]), &p(&[2]), &p(&[1])).is_err());
}

#[test]
fn partition_algebra_gives_stable_kronecker_up_to_two() {
    for r in 0..=2 {
        let pk = PartitionKronecker::new(r);
        for s in 0..=r {
            for lambda in partitions_of(s) {
                for mu in partitions_of(r - s) {
                    for size in 0..=r {
                        for nu in partitions_of(size) {
                            let got = pk.cell(&lambda, &mu, &nu).unwrap();
                            assert_eq!(got, stable_kronecker(&lambda, &mu, &nu).unwrap(), "{lambda} {mu} {nu}");
                            assert!(pk.permutation(&lambda, &mu, &nu).unwrap() >= got);
                        }
                    }
                }
            }
        }
    }
}
