use std::sync::Arc;

use tower_core::algebra::{BasisId, Element};
use tower_core::arith::{Param, Scalar};
use tower_core::providers::{diagram, DiagramTower};
use tower_core::tower::Tower;

fn tower(p: DiagramTower, r: usize) -> Tower {
    Tower::new(Arc::new(p), r)
}

fn dia(t: &Tower, d: &[u8]) -> Element {
    let k = d.len() / 2;
    let level = if t.name() == "partition" { 2 * k } else { k };
    t.basis_element(level, &BasisId::diagram(d))
}

#[test]
fn dimensions_match_closed_forms() {
    let tl = tower(DiagramTower::temperley_lieb(), 5);
    let br = tower(DiagramTower::brauer(), 5);
    let pa = tower(DiagramTower::partition(), 7);
    for (r, c) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
        assert_eq!(tl.algebra(r).dim(), c);
        assert_eq!(tl.provider().declared_dimension(r), c);
    }
    for (r, c) in [(0, 1), (1, 1), (2, 3), (3, 15), (4, 105), (5, 945)] {
        assert_eq!(br.algebra(r).dim(), c);
        assert_eq!(br.provider().declared_dimension(r), c);
    }
    for (i, c) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203), (7, 877)] {
        assert_eq!(pa.algebra(i).dim(), c);
        assert_eq!(pa.provider().declared_dimension(i), c);
    }
}

#[test]
fn squared_cup_cap_closes_a_loop() {
    let t = tower(DiagramTower::temperley_lieb(), 3);
    let e1 = dia(&t, &diagram::cup_cap(3, 1));
    let delta = Scalar::var(Param::Delta);
    assert_eq!(t.mul(&e1, &e1), e1.scale(&delta));
}

#[test]
fn full_join_squared_in_partition_algebra() {
    let t = tower(DiagramTower::partition(), 4);
    let full = dia(&t, &[0, 0, 0, 0]);
    assert_eq!(t.mul(&full, &full), full);
    let singletons = dia(&t, &[0, 1, 2, 3]);
    let n = Scalar::var(Param::N);
    assert_eq!(t.mul(&singletons, &singletons), singletons.scale(&n.pow(2)));
}

#[test]
fn brauer_flip_fixes_cup_cap() {
    let t = tower(DiagramTower::brauer(), 2);
    let e1 = dia(&t, &diagram::cup_cap(2, 1));
    assert_eq!(t.flip(&e1).unwrap(), e1);
}

#[test]
fn identity_is_neutral_and_involution_reverses_products() {
    for (p, r) in [(DiagramTower::brauer(), 3), (DiagramTower::partition(), 4), (DiagramTower::temperley_lieb(), 4)] {
        let t = tower(p, r);
        let alg = t.algebra(r);
        let n = alg.dim() as u32;
        for (a, b) in [(0u32, n - 1), (n / 3, n / 2), (n - 2, 1)] {
            let (x, y) = (Element::basis(r, a), Element::basis(r, b));
            assert_eq!(alg.mul(&alg.one(), &x), x);
            assert_eq!(alg.involve(&alg.mul(&x, &y)), alg.mul(&alg.involve(&y), &alg.involve(&x)));
        }
    }
}

#[test]
fn path_counts_square_to_dimensions() {
    for (p, r) in [(DiagramTower::temperley_lieb(), 6), (DiagramTower::brauer(), 5), (DiagramTower::partition(), 8)] {
        let t = tower(p, r);
        for level in 0..=r {
            let total: usize = t.graph().labels(level).iter().map(|l| t.standard_paths(level, l).len().pow(2)).sum();
            assert_eq!(total, t.provider().declared_dimension(level), "{} level {level}", t.name());
        }
    }
}

#[test]
fn cell_generators_are_symmetric() {
    for (p, r) in [(DiagramTower::temperley_lieb(), 4), (DiagramTower::brauer(), 4), (DiagramTower::partition(), 6)] {
        let t = tower(p, r);
        for level in 0..=r {
            for lambda in t.graph().labels(level).to_vec() {
                let c = t.cell_generator(level, &lambda);
                assert!(!c.is_zero());
                assert_eq!(t.involve(&c), c, "{} level {level} {lambda}", t.name());
            }
        }
    }
}

#[test]
fn branching_factors_intertwine_cell_generators() {
    for (p, r) in [(DiagramTower::temperley_lieb(), 5), (DiagramTower::brauer(), 4), (DiagramTower::partition(), 6)] {
        let t = tower(p, r);
        for level in 1..=r {
            for (mu, lambda) in t.graph().edges(level) {
                let (d, u) = t.branching_factors(level, &mu, &lambda);
                let lhs = t.mul(&t.cell_generator(level, &lambda), &d);
                let rhs = t.mul_mixed(&[&t.involve(&u), &t.cell_generator(level - 1, &mu)]);
                assert_eq!(lhs, rhs, "{} edge {mu} -> {lambda} at {level}", t.name());
            }
        }
    }
}

#[test]
fn brauer_jucys_murphy_elements_commute() {
    let t = tower(DiagramTower::brauer(), 4);
    let alg = t.algebra(4);
    let ls: Vec<Element> = (1..=4).map(|k| t.embed(&t.provider().jm_element(&t, k).unwrap(), 4)).collect();
    assert!(ls[0].is_zero());
    for a in &ls {
        for b in &ls {
            assert!(alg.commutator(a, b).is_zero());
        }
    }
}

#[test]
fn generators_span_the_algebra() {
    for (p, r) in [(DiagramTower::temperley_lieb(), 4), (DiagramTower::brauer(), 3), (DiagramTower::partition(), 5)] {
        let t = tower(p, r);
        let alg = t.algebra(r);
        let mut span = vec![alg.one()];
        let mut frontier = span.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in t.generators(r) {
                    let y = alg.mul(x, g);
                    let mut trial = span.clone();
                    trial.push(y.clone());
                    if alg.rank_of_span(&trial) > span.len() {
                        span.push(y.clone());
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        assert_eq!(span.len(), alg.dim(), "{}", t.name());
    }
}
