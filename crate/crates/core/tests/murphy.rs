use std::sync::Arc;

use tower_core::algebra::{Element, MatrixF};
use tower_core::arith::{Param, Rational, Scalar};
use tower_core::combinatorics::Partition;
use tower_core::murphy::{
    cell_module, check_commutant_support, check_filtration, check_restriction_support, murphy_level, ReducerKind,
};
use tower_core::providers::{DiagramTower, PermTower};
use tower_core::tower::Tower;

fn p(parts: &[usize]) -> Partition {
    Partition::from_slice(parts)
}

fn hecke(r: usize) -> Tower {
    Tower::new(Arc::new(PermTower::hecke()), r)
}

fn symmetric(r: usize) -> Tower {
    Tower::new(Arc::new(PermTower::symmetric()), r)
}

fn diagram(d: DiagramTower, r: usize) -> Tower {
    Tower::new(Arc::new(d), r)
}

#[test]
fn hecke_two_row_gram_is_one_plus_q() {
    let t = hecke(2);
    let m = cell_module(&t, 2, &p(&[2]), ReducerKind::Generic).unwrap();
    let g = m.gram(&t).unwrap();
    let one_plus_q = Scalar::one() + Scalar::var(Param::Q);
    assert_eq!(g, MatrixF::from_rows(vec![vec![one_plus_q.clone()]]));
    assert_eq!(g.det(), one_plus_q);
}

#[test]
fn murphy_bases_have_full_rank() {
    let h = hecke(4);
    for r in 0..=4 {
        assert_eq!(murphy_level(&h, r).cellular_rank(&h), h.algebra(r).dim());
    }
    let tl = diagram(DiagramTower::temperley_lieb(), 4);
    let ml = murphy_level(&tl, 3);
    assert_eq!(ml.labels().len(), 2);
    assert_eq!(ml.labels().iter().map(|l| l.dim().pow(2)).sum::<usize>(), 5);
    assert_eq!(ml.cellular_rank(&tl), 5);
    for (d, r) in [(DiagramTower::brauer(), 4), (DiagramTower::partition(), 4), (DiagramTower::temperley_lieb(), 4)] {
        let t = diagram(d, r);
        assert_eq!(murphy_level(&t, r).cellular_rank(&t), t.algebra(r).dim(), "{}", t.name());
    }
}

#[test]
fn u_factorization_matches_murphy_representatives() {
    for (t, r) in [
        (hecke(4), 4),
        (diagram(DiagramTower::temperley_lieb(), 4), 4),
        (diagram(DiagramTower::brauer(), 4), 4),
        (diagram(DiagramTower::partition(), 6), 6),
    ] {
        for level in 0..=r {
            murphy_level(&t, level).check_u_factorization(&t).unwrap();
        }
    }
}

#[test]
fn row_reading_path_has_trivial_d() {
    let t = hecke(4);
    let ml = murphy_level(&t, 4);
    for l in ml.labels() {
        assert_eq!(l.d[0], t.one(4), "{}", l.label);
    }
}

#[test]
fn hecke_grams_are_symmetric_integral_and_nondegenerate_at_q_one() {
    let t = hecke(4);
    let one = Rational::from_integer(1.into());
    for r in 1..=4 {
        for lambda in t.graph().labels(r).to_vec() {
            let m = cell_module(&t, r, &lambda, ReducerKind::Generic).unwrap();
            let g = m.gram(&t).unwrap();
            assert_eq!(g, g.transpose());
            assert!(g.to_rows().iter().flatten().all(|c| c.is_integral()));
            let phi = g.det().evaluate_at(&one).unwrap();
            assert_ne!(phi, Rational::from_integer(0.into()), "{lambda}");
        }
    }
}

fn assert_same_actions(t: &Tower, r: usize) {
    for lambda in t.graph().labels(r).to_vec() {
        let fast = cell_module(t, r, &lambda, ReducerKind::Accelerated).unwrap();
        let slow = cell_module(t, r, &lambda, ReducerKind::Generic).unwrap();
        assert!(fast.reducer().is_accelerated());
        for g in t.generators(r) {
            assert_eq!(fast.act(t, g).unwrap(), slow.act(t, g).unwrap(), "{} level {r} {lambda}", t.name());
        }
        assert_eq!(fast.gram(t).unwrap(), slow.gram(t).unwrap());
    }
}

#[test]
fn symmetric_accelerator_agrees_with_generic_reduction() {
    let t = symmetric(4);
    for r in 2..=4 {
        assert_same_actions(&t, r);
    }
}

#[test]
fn diagram_accelerator_agrees_with_generic_reduction() {
    assert_same_actions(&diagram(DiagramTower::brauer(), 4), 4);
    assert_same_actions(&diagram(DiagramTower::brauer(), 3), 3);
    let pa = diagram(DiagramTower::partition(), 6);
    assert_same_actions(&pa, 4);
    assert_same_actions(&pa, 6);
}

#[test]
fn cell_actions_are_integral() {
    for (t, r) in [(hecke(4), 4), (diagram(DiagramTower::brauer(), 4), 4), (diagram(DiagramTower::partition(), 6), 6)] {
        for lambda in t.graph().labels(r).to_vec() {
            let m = cell_module(&t, r, &lambda, ReducerKind::Accelerated).unwrap();
            for g in t.generators(r) {
                let a = m.act(&t, g).unwrap();
                assert!(a.to_rows().iter().flatten().all(|c| c.is_integral()), "{} {lambda}", t.name());
            }
        }
    }
}

#[test]
fn restriction_filtration_of_hook_at_three() {
    let t = hecke(3);
    let steps = check_filtration(&t, 3, &p(&[2, 1])).unwrap();
    let labels: Vec<Partition> = steps.iter().map(|s| s.label.clone()).collect();
    assert_eq!(labels, vec![p(&[2]), p(&[1, 1])]);
    assert!(steps.iter().all(|s| s.stable && s.exact));
    let single = check_filtration(&t, 3, &p(&[3])).unwrap();
    assert_eq!(single.len(), 1);
    assert_eq!(single[0].label, p(&[2]));
}

#[test]
fn restriction_filtrations_hold_for_all_towers() {
    for (t, r) in [
        (hecke(4), 4),
        (diagram(DiagramTower::temperley_lieb(), 4), 4),
        (diagram(DiagramTower::brauer(), 4), 4),
        (diagram(DiagramTower::partition(), 6), 6),
    ] {
        for level in 1..=r {
            for lambda in t.graph().labels(level).to_vec() {
                for step in check_filtration(&t, level, &lambda).unwrap() {
                    assert!(step.stable && step.exact, "{} level {level} {lambda}: {step:?}", t.name());
                }
            }
        }
    }
}

#[test]
fn restriction_rule_support() {
    let t = hecke(4);
    for s in 1..4 {
        let alg = t.algebra(s);
        let samples: Vec<Element> = (0..alg.dim() as u32).map(|i| Element::basis(s, i)).collect();
        for nu in t.graph().labels(4).to_vec() {
            for a in &samples {
                assert!(check_restriction_support(&t, 4, &nu, a).unwrap().is_empty(), "{nu} s={s}");
            }
        }
    }
}

#[test]
fn commutant_support_for_shifted_generators() {
    for (t, r) in [(hecke(4), 4), (diagram(DiagramTower::brauer(), 4), 4)] {
        for s in 1..r {
            for g in t.generators(r - s).to_vec() {
                let x = t.shifted(&g, r).unwrap();
                for w in t.generators(s) {
                    let w = t.embed(w, r);
                    assert!(t.algebra(r).commutator(&x, &w).is_zero());
                }
                for nu in t.graph().labels(r).to_vec() {
                    assert!(check_commutant_support(&t, &nu, s, &x).unwrap().is_empty(), "{} {nu} s={s}", t.name());
                }
            }
        }
    }
}
