use std::sync::Arc;

use tower_core::algebra::{BasisId, Element};
use tower_core::arith::{Param, Scalar};
use tower_core::combinatorics::Partition;
use tower_core::providers::{young, PermTower};
use tower_core::tower::Tower;

fn hecke(r: usize) -> Tower {
    Tower::new(Arc::new(PermTower::hecke()), r)
}

fn t_word(tower: &Tower, r: usize, word: &[usize]) -> Element {
    let alg = tower.algebra(r);
    let mut acc = alg.one();
    for &i in word {
        acc = alg.mul(&acc, &tower.generators(r)[i - 1]);
    }
    acc
}

fn t_perm(tower: &Tower, w: &[u8]) -> Element {
    tower.basis_element(w.len(), &BasisId::perm(w))
}

#[test]
fn dimensions_are_factorials() {
    let t = hecke(5);
    for (r, n) in [(0, 1), (1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
        assert_eq!(t.algebra(r).dim(), n);
        assert_eq!(t.provider().declared_dimension(r), n);
    }
}

#[test]
fn quadratic_relation() {
    let t = hecke(2);
    let alg = t.algebra(2);
    let q = Scalar::var(Param::Q);
    let t1 = &t.generators(2)[0];
    let lhs = alg.mul(t1, t1);
    let rhs = alg.scalar(q.clone()).add(&t1.scale(&(&q - &Scalar::one())));
    assert_eq!(lhs, rhs);
}

#[test]
fn braid_relations() {
    let t = hecke(4);
    assert_eq!(t_word(&t, 4, &[1, 2, 1]), t_word(&t, 4, &[2, 1, 2]));
    assert_eq!(t_word(&t, 4, &[2, 3, 2]), t_word(&t, 4, &[3, 2, 3]));
    assert_eq!(t_word(&t, 4, &[1, 3]), t_word(&t, 4, &[3, 1]));
}

#[test]
fn reduced_words_give_basis_elements() {
    let t = hecke(4);
    for w in young::all_perms(4) {
        let word = young::reduced_word(&w);
        assert_eq!(word.len(), young::length(&w));
        assert_eq!(t_word(&t, 4, &word), t_perm(&t, &w));
    }
}

#[test]
fn associativity_at_level_four() {
    let t = hecke(4);
    let alg = t.algebra(4);
    let perms = young::all_perms(4);
    for (a, b, c) in [(3usize, 17usize, 22usize), (23, 23, 5), (11, 7, 19)] {
        let (x, y, z) = (t_perm(&t, &perms[a]), t_perm(&t, &perms[b]), t_perm(&t, &perms[c]));
        assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
    }
}

#[test]
fn involution_is_an_antiautomorphism() {
    let t = hecke(4);
    let alg = t.algebra(4);
    let perms = young::all_perms(4);
    for (a, b) in [(3usize, 17usize), (23, 9), (14, 20)] {
        let (x, y) = (t_perm(&t, &perms[a]), t_perm(&t, &perms[b]));
        assert_eq!(alg.involve(&alg.mul(&x, &y)), alg.mul(&alg.involve(&y), &alg.involve(&x)));
    }
}

#[test]
fn specializes_to_the_symmetric_group() {
    let h = hecke(4);
    let s = Tower::new(Arc::new(PermTower::symmetric()), 4);
    let one = Scalar::int(1).as_rational().unwrap().clone();
    let perms = young::all_perms(4);
    for (a, b) in [(3usize, 17usize), (23, 23), (14, 20)] {
        let hp = h.mul(&t_perm(&h, &perms[a]), &t_perm(&h, &perms[b]));
        let sp = s.mul(&t_perm(&s, &perms[a]), &t_perm(&s, &perms[b]));
        let at_one = hp.map_coeffs(|c| Scalar::from(c.evaluate_at(&one).unwrap()));
        assert_eq!(at_one, sp);
    }
}

#[test]
fn first_edge_factors() {
    let t = hecke(2);
    let (d, u) = t.branching_factors(2, &Partition::from_slice(&[1]), &Partition::from_slice(&[2]));
    assert_eq!(d, t.one(2));
    assert_eq!(u, t.one(2).add(&t.generators(2)[0]));
    let (d, u) = t.branching_factors(2, &Partition::from_slice(&[1]), &Partition::from_slice(&[1, 1]));
    assert_eq!(d, t.one(2));
    assert_eq!(u, t.one(2));
}

#[test]
fn branching_factors_intertwine_cell_generators() {
    let t = hecke(5);
    for r in 1..=5 {
        for (mu, lambda) in t.graph().edges(r) {
            let (d, u) = t.branching_factors(r, &mu, &lambda);
            let lhs = t.mul(&t.cell_generator(r, &lambda), &d);
            let rhs = t.mul_mixed(&[&t.involve(&u), &t.cell_generator(r - 1, &mu)]);
            assert_eq!(lhs, rhs, "edge {mu} -> {lambda}");
        }
    }
}

#[test]
fn path_factors_are_tableau_permutations() {
    let t = hecke(5);
    for lambda in t.graph().labels(5).to_vec() {
        for path in t.standard_paths(5, &lambda) {
            let w = young::tableau_permutation(&path.steps);
            assert_eq!(t.d_path(&path), t_perm(&t, &w), "path {path}");
        }
    }
}

#[test]
fn jucys_murphy_elements() {
    let t = hecke(4);
    let q = Scalar::var(Param::Q);
    let l2 = t.provider().jm_element(&t, 2).unwrap();
    let expected = t.one(2).add(&t.generators(2)[0].scale(&(Scalar::one() - q.inv())));
    assert_eq!(l2, expected);
    let alg = t.algebra(4);
    let ls: Vec<Element> = (1..=4).map(|k| t.embed(&t.provider().jm_element(&t, k).unwrap(), 4)).collect();
    for a in &ls {
        for b in &ls {
            assert!(alg.commutator(a, b).is_zero());
        }
    }
}

#[test]
fn symmetric_jucys_murphy_sum_is_central() {
    let t = Tower::new(Arc::new(PermTower::symmetric()), 4);
    let alg = t.algebra(4);
    let mut sum = alg.zero();
    for k in 1..=4 {
        sum = sum.add(&t.embed(&t.provider().jm_element(&t, k).unwrap(), 4));
    }
    for g in t.generators(4) {
        assert!(alg.commutator(&sum, g).is_zero());
    }
}

#[test]
fn flip_is_an_involutive_automorphism() {
    let t = hecke(4);
    let alg = t.algebra(4);
    let perms = young::all_perms(4);
    for (a, b) in [(3usize, 17usize), (23, 9), (14, 20)] {
        let (x, y) = (t_perm(&t, &perms[a]), t_perm(&t, &perms[b]));
        let f = |e: &Element| t.flip(e).unwrap();
        assert_eq!(f(&alg.mul(&x, &y)), alg.mul(&f(&x), &f(&y)));
        assert_eq!(f(&f(&x)), x);
    }
}
