use std::sync::Arc;

use tower_core::algebra::MatrixF;
use tower_core::arith::{Param, Scalar};
use tower_core::combinatorics::{dominance_cmp, Partition, PathOrder, PathTableau};
use tower_core::providers::{DiagramTower, PermTower};
use tower_core::seminormal::{JmFamily, Seminormal};
use tower_core::tower::Tower;

fn p(parts: &[usize]) -> Partition {
    Partition::from_slice(parts)
}

fn path(steps: &[&[usize]]) -> PathTableau {
    PathTableau { start: 0, steps: steps.iter().map(|s| p(s)).collect() }
}

fn q() -> Scalar {
    Scalar::var(Param::Q)
}

fn hecke(r: usize) -> Tower {
    Tower::new(Arc::new(PermTower::hecke()), r)
}

fn symmetric(r: usize) -> Tower {
    Tower::new(Arc::new(PermTower::symmetric()), r)
}

fn content_of_added_box(t: &PathTableau, k: usize) -> i64 {
    let (a, b) = (t.at(k - 1), t.at(k));
    let row = (0..b.len()).find(|&i| a.row(i) != b.row(i)).unwrap();
    b.row(row) as i64 - 1 - row as i64
}

#[test]
fn hecke_and_symmetric_kappas() {
    let t = hecke(2);
    let jm = JmFamily::new(&t, 2).unwrap();
    assert_eq!(jm.sequence(&path(&[&[], &[1], &[2]])), vec![Scalar::one(), q()]);
    let s = symmetric(2);
    let jm = JmFamily::new(&s, 2).unwrap();
    assert_eq!(jm.sequence(&path(&[&[], &[1], &[1, 1]])), vec![Scalar::zero(), Scalar::int(-1)]);
}

#[test]
fn hecke_eigenvalues_are_q_to_the_content() {
    let t = hecke(5);
    let jm = JmFamily::new(&t, 5).unwrap();
    let spec = jm.spectrum(&t, 5).unwrap();
    assert_eq!(spec.sequences.len(), 26);
    for (path, seq) in &spec.sequences {
        for k in 1..=5 {
            assert_eq!(seq[k - 1], q().pow(content_of_added_box(path, k)), "{path}");
        }
    }
}

#[test]
fn brauer_three_is_separated() {
    let t = Tower::new(Arc::new(DiagramTower::brauer()), 3);
    let jm = JmFamily::new(&t, 3).unwrap();
    let spec = jm.spectrum(&t, 3).unwrap();
    for (i, a) in spec.sequences.iter().enumerate() {
        for b in &spec.sequences[i + 1..] {
            assert_ne!(a.1, b.1, "{} {}", a.0, b.0);
        }
    }
}

#[test]
fn h2_idempotent_is_the_interpolant() {
    let t = hecke(2);
    let jm = JmFamily::new(&t, 2).unwrap();
    let alg = t.algebra(2);
    let l2 = jm.element(2).clone();
    let expected = l2.sub(&alg.scalar(q().inv())).scale(&(q() - q().inv()).inv());
    let f = Seminormal::idempotent_element(&t, &jm, &path(&[&[], &[1], &[2]])).unwrap();
    assert_eq!(f, expected);
    assert_eq!(alg.mul(&f, &f), f);
    let g = Seminormal::idempotent_element(&t, &jm, &path(&[&[], &[1], &[1, 1]])).unwrap();
    assert_eq!(f.add(&g), alg.one());
    assert!(alg.mul(&f, &g).is_zero());
}

#[test]
fn idempotent_elements_match_their_images() {
    let t = hecke(3);
    let sn = Seminormal::new(&t, 3).unwrap();
    for (path, image) in sn.idempotents(3) {
        let f = Seminormal::idempotent_element(&t, sn.family(), path).unwrap();
        assert_eq!(&sn.rep(&t, &f).unwrap(), image, "{path}");
    }
}

#[test]
fn h2_gamma_and_one_dimensional_cells() {
    let t = hecke(2);
    let sn = Seminormal::new(&t, 2).unwrap();
    let cell = sn.cell(&p(&[2])).unwrap();
    assert_eq!(cell.gammas(), &[Scalar::one() + q()]);
    assert_eq!(cell.transition(), &MatrixF::identity(1));
    assert_eq!(sn.jm_triangular_action(&p(&[2]), 2).unwrap(), &MatrixF::from_rows(vec![vec![q()]]));
}

#[test]
fn h3_hook_transition_is_unitriangular() {
    let t = hecke(3);
    let sn = Seminormal::new(&t, 3).unwrap();
    let cell = sn.cell(&p(&[2, 1])).unwrap();
    let tr = cell.transition();
    assert_eq!(tr.nrows(), 2);
    assert!(tr.get(0, 0).is_one() && tr.get(1, 1).is_one());
    let paths = cell.paths();
    assert_eq!(dominance_cmp(t.graph(), &paths[0], &paths[1]), Ok(PathOrder::Greater));
    assert!(tr.get(1, 0).is_zero());
    let diag: Vec<Scalar> = (0..2).map(|i| sn.jm_triangular_action(&p(&[2, 1]), 3).unwrap().get(i, i).clone()).collect();
    assert_eq!(diag, vec![q().inv(), q()]);
    let phi = cell.gram().det();
    assert_eq!(phi, cell.gammas().iter().cloned().fold(Scalar::one(), |a, b| &a * &b));
}

#[test]
fn symmetric_hook_l2_diagonal() {
    let t = symmetric(3);
    let sn = Seminormal::new(&t, 3).unwrap();
    let m = sn.jm_triangular_action(&p(&[2, 1]), 2).unwrap();
    assert_eq!((m.get(0, 0).clone(), m.get(1, 1).clone()), (Scalar::one(), Scalar::int(-1)));
}

#[test]
fn gammas_diagonalize_the_form_and_multiply_to_phi() {
    let t = hecke(4);
    let sn = Seminormal::new(&t, 4).unwrap();
    for cell in sn.cells() {
        let prod = cell.gammas().iter().fold(Scalar::one(), |a, b| &a * b);
        assert_eq!(cell.gram().det(), prod, "{}", cell.label());
    }
}

fn assert_report(t: &Tower, r: usize) {
    let report = Seminormal::report(t, r);
    let failures: Vec<_> = report.failures().collect();
    assert!(failures.is_empty(), "{} level {r}: {failures:?}", t.name());
}

#[test]
fn hecke_and_symmetric_pass_all_seminormal_checks() {
    for r in 1..=4 {
        assert_report(&hecke(4), r);
        assert_report(&symmetric(4), r);
    }
}

#[test]
fn diagram_towers_pass_all_seminormal_checks() {
    let b = Tower::new(Arc::new(DiagramTower::brauer()), 4);
    let tl = Tower::new(Arc::new(DiagramTower::temperley_lieb()), 4);
    for r in 1..=4 {
        assert_report(&b, r);
        assert_report(&tl, r);
    }
    let pa = Tower::new(Arc::new(DiagramTower::partition()), 6);
    for r in 1..=6 {
        assert_report(&pa, r);
    }
}

#[test]
fn restriction_statements_for_hook_of_four() {
    let t = hecke(4);
    let sn = Seminormal::new(&t, 4).unwrap();
    for s in 1..4 {
        let low = Seminormal::new(&t, s).unwrap();
        sn.check_restriction(&t, &low).unwrap();
    }
    let cell = sn.cell(&p(&[2, 1, 1])).unwrap();
    let prefixes: Vec<_> = cell.paths().iter().map(|t| t.segment(0, 2)).collect();
    assert!(prefixes.contains(&path(&[&[], &[1], &[2]])) && prefixes.contains(&path(&[&[], &[1], &[1, 1]])));
}

#[test]
fn non_commuting_family_is_rejected() {
    let t = hecke(3);
    let jm = JmFamily::new(&t, 3).unwrap();
    let mut ls = jm.elements().to_vec();
    ls[3] = t.generators(3)[1].clone();
    assert!(JmFamily::from_elements(&t, jm.kind(), ls, false).is_err());
}

#[test]
fn derived_families_come_from_central_elements() {
    let tl = Tower::new(Arc::new(DiagramTower::temperley_lieb()), 3);
    let jm = JmFamily::new(&tl, 3).unwrap();
    assert!(jm.is_derived());
    for k in 1..=3 {
        let l = jm.element(k);
        assert_eq!(&tl.involve(l), l);
        for g in tl.generators(k - 1) {
            assert!(tl.algebra(k).commutator(l, &tl.embed(g, k)).is_zero());
        }
    }
}
