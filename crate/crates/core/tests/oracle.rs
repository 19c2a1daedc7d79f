use num_bigint::BigInt;
use proptest::prelude::*;

use tower_core::combinatorics::{partitions_of, Partition};
use tower_core::oracle::{
    class_size, is_horizontal_strip, kostka, kronecker, littlewood_richardson, mn_character, skew_kostka,
    stable_kronecker, CharacterTable,
};

fn p(parts: &[usize]) -> Partition {
    Partition::from_slice(parts)
}

fn sign(rho: &Partition) -> i64 {
    if (rho.size() - rho.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

#[test]
fn trivial_sign_and_hook_values() {
    for n in 1..=6 {
        for rho in partitions_of(n) {
            assert_eq!(mn_character(&p(&[n]), &rho), BigInt::from(1));
            assert_eq!(mn_character(&p(&vec![1; n]), &rho), BigInt::from(sign(&rho)));
        }
    }
    assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])), BigInt::from(-1));
}

#[test]
fn tables_are_orthogonal_and_degrees_square_sum() {
    for n in 1..=7 {
        let table = CharacterTable::new(n);
        assert!(table.check_orthogonality(), "n = {n}");
        let id = table.labels.iter().position(|l| l == &p(&vec![1; n])).unwrap();
        let squares: BigInt = table.values.iter().map(|row| &row[id] * &row[id]).sum();
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        assert_eq!(squares, fact);
        let classes: BigInt = table.labels.iter().map(class_size).sum();
        assert_eq!(classes, fact);
    }
}

#[test]
fn kronecker_fixtures() {
    for n in 1..=5 {
        let parts = partitions_of(n);
        for a in &parts {
            for c in &parts {
                assert_eq!(kronecker(a, &p(&[n]), c).unwrap(), u64::from(a == c));
            }
        }
        let sgn = p(&vec![1; n]);
        assert_eq!(kronecker(&sgn, &sgn, &p(&[n])).unwrap(), 1);
    }
    assert_eq!(kronecker(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), 1);
}

#[test]
fn kronecker_is_symmetric() {
    let parts = partitions_of(5);
    for a in &parts {
        for b in &parts {
            for c in &parts {
                let g = kronecker(a, b, c).unwrap();
                for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                    assert_eq!(kronecker(x, y, z).unwrap(), g);
                }
            }
        }
    }
}

#[test]
fn stable_kronecker_small_values() {
    let e = Partition::empty();
    assert_eq!(stable_kronecker(&e, &e, &e).unwrap(), 1);
    assert_eq!(stable_kronecker(&p(&[1]), &p(&[1]), &e).unwrap(), 1);
    assert_eq!(stable_kronecker(&p(&[1]), &p(&[1]), &p(&[1])).unwrap(), 1);
    assert_eq!(stable_kronecker(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), 1);
    assert_eq!(stable_kronecker(&p(&[1]), &p(&[1]), &p(&[1, 1])).unwrap(), 1);
    assert_eq!(stable_kronecker(&p(&[2]), &p(&[1]), &e).unwrap(), 0);
    assert_eq!(stable_kronecker(&e, &e, &p(&[1])).unwrap(), 0);
    assert_eq!(stable_kronecker(&p(&[1]), &e, &p(&[2, 1])).unwrap(), 0);
}

#[test]
fn littlewood_richardson_fixtures() {
    assert_eq!(littlewood_richardson(&p(&[1]), &p(&[2]), &p(&[2, 1])).unwrap(), 1);
    assert_eq!(littlewood_richardson(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])).unwrap(), 1);
    assert_eq!(littlewood_richardson(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
    for nu in partitions_of(5) {
        assert_eq!(littlewood_richardson(&Partition::empty(), &nu, &nu).unwrap(), 1);
    }
    assert_eq!(skew_kostka(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])).unwrap(), 2);
    assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
}

#[test]
fn pieri_rule_matches_horizontal_strips() {
    for n in 1..=6 {
        for k in 1..=n {
            for lambda in partitions_of(n - k) {
                for nu in partitions_of(n) {
                    let c = littlewood_richardson(&lambda, &p(&[k]), &nu).unwrap();
                    assert_eq!(c, u64::from(is_horizontal_strip(&lambda, &nu, k)), "{lambda} {k} {nu}");
                }
            }
        }
    }
}

fn partition_strategy(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let parts = partitions_of(n);
        (0..parts.len()).prop_map(move |i| parts[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lr_is_symmetric_in_the_factors(a in partition_strategy(3), b in partition_strategy(3)) {
        for nu in partitions_of(a.size() + b.size()) {
            prop_assert_eq!(littlewood_richardson(&a, &b, &nu).unwrap(), littlewood_richardson(&b, &a, &nu).unwrap());
        }
    }

    #[test]
    fn induced_degrees_add_up(a in partition_strategy(3), b in partition_strategy(3)) {
        let n = a.size() + b.size();
        let id = |l: &Partition| mn_character(l, &p(&vec![1; l.size()]));
        let total: BigInt = partitions_of(n).iter().map(|nu| BigInt::from(littlewood_richardson(&a, &b, nu).unwrap()) * id(nu)).sum();
        let binom: BigInt = (1..=n).map(BigInt::from).product::<BigInt>()
            / ((1..=a.size()).map(BigInt::from).product::<BigInt>() * (1..=b.size()).map(BigInt::from).product::<BigInt>());
        prop_assert_eq!(total, binom * id(&a) * id(&b));
    }
}
