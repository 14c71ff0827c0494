mod support;

use omega_core::catalog;
use omega_core::homological::{ext_dim, resolve};
use omega_core::module::{direct_sum, enumerate_indecomposables};
use omega_core::Budget;
use proptest::prelude::*;

use support::ext_oracle::ext1_by_counting;

#[test]
fn ext1_matches_counting_on_every_ex310_pair() {
    let a = catalog::ex310_algebra();
    let u = enumerate_indecomposables(&a, &[1, 1, 1], &Budget::default()).unwrap();
    assert_eq!(u.len(), 5);
    let mut nonzero = 0;
    for m in &u {
        for n in &u {
            let d = ext_dim(m, n, 1);
            assert_eq!(d, ext1_by_counting(m, n), "{m:?} {n:?}");
            nonzero += d;
        }
    }
    assert_eq!(nonzero, 2);
}

#[test]
fn ext1_matches_counting_on_small_algebras() {
    for (alg, cap) in [(catalog::dual_numbers_algebra(), vec![2]), (catalog::a2_algebra(), vec![1, 1])] {
        let u = enumerate_indecomposables(&alg, &cap, &Budget::default()).unwrap();
        for m in &u {
            for n in &u {
                assert_eq!(ext_dim(m, n, 1), ext1_by_counting(m, n));
            }
        }
        let sum = direct_sum(&alg, &u[..2]).module;
        for n in &u {
            assert_eq!(ext_dim(&sum, n, 1), ext1_by_counting(&sum, n));
        }
    }
}

fn universe(which: usize) -> Vec<omega_core::Module> {
    let (alg, cap) = match which {
        0 => (catalog::ex310_algebra(), vec![1, 1, 1]),
        1 => (catalog::dual_numbers_algebra(), vec![2]),
        _ => (catalog::a2_algebra(), vec![1, 1]),
    };
    enumerate_indecomposables(&alg, &cap, &Budget::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dimension_shift(which in 0usize..3, i in 0usize..5, j in 0usize..5, deg in 1usize..3) {
        let u = universe(which);
        let (m, n) = (&u[i % u.len()], &u[j % u.len()]);
        let omega = resolve(m, 1).syzygies[0].clone();
        prop_assert_eq!(ext_dim(m, n, deg + 1), ext_dim(&omega, n, deg));
    }
}
