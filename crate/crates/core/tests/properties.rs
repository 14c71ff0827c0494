use std::sync::Arc;

use omega_core::catalog;
use omega_core::cotorsion::{analyze, Universe};
use omega_core::decision::Decision;
use omega_core::model::{verify_weq_witness, ModelContext};
use omega_core::module::{cokernel, decompose, direct_sum, hom_basis, in_add, is_isomorphic, kernel};
use omega_core::quiver::Algebra;
use omega_core::{Budget, Field, Matrix, ModMorphism, Module, SubcatSpec};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Matrix> {
    (prop_oneof![Just(2u64), Just(3), Just(5)], 0usize..6, 0usize..6).prop_flat_map(|(p, r, c)| {
        proptest::collection::vec(0..p as u32, r * c)
            .prop_map(move |d| Matrix::from_vec(Field::new(p).unwrap(), r, c, d))
    })
}

proptest! {
    #[test]
    fn kernel_basis_is_a_kernel(m in matrix()) {
        let k = m.kernel_basis();
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let once = m.rref().matrix;
        prop_assert_eq!(once.rref().matrix, once);
    }

    #[test]
    fn solve_round_trips(m in matrix(), seed in any::<u64>()) {
        let f = m.field();
        let p = u64::from(f.characteristic());
        let x0: Vec<u32> = (0..m.cols()).map(|i| ((seed >> (i % 60)) % p) as u32).collect();
        let b = Matrix::from_vec(f, m.rows(), 1, m.mul_vec(&x0));
        let x = m.solve(&b).expect("consistent system");
        prop_assert_eq!(m.mul(&x), b);
    }
}

fn universe(which: usize) -> Vec<Module> {
    let (alg, cap): (Arc<Algebra>, Vec<usize>) = match which {
        0 => (catalog::ex310_algebra(), vec![1, 1, 1]),
        1 => (catalog::dual_numbers_algebra(), vec![2]),
        _ => (catalog::a2_algebra(), vec![1, 1]),
    };
    Universe::enumerate(&alg, &cap, &Budget::default()).unwrap().members().to_vec()
}

fn sum_of(u: &[Module], picks: &[usize]) -> Module {
    let ms: Vec<Module> = picks.iter().map(|&i| u[i % u.len()].clone()).collect();
    direct_sum(u[0].algebra(), &ms).module
}

fn combination(m: &Module, n: &Module, coeffs: &[u32]) -> ModMorphism {
    let mut f = ModMorphism::zero(m, n);
    for (b, c) in hom_basis(m, n).iter().zip(coeffs.iter().cycle()) {
        f = f.add(&b.scale(*c));
    }
    f
}

fn picks() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0usize..5, 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_and_cokernel_are_exact(which in 0usize..3, a in picks(), b in picks(), coeffs in proptest::collection::vec(0u32..2, 1..8)) {
        let u = universe(which);
        let (m, n) = (sum_of(&u, &a), sum_of(&u, &b));
        let f = combination(&m, &n, &coeffs);
        let (k, i) = kernel(&f);
        let (c, q) = cokernel(&f);
        prop_assert!(i.is_injective() && f.compose(&i).is_zero());
        prop_assert!(q.is_surjective() && q.compose(&f).is_zero());
        prop_assert_eq!(k.total_dim() + f.rank(), m.total_dim());
        prop_assert_eq!(c.total_dim() + f.rank(), n.total_dim());
    }

    #[test]
    fn split_epi_has_the_complement_as_kernel(which in 0usize..3, a in picks(), b in picks()) {
        let u = universe(which);
        let (m, n) = (sum_of(&u, &a), sum_of(&u, &b));
        let s = direct_sum(u[0].algebra(), &[m.clone(), n.clone()]);
        let (k, _) = kernel(&s.projections[0]);
        prop_assert!(s.projections[0].compose(&s.injections[0]) == ModMorphism::identity(&m));
        prop_assert_eq!(is_isomorphic(&k, &n, &Budget::default()), Ok(true));
    }

    #[test]
    fn decompose_is_a_partition(which in 0usize..3, a in picks()) {
        let u = universe(which);
        let m = sum_of(&u, &a);
        let parts = decompose(&m, &Budget::default()).unwrap();
        let flat: Vec<Module> = parts.iter().flat_map(|(s, k)| std::iter::repeat_n(s.clone(), *k)).collect();
        let back = direct_sum(m.algebra(), &flat).module;
        prop_assert_eq!(is_isomorphic(&back, &m, &Budget::default()), Ok(true));
        prop_assert_eq!(flat.len(), a.len());
    }

    #[test]
    fn in_add_is_additive(which in 0usize..3, a in picks(), b in picks(), mask in 0u32..32) {
        let u = universe(which);
        let gens = u.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, m)| m.clone()).collect();
        let s = SubcatSpec::new("S", gens);
        let bud = Budget::default();
        let (m, n) = (sum_of(&u, &a), sum_of(&u, &b));
        let both = direct_sum(m.algebra(), &[m.clone(), n.clone()]).module;
        prop_assert_eq!(in_add(&both, &s, &bud).unwrap(), in_add(&m, &s, &bud).unwrap() && in_add(&n, &s, &bud).unwrap());
    }
}

/// The two fixtures on which the pair is hereditary and complete.
fn hereditary_context(which: usize) -> ModelContext {
    let (alg, cap, x, y): (Arc<Algebra>, Vec<usize>, &[&str], &[&str]) = if which == 0 {
        (catalog::dual_numbers_algebra(), vec![2], &["S1", "P1"], &["P1"])
    } else {
        (catalog::a2_algebra(), vec![1, 1], &["S1", "S2", "P2"], &["P2", "S2"])
    };
    let u = Universe::enumerate(&alg, &cap, &Budget::default()).unwrap();
    let pick = |names: &[&str]| {
        let gens = names.iter().map(|n| u.members()[u.labels().iter().position(|l| l == n).unwrap()].clone()).collect();
        SubcatSpec::new("S", gens)
    };
    let (x, y) = (pick(x), pick(y));
    ModelContext::new(u, x, y).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn class_identities_and_weq_decomposition(which in 0usize..2, a in picks(), b in picks(), coeffs in proptest::collection::vec(0u32..2, 1..8)) {
        let ctx = hereditary_context(which);
        let u = ctx.universe().members().to_vec();
        let f = combination(&sum_of(&u, &a), &sum_of(&u, &b), &coeffs);
        let c = ctx.classify(&f);
        prop_assert_eq!(c.tcofib, c.cofib.and(c.weq));
        prop_assert_eq!(c.tfib, c.fib.and(c.weq));
        if c.weq == Decision::Yes {
            let w = c.weq_witness.as_ref().expect("Weq comes with a witness");
            prop_assert!(verify_weq_witness(&f, w, &ctx.fresh()));
            let src = f.source();
            let first = ModMorphism::column(src, &[ModMorphism::identity(src), ModMorphism::zero(src, w.t.source())]);
            let second = ModMorphism::row(f.target(), &[f.clone(), w.t.clone()]);
            prop_assert!(second.compose(&first) == f);
            prop_assert_eq!(ctx.classify(&first).tcofib, Decision::Yes);
            prop_assert_eq!(ctx.classify(&second).tfib, Decision::Yes);
        }
    }
}

#[test]
fn cotorsion_report_is_reproducible() {
    let alg = catalog::ex310_algebra();
    let u = Universe::enumerate(&alg, &[1, 1, 1], &Budget::default()).unwrap();
    let c: Vec<Module> = ["S1", "P2", "P3", "S3"]
        .iter()
        .map(|n| u.members()[u.labels().iter().position(|l| l == n).unwrap()].clone())
        .collect();
    let c = SubcatSpec::new("C", c);
    let once = serde_json::to_string(&analyze(&c, &c, &u).unwrap()).unwrap();
    let again = serde_json::to_string(&analyze(&c, &c, &u.fresh()).unwrap()).unwrap();
    assert_eq!(once, again);
}
