mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semigrundy::checkers::{is_grundy, is_semi_grundy};
use semigrundy::constructions::{
    cartesian_product, cartesian_sum, extract_factors, normalize, product_bound_check,
    product_semi_grundy_kp, stratified_product_semi_grundy, sum_semi_grundy,
};
use semigrundy::rn::{build_rn, grundy_gap, rn_g1, rn_g2};
use semigrundy::solvers::find_semi_grundy;
use semigrundy::{Digraph, Error, ValueMap};

fn acyclic(n: usize, arcs: Vec<(usize, usize)>) -> Digraph {
    Digraph::new(n, arcs.into_iter().filter(|(a, b)| a < b)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sum_indexing_round_trips(radices in proptest::collection::vec(1usize..4, 1..4)) {
        let factors: Vec<Digraph> = radices.iter().map(|&r| Digraph::empty(r)).collect();
        let sum = cartesian_sum(&factors).unwrap();
        prop_assert_eq!(sum.digraph.order(), radices.iter().product::<usize>());
        for (i, t) in sum.tuples().enumerate() {
            prop_assert_eq!(sum.index(&t), i);
            prop_assert_eq!(sum.tuple(i), t);
        }
    }

    /// Acyclic bases are kernel-perfect, so the kernel-driven product applies.
    #[test]
    fn acyclic_bases_give_bounded_products(
        n in 1usize..5,
        arcs in proptest::collection::vec((0usize..5, 0usize..5), 0..10),
        seed in any::<u64>(),
    ) {
        let base = acyclic(n, arcs.into_iter().filter(|&(a, b)| a < n && b < n).collect());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (factors, funcs): (Vec<_>, Vec<_>) = (0..n).map(|_| random_semi_grundy_factor(&mut rng, 3)).unzip();
        let fa = cartesian_product(&base, factors).unwrap();
        let (s, trace) = product_semi_grundy_kp(&fa, &funcs).unwrap();
        prop_assert!(is_semi_grundy(fa.product(), &s));
        prop_assert!(oracle_is_semi_grundy(fa.product().arcs(), s.values()));
        prop_assert!(product_bound_check(&funcs, n, &s));
        prop_assert_eq!(trace.stages.len(), s.max_value().unwrap() + 1);
        let (support, recovered) = extract_factors(&fa, &s).unwrap();
        prop_assert!(!support.is_empty());
        for (r, f) in recovered.iter().zip(&funcs) {
            prop_assert!(same_partition(r.values(), f.values()));
        }
    }

    #[test]
    fn normalization_keeps_sum_validity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, fa) = random_semi_grundy_factor(&mut rng, 3);
        let (b, fb) = random_semi_grundy_factor(&mut rng, 3);
        // stretch values apart; the sum stays valid on stretched inputs
        let stretched = ValueMap::new(fa.values().iter().map(|v| 3 * v + 1).collect());
        prop_assert!(is_semi_grundy(&a, &stretched));
        let factors = [a, b];
        let s = sum_semi_grundy(&factors, &[stretched.clone(), fb.clone()]).unwrap();
        let sum = cartesian_sum(&factors).unwrap();
        prop_assert!(is_semi_grundy(&sum.digraph, &s));
        prop_assert!(is_semi_grundy(&sum.digraph, &normalize(&s)));
        prop_assert_eq!(normalize(&stretched), fa);
    }
}

#[test]
fn product_rejects_non_kernel_perfect_base() {
    let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
    let fa = cartesian_product(&c3, vec![Digraph::empty(1); 3]).unwrap();
    let funcs = vec![ValueMap::new(vec![0]); 3];
    assert!(matches!(product_semi_grundy_kp(&fa, &funcs), Err(Error::Contract(_))));
}

#[test]
fn stratified_requires_equal_level_maxima() {
    let base = Digraph::empty(2);
    let (tt1, f1) = transitive_tournament(1);
    let (tt2, f2) = transitive_tournament(2);
    let fa = cartesian_product(&base, vec![tt1, tt2]).unwrap();
    let err = stratified_product_semi_grundy(&fa, &ValueMap::new(vec![0, 0]), &[f1, f2]).unwrap_err();
    assert!(matches!(err, Error::Input(_)));
}

#[test]
fn stratified_on_a_path_base() {
    let base = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
    let f = find_semi_grundy(&base).unwrap().witness_map().unwrap();
    assert_eq!(f.values(), &[0, 1, 0]);
    let (tt, g) = transitive_tournament(1);
    let fa = cartesian_product(&base, vec![tt.clone(), tt.clone(), tt]).unwrap();
    let s = stratified_product_semi_grundy(&fa, &f, &vec![g; 3]).unwrap();
    assert!(is_semi_grundy(fa.product(), &s));
    // one level step plus a maximum of 1 on each of the two levels
    assert_eq!(s.max_value(), Some(3));
}

#[test]
fn rn_functions_for_larger_n() {
    for n in 2..=20 {
        let d = build_rn(n).unwrap();
        assert!(is_grundy(&d, &rn_g1(n).unwrap()));
        assert!(is_grundy(&d, &rn_g2(n).unwrap()));
        assert!(oracle_is_grundy(d.order(), d.arcs(), rn_g2(n).unwrap().values()));
    }
    assert_eq!(grundy_gap(&build_rn(2).unwrap()).unwrap(), Some(1));
}
