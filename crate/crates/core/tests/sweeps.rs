mod common;

use common::*;
use proptest::prelude::*;
use semigrundy::checkers::{is_grundy, is_kernel, is_semi_grundy, is_semi_kernel};
use semigrundy::constructions::{layered_semi_grundy, Layering};
use semigrundy::explorer::{self, enumerate_digraphs, Predicate, SearchSpec, Theorem};
use semigrundy::solvers::{find_grundy, find_kernel, find_semi_grundy, find_semi_kernel};
use semigrundy::{Digraph, VertexSet};

fn least_by_size_then_mask(n: usize, accept: impl Fn(&[bool]) -> bool) -> Option<Vec<usize>> {
    let mut masks: Vec<u32> = (0..1 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.into_iter().find_map(|m| {
        let set: Vec<bool> = (0..n).map(|i| m >> i & 1 == 1).collect();
        accept(&set).then(|| (0..n).filter(|&i| set[i]).collect())
    })
}

#[test]
fn set_solvers_match_brute_force() {
    for d in all_digraphs(4) {
        let n = d.order();
        let kernel = find_kernel(&d).unwrap();
        let expected = least_by_size_then_mask(n, |s| oracle_is_kernel(n, d.arcs(), s));
        assert_eq!(kernel.witness_set(n).map(|s| s.to_vec()), expected, "kernel on {:?}", d.arcs());

        let semi = find_semi_kernel(&d).unwrap();
        let expected = least_by_size_then_mask(n, |s| oracle_is_semi_kernel(d.arcs(), s));
        assert_eq!(semi.witness_set(n).map(|s| s.to_vec()), expected, "semi-kernel on {:?}", d.arcs());
    }
}

#[test]
fn map_solvers_match_brute_force() {
    for d in all_digraphs(4) {
        let grundy = oracle_grundy_functions(&d);
        let found = find_grundy(&d).unwrap();
        assert_eq!(found.found, !grundy.is_empty());
        if let Some(g) = found.witness_map() {
            assert_eq!(g.values(), grundy[0].as_slice(), "least Grundy function on {:?}", d.arcs());
        }

        let n = d.order();
        let least = all_maps(n, n - 1).find(|s| oracle_is_semi_grundy(d.arcs(), s));
        let sg = find_semi_grundy(&d).unwrap();
        assert_eq!(sg.witness_map().map(|s| s.into_inner()), least, "semi-Grundy on {:?}", d.arcs());
    }
}

#[test]
fn implications_hold_through_order_four() {
    for theorem in [
        Theorem::HereditarySkImpliesKernel,
        Theorem::GrundyZeroIsKernel,
        Theorem::KernelPerfectImpliesGrundy,
        Theorem::SemiGrundyImpliesSemiKernel,
        Theorem::HereditarySkImpliesSemiGrundy,
    ] {
        let report = explorer::verify_theorem(theorem, 4).unwrap();
        assert!(report.holds(), "{theorem:?}: {:?}", report.counterexample);
        assert_eq!(report.per_order, vec![1, 4, 64, 4096]);
        assert!(report.premise_held > 0);
    }
}

#[test]
fn enumeration_counts() {
    for n in 1..=4u32 {
        let labeled = enumerate_digraphs(n as usize, false, false).unwrap().count() as u64;
        assert_eq!(labeled, 1 << (n * (n - 1)));
    }
    assert_eq!(enumerate_digraphs(3, true, false).unwrap().count(), 512);
    // digraphs with loops allowed on two unlabeled vertices
    assert_eq!(enumerate_digraphs(2, true, true).unwrap().count(), 10);
}

#[test]
fn canonical_representatives_cover_every_class() {
    let canon: Vec<Digraph> = enumerate_digraphs(3, false, true).unwrap().collect();
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let relabel = |d: &Digraph, p: &[usize; 3]| {
        let mut arcs: Vec<(usize, usize)> = d.arcs().iter().map(|&(a, b)| (p[a], p[b])).collect();
        arcs.sort();
        arcs
    };
    for d in enumerate_digraphs(3, false, false).unwrap() {
        let hits = canon
            .iter()
            .filter(|c| perms.iter().any(|p| relabel(&d, p) == c.arcs()))
            .count();
        assert_eq!(hits, 1, "{:?}", d.arcs());
    }
}

#[test]
fn exhaustion_reports_full_count() {
    let spec = SearchSpec::new(Predicate::GrundyGapAtLeast(3), 4);
    let report = explorer::find_witness(&spec, None).unwrap();
    assert!(!report.found);
    assert_eq!(report.digraphs_scanned, 1 + 4 + 64 + 4096);
    assert_eq!(report.digraphs_scanned, explorer::exhaustion_count(&spec).unwrap());
}

#[test]
fn workers_do_not_change_reports() {
    for (predicate, max_order) in [
        (Predicate::GrundyGapAtLeast(1), 5),
        (Predicate::GrundyGapAtLeast(2), 4),
        (Predicate::SemigrundyNotKernel, 5),
    ] {
        let mut spec = SearchSpec::new(predicate, max_order);
        let serial = explorer::find_witness(&spec, None).unwrap();
        for workers in [2, 3, 8] {
            spec.workers = workers;
            let parallel = explorer::find_witness(&spec, None).unwrap();
            assert!(serial.same_outcome(&parallel), "{predicate} with {workers} workers");
        }
        if serial.found {
            let d = serial.digraph.as_ref().unwrap().to_digraph().unwrap();
            assert!(explorer::verify_certificates(predicate, &d, &serial.certificates).unwrap());
        }
    }
}

#[test]
fn progress_is_reported_per_exhausted_order() {
    let seen = std::sync::Mutex::new(Vec::new());
    let spec = SearchSpec::new(Predicate::SemigrundyNotKernel, 3);
    let record = |p: explorer::Progress| seen.lock().unwrap().push((p.order, p.scanned));
    let report = explorer::find_witness(&spec, Some(&record)).unwrap();
    assert!(!report.found);
    assert_eq!(seen.into_inner().unwrap(), vec![(1, 1), (2, 5), (3, 69)]);
}

#[test]
fn tampered_certificates_are_rejected() {
    let spec = SearchSpec::new(Predicate::SemikernelNotSemigrundy, 4);
    let report = explorer::find_witness(&spec, None).unwrap();
    let d = report.digraph.as_ref().unwrap().to_digraph().unwrap();
    let mut certs = report.certificates.clone();
    assert!(explorer::verify_certificates(spec.predicate, &d, &certs).unwrap());
    certs.reverse();
    assert!(!explorer::verify_certificates(spec.predicate, &d, &certs).unwrap());
    certs.pop();
    assert!(!explorer::verify_certificates(spec.predicate, &d, &certs).unwrap());
}

fn arb_digraph(max_order: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=n * (n - 1))
            .prop_map(move |arcs| Digraph::new(n, arcs.into_iter().filter(|(a, b)| a != b)).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_witnesses_pass_checkers(d in arb_digraph(7)) {
        let n = d.order();
        if let Some(k) = find_kernel(&d).unwrap().witness_set(n) {
            prop_assert!(is_kernel(&d, &k));
        }
        let semi = find_semi_kernel(&d).unwrap();
        if let Some(s) = semi.witness_set(n) {
            prop_assert!(is_semi_kernel(&d, &s));
        }
        if let Some(g) = find_grundy(&d).unwrap().witness_map() {
            prop_assert!(is_grundy(&d, &g));
            prop_assert!(is_kernel(&d, &g.class(0)));
        }
        let sg = find_semi_grundy(&d).unwrap();
        if let Some(s) = sg.witness_map() {
            prop_assert!(is_semi_grundy(&d, &s));
            prop_assert!(s.is_normalized());
            prop_assert!(semi.found);
        }
    }

    #[test]
    fn layering_agrees_with_the_solver(d in arb_digraph(6)) {
        match layered_semi_grundy(&d).unwrap() {
            Layering::Complete { values, layers } => {
                prop_assert!(is_semi_grundy(&d, &values));
                prop_assert_eq!(layers.iter().map(VertexSet::len).sum::<usize>(), d.order());
            }
            Layering::Stuck { residual, .. } => {
                let (sub, _) = d.induced_subdigraph(&residual);
                prop_assert!(!find_semi_kernel(&sub).unwrap().found);
            }
        }
    }
}
