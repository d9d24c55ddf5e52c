use proptest::prelude::*;

use ucg::census::nonisomorphic_graphs;
use ucg::covering::{
    check_a, check_adp_bdp, check_aprime, check_b, check_bprime, construct_ab_bipartition, cov_a,
    cov_profile, decide_cover_k, CovTarget, CovValue, Witness,
};
use ucg::{metric_profile, Bounds, Condition, ConditionSet, Covering, Graph, RefinedCovering, VertexSet};

fn graphs(lo: usize, hi: usize) -> impl Iterator<Item = Graph> {
    (lo..=hi).flat_map(nonisomorphic_graphs)
}

#[test]
fn set_cover_matches_smallest_decided_size() {
    let b = Bounds::default();
    let only_a = ConditionSet::of(&[Condition::A]);
    for p in graphs(1, 6) {
        let r = cov_a(&p);
        let prof = metric_profile(&p);
        assert_eq!(r.exact().is_some(), prof.radius.at_least(2));
        let decided = (1..=3).find(|&k| decide_cover_k(&p, k, only_a, false, &b).unwrap().witness().is_some());
        match r.exact() {
            Some(kappa) => {
                assert!(kappa >= 2);
                assert_eq!(decided, (kappa <= 3).then_some(kappa));
                let w = r.witness.as_ref().unwrap().covering();
                assert!(check_a(&p, w).pass && w.len() == kappa);
            }
            None => {
                assert_eq!(r.value, CovValue::Infeasible);
                assert_eq!(decided, None);
            }
        }
    }
}

#[test]
fn bipartition_through_eight_vertices() {
    let mut built = 0;
    for p in graphs(5, 8) {
        let prof = metric_profile(&p);
        if prof.is_connected() && prof.diameter.at_least(4) && prof.radius.at_least(3) {
            let c = construct_ab_bipartition(&p).unwrap();
            assert!(check_a(&p, &c).pass && check_b(&p, &c).pass);
            assert_eq!(c.len(), 2);
            built += 1;
        }
    }
    assert!(built > 10);
}

#[test]
fn profile_witnesses_meet_their_conditions() {
    let b = Bounds::default();
    for p in graphs(2, 6) {
        let prof = cov_profile(&p, &b);
        for e in &prof.entries {
            let conds = e.which.conditions();
            match (&e.value, &e.witness) {
                (CovValue::Exact(k), Some(Witness::Plain(c))) => {
                    assert_eq!(c.len(), *k);
                    assert!(conds.holds(&p, c), "{} on {:?}", e.which, p.edges().collect::<Vec<_>>());
                }
                (CovValue::Exact(k), Some(Witness::Refined(rc))) => {
                    assert_eq!(rc.base().len(), *k);
                    assert!(conds.holds_refined(&p, rc));
                }
                (CovValue::Exact(_), None) => panic!("exact value without witness"),
                _ => {}
            }
            if let (Some(kappa), CovValue::Exact(k)) = (prof.kappa(), &e.value) {
                assert!(*k >= kappa);
            }
        }
        assert_eq!(prof.get(CovTarget::A).exact(), cov_a(&p).exact());
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph with a random covering: each vertex joins a random nonempty set
/// of `k` blocks.
fn arb_covered() -> impl Strategy<Value = (Graph, Covering)> {
    (arb_graph(6), 1usize..=3).prop_flat_map(|(g, k)| {
        let n = g.n();
        proptest::collection::vec(1u8..(1 << k), n).prop_filter_map("empty block", move |memberships| {
            let mut blocks = vec![VertexSet::EMPTY; k];
            for (v, m) in memberships.iter().enumerate() {
                for (i, b) in blocks.iter_mut().enumerate() {
                    if m >> i & 1 == 1 {
                        b.insert(v);
                    }
                }
            }
            Covering::new(&g, blocks).ok().map(|c| (g.clone(), c))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn primed_conditions_imply_plain((p, c) in arb_covered()) {
        if check_aprime(&p, &c).pass {
            prop_assert!(check_a(&p, &c).pass);
        }
        if check_bprime(&p, &c).pass {
            prop_assert!(check_b(&p, &c).pass);
        }
        if check_aprime(&p, &c).pass && check_bprime(&p, &c).pass {
            let rc = RefinedCovering::trivial(c.clone(), 0).unwrap();
            let (a2, b2) = check_adp_bdp(&p, &rc);
            prop_assert!(a2.pass && b2.pass);
        }
    }
}
