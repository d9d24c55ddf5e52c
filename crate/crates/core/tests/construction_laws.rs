use proptest::prelude::*;

use ucg::construction::{build_cone, build_scaffold, verify_construction, Role};
use ucg::covering::check_a;
use ucg::{metric_profile, Covering, ExtDist, Graph, VertexSet};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
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
}

fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Blocks drawn from subsets of the sets `V \ N[v]`, which always pass A,
/// topped up with singletons until everything is covered.
fn a_covering(p: &Graph, picks: &[(usize, u64)]) -> Covering {
    let mut blocks = Vec::new();
    for &(v, mask) in picks {
        let v = v % p.n();
        let room = p.vertices() - p.closed_neighbors(v);
        let block = VertexSet::from_bits(room.bits() & mask);
        if !block.is_empty() {
            blocks.push(block);
        }
    }
    let covered = blocks.iter().fold(VertexSet::EMPTY, |acc, &b| acc | b);
    blocks.extend((p.vertices() - covered).iter().map(VertexSet::singleton));
    Covering::new(p, blocks).unwrap()
}

fn min_rho(c: &Graph) -> u32 {
    match metric_profile(c).diameter.value() {
        Some(d) => d.min(2),
        None => 2,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scaffolds_over_a_coverings_verify(
        c in arb_graph(1, 4),
        p in arb_graph(2, 6).prop_filter("radius at least 2", |p| metric_profile(p).radius.at_least(2)),
        picks in proptest::collection::vec((0usize..6, any::<u64>()), 0..4),
        extra in 0u32..2,
    ) {
        let cover = a_covering(&p, &picks);
        prop_assert!(check_a(&p, &cover).pass);
        let rho = min_rho(&c).max(1) + extra;
        let s = build_scaffold(&c, &p, &cover, rho as usize, &[]).unwrap();
        let rep = verify_construction(&s, &c, &p);
        prop_assert!(rep.ok(), "{:?}", rep);
        prop_assert_eq!(rep.radius, ExtDist::finite(rho + 1));
        prop_assert_eq!(rep.intermediate_count, (cover.len() + 1) * rho as usize);
    }
}

#[test]
fn radius_below_the_bound_breaks_the_center() {
    let c = Graph::path(3).unwrap();
    let p = Graph::edgeless(2).unwrap();
    let s = build_scaffold(&c, &p, &Covering::singletons(&p), 1, &[]).unwrap();
    let rep = verify_construction(&s, &c, &p);
    assert!(!rep.ok());
}

#[test]
fn dropping_the_apex_with_b_failing() {
    // P5 has radius 2, so no two-block covering passes B
    let c = Graph::complete(2).unwrap();
    let p = Graph::path(5).unwrap();
    let cover = Covering::from_vecs(&p, &[&[0, 1, 2], &[3, 4]]).unwrap();
    assert!(!ucg::covering::check_b(&p, &cover).pass);
    let rep = verify_construction(&build_scaffold(&c, &p, &cover, 1, &[1]).unwrap(), &c, &p);
    assert!(!rep.is_ucg || !rep.periphery_matches);
}

#[test]
fn cone_over_a_star_fails() {
    let p = Graph::star(3).unwrap();
    let s = build_cone(&p);
    assert_eq!(s.roles[0], Role::Center(0));
    assert!(!verify_construction(&s, &Graph::edgeless(1).unwrap(), &p).ok());
}

#[test]
fn scaffold_labels_are_stable() {
    let c = Graph::complete(2).unwrap();
    let p = Graph::cycle(7).unwrap();
    let cover = Covering::from_vecs(&p, &[&[6, 0, 1], &[2, 3, 4, 5]]).unwrap();
    let a = build_scaffold(&c, &p, &cover, 2, &[1]).unwrap();
    let b = build_scaffold(&c, &p, &cover, 2, &[1]).unwrap();
    assert_eq!(ucg::io::to_graph6(&a.graph), ucg::io::to_graph6(&b.graph));
    let labels: Vec<String> = (0..a.graph.n()).map(|v| a.graph.label(v)).collect();
    assert_eq!(&labels[..2], ["c0", "c1"]);
    assert_eq!(labels[9], "x0,2");
    assert_eq!(labels.last().unwrap(), "x2,2");
}
