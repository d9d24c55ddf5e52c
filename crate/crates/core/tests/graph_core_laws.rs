use std::collections::BTreeMap;

use ucg::analysis::{induced_covering, radial_paths};
use ucg::census::nonisomorphic_graphs;
use ucg::covering::{check_a, cov_a};
use ucg::{ucg_analysis, Graph, VertexSet};

/// Connected uniform central graphs with radius at least 2, up to isomorphism.
fn ucgs(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .flat_map(nonisomorphic_graphs)
        .filter(|g| {
            let a = ucg_analysis(g);
            a.is_ucg && a.radius().at_least(2)
        })
        .collect()
}

#[test]
fn ucg_laws_through_eight_vertices() {
    assert_eq!(nonisomorphic_graphs(8).len(), 12346);
    let hosts = ucgs(8);
    assert!(hosts.len() > 500, "only {} hosts", hosts.len());
    for h in &hosts {
        let a = ucg_analysis(h);
        let r = a.radius().value().unwrap() as usize;
        let cp = h.induced(a.centered_periphery).unwrap();

        let ic = induced_covering(h).unwrap();
        assert!(check_a(&cp, &ic.covering()).pass, "{:?}", h.edges().collect::<Vec<_>>());

        for path in radial_paths(h, &a) {
            let central = path.iter().filter(|&&v| a.center.contains(v)).count();
            assert_eq!(central, 1, "path {path:?}");
        }

        let cp_profile = ucg::metric_profile(&cp);
        assert!(cp_profile.radius.at_least(2));

        let kappa = cov_a(&cp).exact().unwrap();
        assert!(a.intermediate.len() >= kappa * (r - 1));
    }
}

#[test]
fn induced_blocks_match_radial_paths() {
    for h in ucgs(7) {
        let a = ucg_analysis(&h);
        let mut through: BTreeMap<usize, VertexSet> = BTreeMap::new();
        for path in radial_paths(&h, &a) {
            through.entry(path[1]).or_default().insert(*path.last().unwrap());
        }
        let ic = induced_covering(&h).unwrap();
        let blocks: BTreeMap<usize, VertexSet> = ic.blocks.iter().copied().collect();
        assert_eq!(blocks, through);
    }
}

#[test]
fn irredundant_blocks_have_private_vertices() {
    for h in ucgs(7) {
        let ic = induced_covering(&h).unwrap();
        let kept = ic.irredundant_covering();
        let union = kept.blocks().iter().fold(VertexSet::EMPTY, |acc, &b| acc | b);
        assert_eq!(union.len(), ic.periphery.len());
        for (&block, &p) in &ic.witnesses {
            let others = ic
                .irredundant
                .iter()
                .filter(|&&j| j != block)
                .fold(VertexSet::EMPTY, |acc, &j| acc | ic.blocks[j].1);
            assert!(ic.blocks[block].1.contains(p) && !others.contains(p));
        }
    }
}
