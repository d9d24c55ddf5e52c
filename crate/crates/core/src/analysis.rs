//! Centers, eccentric sets, centered peripheries and the covering that a
//! uniform central graph induces on its centered periphery.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::covering::Covering;
use crate::graph::{Graph, GraphError, VertexSet};
use crate::metric::{metric_profile, ExtDist, MetricProfile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("graph is not a uniform central graph")]
    NotUcg,
    #[error("radius {0} is below 2")]
    RadiusTooSmall(ExtDist),
    #[error("not a spanning subgraph: vertex counts or edge sets differ")]
    NotSpanningSubgraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Center, eccentric sets and the derived partition of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UcgAnalysis {
    pub profile: MetricProfile,
    pub center: VertexSet,
    /// `EC(z)` for every central `z`.
    pub ec_map: BTreeMap<usize, VertexSet>,
    pub centered_periphery: VertexSet,
    pub intermediate: VertexSet,
    /// `D_m`: vertices at distance `m` from the center, `m = 0..=r`.
    pub strata: Vec<VertexSet>,
    pub is_ucg: bool,
}

impl UcgAnalysis {
    pub fn radius(&self) -> ExtDist {
        self.profile.radius
    }

    pub fn periphery(&self) -> VertexSet {
        self.profile.periphery()
    }
}

pub fn ucg_analysis(g: &Graph) -> UcgAnalysis {
    let profile = metric_profile(g);
    let d = g.distances();
    let all = g.vertices();
    let center = profile.center();
    let ec_map: BTreeMap<usize, VertexSet> = center
        .iter()
        .map(|z| {
            let e = profile.ecc[z];
            let ec = (0..g.n()).filter(|&x| d.get(z, x) == e).collect();
            (z, ec)
        })
        .collect();
    let centered_periphery = ec_map.values().fold(VertexSet::EMPTY, |acc, &s| acc | s);
    let intermediate = all - (center | centered_periphery);

    let connected = profile.is_connected();
    let strata = match profile.radius.value() {
        Some(r) if connected => (0..=r as usize)
            .map(|m| {
                (0..g.n())
                    .filter(|&u| d.to_set(u, center) == ExtDist::finite(m as u32))
                    .collect()
            })
            .collect(),
        _ => vec![all],
    };
    let mut ecs = ec_map.values();
    let first = ecs.next().copied();
    let is_ucg = connected && ecs.all(|&s| Some(s) == first);

    UcgAnalysis {
        profile,
        center,
        ec_map,
        centered_periphery,
        intermediate,
        strata,
        is_ucg,
    }
}

/// Every shortest path from `from` to `to`, as vertex sequences.
pub fn dm_paths(g: &Graph, from: usize, to: usize) -> Vec<Vec<usize>> {
    let d = g.distances();
    let Some(len) = d.get(from, to).value() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut path = vec![from];
    extend_dm(g, to, len, &mut path, &mut out);
    out
}

fn extend_dm(g: &Graph, to: usize, len: u32, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let here = *path.last().unwrap();
    if here == to {
        out.push(path.clone());
        return;
    }
    let d = g.distances();
    let remaining = len - (path.len() as u32 - 1);
    for next in g.neighbors(here).iter() {
        if d.get(next, to) == ExtDist::finite(remaining - 1) {
            path.push(next);
            extend_dm(g, to, len, path, out);
            path.pop();
        }
    }
}

/// All radial paths: shortest paths of length `r` starting at a central vertex.
pub fn radial_paths(g: &Graph, analysis: &UcgAnalysis) -> Vec<Vec<usize>> {
    let Some(r) = analysis.radius().value() else {
        return Vec::new();
    };
    let d = g.distances();
    let mut out = Vec::new();
    for z in analysis.center.iter() {
        for target in 0..g.n() {
            if d.get(z, target) == ExtDist::finite(r) {
                out.extend(dm_paths(g, z, target));
            }
        }
    }
    out
}

/// The covering of `CP(h)` induced through the first stratum `D_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedCoverResult {
    /// `D_1` in ascending order.
    pub d1: Vec<usize>,
    /// Nonempty blocks as `(x_i, P_i)`, host vertex indices.
    pub blocks: Vec<(usize, VertexSet)>,
    /// Indices into `blocks` surviving the irredundant reduction.
    pub irredundant: Vec<usize>,
    /// Kept block index -> a vertex lying in no other kept block.
    pub witnesses: BTreeMap<usize, usize>,
    /// `CP(h)` in ascending order; position = vertex index in `<CP(h)>`.
    pub periphery: Vec<usize>,
}

impl InducedCoverResult {
    fn relabel(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .map(|v| self.periphery.binary_search(&v).expect("block inside CP"))
            .collect()
    }

    /// All nonempty blocks as a covering of the induced subgraph `<CP(h)>`.
    pub fn covering(&self) -> Covering {
        Covering::from_blocks_unchecked(
            self.periphery.len(),
            self.blocks.iter().map(|&(_, b)| self.relabel(b)).collect(),
        )
    }

    /// Only the kept blocks, as a covering of `<CP(h)>`.
    pub fn irredundant_covering(&self) -> Covering {
        Covering::from_blocks_unchecked(
            self.periphery.len(),
            self.irredundant.iter().map(|&i| self.relabel(self.blocks[i].1)).collect(),
        )
    }
}

/// `P_i = {p in CP : d(x_i, p) = r - 1}` for each `x_i in D_1`, followed by
/// a deterministic irredundant reduction (repeatedly drop the lowest-indexed
/// block contained in the union of the others).
pub fn induced_covering(h: &Graph) -> Result<InducedCoverResult, AnalysisError> {
    let a = ucg_analysis(h);
    if !a.is_ucg {
        return Err(AnalysisError::NotUcg);
    }
    let r = match a.radius().value() {
        Some(r) if r >= 2 => r,
        _ => return Err(AnalysisError::RadiusTooSmall(a.radius())),
    };
    let d = h.distances();
    let cp = a.centered_periphery;
    let d1 = a.strata[1].to_vec();
    let blocks: Vec<(usize, VertexSet)> = d1
        .iter()
        .map(|&x| {
            let block = cp.iter().filter(|&p| d.get(x, p) == ExtDist::finite(r - 1)).collect();
            (x, block)
        })
        .filter(|(_, b): &(usize, VertexSet)| !b.is_empty())
        .collect();

    let mut kept: Vec<usize> = (0..blocks.len()).collect();
    loop {
        let redundant = kept.iter().position(|&i| {
            let others = kept
                .iter()
                .filter(|&&j| j != i)
                .fold(VertexSet::EMPTY, |acc, &j| acc | blocks[j].1);
            blocks[i].1.is_subset(others)
        });
        match redundant {
            Some(pos) => {
                kept.remove(pos);
            }
            None => break,
        }
    }
    let witnesses = kept
        .iter()
        .map(|&i| {
            let others = kept
                .iter()
                .filter(|&&j| j != i)
                .fold(VertexSet::EMPTY, |acc, &j| acc | blocks[j].1);
            let private = (blocks[i].1 - others).first().expect("irredundant block");
            (i, private)
        })
        .collect();

    Ok(InducedCoverResult {
        d1,
        blocks,
        irredundant: kept,
        witnesses,
        periphery: cp.to_vec(),
    })
}

/// `d_g(c, x) = d_h(c, x)` for every `c` in `center_set` and every vertex `x`,
/// where `g` must be a spanning subgraph of `h`.
pub fn distance_preserving_spanning_check(
    h: &Graph,
    g: &Graph,
    center_set: VertexSet,
) -> Result<bool, AnalysisError> {
    if !g.is_spanning_subgraph_of(h) {
        return Err(AnalysisError::NotSpanningSubgraph);
    }
    let (dh, dg) = (h.distances(), g.distances());
    Ok(center_set
        .iter()
        .all(|c| (0..h.n()).all(|x| dg.get(c, x) == dh.get(c, x))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn two_vertex_and_cycle_are_not_ucg() {
        assert!(!ucg_analysis(&Graph::complete(2).unwrap()).is_ucg);
        let c6 = ucg_analysis(&Graph::cycle(6).unwrap());
        assert_eq!(c6.center, Graph::cycle(6).unwrap().vertices());
        assert_eq!(c6.ec_map[&0], set(&[3]));
        assert!(!c6.is_ucg);
    }

    #[test]
    fn disconnected_convention() {
        let g = Graph::edgeless(3).unwrap();
        let a = ucg_analysis(&g);
        assert!(!a.is_ucg);
        assert_eq!(a.center, g.vertices());
        assert_eq!(a.strata, vec![g.vertices()]);
    }

    #[test]
    fn strata_partition_connected_graphs() {
        let f = families::fixture_figure1();
        let a = ucg_analysis(&f.graph);
        let mut union = VertexSet::EMPTY;
        for s in &a.strata {
            assert!(s.is_disjoint(union));
            union |= *s;
        }
        assert_eq!(union, f.graph.vertices());
        assert_eq!(a.strata[0], a.center);
        assert_eq!(a.strata.len(), 4);
    }

    #[test]
    fn figure1_induced_covering() {
        let f = families::fixture_figure1();
        let id = |name: &str| f.index_of(name).unwrap();
        let res = induced_covering(&f.graph).unwrap();
        assert_eq!(res.d1, vec![id("a1"), id("a2")]);
        let b1 = set(&[id("p1"), id("p2"), id("p3")]);
        let b2 = set(&[id("p4"), id("p5"), id("p6")]);
        assert_eq!(res.blocks, vec![(id("a1"), b1), (id("a2"), b2)]);
        assert_eq!(res.irredundant, vec![0, 1]);
        assert_eq!(res.witnesses[&0], id("p1"));
        assert_eq!(res.witnesses[&1], id("p4"));
    }

    #[test]
    fn radius_one_is_rejected() {
        let wheel = crate::construction::build_cone(&Graph::cycle(4).unwrap()).graph;
        assert!(matches!(
            induced_covering(&wheel),
            Err(AnalysisError::RadiusTooSmall(_))
        ));
        assert_eq!(
            induced_covering(&Graph::cycle(6).unwrap()),
            Err(AnalysisError::NotUcg)
        );
    }

    #[test]
    fn spanning_check_examples() {
        let k3 = Graph::complete(3).unwrap();
        let p3 = Graph::path(3).unwrap(); // a - b - c as 0 - 1 - 2
        assert!(distance_preserving_spanning_check(&k3, &k3, set(&[0])).unwrap());
        assert!(distance_preserving_spanning_check(&k3, &p3, set(&[1])).unwrap());
        assert!(!distance_preserving_spanning_check(&k3, &p3, set(&[0])).unwrap());
        assert_eq!(
            distance_preserving_spanning_check(&p3, &k3, set(&[0])),
            Err(AnalysisError::NotSpanningSubgraph)
        );
    }

    #[test]
    fn radial_paths_of_figure1() {
        let f = families::fixture_figure1();
        let a = ucg_analysis(&f.graph);
        let paths = radial_paths(&f.graph, &a);
        // c-a1-b1-{p1,p2,p3} and c-a2-b2-{p4,p5,p6}
        assert_eq!(paths.len(), 6);
        assert!(paths.iter().all(|p| p.len() == 4 && p[0] == 0));
    }
}
