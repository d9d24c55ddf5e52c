//! Graphs with a prescribed center and centered periphery, built from a
//! covering of the periphery graph.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::analysis::ucg_analysis;
use crate::covering::{Covering, RefinedCovering};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::metric::ExtDist;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("rho must be at least 1")]
    RhoZero,
    #[error("cannot drop x0,{0}: only x0,1..x0,{1} exist, each at most once")]
    InvalidDrop(usize, usize),
    #[error("covering has {cover_n} vertices but the periphery graph has {p_n}")]
    CoverMismatch { cover_n: usize, p_n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// What a scaffold vertex stands for. Block indices are 0-based positions in
/// the covering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Vertex `i` of the center graph.
    Center(usize),
    /// Vertex `i` of the periphery graph.
    Periphery(usize),
    /// Spine vertex at depth `depth` (1-based, 1 is adjacent to the center)
    /// leading to block `block`; `None` is the spine with no block.
    Spine { block: Option<usize>, depth: usize },
    /// First-level vertex for a block of a refined scaffold.
    X(usize),
    /// Second-level vertex joining an unsplit block to its `X`.
    Y(usize),
    /// Second-level vertex for half `l` of the split block.
    YHalf(usize),
}

impl Role {
    pub fn is_intermediate(self) -> bool {
        !matches!(self, Role::Center(_) | Role::Periphery(_))
    }

    pub fn kind(self) -> &'static str {
        match self {
            Role::Center(_) => "center",
            Role::Periphery(_) => "periphery",
            _ => "spine",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Center(i) => write!(f, "center({i})"),
            Role::Periphery(i) => write!(f, "periphery({i})"),
            Role::Spine { block: None, depth } => write!(f, "spine(0,{depth})"),
            Role::Spine { block: Some(b), depth } => write!(f, "spine({},{depth})", b + 1),
            Role::X(b) => write!(f, "x({})", b + 1),
            Role::Y(b) => write!(f, "y({})", b + 1),
            Role::YHalf(l) => write!(f, "y(q{l})"),
        }
    }
}

impl Serialize for Role {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A built graph with the role of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scaffold {
    pub graph: Graph,
    pub roles: Vec<Role>,
}

impl Scaffold {
    pub fn tagged(&self, pred: impl Fn(Role) -> bool) -> VertexSet {
        self.roles
            .iter()
            .enumerate()
            .filter(|&(_, &r)| pred(r))
            .map(|(v, _)| v)
            .collect()
    }

    pub fn center_tagged(&self) -> VertexSet {
        self.tagged(|r| matches!(r, Role::Center(_)))
    }

    pub fn periphery_tagged(&self) -> VertexSet {
        self.tagged(|r| matches!(r, Role::Periphery(_)))
    }

    pub fn added_vertices(&self) -> usize {
        self.roles.iter().filter(|r| r.is_intermediate()).count()
    }
}

struct Builder {
    labels: Vec<String>,
    roles: Vec<Role>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(c: &Graph, p: &Graph) -> Self {
        let mut b = Builder {
            labels: Vec::new(),
            roles: Vec::new(),
            edges: Vec::new(),
        };
        let label = |g: &Graph, v: usize, prefix: &str| match g.labels() {
            Some(l) => l[v].clone(),
            None => format!("{prefix}{v}"),
        };
        for v in 0..c.n() {
            b.push(label(c, v, "c"), Role::Center(v));
        }
        for v in 0..p.n() {
            b.push(label(p, v, "p"), Role::Periphery(v));
        }
        let off = c.n();
        b.edges.extend(c.edges());
        b.edges.extend(p.edges().map(|(u, v)| (u + off, v + off)));
        b
    }

    fn push(&mut self, label: String, role: Role) -> usize {
        self.labels.push(label);
        self.roles.push(role);
        self.roles.len() - 1
    }

    fn finish(self) -> Result<Scaffold, ConstructionError> {
        let n = self.roles.len();
        let graph = Graph::from_edges(n, self.edges)?.with_labels(self.labels)?;
        Ok(Scaffold {
            graph,
            roles: self.roles,
        })
    }
}

fn check_cover(p: &Graph, cover: &Covering) -> Result<(), ConstructionError> {
    if !cover.fits(p) {
        return Err(ConstructionError::CoverMismatch {
            cover_n: cover.n(),
            p_n: p.n(),
        });
    }
    Ok(())
}

/// One spine of length `rho` per block plus one unattached spine, every
/// spine's first vertex joined to all of `C`, every block joined to its
/// spine's last vertex. `drop` lists depths of the unattached spine to omit.
pub fn build_scaffold(
    c: &Graph,
    p: &Graph,
    cover: &Covering,
    rho: usize,
    drop: &[usize],
) -> Result<Scaffold, ConstructionError> {
    if rho == 0 {
        return Err(ConstructionError::RhoZero);
    }
    check_cover(p, cover)?;
    let mut dropped = VertexSet::EMPTY;
    for &j in drop {
        if j == 0 || j > rho || dropped.contains(j) {
            return Err(ConstructionError::InvalidDrop(j, rho));
        }
        dropped.insert(j);
    }

    let mut b = Builder::new(c, p);
    let off = c.n();
    let blocks = std::iter::once(None).chain((0..cover.len()).map(Some));
    for block in blocks {
        let tag = block.map_or(0, |i| i + 1);
        let mut prev: Option<usize> = None;
        for depth in 1..=rho {
            if block.is_none() && dropped.contains(depth) {
                prev = None;
                continue;
            }
            let v = b.push(format!("x{tag},{depth}"), Role::Spine { block, depth });
            if depth == 1 {
                b.edges.extend((0..c.n()).map(|z| (z, v)));
            }
            if let Some(u) = prev {
                b.edges.push((u, v));
            }
            if depth == rho {
                if let Some(i) = block {
                    b.edges.extend(cover.blocks()[i].iter().map(|q| (q + off, v)));
                }
            }
            prev = Some(v);
        }
    }
    b.finish()
}

/// First-level vertex `x_i` per block joined to all of `C`; second-level
/// `y_i` joining each unsplit block to `x_i`; the split block's halves each
/// get their own second-level vertex, both joined to the split block's `x`.
pub fn build_refined_scaffold(
    c: &Graph,
    p: &Graph,
    rc: &RefinedCovering,
) -> Result<Scaffold, ConstructionError> {
    let cover = rc.base();
    check_cover(p, cover)?;
    let mut b = Builder::new(c, p);
    let off = c.n();
    let xs: Vec<usize> = (0..cover.len())
        .map(|i| {
            let v = b.push(format!("x{}", i + 1), Role::X(i));
            b.edges.extend((0..c.n()).map(|z| (z, v)));
            v
        })
        .collect();
    for l in 0..2 {
        let y = b.push(format!("y{}q{l}", rc.iota() + 1), Role::YHalf(l));
        b.edges.push((xs[rc.iota()], y));
        b.edges.extend(rc.q(l).iter().map(|q| (q + off, y)));
    }
    for (i, block) in cover.blocks().iter().enumerate() {
        if i == rc.iota() {
            continue;
        }
        let y = b.push(format!("y{}", i + 1), Role::Y(i));
        b.edges.push((xs[i], y));
        b.edges.extend(block.iter().map(|q| (q + off, y)));
    }
    b.finish()
}

/// `P` plus one vertex adjacent to all of it.
pub fn build_cone(p: &Graph) -> Scaffold {
    let apex = Graph::edgeless(1).expect("one vertex");
    Builder::new(&apex, p)
        .finish_with_apex(p.n())
        .expect("cone fits whenever P has fewer than 64 vertices")
}

impl Builder {
    fn finish_with_apex(mut self, pn: usize) -> Result<Scaffold, ConstructionError> {
        self.labels[0] = "apex".into();
        self.edges.extend((1..=pn).map(|q| (0, q)));
        self.finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub is_ucg: bool,
    pub center_matches: bool,
    pub periphery_matches: bool,
    pub radius: ExtDist,
    pub intermediate_count: usize,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.is_ucg && self.center_matches && self.periphery_matches
    }
}

/// Fresh analysis of the scaffold: is it a uniform central graph whose
/// center is exactly the `C` copy and whose centered periphery is exactly the
/// `P` copy?
pub fn verify_construction(s: &Scaffold, c: &Graph, p: &Graph) -> VerificationReport {
    let a = ucg_analysis(&s.graph);
    let matches = |tagged: VertexSet, found: VertexSet, original: &Graph| {
        tagged == found
            && s
                .graph
                .induced(tagged)
                .map(|g| g.n() == original.n() && g.same_edges(original))
                .unwrap_or(false)
    };
    VerificationReport {
        is_ucg: a.is_ucg,
        center_matches: matches(s.center_tagged(), a.center, c),
        periphery_matches: matches(s.periphery_tagged(), a.centered_periphery, p),
        radius: a.radius(),
        intermediate_count: a.intermediate.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::check_adp_bdp;
    use crate::families::{fig5_refinement, fixture_fig5_partition};

    fn two_k1() -> Graph {
        Graph::edgeless(2).unwrap()
    }

    fn singletons(p: &Graph) -> Covering {
        Covering::singletons(p)
    }

    #[test]
    fn full_scaffold_on_complete_center() {
        let (c, p) = (Graph::complete(2).unwrap(), two_k1());
        let s = build_scaffold(&c, &p, &singletons(&p), 1, &[]).unwrap();
        assert_eq!(s.graph.n(), 7);
        let r = verify_construction(&s, &c, &p);
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.radius, ExtDist::finite(2));
    }

    #[test]
    fn dropping_apex_spine() {
        let (c, p) = (Graph::complete(2).unwrap(), two_k1());
        let s = build_scaffold(&c, &p, &singletons(&p), 1, &[1]).unwrap();
        let r = verify_construction(&s, &c, &p);
        assert!(r.ok());
        assert_eq!(r.intermediate_count, 2);

        let c = Graph::path(3).unwrap();
        let s = build_scaffold(&c, &p, &singletons(&p), 2, &[2]).unwrap();
        let r = verify_construction(&s, &c, &p);
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.intermediate_count, 5);
    }

    #[test]
    fn invalid_drops() {
        let (c, p) = (Graph::complete(2).unwrap(), two_k1());
        let cov = singletons(&p);
        assert_eq!(build_scaffold(&c, &p, &cov, 1, &[2]), Err(ConstructionError::InvalidDrop(2, 1)));
        assert_eq!(build_scaffold(&c, &p, &cov, 2, &[1, 1]), Err(ConstructionError::InvalidDrop(1, 2)));
        assert_eq!(build_scaffold(&c, &p, &cov, 0, &[]), Err(ConstructionError::RhoZero));
    }

    #[test]
    fn short_spines_under_a_path_center() {
        // with rho = 1 the two ends of P3 see each other's far side at
        // different distances, so the result is not uniform
        let c = Graph::path(3).unwrap();
        let p = Graph::path(4).unwrap();
        let cov = Covering::from_vecs(&p, &[&[0, 1], &[2, 3]]).unwrap();
        let s = build_scaffold(&c, &p, &cov, 1, &[]).unwrap();
        let r = verify_construction(&s, &c, &p);
        assert!(!r.ok());
        let s = build_scaffold(&c, &p, &cov, 2, &[]).unwrap();
        let r = verify_construction(&s, &c, &p);
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.radius, ExtDist::finite(3));
    }

    #[test]
    fn cones() {
        let two_k2 = Graph::complete(2).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        let k1 = Graph::edgeless(1).unwrap();
        for p in [two_k2, Graph::cycle(4).unwrap()] {
            let s = build_cone(&p);
            let r = verify_construction(&s, &k1, &p);
            assert!(r.ok(), "{r:?}");
            assert_eq!(r.intermediate_count, 0);
        }
        let star = Graph::star(3).unwrap();
        assert!(!verify_construction(&build_cone(&star), &k1, &star).ok());
    }

    #[test]
    fn refined_scaffold_on_heptagonal_prism() {
        let f = fixture_fig5_partition();
        let rc = fig5_refinement(&f).unwrap();
        let c = Graph::path(3).unwrap();
        let s = build_refined_scaffold(&c, &f.graph, &rc).unwrap();
        let r = verify_construction(&s, &c, &f.graph);
        let (a, b) = check_adp_bdp(&f.graph, &rc);
        assert_eq!(r.ok(), a.pass && b.pass);
        assert_eq!(s.added_vertices(), 5);
    }

    #[test]
    fn labels_are_canonical() {
        let (c, p) = (Graph::complete(2).unwrap(), two_k1());
        let s = build_scaffold(&c, &p, &singletons(&p), 2, &[1]).unwrap();
        let labels: Vec<String> = (0..s.graph.n()).map(|v| s.graph.label(v)).collect();
        assert_eq!(labels, ["c0", "c1", "p0", "p1", "x0,2", "x1,1", "x1,2", "x2,1", "x2,2"]);
    }
}
