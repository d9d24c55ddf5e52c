//! Named graph families and hand-transcribed example graphs.

use thiserror::Error;

use crate::covering::{Covering, RefinedCovering};
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("{family} needs {requirement}, got {got}")]
    OutOfRange {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A labeled graph with optional named vertex sets attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub extras: Vec<(String, VertexSet)>,
    /// Where the graph comes from, for manifests.
    pub provenance: &'static str,
}

impl Fixture {
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.graph.labels()?.iter().position(|l| l == label)
    }

    pub fn extra(&self, name: &str) -> Option<VertexSet> {
        self.extras.iter().find(|(k, _)| k == name).map(|&(_, s)| s)
    }

    fn set_of(&self, labels: &[&str]) -> VertexSet {
        labels
            .iter()
            .map(|l| self.index_of(l).unwrap_or_else(|| panic!("unknown label {l}")))
            .collect()
    }
}

fn labeled(n: usize, edges: Vec<(usize, usize)>, labels: Vec<String>) -> Result<Graph, DomainError> {
    Ok(Graph::from_edges(n, edges)?.with_labels(labels)?)
}

fn alpha_core(alpha: usize) -> (Vec<(usize, usize)>, Vec<String>) {
    let e = |i: usize| i;
    let f = |i: usize| alpha + i;
    let mut edges = Vec::new();
    for i in 0..alpha {
        for j in 0..alpha {
            if i < j {
                edges.push((e(i), e(j)));
                edges.push((f(i), f(j)));
            }
            if i != j {
                edges.push((e(i), f(j)));
            }
        }
    }
    let labels = (1..=alpha)
        .map(|i| format!("e{i}"))
        .chain((1..=alpha).map(|i| format!("f{i}")))
        .collect();
    (edges, labels)
}

/// `P^α`: vertices `e_1..e_α, f_1..f_α`; every pair is adjacent except
/// `e_i f_i`. Radius and diameter 2, and every A-covering uses singletons.
pub fn gen_p_alpha(alpha: usize) -> Result<Fixture, DomainError> {
    if alpha < 2 {
        return Err(DomainError::OutOfRange {
            family: "P^alpha",
            requirement: "alpha >= 2",
            got: alpha,
        });
    }
    let (edges, labels) = alpha_core(alpha);
    Ok(Fixture {
        name: format!("p_alpha_{alpha}"),
        graph: labeled(2 * alpha, edges, labels)?,
        extras: Vec::new(),
        provenance: "family P^alpha: K_2alpha minus a perfect matching e_i f_i",
    })
}

/// `P^{α,β}`: `P^α` plus `g_1..g_β`, each adjacent to every `e_k, f_k` with
/// `k >= 2` and to nothing else.
pub fn gen_p_alpha_beta(alpha: usize, beta: usize) -> Result<Fixture, DomainError> {
    if alpha < 2 {
        return Err(DomainError::OutOfRange {
            family: "P^{alpha,beta}",
            requirement: "alpha >= 2",
            got: alpha,
        });
    }
    if beta < 1 {
        return Err(DomainError::OutOfRange {
            family: "P^{alpha,beta}",
            requirement: "beta >= 1",
            got: beta,
        });
    }
    let (mut edges, mut labels) = alpha_core(alpha);
    for j in 0..beta {
        let g = 2 * alpha + j;
        for k in 1..alpha {
            edges.push((k, g));
            edges.push((alpha + k, g));
        }
        labels.push(format!("g{}", j + 1));
    }
    Ok(Fixture {
        name: format!("p_alpha_beta_{alpha}_{beta}"),
        graph: labeled(2 * alpha + beta, edges, labels)?,
        extras: Vec::new(),
        provenance: "family P^{alpha,beta}: P^alpha plus beta vertices joined to e_k, f_k for k >= 2",
    })
}

/// Prism over an `m`-cycle: inner cycle `v_0..v_{m-1}` (vertices `0..m`),
/// outer cycle `u_0..u_{m-1}` (vertices `m..2m`), spokes `v_i u_i`.
pub fn gen_prism(m: usize) -> Result<Fixture, DomainError> {
    if m < 3 {
        return Err(DomainError::OutOfRange {
            family: "prism",
            requirement: "m >= 3",
            got: m,
        });
    }
    let mut edges = Vec::new();
    for i in 0..m {
        let next = (i + 1) % m;
        edges.push((i, next));
        edges.push((m + i, m + next));
        edges.push((i, m + i));
    }
    let labels = (0..m)
        .map(|i| format!("v{i}"))
        .chain((0..m).map(|i| format!("u{i}")))
        .collect();
    Ok(Fixture {
        name: format!("prism_{m}"),
        graph: labeled(2 * m, edges, labels)?,
        extras: Vec::new(),
        provenance: "family prism: C_m x K_2",
    })
}

/// Thirteen-vertex graph whose periphery differs from its centered periphery.
/// Transcribed from a drawing; the acceptance suite checks it against the
/// stated periphery and centered periphery.
pub fn fixture_figure1() -> Fixture {
    let names = ["c", "a1", "a2", "b1", "b2", "p0", "p1", "p2", "p3", "p4", "p5", "p6", "p7"];
    let id = |s: &str| names.iter().position(|&x| x == s).unwrap();
    let pairs = [
        ("c", "a1"),
        ("c", "a2"),
        ("a1", "b1"),
        ("a2", "b2"),
        ("a1", "p0"),
        ("a2", "p7"),
        ("b1", "p1"),
        ("b1", "p2"),
        ("b1", "p3"),
        ("b2", "p4"),
        ("b2", "p5"),
        ("b2", "p6"),
        ("p1", "p2"),
        ("p2", "p3"),
        ("p3", "p4"),
        ("p4", "p5"),
        ("p5", "p6"),
    ];
    let edges = pairs.iter().map(|&(a, b)| (id(a), id(b))).collect();
    Fixture {
        name: "figure1".into(),
        graph: labeled(names.len(), edges, names.iter().map(|s| s.to_string()).collect())
            .expect("static fixture"),
        extras: Vec::new(),
        provenance: "transcribed drawing: periphery differs from centered periphery",
    }
}

/// Heptagonal prism with a two-block covering `{Q_0 ∪ Q_1, P_2}` and the
/// split of its first block, transcribed from a drawing.
pub fn fixture_fig5_partition() -> Fixture {
    let mut f = gen_prism(7).expect("m = 7 is valid");
    f.name = "hept_prism_refined".into();
    f.provenance = "transcribed drawing: heptagonal prism with a refined 2-block covering";
    let q0 = f.set_of(&["v0", "v1", "u0", "u1"]);
    let q1 = f.set_of(&["v2", "v3", "u2", "u3", "u4"]);
    let p2 = f.set_of(&["v4", "v5", "v6", "u5", "u6"]);
    f.extras = vec![("Q0".into(), q0), ("Q1".into(), q1), ("P2".into(), p2)];
    f
}

/// The refined covering carried by [`fixture_fig5_partition`].
pub fn fig5_refinement(f: &Fixture) -> Option<RefinedCovering> {
    let (q0, q1, p2) = (f.extra("Q0")?, f.extra("Q1")?, f.extra("P2")?);
    let base = Covering::new(&f.graph, vec![q0 | q1, p2]).ok()?;
    RefinedCovering::new(base, 0, q0, q1).ok()
}

/// Every named fixture, in a fixed order.
pub fn all_fixtures() -> Vec<Fixture> {
    let mut out = vec![fixture_figure1()];
    out.extend((2..=4).map(|a| gen_p_alpha(a).unwrap()));
    out.extend([(2, 1), (3, 2)].map(|(a, b)| gen_p_alpha_beta(a, b).unwrap()));
    let mut hex = gen_prism(6).unwrap();
    hex.name = "hex_prism".into();
    let mut hept = gen_prism(7).unwrap();
    hept.name = "hept_prism".into();
    out.extend([hex, hept, fixture_fig5_partition()]);
    out
}
