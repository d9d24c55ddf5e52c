//! Brute-force appendage numbers by trying every way of adding `t` vertices.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(
        "t = {t} needs {free_pairs} optional vertex pairs, above the bound {bound}{}",
        exhausted_through.map_or(String::new(), |e| format!(" (t <= {e} exhausted)"))
    )]
    BoundExceeded {
        t: usize,
        free_pairs: usize,
        bound: usize,
        exhausted_through: Option<usize>,
    },
    #[error("{0} vertices exceed the supported maximum")]
    TooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleOutcome {
    /// Smallest number of added vertices that works.
    Found(usize),
    /// Nothing works with up to this many added vertices.
    NotFound(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub outcome: OracleOutcome,
    /// Candidate graphs examined.
    pub examined: u64,
    /// Edge set of the first accepted graph (vertices: `C`, then `P`, then
    /// the added ones).
    #[serde(skip)]
    pub witness: Option<Graph>,
}

/// Number of vertex pairs whose adjacency is free when `t` vertices are
/// added: everything except pairs inside `C` and inside `P`.
pub fn free_pairs(nc: usize, np: usize, t: usize) -> usize {
    nc * np + t * (nc + np) + t * t.saturating_sub(1) / 2
}

/// Tries `t = 0, 1, ..., t_max` added vertices and every edge set on the
/// free pairs, accepting the first graph whose center is exactly the `C`
/// copy and whose centered periphery is exactly the `P` copy. Graphs that
/// differ only by permuting the added vertices are tried once: the added
/// vertices' neighbourhoods in `C ∪ P` must be non-decreasing as bitmasks.
pub fn brute_force_appendage(
    c: &Graph,
    p: &Graph,
    t_max: usize,
    pair_bound: usize,
) -> Result<OracleReport, OracleError> {
    let (nc, np) = (c.n(), p.n());
    let base = nc + np;
    let mut examined = 0;
    for t in 0..=t_max {
        let f = free_pairs(nc, np, t);
        if f > pair_bound {
            return Err(OracleError::BoundExceeded {
                t,
                free_pairs: f,
                bound: pair_bound,
                exhausted_through: t.checked_sub(1),
            });
        }
        if base + t > MAX_VERTICES {
            return Err(OracleError::TooLarge(base + t));
        }
        let mut search = Search::new(c, p, t);
        if let Some(g) = search.run() {
            examined += search.examined;
            return Ok(OracleReport {
                outcome: OracleOutcome::Found(t),
                examined,
                witness: Some(g),
            });
        }
        examined += search.examined;
    }
    Ok(OracleReport {
        outcome: OracleOutcome::NotFound(t_max),
        examined,
        witness: None,
    })
}

struct Search {
    nc: usize,
    np: usize,
    t: usize,
    /// Adjacency with the fixed edges inside `C` and inside `P`.
    fixed: Vec<VertexSet>,
    examined: u64,
}

impl Search {
    fn new(c: &Graph, p: &Graph, t: usize) -> Self {
        let (nc, np) = (c.n(), p.n());
        let mut fixed = vec![VertexSet::EMPTY; nc + np + t];
        for (u, v) in c.edges() {
            fixed[u].insert(v);
            fixed[v].insert(u);
        }
        for (u, v) in p.edges() {
            fixed[nc + u].insert(nc + v);
            fixed[nc + v].insert(nc + u);
        }
        Search {
            nc,
            np,
            t,
            fixed,
            examined: 0,
        }
    }

    fn run(&mut self) -> Option<Graph> {
        let (nc, np, t) = (self.nc, self.np, self.t);
        let base = nc + np;
        let cp_pairs = nc * np;
        let ww_pairs: Vec<(usize, usize)> = (0..t)
            .flat_map(|i| (i + 1..t).map(move |j| (base + i, base + j)))
            .collect();
        let sig_count: u64 = 1 << base;
        let mut sigs = vec![0u64; t];
        for cp_mask in 0u64..(1 << cp_pairs) {
            let mut adj = self.fixed.clone();
            for bit in 0..cp_pairs {
                if cp_mask >> bit & 1 == 1 {
                    let (u, v) = (bit / np, nc + bit % np);
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
            if let Some(g) = self.signatures(&adj, &mut sigs, 0, 0, sig_count, &ww_pairs) {
                return Some(g);
            }
        }
        None
    }

    /// Chooses non-decreasing neighbourhoods in `C ∪ P` for the added
    /// vertices, then every edge set among them.
    fn signatures(
        &mut self,
        adj: &[VertexSet],
        sigs: &mut [u64],
        i: usize,
        min: u64,
        count: u64,
        ww_pairs: &[(usize, usize)],
    ) -> Option<Graph> {
        let base = self.nc + self.np;
        if i == self.t {
            let mut with_sigs = adj.to_vec();
            for (w, &s) in sigs.iter().enumerate() {
                let wv = base + w;
                for u in VertexSet::from_bits(s).iter() {
                    with_sigs[u].insert(wv);
                    with_sigs[wv].insert(u);
                }
            }
            for ww_mask in 0u64..(1 << ww_pairs.len()) {
                let mut full = with_sigs.clone();
                for (bit, &(u, v)) in ww_pairs.iter().enumerate() {
                    if ww_mask >> bit & 1 == 1 {
                        full[u].insert(v);
                        full[v].insert(u);
                    }
                }
                self.examined += 1;
                if accepts(&full, self.nc, self.np) {
                    return Some(Graph::from_adjacency(&full).expect("valid adjacency"));
                }
            }
            return None;
        }
        for s in min..count {
            sigs[i] = s;
            if let Some(g) = self.signatures(adj, sigs, i + 1, s, count, ww_pairs) {
                return Some(g);
            }
        }
        None
    }
}

/// `N_s[v]` grown until it covers everything or stops growing; returns the
/// eccentricity, or `None` if `v` cannot reach all vertices.
fn ecc(adj: &[VertexSet], all: VertexSet, v: usize, limit: u32) -> Option<u32> {
    let mut seen = VertexSet::singleton(v);
    let mut frontier = seen;
    let mut d = 0;
    while seen != all {
        if d >= limit {
            return Some(d + 1);
        }
        let mut next = VertexSet::EMPTY;
        for u in frontier.iter() {
            next |= adj[u];
        }
        next = next - seen;
        if next.is_empty() {
            return None;
        }
        seen |= next;
        frontier = next;
        d += 1;
    }
    Some(d)
}

/// Center exactly `0..nc`, all central vertices with the same farthest set,
/// and that set exactly `nc..nc + np`.
fn accepts(adj: &[VertexSet], nc: usize, np: usize) -> bool {
    let n = adj.len();
    let all = VertexSet::full(n);
    let Some(r) = ecc(adj, all, 0, u32::MAX) else {
        return false;
    };
    for z in 1..nc {
        if ecc(adj, all, z, r) != Some(r) {
            return false;
        }
    }
    // every other vertex must be strictly less central
    if (nc..n).any(|v| ecc(adj, all, v, r) <= Some(r)) {
        return false;
    }
    let periphery = VertexSet::full(nc + np) - VertexSet::full(nc);
    (0..nc).all(|z| farthest(adj, z, r) == periphery)
}

fn farthest(adj: &[VertexSet], v: usize, r: u32) -> VertexSet {
    let mut seen = VertexSet::singleton(v);
    let mut frontier = seen;
    for _ in 0..r {
        let mut next = VertexSet::EMPTY;
        for u in frontier.iter() {
            next |= adj[u];
        }
        frontier = next - seen;
        seen |= frontier;
    }
    frontier
}
