//! Exhaustive enumeration of small graphs.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexSet};

/// Every simple graph on vertices `0..n`, in order of the edge bitmask over
/// the lexicographically ordered vertex pairs. There are `2^(n(n-1)/2)`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labeled enumeration beyond 8 vertices is not practical");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("small graph")
    })
}

/// Colour refinement: a vertex's new colour ranks the pair (old colour,
/// sorted neighbour colours). Ranks depend only on the structure, so the
/// result is labelling-invariant.
fn refine(adj: &[VertexSet], colors: &mut Vec<usize>) {
    let n = adj.len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = adj[v].iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let ranked: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| ranked.binary_search(&s).expect("present"))
            .collect();
        let after = ranked.len();
        *colors = next;
        if after == before {
            return;
        }
    }
}

fn code_for(adj: &[VertexSet], order: &[usize]) -> u64 {
    // order[v] = new position of v
    let n = adj.len();
    let mut inv = vec![0; n];
    for (v, &pos) in order.iter().enumerate() {
        inv[pos] = v;
    }
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | adj[inv[i]].contains(inv[j]) as u64;
        }
    }
    code
}

fn search(adj: &[VertexSet], colors: Vec<usize>, best: &mut Option<(u64, Vec<usize>)>) {
    let n = adj.len();
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
        let code = code_for(adj, &colors);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, colors));
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == target) {
        let mut c: Vec<usize> = colors.iter().map(|&x| 2 * x + 1).collect();
        c[v] = 2 * target;
        refine(adj, &mut c);
        search(adj, c, best);
    }
}

/// Canonical relabelling: isomorphic graphs map to identical graphs.
pub fn canonical_form(g: &Graph) -> Graph {
    let adj = g.adjacency();
    let n = adj.len();
    if n == 0 {
        return g.clone();
    }
    let mut colors = vec![0; n];
    refine(adj, &mut colors);
    let mut best = None;
    search(adj, colors, &mut best);
    let (_, order) = best.expect("at least one leaf");
    let edges = g.edges().map(|(u, v)| (order[u], order[v]));
    Graph::from_edges(n, edges).expect("same size")
}

/// One graph per isomorphism class on `n` vertices, built by adding a vertex
/// to every class on `n - 1` vertices in every way.
/// Empty for `n = 0`, since graphs need at least one vertex.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "isomorphism-class enumeration beyond 10 vertices is not practical");
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::edgeless(1).expect("one vertex")];
    for m in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u64..(1 << m) {
                let edges = g
                    .edges()
                    .chain(VertexSet::from_bits(mask).iter().map(|u| (u, m)));
                let h = Graph::from_edges(m + 1, edges).expect("small graph");
                let canon = canonical_form(&h);
                let key: Vec<u64> = canon.adjacency().iter().map(|s| s.bits()).collect();
                if seen.insert(key) {
                    next.push(canon);
                }
            }
        }
        level = next;
    }
    level.sort_by_key(|g| (g.edge_count(), g.adjacency().iter().map(|s| s.bits()).collect::<Vec<_>>()));
    level
}
