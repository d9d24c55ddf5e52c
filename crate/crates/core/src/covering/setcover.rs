//! Minimum coverings under condition A.
//!
//! A block passes A exactly when it avoids the closed neighborhood of some
//! vertex, so a minimum A-covering is a minimum set cover of the vertex set by
//! complements of closed neighborhoods.

use super::{CovSizeResult, CovTarget, CovValue, Covering, Method, Witness};
use crate::graph::{Graph, VertexSet};

/// Exact `cov_A(p)`; infeasible when some vertex is adjacent to all others.
pub fn cov_a(p: &Graph) -> CovSizeResult {
    let n = p.n();
    let all = p.vertices();
    let mut candidates: Vec<VertexSet> = (0..n).map(|v| all - p.closed_neighbors(v)).collect();
    let coverable = candidates.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s);
    if coverable != all {
        return CovSizeResult {
            which: CovTarget::A,
            value: CovValue::Infeasible,
            witness: None,
            method: Method::SetCover,
        };
    }

    candidates.sort_by_key(|s| (std::cmp::Reverse(s.len()), s.bits()));
    candidates.dedup();
    let maximal: Vec<VertexSet> = candidates
        .iter()
        .copied()
        .filter(|&s| !candidates.iter().any(|&t| t != s && s.is_subset(t)))
        .collect();

    let mut chosen = Vec::new();
    let mut k = 1;
    while !cover_with(&maximal, all, VertexSet::EMPTY, k, &mut chosen) {
        k += 1;
    }

    // Turn the set cover into a partition; each difference is nonempty
    // because the cover is minimum.
    let mut seen = VertexSet::EMPTY;
    let blocks: Vec<VertexSet> = chosen
        .iter()
        .map(|&s| {
            let b = s - seen;
            seen |= s;
            b
        })
        .collect();
    CovSizeResult {
        which: CovTarget::A,
        value: CovValue::Exact(k),
        witness: Some(Witness::Plain(Covering::from_blocks_unchecked(n, blocks))),
        method: Method::SetCover,
    }
}

/// Depth-limited search branching on the candidates containing the lowest
/// uncovered vertex.
fn cover_with(
    sets: &[VertexSet],
    all: VertexSet,
    covered: VertexSet,
    left: usize,
    chosen: &mut Vec<VertexSet>,
) -> bool {
    let Some(u) = (all - covered).first() else {
        return true;
    };
    if left == 0 {
        return false;
    }
    let largest = sets.first().map_or(0, |s| s.len());
    if (all - covered).len() > largest * left {
        return false;
    }
    for &s in sets.iter().filter(|s| s.contains(u)) {
        chosen.push(s);
        if cover_with(sets, all, covered | s, left - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
