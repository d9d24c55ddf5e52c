use super::{Condition, Covering, CoveringError};
use crate::graph::{Graph, VertexSet};
use crate::metric::{metric_profile, ExtDist};

/// Two-block covering passing A and B for a graph with diameter at least 4
/// and radius at least 3.
///
/// Starts from `N[x]` and `N[y]` for the lexicographically first pair with
/// `d(x, y) = 4`, then places each remaining vertex `z` in ascending order:
/// into the first block if it has a vertex of the second block at distance
/// at least 3; else into the second block if the symmetric test passes; else
/// into the first block, while the lowest unplaced vertex at distance at
/// least 3 from `z` joins the second block.
pub fn construct_ab_bipartition(p: &Graph) -> Result<Covering, CoveringError> {
    let prof = metric_profile(p);
    if !prof.diameter.at_least(4) || !prof.radius.at_least(3) {
        return Err(CoveringError::PreconditionViolated(format!(
            "needs diameter >= 4 and radius >= 3, got diameter {} and radius {}",
            prof.diameter, prof.radius
        )));
    }
    let d = p.distances();
    let n = p.n();
    let four = ExtDist::finite(4);
    let (x, y) = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| d.get(x, y) == four)
        .ok_or_else(|| {
            CoveringError::PreconditionViolated("no pair of vertices at distance exactly 4".into())
        })?;

    let mut p1 = p.closed_neighbors(x);
    let mut p2 = p.closed_neighbors(y);
    let has_far = |z: usize, block: VertexSet| block.iter().any(|q| d.get(z, q).at_least(3));
    for z in 0..n {
        if (p1 | p2).contains(z) {
            continue;
        }
        if has_far(z, p2) {
            p1.insert(z);
        } else if has_far(z, p1) {
            p2.insert(z);
        } else {
            let partner = (VertexSet::full(n) - (p1 | p2) - VertexSet::singleton(z))
                .iter()
                .find(|&q| d.get(z, q).at_least(3))
                .ok_or_else(|| {
                    CoveringError::InternalAssertion(format!(
                        "vertex {z} has no unplaced vertex at distance >= 3"
                    ))
                })?;
            p1.insert(z);
            p2.insert(partner);
        }
    }

    let cov = Covering::new(p, vec![p1, p2])
        .map_err(|e| CoveringError::InternalAssertion(e.to_string()))?;
    for cond in [Condition::A, Condition::B] {
        if !super::conditions::passes(p, &cov, cond) {
            return Err(CoveringError::InternalAssertion(format!(
                "bipartition {p1:?} | {p2:?} fails condition {cond}"
            )));
        }
    }
    Ok(cov)
}
