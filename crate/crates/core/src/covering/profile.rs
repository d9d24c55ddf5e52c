//! Minimum covering sizes for all condition sets, combining structural
//! shortcuts with the exhaustive searches.

use serde::Serialize;

use super::{
    construct_ab_bipartition, cov_a, decide_cover_k, kappa_search, CovSizeResult, CovTarget,
    CovValue, Covering, CoveringError, Method, Outcome, RefinedCovering, Witness,
};
use crate::bounds::Bounds;
use crate::graph::{Graph, VertexSet};
use crate::metric::{metric_profile, ExtDist, MetricProfile};

/// Whether some three vertices (not necessarily distinct) have disjoint
/// closed 2-neighborhoods in common, i.e. the complements of their
/// 2-neighborhoods cover the graph.
pub fn two_ball_triple_check(p: &Graph) -> bool {
    let d = p.distances();
    let n = p.n();
    let balls: Vec<VertexSet> = (0..n).map(|v| d.ball(v, 2)).collect();
    (0..n).any(|i| {
        (i..n).any(|j| {
            let ij = balls[i] & balls[j];
            (j..n).any(|k| (ij & balls[k]).is_empty())
        })
    })
}

/// Whether a covering of size `cov_A` passing a condition set exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtKappa {
    Yes(Witness, Method),
    No(Method),
    Unknown,
}

fn split_off_first_component(p: &Graph) -> Covering {
    let comps = p.components();
    let first = comps[0];
    Covering::from_blocks_unchecked(p.n(), vec![first, p.vertices() - first])
}

fn first_vertex_with_ecc(prof: &MetricProfile, at_least: u32) -> Option<usize> {
    prof.ecc.iter().position(|e| e.at_least(at_least))
}

/// Structural rules that settle size-2 questions without search.
fn shortcut_at_two(p: &Graph, prof: &MetricProfile, target: CovTarget) -> Option<AtKappa> {
    let connected = prof.is_connected();
    let diam = prof.diameter;
    let r = prof.radius;
    let plain = |c: Covering, tag| AtKappa::Yes(Witness::Plain(c), Method::Shortcut(tag));
    match target {
        CovTarget::A => None,
        CovTarget::AB => {
            if !connected {
                Some(plain(split_off_first_component(p), "disconnected"))
            } else if diam.at_least(4) && r.at_least(3) {
                construct_ab_bipartition(p).ok().map(|c| plain(c, "bipartition"))
            } else if r == ExtDist::finite(2) {
                Some(AtKappa::No(Method::Shortcut("r=2")))
            } else {
                None
            }
        }
        CovTarget::APrimeBPrime => Some(if connected {
            AtKappa::No(Method::Shortcut("connected"))
        } else {
            plain(split_off_first_component(p), "disconnected")
        }),
        CovTarget::APrime => Some(if !connected {
            plain(split_off_first_component(p), "disconnected")
        } else if diam.at_least(5) {
            let u = first_vertex_with_ecc(prof, 5).expect("diameter at least 5");
            let near = p.distances().ball(u, 2);
            plain(
                Covering::from_blocks_unchecked(p.n(), vec![near, p.vertices() - near]),
                "diam≥5",
            )
        } else {
            AtKappa::No(Method::Shortcut("diam<5"))
        }),
        CovTarget::AADoublePrimeBDoublePrime => {
            if !connected {
                let rc = RefinedCovering::trivial(split_off_first_component(p), 0).ok()?;
                Some(AtKappa::Yes(Witness::Refined(rc), Method::Shortcut("disconnected")))
            } else if !diam.at_least(4) || r == ExtDist::finite(2) {
                Some(AtKappa::No(Method::Shortcut("diam≤3-or-r=2")))
            } else if diam == ExtDist::finite(4) && !two_ball_triple_check(p) {
                Some(AtKappa::No(Method::Shortcut("two-ball")))
            } else {
                None
            }
        }
    }
}

fn verified(p: &Graph, target: CovTarget, w: &Witness) -> bool {
    let conds = target.conditions();
    match w {
        Witness::Plain(c) => !conds.needs_refinement() && conds.holds(p, c),
        Witness::Refined(rc) => conds.holds_refined(p, rc),
    }
}

/// Decides whether `target` has a covering of size `kappa = cov_A(p)`.
/// With `shortcuts`, the structural rules are tried before the partition
/// search.
pub fn settle_at_kappa(
    p: &Graph,
    target: CovTarget,
    kappa: usize,
    shortcuts: bool,
    bounds: &Bounds,
) -> AtKappa {
    let prof = metric_profile(p);
    if shortcuts && kappa == 2 {
        if let Some(answer) = shortcut_at_two(p, &prof, target) {
            if let AtKappa::Yes(w, _) = &answer {
                assert!(verified(p, target, w), "shortcut witness fails {target}");
            }
            return answer;
        }
    }
    let conds = target.conditions();
    match kappa_search(p, kappa, conds, bounds) {
        Ok(dec) => match dec.outcome {
            Outcome::Found(w) => AtKappa::Yes(w, Method::Decide(kappa)),
            Outcome::Exhausted => AtKappa::No(Method::Exhausted),
            Outcome::BudgetExceeded => AtKappa::Unknown,
        },
        Err(_) => AtKappa::Unknown,
    }
}

/// All five minimum covering sizes, indexed by [`CovTarget`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CovProfile {
    pub entries: Vec<CovSizeResult>,
}

impl CovProfile {
    pub fn get(&self, target: CovTarget) -> &CovSizeResult {
        self.entries
            .iter()
            .find(|e| e.which == target)
            .expect("profile holds every target")
    }

    pub fn kappa(&self) -> Option<usize> {
        self.get(CovTarget::A).exact()
    }
}

fn cov_a_with_shortcut(p: &Graph, prof: &MetricProfile) -> CovSizeResult {
    if let Some(x) = first_vertex_with_ecc(prof, 3) {
        let near = p.closed_neighbors(x);
        return CovSizeResult {
            which: CovTarget::A,
            value: CovValue::Exact(2),
            witness: Some(Witness::Plain(Covering::from_blocks_unchecked(
                p.n(),
                vec![near, p.vertices() - near],
            ))),
            method: Method::Shortcut("diam≥3"),
        };
    }
    cov_a(p)
}

/// Minimum covering size for `target`, searching sizes above `cov_A` with
/// the exhaustive enumeration while the vertex count allows.
fn resolve(p: &Graph, target: CovTarget, kappa: usize, bounds: &Bounds) -> CovSizeResult {
    let result = |value, witness, method| CovSizeResult {
        which: target,
        value,
        witness,
        method,
    };
    let excluded_by = match settle_at_kappa(p, target, kappa, true, bounds) {
        AtKappa::Yes(w, m) => return result(CovValue::Exact(kappa), Some(w), m),
        AtKappa::No(m) => m,
        AtKappa::Unknown => {
            return result(
                CovValue::Unknown {
                    bound: bounds.search_budget.min(usize::MAX as u64) as usize,
                },
                None,
                Method::Exhausted,
            )
        }
    };
    let conds = target.conditions();
    let mut ruled_out_through = kappa;
    for k in kappa + 1..=3 {
        match decide_cover_k(p, k, conds, conds.needs_refinement(), bounds) {
            Ok(dec) => match dec.outcome {
                Outcome::Found(w) => return result(CovValue::Exact(k), Some(w), Method::Decide(k)),
                Outcome::Exhausted => ruled_out_through = k,
                Outcome::BudgetExceeded => break,
            },
            Err(CoveringError::BoundExceeded { .. }) => break,
            Err(e) => unreachable!("{e}"),
        }
    }
    if ruled_out_through == kappa {
        result(CovValue::NotEqual(kappa), None, excluded_by)
    } else {
        result(CovValue::AtLeast(ruled_out_through + 1), None, Method::Exhausted)
    }
}

/// `cov_A`, `cov_AB`, `cov_A′`, `cov_A′B′` and `cov_AA″B″` of `p`. Each
/// non-A value is at least `cov_A`; when `cov_A` is infeasible so are the
/// others.
pub fn cov_profile(p: &Graph, bounds: &Bounds) -> CovProfile {
    let prof = metric_profile(p);
    let a = cov_a_with_shortcut(p, &prof);
    let mut entries = vec![a.clone()];
    for target in &CovTarget::ALL[1..] {
        let entry = match a.exact() {
            None => CovSizeResult {
                which: *target,
                value: CovValue::Infeasible,
                witness: None,
                method: a.method,
            },
            Some(kappa) => resolve(p, *target, kappa, bounds),
        };
        entries.push(entry);
    }
    CovProfile { entries }
}
