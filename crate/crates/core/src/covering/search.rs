//! Exhaustive searches for coverings of a prescribed size.

use serde::Serialize;

use super::{ConditionSet, Condition, Covering, CoveringError, RefinedCovering, Witness};
use crate::bounds::Bounds;
use crate::graph::{Graph, VertexSet};
use crate::metric::Distances;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Found(Witness),
    Exhausted,
    /// The node budget ran out before the search finished.
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KDecision {
    pub k: usize,
    pub conditions: ConditionSet,
    pub outcome: Outcome,
    /// Search nodes visited.
    pub visited: u64,
}

impl KDecision {
    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// Shared limits and counters for one search.
struct SearchLimits {
    budget: u64,
    visited: u64,
}

impl SearchLimits {
    fn new(budget: u64) -> Self {
        SearchLimits { budget, visited: 0 }
    }

    /// Counts a node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.visited += 1;
        self.visited <= self.budget
    }
}

enum Flow {
    Continue,
    Found(Witness),
    OutOfBudget,
}

struct Ctx<'a> {
    p: &'a Graph,
    d: &'a Distances,
    conds: ConditionSet,
    refine: bool,
    /// `V \ N[v]` per vertex, for pruning blocks that can no longer pass A.
    far2: Vec<VertexSet>,
    prune_a: bool,
    limits: SearchLimits,
}

impl<'a> Ctx<'a> {
    fn new(p: &'a Graph, conds: ConditionSet, refine: bool, budget: u64) -> Self {
        let all = p.vertices();
        Ctx {
            p,
            d: p.distances(),
            conds,
            refine,
            far2: (0..p.n()).map(|v| all - p.closed_neighbors(v)).collect(),
            prune_a: conds.implies_a(),
            limits: SearchLimits::new(budget),
        }
    }

    fn leaf(&mut self, blocks: &[VertexSet]) -> Flow {
        let cov = Covering::from_blocks_unchecked(self.p.n(), blocks.to_vec());
        if !self.conds.holds(self.p, &cov) {
            return Flow::Continue;
        }
        if !self.refine {
            return Flow::Found(Witness::Plain(cov));
        }
        let prune_halves = self.conds.contains(Condition::ADoublePrime);
        for iota in 0..blocks.len() {
            let mut found = None;
            let mut out_of_budget = false;
            for_each_split(self.d, blocks, iota, prune_halves, &mut |q0, q1| {
                if !self.limits.tick() {
                    out_of_budget = true;
                    return true;
                }
                let rc = RefinedCovering::new(cov.clone(), iota, q0, q1)
                    .expect("split covers the block");
                if self.conds.holds_refined(self.p, &rc) {
                    found = Some(rc);
                    return true;
                }
                false
            });
            if out_of_budget {
                return Flow::OutOfBudget;
            }
            if let Some(rc) = found {
                return Flow::Found(Witness::Refined(rc));
            }
        }
        Flow::Continue
    }
}

/// Calls `f(q0, q1)` for every pair with `q0 | q1 = blocks[iota]` and `q0`
/// nonempty, in lexicographic order of per-vertex choices (q0 only, q1 only,
/// both). With `prune`, halves that cannot pass the second group of A″ are
/// cut early: each half must avoid `N_2[p]` for some `p` outside the block,
/// or `N[P_j]` for some other block `P_j`. Stops when `f` returns true.
pub(super) fn for_each_split(
    d: &Distances,
    blocks: &[VertexSet],
    iota: usize,
    prune: bool,
    f: &mut dyn FnMut(VertexSet, VertexSet) -> bool,
) -> bool {
    let split = blocks[iota];
    let members = split.to_vec();
    let mut regions: Vec<VertexSet> = Vec::new();
    if prune {
        let outside = VertexSet::full(d.n()) - split;
        regions.extend(outside.iter().map(|p| split - d.ball(p, 2)));
        regions.extend(
            blocks
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != iota)
                .map(|(_, &bj)| split - d.grow(bj, 1)),
        );
    }
    let masks: Vec<u128> = members
        .iter()
        .map(|&v| {
            regions
                .iter()
                .enumerate()
                .filter(|(_, r)| r.contains(v))
                .fold(0u128, |m, (i, _)| m | (1 << i))
        })
        .collect();
    let start = if regions.len() >= 128 { u128::MAX } else { (1u128 << regions.len()) - 1 };

    struct State<'s> {
        members: &'s [usize],
        masks: &'s [u128],
        prune: bool,
    }
    fn rec(
        s: &State,
        i: usize,
        q: [VertexSet; 2],
        alive: [u128; 2],
        f: &mut dyn FnMut(VertexSet, VertexSet) -> bool,
    ) -> bool {
        if i == s.members.len() {
            return !q[0].is_empty() && f(q[0], q[1]);
        }
        let v = s.members[i];
        for choice in 0..3 {
            let mut q = q;
            let mut alive = alive;
            for (l, half) in q.iter_mut().enumerate() {
                if choice == l || choice == 2 {
                    half.insert(v);
                    alive[l] &= s.masks[i];
                }
            }
            let dead = |l: usize| s.prune && !q[l].is_empty() && alive[l] == 0;
            if dead(0) || dead(1) {
                continue;
            }
            if rec(s, i + 1, q, alive, f) {
                return true;
            }
        }
        false
    }
    let state = State {
        members: &members,
        masks: &masks,
        prune,
    };
    rec(&state, 0, [VertexSet::EMPTY; 2], [start; 2], f)
}

fn check_request(conds: ConditionSet, refine: bool) -> Result<(), CoveringError> {
    if conds.needs_refinement() && !refine {
        return Err(CoveringError::RefinementRequired);
    }
    Ok(())
}

/// Decides whether `p` has an ordered covering with exactly `k` blocks
/// (`k <= 3`) passing `conds`, by assigning every vertex a nonempty set of
/// blocks in lexicographic order. With `refine`, every split block and split
/// of it is tried as well. The first witness in that order is returned.
pub fn decide_cover_k(
    p: &Graph,
    k: usize,
    conds: ConditionSet,
    refine: bool,
    bounds: &Bounds,
) -> Result<KDecision, CoveringError> {
    check_request(conds, refine)?;
    let n = p.n();
    let bound = match k {
        1 => usize::MAX,
        2 => bounds.pair_max_n,
        3 => bounds.triple_max_n,
        _ => return Err(CoveringError::UnsupportedK(k)),
    };
    if n > bound {
        return Err(CoveringError::BoundExceeded { k, n, bound });
    }
    let mut ctx = Ctx::new(p, conds, refine, u64::MAX);
    let mut blocks = vec![VertexSet::EMPTY; k];
    let mut witness = vec![VertexSet::full(n); k];
    let flow = assign_patterns(&mut ctx, 0, &mut blocks, &mut witness);
    Ok(finish(k, conds, flow, ctx.limits.visited))
}

fn finish(k: usize, conds: ConditionSet, flow: Flow, visited: u64) -> KDecision {
    let outcome = match flow {
        Flow::Continue => Outcome::Exhausted,
        Flow::Found(w) => Outcome::Found(w),
        Flow::OutOfBudget => Outcome::BudgetExceeded,
    };
    KDecision {
        k,
        conditions: conds,
        outcome,
        visited,
    }
}

fn assign_patterns(
    ctx: &mut Ctx,
    v: usize,
    blocks: &mut [VertexSet],
    witness: &mut [VertexSet],
) -> Flow {
    if !ctx.limits.tick() {
        return Flow::OutOfBudget;
    }
    let k = blocks.len();
    if v == ctx.p.n() {
        if blocks.iter().any(|b| b.is_empty()) {
            return Flow::Continue;
        }
        return ctx.leaf(blocks);
    }
    let saved_blocks = blocks.to_vec();
    let saved_witness = witness.to_vec();
    'patterns: for pattern in 1usize..(1 << k) {
        for b in 0..k {
            if pattern >> b & 1 == 1 {
                blocks[b].insert(v);
                witness[b] &= ctx.far2[v];
                if ctx.prune_a && witness[b].is_empty() {
                    blocks.copy_from_slice(&saved_blocks);
                    witness.copy_from_slice(&saved_witness);
                    continue 'patterns;
                }
            }
        }
        match assign_patterns(ctx, v + 1, blocks, witness) {
            Flow::Continue => {}
            other => return other,
        }
        blocks.copy_from_slice(&saved_blocks);
        witness.copy_from_slice(&saved_witness);
    }
    Flow::Continue
}

/// Searches partitions of `V(p)` into exactly `k` blocks (each unordered
/// partition once) for one passing `conds`; with refined conditions every
/// block is tried as the split block, with overlapping halves allowed.
///
/// At `k = cov_A(p)` this settles existence of a covering of size `k` for the
/// condition sets `{A, B}`, `{A′}`, `{A′, B′}` and `{A, A″, B″}`: in a minimum
/// A-covering no block lies inside the union of the others, and removing
/// vertices from a block (other than the split one) never breaks those
/// conditions, so overlaps can be resolved without losing any condition.
pub fn kappa_search(
    p: &Graph,
    k: usize,
    conds: ConditionSet,
    bounds: &Bounds,
) -> Result<KDecision, CoveringError> {
    let refine = conds.needs_refinement();
    if k == 0 || k > p.n() {
        return Ok(finish(k, conds, Flow::Continue, 0));
    }
    let mut ctx = Ctx::new(p, conds, refine, bounds.search_budget);
    let mut blocks = Vec::with_capacity(k);
    let mut witness = Vec::with_capacity(k);
    let flow = assign_partition(&mut ctx, 0, k, &mut blocks, &mut witness);
    Ok(finish(k, conds, flow, ctx.limits.visited))
}

fn assign_partition(
    ctx: &mut Ctx,
    v: usize,
    k: usize,
    blocks: &mut Vec<VertexSet>,
    witness: &mut Vec<VertexSet>,
) -> Flow {
    if !ctx.limits.tick() {
        return Flow::OutOfBudget;
    }
    let n = ctx.p.n();
    if v == n {
        return if blocks.len() == k { ctx.leaf(blocks) } else { Flow::Continue };
    }
    // not enough vertices left to open the missing blocks
    if k - blocks.len() > n - v {
        return Flow::Continue;
    }
    for b in 0..blocks.len() {
        let w = witness[b] & ctx.far2[v];
        if ctx.prune_a && w.is_empty() {
            continue;
        }
        let old = (blocks[b], witness[b]);
        blocks[b].insert(v);
        witness[b] = w;
        match assign_partition(ctx, v + 1, k, blocks, witness) {
            Flow::Continue => {}
            other => return other,
        }
        blocks[b] = old.0;
        witness[b] = old.1;
    }
    if blocks.len() < k {
        blocks.push(VertexSet::singleton(v));
        witness.push(ctx.far2[v]);
        let flow = assign_partition(ctx, v + 1, k, blocks, witness);
        blocks.pop();
        witness.pop();
        if !matches!(flow, Flow::Continue) {
            return flow;
        }
    }
    Flow::Continue
}
