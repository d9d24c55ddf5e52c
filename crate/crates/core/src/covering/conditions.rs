//! Evaluation of the six covering conditions. Each condition has one
//! implementation that either stops at the first violation (for searches) or
//! collects all of them (for reports).

use std::fmt;

use serde::Serialize;

use super::{Condition, Covering, RefinedCovering};
use crate::graph::{Graph, VertexSet};
use crate::metric::Distances;

/// A clause group of a condition; a violation means every alternative of the
/// group failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    A,
    B,
    APrime,
    BPrime,
    /// Requirements on blocks other than the split one.
    ADoublePrime1,
    /// Requirements on the two halves of the split block.
    ADoublePrime2,
    BDoublePrime1,
    BDoublePrime2,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::A => "A",
            Clause::B => "B",
            Clause::APrime => "A′",
            Clause::BPrime => "B′",
            Clause::ADoublePrime1 => "A″-1",
            Clause::ADoublePrime2 => "A″-2",
            Clause::BDoublePrime1 => "B″-1",
            Clause::BDoublePrime2 => "B″-2",
        })
    }
}

impl Serialize for Clause {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Where a condition failed. `block` indexes the covering; `half` is set when
/// the failing set is `Q_0` or `Q_1` of the split block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: Clause,
    pub block: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: Condition,
    pub pass: bool,
    pub violations: Vec<Violation>,
}

struct Sink {
    collect: bool,
    found: Vec<Violation>,
}

impl Sink {
    fn new(collect: bool) -> Self {
        Sink { collect, found: Vec::new() }
    }

    /// Records a violation; returns whether evaluation should continue.
    fn push(&mut self, clause: Clause, block: usize, half: Option<usize>, vertex: Option<usize>) -> bool {
        self.found.push(Violation { clause, block, half, vertex });
        self.collect
    }

    fn report(self, condition: Condition) -> ConditionReport {
        ConditionReport {
            condition,
            pass: self.found.is_empty(),
            violations: self.found,
        }
    }
}

fn eval_a(d: &Distances, blocks: &[VertexSet], sink: &mut Sink) {
    for (i, &b) in blocks.iter().enumerate() {
        if d.far_from(b, 2).is_empty() && !sink.push(Clause::A, i, None, None) {
            return;
        }
    }
}

fn eval_b(d: &Distances, blocks: &[VertexSet], sink: &mut Sink) {
    for (i, &b) in blocks.iter().enumerate() {
        for p in b.iter() {
            let far_outside = !(d.far_from(VertexSet::singleton(p), 3) - b).is_empty();
            let ok = far_outside
                || blocks
                    .iter()
                    .enumerate()
                    .any(|(j, &bj)| j != i && d.vertex_far(p, bj, 2));
            if !ok && !sink.push(Clause::B, i, None, Some(p)) {
                return;
            }
        }
    }
}

fn eval_aprime(d: &Distances, blocks: &[VertexSet], sink: &mut Sink) {
    for (i, &b) in blocks.iter().enumerate() {
        let ok = !d.far_from(b, 3).is_empty()
            || blocks
                .iter()
                .enumerate()
                .any(|(j, &bj)| j != i && d.sets_far(b, bj, 2));
        if !ok && !sink.push(Clause::APrime, i, None, None) {
            return;
        }
    }
}

fn eval_bprime(d: &Distances, blocks: &[VertexSet], sink: &mut Sink) {
    for (i, &b) in blocks.iter().enumerate() {
        for p in b.iter() {
            let ok = blocks
                .iter()
                .enumerate()
                .any(|(j, &bj)| j != i && d.vertex_far(p, bj, 2));
            if !ok && !sink.push(Clause::BPrime, i, None, Some(p)) {
                return;
            }
        }
    }
}

fn eval_adp(d: &Distances, rc: &RefinedCovering, sink: &mut Sink) {
    let blocks = rc.base().blocks();
    let iota = rc.iota();
    let split = blocks[iota];
    let q = [rc.q0(), rc.q1()];
    let others = || blocks.iter().enumerate().filter(move |&(j, _)| j != iota);

    for (i, &b) in others() {
        // (a) the far set never meets P_i, so non-emptiness suffices
        let a = !d.far_from(b, 3).is_empty();
        // (b) read literally: j ranges over all indices except iota, so j = i
        // is allowed but never helps.
        let bb = others().any(|(_, &bj)| d.sets_far(b, bj, 2));
        let c = q.iter().any(|&ql| d.sets_far(b, ql, 2));
        if !(a || bb || c) && !sink.push(Clause::ADoublePrime1, i, None, None) {
            return;
        }
    }
    for (l, &ql) in q.iter().enumerate() {
        let a = !(d.far_from(ql, 3) - split).is_empty();
        let b = others().any(|(_, &bj)| d.sets_far(ql, bj, 2));
        if !(a || b) && !sink.push(Clause::ADoublePrime2, iota, Some(l), None) {
            return;
        }
    }
}

fn eval_bdp(d: &Distances, rc: &RefinedCovering, sink: &mut Sink) {
    let blocks = rc.base().blocks();
    let iota = rc.iota();
    let split = blocks[iota];
    let q = [rc.q0(), rc.q1()];
    let others = || blocks.iter().enumerate().filter(move |&(j, _)| j != iota);

    for (i, &b) in others() {
        for p in b.iter() {
            let far4 = d.far_from(VertexSet::singleton(p), 4);
            let a = others().any(|(_, &bj)| d.vertex_far(p, bj, 2));
            let bb = d.vertex_far(p, q[0], 2) && d.vertex_far(p, q[1], 2);
            let c = q.iter().any(|&ql| d.vertex_far(p, ql, 3));
            let dd = q
                .iter()
                .any(|&ql| d.vertex_far(p, ql, 2) && !(far4 & ql).is_empty());
            if !(a || bb || c || dd) && !sink.push(Clause::BDoublePrime1, i, None, Some(p)) {
                return;
            }
        }
    }
    for (l, &ql) in q.iter().enumerate() {
        let other_half = q[1 - l];
        for p in ql.iter() {
            let a = others().any(|(_, &bj)| d.vertex_far(p, bj, 2));
            let far4 = d.far_from(VertexSet::singleton(p), 4);
            let b = !(far4 & (split - ql)).is_empty() && d.vertex_far(p, other_half, 2);
            if !(a || b) && !sink.push(Clause::BDoublePrime2, iota, Some(l), Some(p)) {
                return;
            }
        }
    }
}

fn run_plain(p: &Graph, c: &Covering, cond: Condition, collect: bool) -> ConditionReport {
    assert!(c.fits(p), "covering built for a different graph");
    let d = p.distances();
    let mut sink = Sink::new(collect);
    match cond {
        Condition::A => eval_a(d, c.blocks(), &mut sink),
        Condition::B => eval_b(d, c.blocks(), &mut sink),
        Condition::APrime => eval_aprime(d, c.blocks(), &mut sink),
        Condition::BPrime => eval_bprime(d, c.blocks(), &mut sink),
        Condition::ADoublePrime | Condition::BDoublePrime => {
            panic!("{cond} is evaluated on refined coverings")
        }
    }
    sink.report(cond)
}

pub(super) fn passes(p: &Graph, c: &Covering, cond: Condition) -> bool {
    run_plain(p, c, cond, false).pass
}

pub(super) fn passes_adp(p: &Graph, rc: &RefinedCovering) -> bool {
    let mut sink = Sink::new(false);
    eval_adp(p.distances(), rc, &mut sink);
    sink.found.is_empty()
}

pub(super) fn passes_bdp(p: &Graph, rc: &RefinedCovering) -> bool {
    let mut sink = Sink::new(false);
    eval_bdp(p.distances(), rc, &mut sink);
    sink.found.is_empty()
}

/// Every block has a vertex at distance at least 2.
pub fn check_a(p: &Graph, c: &Covering) -> ConditionReport {
    run_plain(p, c, Condition::A, true)
}

/// Every vertex of a block has a vertex outside the block at distance at
/// least 3, or lies at distance at least 2 from some other block.
pub fn check_b(p: &Graph, c: &Covering) -> ConditionReport {
    run_plain(p, c, Condition::B, true)
}

/// Every block has a vertex at distance at least 3, or lies at distance at
/// least 2 from some other block.
pub fn check_aprime(p: &Graph, c: &Covering) -> ConditionReport {
    run_plain(p, c, Condition::APrime, true)
}

/// Every vertex lies at distance at least 2 from some block other than its own.
pub fn check_bprime(p: &Graph, c: &Covering) -> ConditionReport {
    run_plain(p, c, Condition::BPrime, true)
}

/// Reports for A″ and B″ on a refined covering.
pub fn check_adp_bdp(p: &Graph, rc: &RefinedCovering) -> (ConditionReport, ConditionReport) {
    assert!(rc.base().fits(p), "covering built for a different graph");
    let d = p.distances();
    let mut a = Sink::new(true);
    eval_adp(d, rc, &mut a);
    let mut b = Sink::new(true);
    eval_bdp(d, rc, &mut b);
    (a.report(Condition::ADoublePrime), b.report(Condition::BDoublePrime))
}
