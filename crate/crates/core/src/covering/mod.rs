//! Coverings of a graph, the distance conditions on them, and the minimum
//! covering sizes under each condition set.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

mod bipartition;
mod conditions;
mod profile;
mod search;
mod setcover;

pub use bipartition::construct_ab_bipartition;
pub use conditions::{
    check_a, check_adp_bdp, check_aprime, check_b, check_bprime, Clause, ConditionReport,
    Violation,
};
pub use profile::{cov_profile, settle_at_kappa, two_ball_triple_check, AtKappa, CovProfile};
pub use search::{decide_cover_k, kappa_search, KDecision, Outcome};
pub use setcover::cov_a;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoveringError {
    #[error("a covering needs at least one block")]
    NoBlocks,
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("block {block} names vertex {vertex} outside the host's {n} vertices")]
    VertexOutOfRange { block: usize, vertex: usize, n: usize },
    #[error("blocks miss vertices {0:?}")]
    NotCovering(VertexSet),
    #[error("refinement index {iota} out of range for {k} blocks")]
    BadIota { iota: usize, k: usize },
    #[error("refinement sets must satisfy q0 nonempty and q0 | q1 = block {0}")]
    BadRefinement(usize),
    #[error("{n} vertices exceeds the enumeration bound {bound} for k = {k}")]
    BoundExceeded { k: usize, n: usize, bound: usize },
    #[error("k = {0} is not supported by the exhaustive decision procedure (use 2 or 3)")]
    UnsupportedK(usize),
    #[error("conditions A″/B″ need the refinement search")]
    RefinementRequired,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("construction produced an invalid covering: {0}")]
    InternalAssertion(String),
}

/// A family of nonempty vertex sets whose union is the whole vertex set.
/// Blocks may overlap.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CoveringRepr", into = "CoveringRepr")]
pub struct Covering {
    n: usize,
    blocks: Vec<VertexSet>,
}

impl Covering {
    pub fn new(host: &Graph, blocks: Vec<VertexSet>) -> Result<Self, CoveringError> {
        Self::validate(host.n(), blocks)
    }

    fn validate(n: usize, blocks: Vec<VertexSet>) -> Result<Self, CoveringError> {
        if blocks.is_empty() {
            return Err(CoveringError::NoBlocks);
        }
        let full = VertexSet::full(n);
        let mut union = VertexSet::EMPTY;
        for (i, &b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(CoveringError::EmptyBlock(i));
            }
            if let Some(vertex) = (b - full).first() {
                return Err(CoveringError::VertexOutOfRange { block: i, vertex, n });
            }
            union |= b;
        }
        if union != full {
            return Err(CoveringError::NotCovering(full - union));
        }
        Ok(Covering { n, blocks })
    }

    pub(crate) fn from_blocks_unchecked(n: usize, blocks: Vec<VertexSet>) -> Self {
        debug_assert!(Self::validate(n, blocks.clone()).is_ok());
        Covering { n, blocks }
    }

    /// One block per vertex.
    pub fn singletons(host: &Graph) -> Self {
        Covering {
            n: host.n(),
            blocks: (0..host.n()).map(VertexSet::singleton).collect(),
        }
    }

    /// One block per connected component.
    pub fn components(host: &Graph) -> Self {
        Covering {
            n: host.n(),
            blocks: host.components(),
        }
    }

    pub fn from_vecs(host: &Graph, blocks: &[&[usize]]) -> Result<Self, CoveringError> {
        Covering::new(
            host,
            blocks.iter().map(|b| b.iter().copied().collect()).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_partition(&self) -> bool {
        self.blocks.iter().map(|b| b.len()).sum::<usize>() == self.n
    }

    /// Whether this is a covering of `host` (same vertex count).
    pub fn fits(&self, host: &Graph) -> bool {
        self.n == host.n()
    }
}

/// A covering with one block `iota` split as `q0 | q1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CoveringRepr", into = "CoveringRepr")]
pub struct RefinedCovering {
    base: Covering,
    iota: usize,
    q0: VertexSet,
    q1: VertexSet,
}

impl RefinedCovering {
    pub fn new(
        base: Covering,
        iota: usize,
        q0: VertexSet,
        q1: VertexSet,
    ) -> Result<Self, CoveringError> {
        let k = base.len();
        if iota >= k {
            return Err(CoveringError::BadIota { iota, k });
        }
        if q0.is_empty() || (q0 | q1) != base.blocks[iota] {
            return Err(CoveringError::BadRefinement(iota));
        }
        Ok(RefinedCovering { base, iota, q0, q1 })
    }

    /// `q0 = P_iota`, `q1 = {}`.
    pub fn trivial(base: Covering, iota: usize) -> Result<Self, CoveringError> {
        let q0 = base
            .blocks
            .get(iota)
            .copied()
            .ok_or(CoveringError::BadIota { iota, k: base.len() })?;
        RefinedCovering::new(base, iota, q0, VertexSet::EMPTY)
    }

    pub fn base(&self) -> &Covering {
        &self.base
    }

    pub fn iota(&self) -> usize {
        self.iota
    }

    pub fn q0(&self) -> VertexSet {
        self.q0
    }

    pub fn q1(&self) -> VertexSet {
        self.q1
    }

    pub fn q(&self, l: usize) -> VertexSet {
        if l == 0 {
            self.q0
        } else {
            self.q1
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CoveringRepr {
    #[serde(default, skip_serializing)]
    n: Option<usize>,
    blocks: Vec<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    iota: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q0: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q1: Option<VertexSet>,
}

impl CoveringRepr {
    fn inferred_n(&self) -> usize {
        self.n.unwrap_or_else(|| {
            self.blocks
                .iter()
                .filter_map(|b| b.iter().last())
                .max()
                .map_or(0, |m| m + 1)
        })
    }
}

impl TryFrom<CoveringRepr> for Covering {
    type Error = CoveringError;
    fn try_from(r: CoveringRepr) -> Result<Self, CoveringError> {
        let n = r.inferred_n();
        Covering::validate(n, r.blocks)
    }
}

impl From<Covering> for CoveringRepr {
    fn from(c: Covering) -> Self {
        CoveringRepr {
            n: Some(c.n),
            blocks: c.blocks,
            iota: None,
            q0: None,
            q1: None,
        }
    }
}

impl TryFrom<CoveringRepr> for RefinedCovering {
    type Error = CoveringError;
    fn try_from(r: CoveringRepr) -> Result<Self, CoveringError> {
        let n = r.inferred_n();
        let base = Covering::validate(n, r.blocks)?;
        let iota = r.iota.unwrap_or(0);
        let q0 = match r.q0 {
            Some(q0) => q0,
            None => *base.blocks.get(iota).ok_or(CoveringError::BadIota { iota, k: base.len() })?,
        };
        RefinedCovering::new(base, iota, q0, r.q1.unwrap_or_default())
    }
}

impl From<RefinedCovering> for CoveringRepr {
    fn from(rc: RefinedCovering) -> Self {
        CoveringRepr {
            n: Some(rc.base.n),
            blocks: rc.base.blocks,
            iota: Some(rc.iota),
            q0: Some(rc.q0),
            q1: Some(rc.q1),
        }
    }
}

/// A witness for a covering-size claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Plain(Covering),
    Refined(RefinedCovering),
}

impl Witness {
    pub fn covering(&self) -> &Covering {
        match self {
            Witness::Plain(c) => c,
            Witness::Refined(rc) => rc.base(),
        }
    }
}

/// One of the six covering conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Condition {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "B")]
    B,
    #[serde(rename = "A′")]
    APrime,
    #[serde(rename = "B′")]
    BPrime,
    #[serde(rename = "A″")]
    ADoublePrime,
    #[serde(rename = "B″")]
    BDoublePrime,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::A,
        Condition::B,
        Condition::APrime,
        Condition::BPrime,
        Condition::ADoublePrime,
        Condition::BDoublePrime,
    ];

    fn bit(self) -> u8 {
        1 << self as u8
    }

    pub fn is_refined(self) -> bool {
        matches!(self, Condition::ADoublePrime | Condition::BDoublePrime)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::A => "A",
            Condition::B => "B",
            Condition::APrime => "A′",
            Condition::BPrime => "B′",
            Condition::ADoublePrime => "A″",
            Condition::BDoublePrime => "B″",
        })
    }
}

impl FromStr for Condition {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Condition::A),
            "b" => Ok(Condition::B),
            "a1" | "a'" | "a′" => Ok(Condition::APrime),
            "b1" | "b'" | "b′" => Ok(Condition::BPrime),
            "a2" | "a''" | "a″" => Ok(Condition::ADoublePrime),
            "b2" | "b''" | "b″" => Ok(Condition::BDoublePrime),
            other => Err(format!("unknown condition {other:?} (expected a, b, a1, b1, a2, b2)")),
        }
    }
}

/// A conjunction of conditions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ConditionSet(u8);

impl ConditionSet {
    pub const EMPTY: ConditionSet = ConditionSet(0);

    pub fn of(conds: &[Condition]) -> Self {
        conds.iter().copied().collect()
    }

    pub fn contains(self, c: Condition) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn with(self, c: Condition) -> Self {
        ConditionSet(self.0 | c.bit())
    }

    pub fn iter(self) -> impl Iterator<Item = Condition> {
        Condition::ALL.into_iter().filter(move |&c| self.contains(c))
    }

    pub fn needs_refinement(self) -> bool {
        self.iter().any(Condition::is_refined)
    }

    /// Every covering passing this set also passes condition A.
    pub fn implies_a(self) -> bool {
        self.contains(Condition::A) || self.contains(Condition::APrime)
    }

    /// Whether `c` passes every unrefined condition in the set.
    pub fn holds(self, p: &Graph, c: &Covering) -> bool {
        self.iter()
            .filter(|c| !c.is_refined())
            .all(|cond| conditions::passes(p, c, cond))
    }

    /// Whether `rc` passes every condition in the set; unrefined ones are
    /// evaluated on the base covering.
    pub fn holds_refined(self, p: &Graph, rc: &RefinedCovering) -> bool {
        self.holds(p, rc.base())
            && (!self.contains(Condition::ADoublePrime) || conditions::passes_adp(p, rc))
            && (!self.contains(Condition::BDoublePrime) || conditions::passes_bdp(p, rc))
    }
}

impl FromIterator<Condition> for ConditionSet {
    fn from_iter<I: IntoIterator<Item = Condition>>(iter: I) -> Self {
        iter.into_iter().fold(ConditionSet::EMPTY, ConditionSet::with)
    }
}

impl FromStr for ConditionSet {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse::<Condition>)
            .collect()
    }
}

impl fmt::Display for ConditionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.iter() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ConditionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl Serialize for ConditionSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The condition sets whose minimum covering size the toolkit computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CovTarget {
    A,
    AB,
    APrime,
    APrimeBPrime,
    AADoublePrimeBDoublePrime,
}

impl CovTarget {
    pub const ALL: [CovTarget; 5] = [
        CovTarget::A,
        CovTarget::AB,
        CovTarget::APrime,
        CovTarget::APrimeBPrime,
        CovTarget::AADoublePrimeBDoublePrime,
    ];

    pub fn conditions(self) -> ConditionSet {
        use Condition::*;
        match self {
            CovTarget::A => ConditionSet::of(&[A]),
            CovTarget::AB => ConditionSet::of(&[A, B]),
            CovTarget::APrime => ConditionSet::of(&[APrime]),
            CovTarget::APrimeBPrime => ConditionSet::of(&[APrime, BPrime]),
            CovTarget::AADoublePrimeBDoublePrime => {
                ConditionSet::of(&[A, ADoublePrime, BDoublePrime])
            }
        }
    }
}

impl fmt::Display for CovTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cov_{}", self.conditions())
    }
}

impl Serialize for CovTarget {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Value of a minimum covering size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CovValue {
    Exact(usize),
    /// Known to differ from this value (and to be at least `cov_A`).
    #[serde(rename = "ne")]
    NotEqual(usize),
    #[serde(rename = "ge")]
    AtLeast(usize),
    Infeasible,
    Unknown { bound: usize },
}

impl fmt::Display for CovValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CovValue::Exact(k) => write!(f, "{k}"),
            CovValue::NotEqual(k) => write!(f, "≠{k}"),
            CovValue::AtLeast(k) => write!(f, "≥{k}"),
            CovValue::Infeasible => f.write_str("infeasible"),
            CovValue::Unknown { bound } => write!(f, "unknown (bound {bound})"),
        }
    }
}

/// How a covering-size value was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    SetCover,
    /// A structural rule keyed on radius, diameter or connectivity.
    Shortcut(&'static str),
    /// Exhaustive search at size `k` found a witness.
    Decide(usize),
    /// Every size the searches could reach was ruled out.
    Exhausted,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::SetCover => f.write_str("set-cover"),
            Method::Shortcut(tag) => write!(f, "shortcut-{tag}"),
            Method::Decide(k) => write!(f, "decide-{k}"),
            Method::Exhausted => f.write_str("exhausted"),
        }
    }
}

impl Serialize for Method {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CovSizeResult {
    pub which: CovTarget,
    pub value: CovValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub method: Method,
}

impl CovSizeResult {
    pub fn exact(&self) -> Option<usize> {
        match self.value {
            CovValue::Exact(k) => Some(k),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn covering_validation() {
        let g = Graph::path(3).unwrap();
        assert_eq!(Covering::new(&g, vec![]), Err(CoveringError::NoBlocks));
        assert_eq!(
            Covering::new(&g, vec![set(&[0, 1]), VertexSet::EMPTY]),
            Err(CoveringError::EmptyBlock(1))
        );
        assert_eq!(
            Covering::new(&g, vec![set(&[0, 1])]),
            Err(CoveringError::NotCovering(set(&[2])))
        );
        assert!(matches!(
            Covering::new(&g, vec![set(&[0, 1, 2, 5])]),
            Err(CoveringError::VertexOutOfRange { vertex: 5, .. })
        ));
        let c = Covering::new(&g, vec![set(&[0, 1]), set(&[1, 2])]).unwrap();
        assert!(!c.is_partition());
    }

    #[test]
    fn refined_validation() {
        let g = Graph::path(4).unwrap();
        let base = Covering::from_vecs(&g, &[&[0, 1], &[2, 3]]).unwrap();
        assert!(RefinedCovering::new(base.clone(), 0, set(&[0]), set(&[1])).is_ok());
        assert!(RefinedCovering::new(base.clone(), 0, set(&[0, 1]), set(&[1])).is_ok());
        assert_eq!(
            RefinedCovering::new(base.clone(), 0, VertexSet::EMPTY, set(&[0, 1])),
            Err(CoveringError::BadRefinement(0))
        );
        assert_eq!(
            RefinedCovering::new(base.clone(), 2, set(&[0]), set(&[1])),
            Err(CoveringError::BadIota { iota: 2, k: 2 })
        );
        assert!(RefinedCovering::new(base, 1, set(&[2]), set(&[0])).is_err());
    }

    #[test]
    fn json_shape() {
        let g = Graph::path(4).unwrap();
        let base = Covering::from_vecs(&g, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(
            serde_json::to_string(&base).unwrap(),
            r#"{"blocks":[[0,1],[2,3]]}"#
        );
        let rc = RefinedCovering::new(base.clone(), 0, set(&[0]), set(&[1])).unwrap();
        let text = serde_json::to_string(&rc).unwrap();
        assert_eq!(text, r#"{"blocks":[[0,1],[2,3]],"iota":0,"q0":[0],"q1":[1]}"#);
        let back: RefinedCovering = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rc);
        let plain: Covering = serde_json::from_str(r#"{"blocks":[[0,1],[2,3]]}"#).unwrap();
        assert_eq!(plain, base);
        assert!(serde_json::from_str::<Covering>(r#"{"blocks":[[0],[]]}"#).is_err());
    }

    #[test]
    fn condition_parsing() {
        let s: ConditionSet = "a,b,a1,b1,a2,b2".parse().unwrap();
        assert_eq!(s.iter().count(), 6);
        assert_eq!("a,a2,b2".parse::<ConditionSet>().unwrap().to_string(), "AA″B″");
        assert!("a,z".parse::<ConditionSet>().is_err());
        assert!(ConditionSet::of(&[Condition::APrime]).implies_a());
        assert!(!ConditionSet::of(&[Condition::BPrime]).implies_a());
    }

    #[test]
    fn value_rendering() {
        assert_eq!(CovValue::NotEqual(2).to_string(), "≠2");
        assert_eq!(serde_json::to_string(&CovValue::Exact(3)).unwrap(), r#"{"exact":3}"#);
        assert_eq!(serde_json::to_string(&CovValue::NotEqual(2)).unwrap(), r#"{"ne":2}"#);
        assert_eq!(Method::Shortcut("two-ball").to_string(), "shortcut-two-ball");
        assert_eq!(CovTarget::AADoublePrimeBDoublePrime.to_string(), "cov_AA″B″");
    }
}
