//! Distances, eccentricities, radius and diameter.
//!
//! Distances between components are [`ExtDist::INFINITY`]. A disconnected
//! graph therefore has every eccentricity, its radius and its diameter
//! equal to infinity.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::{Graph, VertexSet};

/// A nonnegative integer distance or infinity.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtDist(u32);

impl ExtDist {
    pub const INFINITY: ExtDist = ExtDist(u32::MAX);
    pub const ZERO: ExtDist = ExtDist(0);

    #[inline]
    pub const fn finite(d: u32) -> Self {
        assert!(d != u32::MAX, "finite distance overflow");
        ExtDist(d)
    }

    #[inline]
    pub const fn is_finite(self) -> bool {
        self.0 != u32::MAX
    }

    #[inline]
    pub const fn value(self) -> Option<u32> {
        if self.is_finite() {
            Some(self.0)
        } else {
            None
        }
    }

    /// `self >= t` with infinity above every finite threshold.
    #[inline]
    pub const fn at_least(self, t: u32) -> bool {
        self.0 >= t
    }
}

impl PartialOrd for ExtDist {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtDist {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Add for ExtDist {
    type Output = ExtDist;
    fn add(self, rhs: Self) -> Self {
        if !self.is_finite() || !rhs.is_finite() {
            return ExtDist::INFINITY;
        }
        match self.0.checked_add(rhs.0) {
            Some(s) if s != u32::MAX => ExtDist(s),
            _ => ExtDist::INFINITY,
        }
    }
}

impl From<u32> for ExtDist {
    fn from(d: u32) -> Self {
        ExtDist::finite(d)
    }
}

impl fmt::Display for ExtDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(d) => write!(f, "{d}"),
            None => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for ExtDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ExtDist {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.value() {
            Some(d) => serializer.serialize_u32(d),
            None => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtDist {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(d) if d != u32::MAX => Ok(ExtDist(d)),
            Raw::Str(s) if s == "inf" => Ok(ExtDist::INFINITY),
            _ => Err(serde::de::Error::custom("expected a distance or \"inf\"")),
        }
    }
}

/// All-pairs shortest-path distances plus closed `s`-neighborhoods
/// `N_s[v]` for every radius up to `n`.
#[derive(Debug, Clone)]
pub struct Distances {
    n: usize,
    dist: Vec<ExtDist>,
    // balls[v][s] = N_s[v]; the last entry is v's component.
    balls: Vec<Vec<VertexSet>>,
}

impl Distances {
    pub(crate) fn compute(adj: &[VertexSet]) -> Self {
        let n = adj.len();
        let mut dist = vec![ExtDist::INFINITY; n * n];
        let mut balls = Vec::with_capacity(n);
        for src in 0..n {
            let layers = bfs_layers(adj, src);
            let mut reached = VertexSet::EMPTY;
            let mut row = Vec::with_capacity(n + 1);
            for (d, layer) in layers.iter().enumerate() {
                for v in layer.iter() {
                    dist[src * n + v] = ExtDist::finite(d as u32);
                }
                reached |= *layer;
                row.push(reached);
            }
            while row.len() <= n {
                row.push(reached);
            }
            balls.push(row);
        }
        Distances { n, dist, balls }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> ExtDist {
        self.dist[u * self.n + v]
    }

    /// Closed neighborhood `N_s[v] = {x : d(v, x) <= s}`.
    #[inline]
    pub fn ball(&self, v: usize, s: usize) -> VertexSet {
        self.balls[v][s.min(self.n)]
    }

    /// `N_s[S]`: union of the `s`-balls around the members of `set`.
    #[inline]
    pub fn grow(&self, set: VertexSet, s: usize) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set.iter() {
            out |= self.ball(v, s);
        }
        out
    }

    /// Vertices at distance `>= t` from `set`; everything when `set` is empty.
    #[inline]
    pub fn far_from(&self, set: VertexSet, t: usize) -> VertexSet {
        let all = VertexSet::full(self.n);
        if t == 0 {
            return all;
        }
        all - self.grow(set, t - 1)
    }

    /// `d(v, set) >= t`, with `d(v, {}) = infinity`.
    #[inline]
    pub fn vertex_far(&self, v: usize, set: VertexSet, t: usize) -> bool {
        t == 0 || self.ball(v, t - 1).is_disjoint(set)
    }

    /// `d(a, b) >= t` for vertex sets; vacuous if either is empty.
    #[inline]
    pub fn sets_far(&self, a: VertexSet, b: VertexSet, t: usize) -> bool {
        t == 0 || self.grow(a, t - 1).is_disjoint(b)
    }

    /// `d(v, set)`, infinity for the empty set.
    pub fn to_set(&self, v: usize, set: VertexSet) -> ExtDist {
        set.iter().map(|u| self.get(v, u)).min().unwrap_or(ExtDist::INFINITY)
    }

    /// `d(a, b) = min d(x, y)`, infinity if either set is empty.
    pub fn between_sets(&self, a: VertexSet, b: VertexSet) -> ExtDist {
        a.iter().map(|v| self.to_set(v, b)).min().unwrap_or(ExtDist::INFINITY)
    }

    /// Eccentricity `e(v)`, infinite if the graph is disconnected.
    pub fn eccentricity(&self, v: usize) -> ExtDist {
        (0..self.n).map(|u| self.get(v, u)).max().unwrap_or(ExtDist::ZERO)
    }
}

/// Breadth-first layers from `src`: element `d` holds the vertices at
/// distance exactly `d`.
pub(crate) fn bfs_layers(adj: &[VertexSet], src: usize) -> Vec<VertexSet> {
    let mut layers = vec![VertexSet::singleton(src)];
    let mut seen = VertexSet::singleton(src);
    loop {
        let mut next = VertexSet::EMPTY;
        for v in layers.last().unwrap().iter() {
            next |= adj[v];
        }
        next = next - seen;
        if next.is_empty() {
            return layers;
        }
        seen |= next;
        layers.push(next);
    }
}

/// Per-vertex eccentricities with radius and diameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricProfile {
    pub ecc: Vec<ExtDist>,
    pub radius: ExtDist,
    pub diameter: ExtDist,
}

impl MetricProfile {
    /// Vertices of maximum eccentricity.
    pub fn periphery(&self) -> VertexSet {
        self.with_ecc(self.diameter)
    }

    /// Vertices of minimum eccentricity.
    pub fn center(&self) -> VertexSet {
        self.with_ecc(self.radius)
    }

    fn with_ecc(&self, e: ExtDist) -> VertexSet {
        self.ecc
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == e)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.diameter.is_finite()
    }
}

/// Full distance table `d(u, v)`, row-major.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<ExtDist>> {
    let d = g.distances();
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| d.get(u, v)).collect())
        .collect()
}

pub fn metric_profile(g: &Graph) -> MetricProfile {
    let d = g.distances();
    let ecc: Vec<ExtDist> = (0..g.n()).map(|v| d.eccentricity(v)).collect();
    let radius = *ecc.iter().min().expect("graphs are nonempty");
    let diameter = *ecc.iter().max().expect("graphs are nonempty");
    MetricProfile { ecc, radius, diameter }
}
