//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::metric::Distances;

/// Vertex sets are single machine words, which caps graph order.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A set of vertex indices `0..64`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} exceeds the supported maximum"
            )));
        }
        Ok(items.into_iter().collect())
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// All-pairs distances are computed on first use and cached, so clones
/// share the cache.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
    distances: OnceLock<Arc<Distances>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
            distances: OnceLock::new(),
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbor bitmasks. The masks are symmetrised and
    /// bits at or above `adj.len()` are ignored.
    pub fn from_adjacency(adj: &[VertexSet]) -> Result<Self, GraphError> {
        let n = adj.len();
        let mut g = Graph::edgeless(n)?;
        let full = VertexSet::full(n);
        for (u, &nb) in adj.iter().enumerate() {
            if nb.contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            for v in (nb & full).iter() {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        Ok(g)
    }

    pub fn with_labels<S: Into<String>>(
        mut self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Path on `n` vertices `0 - 1 - .. - n-1`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, edges)
    }

    /// `K_{1,leaves}` with the hub at vertex 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// Vertices of `self` followed by those of `other`, no edges between.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let off = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(off + other.n(), edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | VertexSet::singleton(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        let full = self.vertices();
        (0..self.n()).all(|v| self.adj[v] == full - VertexSet::singleton(v))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Induced subgraph on `set`, vertices renumbered in ascending order.
    pub fn induced(&self, set: VertexSet) -> Result<Graph, GraphError> {
        let order = set.to_vec();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| set.contains(u) && set.contains(v))
            .map(|(u, v)| (pos[u], pos[v]));
        let g = Graph::from_edges(order.len(), edges)?;
        match &self.labels {
            Some(l) => g.with_labels(order.iter().map(|&v| l[v].clone())),
            None => Ok(g),
        }
    }

    /// Same vertex count, and every edge of `self` is an edge of `other`.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.adj.iter().zip(&other.adj).all(|(a, b)| a.is_subset(*b))
    }

    /// Same edge set, ignoring labels.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n() {
            if seen.contains(v) {
                continue;
            }
            let comp = self.distances().ball(v, self.n());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.distances().ball(0, self.n()) == self.vertices()
    }

    /// All-pairs distances (breadth-first search per source), cached.
    pub fn distances(&self) -> &Distances {
        self.distances
            .get_or_init(|| Arc::new(Distances::compute(&self.adj)))
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_ops() {
        let a: VertexSet = [0, 2, 5].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!((a | b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert_eq!(a.first(), Some(0));
        assert!(VertexSet::EMPTY.first().is_none());
        assert_eq!(VertexSet::full(64).len(), 64);
        assert!(VertexSet::singleton(2).is_subset(a));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::edgeless(0).unwrap_err(), GraphError::Empty);
        assert_eq!(Graph::from_edges(3, [(1, 1)]).unwrap_err(), GraphError::SelfLoop(1));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(
            Graph::edgeless(65).unwrap_err(),
            GraphError::TooManyVertices(65)
        );
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_adjacency(&[VertexSet::singleton(1), VertexSet::EMPTY, VertexSet::singleton(0)])
            .unwrap();
        assert!(g.has_edge(1, 0));
        assert!(g.has_edge(0, 2));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn induced_keeps_labels() {
        let g = Graph::cycle(5).unwrap().with_labels(["a", "b", "c", "d", "e"]).unwrap();
        let h = g.induced([1, 2, 4].into_iter().collect()).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(h.label(2), "e");
    }

    #[test]
    fn named_graphs() {
        assert!(Graph::complete(4).unwrap().is_complete());
        assert!(!Graph::path(3).unwrap().is_complete());
        assert_eq!(Graph::cycle(6).unwrap().edge_count(), 6);
        assert_eq!(Graph::star(3).unwrap().degree(0), 3);
        let two_k2 = Graph::complete(2).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(two_k2.components().len(), 2);
        assert!(!two_k2.is_connected());
    }
}
