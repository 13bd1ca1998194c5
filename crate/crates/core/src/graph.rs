//! Immutable simple graphs on at most 62 vertices, stored as one adjacency
//! bit mask per vertex.

use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

/// Largest supported order. Keeps every vertex set in a single machine word
/// and every graph6 encoding in the single-byte order range.
pub const MAX_ORDER: u32 = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {index} out of range for order {order}")]
    VertexOutOfRange { index: u32, order: u32 },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(u32),
    #[error("order {0} exceeds the supported maximum of 62")]
    OrderTooLarge(u32),
}

/// A set of vertex indices backed by a `u64` bit mask.
///
/// Ordering is the numeric order of the underlying mask; iteration yields
/// members in ascending index order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn singleton(v: u32) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_indices(indices: &[u32]) -> Self {
        let mut mask = 0u64;
        for &v in indices {
            mask |= 1u64 << v;
        }
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: u32) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, v: u32) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: u32) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn lowest(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros();
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len() as usize))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// An immutable simple graph with 0-based vertex indices.
///
/// Invariants: no self-loops, symmetric adjacency, all neighbour indices
/// below `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: u32,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn build(order: u32, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        let mut adj = vec![0u64; order as usize];
        for &(u, v) in edges {
            if u >= order {
                return Err(GraphError::VertexOutOfRange { index: u, order });
            }
            if v >= order {
                return Err(GraphError::VertexOutOfRange { index: v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u as usize] |= 1u64 << v;
            adj[v as usize] |= 1u64 << u;
        }
        Ok(Graph { order, adj })
    }

    pub(crate) fn from_adj(order: u32, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), order as usize);
        #[cfg(debug_assertions)]
        for (v, &m) in adj.iter().enumerate() {
            debug_assert_eq!(m & (1u64 << v), 0, "self-loop at {v}");
            debug_assert_eq!(m >> order, 0, "neighbour out of range at {v}");
            for u in BitIter(m) {
                debug_assert_ne!(adj[u as usize] & (1u64 << v), 0, "asymmetric {u}-{v}");
            }
        }
        Graph { order, adj }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> u32 {
        self.adj.iter().map(|m| m.count_ones()).sum::<u32>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.order
    }

    /// Mask with one bit per vertex of the graph.
    pub fn full_set(&self) -> VertexSet {
        if self.order == 0 {
            VertexSet::EMPTY
        } else {
            VertexSet((1u64 << self.order) - 1)
        }
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u < self.order && v < self.order && self.adj[u as usize] & (1u64 << v) != 0
    }

    pub fn neighbours(&self, v: u32) -> VertexSet {
        assert!(v < self.order, "vertex {v} out of range");
        VertexSet(self.adj[v as usize])
    }

    pub fn closed_neighbourhood(&self, v: u32) -> Result<VertexSet, GraphError> {
        if v >= self.order {
            return Err(GraphError::VertexOutOfRange {
                index: v,
                order: self.order,
            });
        }
        Ok(VertexSet(self.adj[v as usize] | (1u64 << v)))
    }

    pub fn degree(&self, v: u32) -> u32 {
        assert!(v < self.order, "vertex {v} out of range");
        self.adj[v as usize].count_ones()
    }

    pub fn min_degree(&self) -> u32 {
        self.adj.iter().map(|m| m.count_ones()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> u32 {
        self.adj.iter().map(|m| m.count_ones()).max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for v in 0..self.order {
            for u in BitIter(self.adj[v as usize] & ((1u64 << v).wrapping_sub(1))) {
                out.push((u, v));
            }
        }
        out
    }

    /// Induced subgraph on `s`, reindexed by ascending original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if !s.is_subset_of(self.full_set()) {
            let bad = s.difference(self.full_set()).lowest().unwrap();
            return Err(GraphError::VertexOutOfRange {
                index: bad,
                order: self.order,
            });
        }
        let members: Vec<u32> = s.to_vec();
        let mut adj = vec![0u64; members.len()];
        for (new_u, &old_u) in members.iter().enumerate() {
            let row = self.adj[old_u as usize] & s.mask();
            for (new_v, &old_v) in members.iter().enumerate() {
                if row & (1u64 << old_v) != 0 {
                    adj[new_u] |= 1u64 << new_v;
                }
            }
        }
        Ok(Graph {
            order: members.len() as u32,
            adj,
        })
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_set().mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, m)| !m & full & !(1u64 << v))
            .collect();
        Graph {
            order: self.order,
            adj,
        }
    }

    /// Joins a single new vertex (highest index) to every existing vertex.
    pub fn join_k1(&self) -> Result<Graph, GraphError> {
        if self.order + 1 > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(self.order + 1));
        }
        let apex = self.order;
        let mut adj: Vec<u64> = self.adj.iter().map(|m| m | (1u64 << apex)).collect();
        adj.push(if self.order == 0 {
            0
        } else {
            (1u64 << self.order) - 1
        });
        Ok(Graph {
            order: self.order + 1,
            adj,
        })
    }

    /// True for the empty graph and every graph whose vertices are mutually
    /// reachable. Disconnected graphs are accepted everywhere; this is the
    /// queryable filter.
    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let full = self.full_set().mask();
        let mut reached = 1u64;
        loop {
            let mut next = reached;
            for v in BitIter(reached) {
                next |= self.adj[v as usize];
            }
            if next == reached {
                return reached == full;
            }
            reached = next;
        }
    }

    pub(crate) fn adj(&self) -> &[u64] {
        &self.adj
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { index: 3, order: 3 })
        );
    }

    #[test]
    fn build_rejects_order_above_cap() {
        assert_eq!(Graph::build(63, &[]), Err(GraphError::OrderTooLarge(63)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::build(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn closed_neighbourhood_includes_self() {
        let g = Graph::build(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(g.closed_neighbourhood(0).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(g.closed_neighbourhood(2).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(g.closed_neighbourhood(3).is_err());
    }

    #[test]
    fn induced_subgraph_reindexes_ascending() {
        // C5 restricted to four consecutive vertices is a path.
        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let p = c5.induced_subgraph(VertexSet::from_indices(&[0, 1, 2, 3])).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn complement_is_involutive() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_k1_adds_universal_vertex() {
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = c4.join_k1().unwrap();
        assert_eq!(w.order(), 5);
        assert_eq!(w.degree(4), 4);
        assert_eq!(w.size(), 8);
    }

    #[test]
    fn connectivity() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        let h = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(h.is_connected());
        assert!(Graph::build(0, &[]).unwrap().is_connected());
        assert!(Graph::build(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn vertex_set_ops() {
        let s = VertexSet::from_indices(&[0, 2, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 2, 5]);
        assert_eq!(format!("{s}"), "{0,2,5}");
        assert_eq!(s.without(2).to_vec(), vec![0, 5]);
    }
}
