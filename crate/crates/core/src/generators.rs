//! Deterministic constructors for the graph families under study.

use crate::graph::{Graph, GraphError, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("{family} requires n >= {min}, got {got}")]
    ParameterTooSmall {
        family: &'static str,
        min: u32,
        got: u32,
    },
    #[error("set-graph symbol count must lie in 1..=5, got {0}")]
    SetGraphSize(u32),
    #[error("thorn spec has {got} entries for {expected} base vertices")]
    ThornSpecLength { expected: u32, got: u32 },
    #[error("thorn count at base vertex {0} must be at least 1")]
    ThornCountZero(u32),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Label `v_{s,i}`: the `i`-th subset of cardinality `s` (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetGraphLabel {
    pub s: u32,
    pub i: u32,
}

impl std::fmt::Display for SetGraphLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "v_{{{},{}}}", self.s, self.i)
    }
}

/// A set-graph together with the subset carried by each vertex and its
/// `v_{s,i}` label.
#[derive(Debug, Clone)]
pub struct SetGraph {
    pub graph: Graph,
    /// Subset of the n symbols at each vertex, as a bit mask over symbol
    /// indices 0..n.
    pub subsets: Vec<u32>,
    pub labels: Vec<SetGraphLabel>,
}

/// Graph on all nonempty subsets of an `n`-element set, two subsets adjacent
/// exactly when they intersect.
///
/// Vertex order is cardinality-major ascending and colexicographic within a
/// fixed cardinality, which for subsets-as-bit-masks is plain ascending
/// numeric order of the mask.
pub fn set_graph(n: u32) -> Result<SetGraph, GenError> {
    if !(1..=5).contains(&n) {
        return Err(GenError::SetGraphSize(n));
    }
    let mut subsets: Vec<u32> = (1..(1u32 << n)).collect();
    subsets.sort_by_key(|&m| (m.count_ones(), m));
    let mut labels = Vec::with_capacity(subsets.len());
    let mut seen_of_size = vec![0u32; n as usize + 1];
    for &m in &subsets {
        let s = m.count_ones();
        seen_of_size[s as usize] += 1;
        labels.push(SetGraphLabel {
            s,
            i: seen_of_size[s as usize],
        });
    }
    let order = subsets.len() as u32;
    let mut edges = Vec::new();
    for u in 0..order {
        for v in (u + 1)..order {
            if subsets[u as usize] & subsets[v as usize] != 0 {
                edges.push((u, v));
            }
        }
    }
    Ok(SetGraph {
        graph: Graph::build(order, &edges)?,
        subsets,
        labels,
    })
}

/// Path on vertices 0..n with edges (i, i+1).
pub fn path(n: u32) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::ParameterTooSmall {
            family: "path",
            min: 1,
            got: n,
        });
    }
    let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::build(n, &edges)?)
}

/// Cycle on vertices 0..n.
pub fn cycle(n: u32) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::ParameterTooSmall {
            family: "cycle",
            min: 3,
            got: n,
        });
    }
    let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::build(n, &edges)?)
}

pub fn complete(n: u32) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::ParameterTooSmall {
            family: "complete",
            min: 1,
            got: n,
        });
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(n, &edges)?)
}

/// Edgeless graph on n vertices (n = 0 allowed).
pub fn null(n: u32) -> Result<Graph, GenError> {
    Ok(Graph::build(n, &[])?)
}

/// Cycle 0..n plus one pendant vertex n+i attached to each cycle vertex i.
pub fn sunlet(n: u32) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::ParameterTooSmall {
            family: "sunlet",
            min: 3,
            got: n,
        });
    }
    let mut edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n + i)));
    Ok(Graph::build(2 * n, &edges)?)
}

/// Cycle 0..n plus one outer vertex n+i adjacent to cycle vertices i and
/// (i+1) mod n; the outer vertices are mutually non-adjacent.
pub fn empty_sun(n: u32) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::ParameterTooSmall {
            family: "empty-sun",
            min: 3,
            got: n,
        });
    }
    let mut edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        edges.push((i, n + i));
        edges.push(((i + 1) % n, n + i));
    }
    Ok(Graph::build(2 * n, &edges)?)
}

/// Pendant counts for a thorn construction, one entry per base vertex, each
/// at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThornSpec(Vec<u32>);

impl ThornSpec {
    pub fn new(counts: Vec<u32>) -> Result<ThornSpec, GenError> {
        for (i, &t) in counts.iter().enumerate() {
            if t == 0 {
                return Err(GenError::ThornCountZero(i as u32));
            }
        }
        Ok(ThornSpec(counts))
    }

    pub fn uniform(len: u32, count: u32) -> Result<ThornSpec, GenError> {
        ThornSpec::new(vec![count; len as usize])
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// Arbitrary base graph with `spec[i]` new pendant leaves attached to base
/// vertex i. Pendants are appended after the base vertices, grouped by base
/// vertex in ascending order.
pub fn complete_thorn(base: &Graph, spec: &ThornSpec) -> Result<Graph, GenError> {
    let n = base.order();
    if spec.counts().len() as u32 != n {
        return Err(GenError::ThornSpecLength {
            expected: n,
            got: spec.counts().len() as u32,
        });
    }
    let order = n + spec.total();
    if order > MAX_ORDER {
        return Err(GenError::Graph(GraphError::OrderTooLarge(order)));
    }
    let mut edges = base.edges();
    let mut next = n;
    for (i, &t) in spec.counts().iter().enumerate() {
        for _ in 0..t {
            edges.push((i as u32, next));
            next += 1;
        }
    }
    Ok(Graph::build(order, &edges)?)
}

/// Thorn graph of the complete graph K_n (n >= 3).
pub fn thorn_complete(n: u32, spec: &ThornSpec) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::ParameterTooSmall {
            family: "thorn-complete",
            min: 3,
            got: n,
        });
    }
    complete_thorn(&complete(n)?, spec)
}
