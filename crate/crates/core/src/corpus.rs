//! Graph corpora for claim checking: exhaustive labelled enumeration,
//! canonical-form deduplication, seeded random graphs, and graph6 files.

use crate::graph::Graph;
use crate::graph6::{self, pair_order, Graph6Error};
use crate::invariants::SolveError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest order for exhaustive labelled enumeration (edge masks in a u64,
/// with the count 2^C(n,2) still enumerable in principle).
pub const EXHAUSTIVE_MAX_ORDER: u32 = 10;

/// Largest order for permutation-based canonical forms (10! permutations
/// would be out of desk range; 8! is not).
pub const CANONICAL_MAX_ORDER: u32 = 8;

pub fn pair_count(order: u32) -> u32 {
    order * order.saturating_sub(1) / 2
}

/// Builds the graph whose edge set is given by `mask`, where bit i selects
/// the i-th vertex pair in graph6 pair order.
pub fn graph_from_edge_mask(order: u32, mask: u64) -> Graph {
    let mut adj = vec![0u64; order as usize];
    for (i, (u, v)) in pair_order(order).enumerate() {
        if mask >> i & 1 == 1 {
            adj[u as usize] |= 1u64 << v;
            adj[v as usize] |= 1u64 << u;
        }
    }
    Graph::from_adj(order, adj)
}

/// Inverse of [`graph_from_edge_mask`].
pub fn edge_mask(g: &Graph) -> u64 {
    let mut mask = 0u64;
    for (i, (u, v)) in pair_order(g.order()).enumerate() {
        if g.has_edge(u, v) {
            mask |= 1u64 << i;
        }
    }
    mask
}

/// Every labelled graph of the given order, exactly once, by ascending edge
/// mask (the graph6 pair order makes this the ascending adjacency bit
/// string).
pub struct LabelledGraphs {
    order: u32,
    next: u64,
    end: u64,
}

pub fn labelled_graphs(order: u32) -> Result<LabelledGraphs, SolveError> {
    if order > EXHAUSTIVE_MAX_ORDER {
        return Err(SolveError::OrderTooLarge {
            order,
            max: EXHAUSTIVE_MAX_ORDER,
        });
    }
    Ok(LabelledGraphs {
        order,
        next: 0,
        end: 1u64 << pair_count(order),
    })
}

impl LabelledGraphs {
    /// Total count before any filtering: 2^C(n,2).
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabelledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = graph_from_edge_mask(self.order, self.next);
        self.next += 1;
        Some(g)
    }
}

fn permuted_edge_mask(g: &Graph, perm: &[u32]) -> u64 {
    let mut mask = 0u64;
    for (i, (u, v)) in pair_order(g.order()).enumerate() {
        if g.has_edge(perm[u as usize], perm[v as usize]) {
            mask |= 1u64 << i;
        }
    }
    mask
}

/// Smallest edge mask over all vertex relabellings: a total isomorphism
/// invariant at this scale.
pub fn canonical_edge_mask(g: &Graph) -> Result<u64, SolveError> {
    if g.order() > CANONICAL_MAX_ORDER {
        return Err(SolveError::OrderTooLarge {
            order: g.order(),
            max: CANONICAL_MAX_ORDER,
        });
    }
    let mut perm: Vec<u32> = (0..g.order()).collect();
    let mut best = permuted_edge_mask(g, &perm);
    // Heap's algorithm over the remaining permutations.
    let n = perm.len();
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(permuted_edge_mask(g, &perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// True when the graph's own edge mask is its canonical form, so exhaustive
/// enumeration keeps exactly one labelled graph per isomorphism class.
pub fn is_canonical_representative(g: &Graph) -> Result<bool, SolveError> {
    Ok(edge_mask(g) == canonical_edge_mask(g)?)
}

/// Deterministic random graph stream: each vertex pair becomes an edge
/// independently with probability `edge_prob`, drawn from a counter-based
/// generator seeded explicitly.
pub struct RandomGraphs {
    order: u32,
    edge_prob: f64,
    rng: ChaCha8Rng,
}

impl RandomGraphs {
    pub fn new(order: u32, edge_prob: f64, seed: u64) -> RandomGraphs {
        assert!(
            (0.0..=1.0).contains(&edge_prob),
            "edge probability outside [0,1]"
        );
        RandomGraphs {
            order,
            edge_prob,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Iterator for RandomGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mut mask = 0u64;
        for i in 0..pair_count(self.order) {
            if self.rng.gen_bool(self.edge_prob) {
                mask |= 1u64 << i;
            }
        }
        Some(graph_from_edge_mask(self.order, mask))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6LineError {
    /// 1-based line number within the input text.
    pub line: usize,
    pub error: Graph6Error,
}

/// Parses newline-delimited graph6 text. Blank lines and `>>`-prefixed
/// header lines are skipped; malformed lines are reported with their line
/// number while parsing continues.
pub fn parse_graph6_text(text: &str) -> (Vec<Graph>, Vec<Graph6LineError>) {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with(">>") {
            continue;
        }
        match graph6::decode(line) {
            Ok(g) => graphs.push(g),
            Err(error) => errors.push(Graph6LineError {
                line: idx + 1,
                error,
            }),
        }
    }
    (graphs, errors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_mask_roundtrip() {
        for mask in 0..64u64 {
            let g = graph_from_edge_mask(4, mask);
            assert_eq!(edge_mask(&g), mask);
        }
    }

    #[test]
    fn labelled_counts() {
        assert_eq!(labelled_graphs(0).unwrap().count(), 1);
        assert_eq!(labelled_graphs(1).unwrap().count(), 1);
        assert_eq!(labelled_graphs(3).unwrap().count(), 8);
        assert_eq!(labelled_graphs(4).unwrap().total(), 64);
        assert!(labelled_graphs(11).is_err());
    }

    #[test]
    fn labelled_connected_count_order_four() {
        let n = labelled_graphs(4)
            .unwrap()
            .filter(|g| g.is_connected())
            .count();
        assert_eq!(n, 38);
    }

    #[test]
    fn enumeration_is_ascending() {
        let masks: Vec<u64> = labelled_graphs(3).unwrap().map(|g| edge_mask(&g)).collect();
        assert_eq!(masks, (0..8).collect::<Vec<u64>>());
    }

    #[test]
    fn canonical_counts_small() {
        // Classical isomorphism-class counts: all graphs on 4 and 5
        // vertices, connected graphs on 5 vertices.
        let count = |order: u32, connected: bool| {
            labelled_graphs(order)
                .unwrap()
                .filter(|g| !connected || g.is_connected())
                .filter(|g| is_canonical_representative(g).unwrap())
                .count()
        };
        assert_eq!(count(4, false), 11);
        assert_eq!(count(5, false), 34);
        assert_eq!(count(5, true), 21);
    }

    #[test]
    fn canonical_respects_isomorphism() {
        // C₄ labelled two ways: 0-1-2-3-0 and 0-2-1-3-0.
        let a = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let b = Graph::build(4, &[(0, 2), (1, 2), (1, 3), (0, 3)]).unwrap();
        assert_eq!(
            canonical_edge_mask(&a).unwrap(),
            canonical_edge_mask(&b).unwrap()
        );
        assert!(canonical_edge_mask(&Graph::build(9, &[]).unwrap()).is_err());
    }

    #[test]
    fn random_graphs_are_seed_deterministic() {
        let a: Vec<u64> = RandomGraphs::new(8, 0.5, 7).take(5).map(|g| edge_mask(&g)).collect();
        let b: Vec<u64> = RandomGraphs::new(8, 0.5, 7).take(5).map(|g| edge_mask(&g)).collect();
        assert_eq!(a, b);
        let c: Vec<u64> = RandomGraphs::new(8, 0.5, 8).take(5).map(|g| edge_mask(&g)).collect();
        assert_ne!(a, c);
    }

    #[test]
    fn random_graph_probability_extremes() {
        let g0 = RandomGraphs::new(6, 0.0, 1).next().unwrap();
        assert_eq!(g0.size(), 0);
        let g1 = RandomGraphs::new(6, 1.0, 1).next().unwrap();
        assert_eq!(g1.size(), 15);
    }

    #[test]
    fn graph6_text_reports_bad_lines() {
        let text = ">>header\nBg\n\nB?\nnot graph6\nC~\n";
        let (graphs, errors) = parse_graph6_text(text);
        assert_eq!(graphs.len(), 3);
        assert_eq!(errors.len(), 1);
        assert_eq!(errors[0].line, 5);
    }
}
