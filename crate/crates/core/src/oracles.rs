//! Brute-force reference implementations used to cross-check the solver
//! paths. Everything here favours obviousness over speed and shares no
//! search machinery with the checked code: colourability is plain
//! backtracking, set enumeration is a power-set filter, isomorphism tries
//! every permutation.

use crate::graph::{Graph, VertexSet};

fn extend_colouring(g: &Graph, k: u32, assignment: &mut Vec<u32>) -> bool {
    let v = assignment.len() as u32;
    if v == g.order() {
        return true;
    }
    for colour in 1..=k {
        let clash = (0..v).any(|u| g.has_edge(u, v) && assignment[u as usize] == colour);
        if !clash {
            assignment.push(colour);
            if extend_colouring(g, k, assignment) {
                return true;
            }
            assignment.pop();
        }
    }
    false
}

/// Whether some assignment of colours 1..=k to vertices 0..n in order
/// avoids every monochromatic edge.
pub fn colourable_with(g: &Graph, k: u32) -> bool {
    if g.order() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    extend_colouring(g, k, &mut Vec::with_capacity(g.order() as usize))
}

/// Smallest k for which [`colourable_with`] succeeds.
pub fn brute_chromatic_number(g: &Graph) -> u32 {
    (0..=g.order())
        .find(|&k| colourable_with(g, k))
        .expect("n colours always suffice")
}

fn is_independent(g: &Graph, mask: u64) -> bool {
    VertexSet::from_mask(mask)
        .iter()
        .all(|v| g.neighbours(v).mask() & mask == 0)
}

fn is_clique(g: &Graph, mask: u64) -> bool {
    let set = VertexSet::from_mask(mask);
    set.iter()
        .all(|v| (mask & !(1u64 << v)) & !g.neighbours(v).mask() == 0)
}

/// Independence number by filtering the full power set.
pub fn brute_independence_number(g: &Graph) -> u32 {
    (0..1u64 << g.order())
        .filter(|&m| is_independent(g, m))
        .map(|m| m.count_ones())
        .max()
        .unwrap_or(0)
}

/// All maximum independent sets by power-set filter, ascending by mask.
pub fn brute_maximum_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let alpha = brute_independence_number(g);
    if alpha == 0 {
        return Vec::new();
    }
    (0..1u64 << g.order())
        .filter(|&m| m.count_ones() == alpha && is_independent(g, m))
        .map(VertexSet::from_mask)
        .collect()
}

/// Clique number by filtering the full power set.
pub fn brute_clique_number(g: &Graph) -> u32 {
    (0..1u64 << g.order())
        .filter(|&m| is_clique(g, m))
        .map(|m| m.count_ones())
        .max()
        .unwrap_or(0)
}

/// The intersection graph of all nonempty subsets of {1..n}, built from
/// explicit element lists rather than bit arithmetic. Subsets are ordered
/// by cardinality and then by characteristic mask, matching the
/// generator's vertex order so edge lists compare directly.
pub fn set_graph_by_definition(n: u32) -> Graph {
    let mut subsets: Vec<Vec<u32>> = (1u32..1 << n)
        .map(|code| (1..=n).filter(|e| code >> (e - 1) & 1 == 1).collect())
        .collect();
    subsets.sort_by_key(|s| {
        (
            s.len(),
            s.iter().map(|e| 1u32 << (e - 1)).sum::<u32>(),
        )
    });
    let order = subsets.len() as u32;
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if subsets[i].iter().any(|e| subsets[j].contains(e)) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::build(order, &edges).expect("subset intersection graph is simple")
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut items: Vec<u32> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(items.len(), &mut items, &mut out);
    out
}

/// Isomorphism by exhaustive permutation search. Intended for small orders
/// only (factorial cost).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    permutations(a.order()).into_iter().any(|p| {
        a.edges()
            .into_iter()
            .all(|(u, v)| b.has_edge(p[u as usize], p[v as usize]))
    })
}

/// Rainbow vertex count by direct definition: for each vertex collect the
/// colours on its closed neighbourhood and compare with the full palette.
pub fn brute_rainbow_count(g: &Graph, colours: &[u32]) -> u32 {
    let palette: std::collections::BTreeSet<u32> = colours.iter().copied().collect();
    let mut count = 0;
    for v in g.vertices() {
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(colours[v as usize]);
        for u in g.vertices() {
            if g.has_edge(u, v) {
                seen.insert(colours[u as usize]);
            }
        }
        if seen == palette {
            count += 1;
        }
    }
    count
}
