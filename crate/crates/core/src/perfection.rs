//! Perfect-graph checking by two independent routes (definitional subgraph
//! sweep, odd-hole search), weak perfection, and maximum-clique coverage.

use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    chi_table, chromatic_number, clique_number, complement_adj, maximum_cliques, omega_table,
    SolveError,
};
use serde::Serialize;

/// Largest order the definitional subgraph sweep accepts.
pub const BRUTEFORCE_MAX_ORDER: u32 = 15;

/// True when the clique number equals the chromatic number.
pub fn is_weakly_perfect(g: &Graph) -> Result<bool, SolveError> {
    Ok(clique_number(g) == chromatic_number(g)?)
}

/// An induced subgraph on which clique number and chromatic number differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgraphWitness {
    pub vertices: VertexSet,
    pub omega: u32,
    pub chi: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteforceVerdict {
    pub perfect: bool,
    pub witness: Option<SubgraphWitness>,
}

// Ascending-member-list order on vertex sets: {0,1,3} < {0,2} < {1}.
fn list_lex_less(a: u64, b: u64) -> bool {
    let mut av = a;
    let mut bv = b;
    while av != 0 && bv != 0 {
        let x = av.trailing_zeros();
        let y = bv.trailing_zeros();
        if x != y {
            return x < y;
        }
        av &= av - 1;
        bv &= bv - 1;
    }
    // Equal so far: the proper prefix (if any) is the smaller list.
    av == 0 && bv != 0
}

/// Definitional check: every induced subgraph must have equal clique and
/// chromatic numbers. Complete per-subset tables bound the order at
/// [`BRUTEFORCE_MAX_ORDER`]. The witness is the offending vertex set least
/// in ascending-member-list order.
pub fn is_perfect_bruteforce(g: &Graph) -> Result<BruteforceVerdict, SolveError> {
    if g.order() > BRUTEFORCE_MAX_ORDER {
        return Err(SolveError::OrderTooLarge {
            order: g.order(),
            max: BRUTEFORCE_MAX_ORDER,
        });
    }
    let omega = omega_table(g.adj(), g.order());
    let chi = chi_table(g.adj(), g.order());
    let mut witness: Option<u64> = None;
    for mask in 1..(1u64 << g.order()) {
        if omega[mask as usize] != chi[mask as usize]
            && witness.map_or(true, |w| list_lex_less(mask, w))
        {
            witness = Some(mask);
        }
    }
    Ok(BruteforceVerdict {
        perfect: witness.is_none(),
        witness: witness.map(|m| SubgraphWitness {
            vertices: VertexSet::from_mask(m),
            omega: omega[m as usize] as u32,
            chi: chi[m as usize] as u32,
        }),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HoleSide {
    Graph,
    Complement,
}

/// An induced odd cycle of length at least five, listed from its smallest
/// vertex with the smaller neighbour second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HoleWitness {
    pub vertices: Vec<u32>,
    pub side: HoleSide,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleVerdict {
    pub perfect: bool,
    pub witness: Option<HoleWitness>,
}

// Grows an induced path inside `adj`. `path` starts at its minimum vertex;
// `ok` holds vertices above path[0], off the path, non-adjacent to every
// path vertex except the last (adjacency to path[0] stays allowed since it
// closes a cycle rather than chording one).
fn grow_hole(adj: &[u64], path: &mut Vec<u32>, ok: u64) -> Option<Vec<u32>> {
    let v0 = path[0];
    let last = *path.last().expect("path nonempty");
    let mut cands = ok & adj[last as usize];
    while cands != 0 {
        let u = cands.trailing_zeros();
        cands &= cands - 1;
        if path.len() >= 2 && adj[u as usize] >> v0 & 1 == 1 {
            // Closing edge; a chord anywhere else was already excluded.
            let len = path.len() as u32 + 1;
            if len >= 5 && len % 2 == 1 && path[1] < u {
                let mut hole = path.clone();
                hole.push(u);
                return Some(hole);
            }
            continue;
        }
        let new_ok = if path.len() == 1 {
            ok & !(1u64 << u)
        } else {
            ok & !adj[last as usize] & !(1u64 << u)
        };
        path.push(u);
        if let Some(h) = grow_hole(adj, path, new_ok) {
            return Some(h);
        }
        path.pop();
    }
    None
}

fn find_odd_hole(adj: &[u64], order: u32) -> Option<Vec<u32>> {
    if order < 5 {
        return None;
    }
    let full = (1u64 << order) - 1;
    for v0 in 0..order {
        let above = full & !((1u64 << (v0 + 1)) - 1);
        let mut path = vec![v0];
        if let Some(h) = grow_hole(adj, &mut path, above) {
            return Some(h);
        }
    }
    None
}

/// Structural check: perfect iff neither the graph nor its complement
/// contains an induced odd cycle of length at least five. The graph side is
/// searched first, each side from its smallest starting vertex, so the
/// witness is deterministic.
pub fn is_perfect_hole_based(g: &Graph) -> HoleVerdict {
    if let Some(vertices) = find_odd_hole(g.adj(), g.order()) {
        return HoleVerdict {
            perfect: false,
            witness: Some(HoleWitness {
                vertices,
                side: HoleSide::Graph,
            }),
        };
    }
    let comp = complement_adj(g.adj(), g.order());
    if let Some(vertices) = find_odd_hole(&comp, g.order()) {
        return HoleVerdict {
            perfect: false,
            witness: Some(HoleWitness {
                vertices,
                side: HoleSide::Complement,
            }),
        };
    }
    HoleVerdict {
        perfect: true,
        witness: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueCover {
    pub covered: bool,
    /// Smallest vertex lying in no maximum clique, when one exists.
    pub uncovered: Option<u32>,
}

/// Whether the union of all maximum cliques is the whole vertex set.
pub fn every_vertex_in_maximum_clique(g: &Graph) -> CliqueCover {
    let mut union = 0u64;
    for c in maximum_cliques(g) {
        union |= c.mask();
    }
    let missing = g.full_set().mask() & !union;
    CliqueCover {
        covered: missing == 0,
        uncovered: VertexSet::from_mask(missing).lowest(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectionReport {
    pub weakly_perfect: bool,
    /// None when the order exceeds the subgraph sweep's limit.
    pub perfect_bruteforce: Option<bool>,
    pub perfect_hole_based: bool,
    /// An offending induced subgraph when imperfect: the sweep's least
    /// witness when available, otherwise the hole's vertex set.
    pub witness: Option<VertexSet>,
    pub every_vertex_in_max_clique: bool,
}

pub fn perfection_report(g: &Graph) -> Result<PerfectionReport, SolveError> {
    let weakly_perfect = is_weakly_perfect(g)?;
    let brute = match is_perfect_bruteforce(g) {
        Ok(v) => Some(v),
        Err(SolveError::OrderTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let hole = is_perfect_hole_based(g);
    if let Some(b) = &brute {
        debug_assert_eq!(b.perfect, hole.perfect, "perfection oracles disagree");
    }
    let witness = match &brute {
        Some(b) => b.witness.as_ref().map(|w| w.vertices),
        None => hole
            .witness
            .as_ref()
            .map(|h| VertexSet::from_indices(&h.vertices)),
    };
    Ok(PerfectionReport {
        weakly_perfect,
        perfect_bruteforce: brute.map(|b| b.perfect),
        perfect_hole_based: hole.perfect,
        witness,
        every_vertex_in_max_clique: every_vertex_in_maximum_clique(g).covered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, null, path, set_graph};

    #[test]
    fn weak_perfection_basics() {
        assert!(!is_weakly_perfect(&cycle(5).unwrap()).unwrap());
        assert!(is_weakly_perfect(&cycle(6).unwrap()).unwrap());
        assert!(is_weakly_perfect(&path(4).unwrap()).unwrap());
        assert!(is_weakly_perfect(&complete(5).unwrap()).unwrap());
        for n in 1..=4 {
            assert!(is_weakly_perfect(&set_graph(n).unwrap().graph).unwrap());
        }
    }

    #[test]
    fn bruteforce_on_c5_blames_whole_cycle() {
        let v = is_perfect_bruteforce(&cycle(5).unwrap()).unwrap();
        assert!(!v.perfect);
        let w = v.witness.unwrap();
        assert_eq!(w.vertices.to_vec(), vec![0, 1, 2, 3, 4]);
        assert_eq!((w.omega, w.chi), (2, 3));
    }

    #[test]
    fn bruteforce_perfect_cases() {
        assert!(is_perfect_bruteforce(&cycle(6).unwrap()).unwrap().perfect);
        assert!(is_perfect_bruteforce(&path(7).unwrap()).unwrap().perfect);
        assert!(is_perfect_bruteforce(&null(4).unwrap()).unwrap().perfect);
        assert!(
            is_perfect_bruteforce(&set_graph(4).unwrap().graph)
                .unwrap()
                .perfect
        );
    }

    #[test]
    fn bruteforce_rejects_large_orders() {
        let g = null(16).unwrap();
        assert!(matches!(
            is_perfect_bruteforce(&g),
            Err(SolveError::OrderTooLarge { order: 16, max: 15 })
        ));
    }

    #[test]
    fn hole_check_on_odd_cycles() {
        let v = is_perfect_hole_based(&cycle(7).unwrap());
        assert!(!v.perfect);
        let w = v.witness.unwrap();
        assert_eq!(w.side, HoleSide::Graph);
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5, 6]);
        assert!(is_perfect_hole_based(&cycle(4).unwrap()).perfect);
        assert!(is_perfect_hole_based(&cycle(6).unwrap()).perfect);
    }

    #[test]
    fn hole_check_sees_complement_side() {
        let v = is_perfect_hole_based(&cycle(7).unwrap().complement());
        assert!(!v.perfect);
        assert_eq!(v.witness.unwrap().side, HoleSide::Complement);
    }

    #[test]
    fn hole_check_is_complement_invariant() {
        for g in [
            cycle(5).unwrap(),
            cycle(6).unwrap(),
            path(6).unwrap(),
            set_graph(3).unwrap().graph,
        ] {
            assert_eq!(
                is_perfect_hole_based(&g).perfect,
                is_perfect_hole_based(&g.complement()).perfect
            );
        }
    }

    #[test]
    fn trees_are_perfect() {
        assert!(is_perfect_hole_based(&path(9).unwrap()).perfect);
    }

    #[test]
    fn clique_coverage() {
        assert!(every_vertex_in_maximum_clique(&complete(4).unwrap()).covered);
        // Both edges of a path on three vertices are maximum cliques.
        assert!(every_vertex_in_maximum_clique(&path(3).unwrap()).covered);
        assert!(every_vertex_in_maximum_clique(&set_graph(3).unwrap().graph).covered);
        // A triangle with one pendant leaves the pendant uncovered.
        let g = Graph::build(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let c = every_vertex_in_maximum_clique(&g);
        assert!(!c.covered);
        assert_eq!(c.uncovered, Some(3));
    }

    #[test]
    fn report_is_consistent() {
        let r = perfection_report(&set_graph(3).unwrap().graph).unwrap();
        assert!(r.weakly_perfect);
        assert_eq!(r.perfect_bruteforce, Some(true));
        assert!(r.perfect_hole_based);
        assert!(r.witness.is_none());
        assert!(r.every_vertex_in_max_clique);

        let r5 = perfection_report(&cycle(5).unwrap()).unwrap();
        assert!(!r5.weakly_perfect);
        assert_eq!(r5.perfect_bruteforce, Some(false));
        assert!(!r5.perfect_hole_based);
        assert_eq!(r5.witness.unwrap().to_vec(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn report_skips_sweep_above_limit() {
        let r = perfection_report(&cycle(17).unwrap()).unwrap();
        assert_eq!(r.perfect_bruteforce, None);
        assert!(!r.perfect_hole_based);
        assert_eq!(r.witness.unwrap().len(), 17);
    }
}
