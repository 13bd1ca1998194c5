//! Rainbow neighbourhood counts: which vertices see every colour in their
//! closed neighbourhood, and the extremes of that count over all minimum
//! proper colourings.

use crate::colourings::{chromatic_partitions, imax_colouring, is_proper, Colouring, PeelMode};
use crate::graph::{Graph, VertexSet};
use crate::invariants::SolveError;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RainbowError {
    #[error("colouring covers {got} vertices, expected {expected}")]
    OrderMismatch { expected: u32, got: u32 },
    #[error("colouring is not proper")]
    Improper,
}

/// True when every colour 1..=l of the colouring appears in the closed
/// neighbourhood of `v`.
fn sees_all_colours(g: &Graph, c: &Colouring, v: u32) -> bool {
    let closed = g.neighbours(v).mask() | (1u64 << v);
    c.classes().iter().all(|class| class.mask() & closed != 0)
}

/// The vertices whose closed neighbourhood contains all colours of `c`.
/// Rejects colourings of the wrong order or with a monochromatic edge.
pub fn rainbow_vertices(g: &Graph, c: &Colouring) -> Result<VertexSet, RainbowError> {
    if g.order() != c.order() {
        return Err(RainbowError::OrderMismatch {
            expected: g.order(),
            got: c.order(),
        });
    }
    if !is_proper(g, c) {
        return Err(RainbowError::Improper);
    }
    let mut mask = 0u64;
    for v in g.vertices() {
        if sees_all_colours(g, c, v) {
            mask |= 1u64 << v;
        }
    }
    Ok(VertexSet::from_mask(mask))
}

#[derive(Debug, Clone, Serialize)]
pub struct RainbowReport {
    pub colouring: Colouring,
    pub rainbow_vertices: VertexSet,
    pub count: u32,
}

/// Rainbow vertex count of one proper colouring.
pub fn rainbow_number(g: &Graph, c: &Colouring) -> Result<RainbowReport, RainbowError> {
    let rv = rainbow_vertices(g, c)?;
    Ok(RainbowReport {
        colouring: c.clone(),
        rainbow_vertices: rv,
        count: rv.len(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RainbowBounds {
    /// Fewest rainbow vertices over the minimum colourings examined.
    pub min: u32,
    /// Most rainbow vertices over the minimum colourings examined.
    pub max: u32,
    pub min_witness: Colouring,
    pub max_witness: Colouring,
    pub partitions_examined: u64,
    /// True when the stream of minimum colourings was exhausted, making the
    /// bounds exact extremes rather than a sampled bracket.
    pub exact: bool,
}

/// Scans partitions into chromatic-many independent classes (each partition
/// once, canonical order) and tracks the extreme rainbow vertex counts. A
/// budget caps how many partitions are examined; hitting it leaves `exact`
/// false. First witness per extreme is kept, so witnesses are deterministic.
pub fn rainbow_bounds(g: &Graph, budget: Option<u64>) -> Result<RainbowBounds, SolveError> {
    let mut stream = chromatic_partitions(g)?;
    let mut best: Option<RainbowBounds> = None;
    let mut examined = 0u64;
    let mut exhausted = true;
    loop {
        if let Some(cap) = budget {
            // Always examine at least one partition so witnesses exist.
            if examined >= cap.max(1) {
                exhausted = stream.next().is_none();
                break;
            }
        }
        let Some(c) = stream.next() else {
            break;
        };
        examined += 1;
        let count = rainbow_vertices(g, &c)
            .expect("partition classes are independent")
            .len();
        match &mut best {
            None => {
                best = Some(RainbowBounds {
                    min: count,
                    max: count,
                    min_witness: c.clone(),
                    max_witness: c,
                    partitions_examined: 0,
                    exact: false,
                });
            }
            Some(b) => {
                if count < b.min {
                    b.min = count;
                    b.min_witness = c.clone();
                }
                if count > b.max {
                    b.max = count;
                    b.max_witness = c;
                }
            }
        }
    }
    let mut out = best.expect("at least one minimum colouring exists");
    out.partitions_examined = examined;
    out.exact = exhausted;
    Ok(out)
}

/// Rainbow vertex count under the deterministic maximax-independence
/// colouring, measured against that colouring's own colour count.
pub fn rainbow_under_imax(g: &Graph) -> Result<RainbowReport, SolveError> {
    let out = imax_colouring(g, PeelMode::Deterministic)?;
    Ok(rainbow_number(g, &out.colouring).expect("peel colourings are proper"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, null, path, set_graph};

    #[test]
    fn rejects_improper_and_mismatched() {
        let p3 = path(3).unwrap();
        let bad = Colouring::from_assignment(3, vec![1, 1, 2]).unwrap();
        assert_eq!(rainbow_vertices(&p3, &bad), Err(RainbowError::Improper));
        let short = Colouring::from_assignment(2, vec![1, 2]).unwrap();
        assert!(matches!(
            rainbow_vertices(&p3, &short),
            Err(RainbowError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn complete_graphs_are_all_rainbow() {
        let k4 = complete(4).unwrap();
        let b = rainbow_bounds(&k4, None).unwrap();
        assert_eq!((b.min, b.max), (4, 4));
        assert!(b.exact);
        assert_eq!(b.partitions_examined, 1);
    }

    #[test]
    fn null_graphs_are_all_rainbow() {
        let n5 = null(5).unwrap();
        let b = rainbow_bounds(&n5, None).unwrap();
        assert_eq!((b.min, b.max), (5, 5));
    }

    #[test]
    fn p4_every_vertex_rainbow() {
        let p4 = path(4).unwrap();
        let b = rainbow_bounds(&p4, None).unwrap();
        assert_eq!((b.min, b.max), (4, 4));
        assert_eq!(b.partitions_examined, 1);
    }

    #[test]
    fn c5_has_three_rainbow_vertices() {
        let c5 = cycle(5).unwrap();
        let b = rainbow_bounds(&c5, None).unwrap();
        assert_eq!((b.min, b.max), (3, 3));
        assert_eq!(b.partitions_examined, 5);
        assert!(b.exact);
    }

    #[test]
    fn even_cycles_all_rainbow() {
        let c6 = cycle(6).unwrap();
        let b = rainbow_bounds(&c6, None).unwrap();
        assert_eq!((b.min, b.max), (6, 6));
    }

    #[test]
    fn set_graph_three_bounds_and_imax_count() {
        let sg = set_graph(3).unwrap();
        let b = rainbow_bounds(&sg.graph, None).unwrap();
        assert_eq!((b.min, b.max), (7, 7));
        assert!(b.exact);
        // Under the 5-colour maximax-independence colouring only the
        // universal vertex and the three pairwise-intersecting doubletons
        // see all five colours.
        let r = rainbow_under_imax(&sg.graph).unwrap();
        assert_eq!(r.colouring.num_colours(), 5);
        assert_eq!(r.count, 4);
        assert_eq!(r.rainbow_vertices.to_vec(), vec![3, 4, 5, 6]);
    }

    #[test]
    fn budget_truncates_and_clears_exact() {
        let c5 = cycle(5).unwrap();
        let b = rainbow_bounds(&c5, Some(2)).unwrap();
        assert_eq!(b.partitions_examined, 2);
        assert!(!b.exact);
    }

    #[test]
    fn empty_graph_bounds() {
        let g = null(0).unwrap();
        let b = rainbow_bounds(&g, None).unwrap();
        assert_eq!((b.min, b.max), (0, 0));
        assert_eq!(b.partitions_examined, 1);
    }
}
