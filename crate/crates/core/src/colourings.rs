//! Proper colourings: the two independent-set peeling procedures, their
//! traces, and exhaustive enumeration of minimum proper colourings.

use crate::graph::{Graph, VertexSet};
use crate::invariants::{chromatic_number, AlphaOracle, SolveError};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColouringError {
    #[error("assignment covers {got} vertices, expected {expected}")]
    LengthMismatch { expected: u32, got: u32 },
    #[error("vertex {vertex} has colour {colour}, outside 1..={num_colours}")]
    ColourOutOfRange {
        vertex: u32,
        colour: u32,
        num_colours: u32,
    },
    #[error("colour class {0} is empty")]
    EmptyClass(u32),
}

/// A total assignment of colours 1..=l to the vertices of a graph of known
/// order. Every class is nonempty and the class weights sum to the order.
/// Properness is a separate query, never an assumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    assignment: Vec<u32>,
    classes: Vec<VertexSet>,
}

impl Colouring {
    /// Builds from per-vertex colours (1-based). The number of colours is
    /// the largest colour used; every colour down from there must occur.
    pub fn from_assignment(order: u32, assignment: Vec<u32>) -> Result<Colouring, ColouringError> {
        if assignment.len() as u32 != order {
            return Err(ColouringError::LengthMismatch {
                expected: order,
                got: assignment.len() as u32,
            });
        }
        let num_colours = assignment.iter().copied().max().unwrap_or(0);
        let mut classes = vec![VertexSet::EMPTY; num_colours as usize];
        for (v, &c) in assignment.iter().enumerate() {
            if c == 0 || c > num_colours {
                return Err(ColouringError::ColourOutOfRange {
                    vertex: v as u32,
                    colour: c,
                    num_colours,
                });
            }
            classes[c as usize - 1] = classes[c as usize - 1].with(v as u32);
        }
        if let Some(i) = classes.iter().position(|c| c.is_empty()) {
            return Err(ColouringError::EmptyClass(i as u32 + 1));
        }
        Ok(Colouring { assignment, classes })
    }

    pub(crate) fn from_class_masks(order: u32, masks: &[u64]) -> Colouring {
        let mut assignment = vec![0u32; order as usize];
        for (i, &m) in masks.iter().enumerate() {
            for v in VertexSet::from_mask(m).iter() {
                assignment[v as usize] = i as u32 + 1;
            }
        }
        Colouring {
            assignment,
            classes: masks.iter().map(|&m| VertexSet::from_mask(m)).collect(),
        }
    }

    pub fn order(&self) -> u32 {
        self.assignment.len() as u32
    }

    pub fn num_colours(&self) -> u32 {
        self.classes.len() as u32
    }

    pub fn colour_of(&self, v: u32) -> u32 {
        self.assignment[v as usize]
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// Colour classes, indexed by colour - 1.
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// Class sizes (the weights theta(c_i)).
    pub fn weights(&self) -> Vec<u32> {
        self.classes.iter().map(|c| c.len()).collect()
    }
}

impl Serialize for Colouring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Colouring", 3)?;
        st.serialize_field("colours", &self.assignment)?;
        st.serialize_field("classes", &self.classes)?;
        st.serialize_field("weights", &self.weights())?;
        st.end()
    }
}

/// True when no edge joins two vertices of the same colour.
pub fn is_proper(g: &Graph, c: &Colouring) -> bool {
    assert_eq!(g.order(), c.order(), "colouring order mismatch");
    c.classes
        .iter()
        .all(|class| class.iter().all(|v| g.neighbours(v).mask() & class.mask() == 0))
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TraceRound {
    pub iteration: u32,
    pub chosen: VertexSet,
    /// Independence number of what remains after removing the chosen set.
    pub residual_alpha: u32,
    /// How many candidate sets attained the optimal objective this round.
    pub tied_candidates: u32,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq, Default)]
pub struct ColouringTrace {
    pub rounds: Vec<TraceRound>,
}

/// Objective applied to the residual independence number when choosing among
/// the maximum independent sets of the current residual graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeelRule {
    /// Choose a set whose removal minimises the residual independence
    /// number (the maximax-independence procedure).
    MinResidualAlpha,
    /// Choose a set whose removal maximises the residual independence
    /// number (the rainbow neighbourhood convention procedure).
    MaxResidualAlpha,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeelMode {
    /// Ties break to the candidate with the smallest vertex-set mask.
    Deterministic,
    /// Additionally explores every tied candidate at every round and
    /// reports the attainable minimum and maximum colour counts.
    Exhaustive,
}

#[derive(Debug, Clone, Copy)]
pub struct PeelBudget {
    /// Cap on candidate sets enumerated in any single round.
    pub candidates_per_round: u64,
    /// Cap on explored states in exhaustive mode.
    pub branch_nodes: u64,
}

impl Default for PeelBudget {
    fn default() -> Self {
        PeelBudget {
            candidates_per_round: 1_000_000,
            branch_nodes: 1_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PeelOutcome {
    pub colouring: Colouring,
    pub trace: ColouringTrace,
    /// Fewest colours over all tie-break sequences (exhaustive mode only).
    pub min_colours: Option<u32>,
    /// Most colours over all tie-break sequences (exhaustive mode only).
    pub max_colours: Option<u32>,
}

fn optimal_candidates(
    oracle: &AlphaOracle,
    residual: u64,
    rule: PeelRule,
    budget: &PeelBudget,
) -> Result<(Vec<u64>, u32), SolveError> {
    let candidates =
        oracle.maximum_independent_sets(residual, Some(budget.candidates_per_round))?;
    let objectives: Vec<u32> = candidates
        .iter()
        .map(|&x| oracle.alpha(residual & !x))
        .collect();
    let best = match rule {
        PeelRule::MinResidualAlpha => *objectives.iter().min().expect("nonempty residual"),
        PeelRule::MaxResidualAlpha => *objectives.iter().max().expect("nonempty residual"),
    };
    let tied: Vec<u64> = candidates
        .iter()
        .zip(&objectives)
        .filter(|&(_, &o)| o == best)
        .map(|(&x, _)| x)
        .collect();
    Ok((tied, best))
}

fn branch_min_max(
    oracle: &AlphaOracle,
    residual: u64,
    rule: PeelRule,
    budget: &PeelBudget,
    memo: &mut HashMap<u64, (u32, u32)>,
    nodes: &mut u64,
) -> Result<(u32, u32), SolveError> {
    if residual == 0 {
        return Ok((0, 0));
    }
    if let Some(&r) = memo.get(&residual) {
        return Ok(r);
    }
    *nodes += 1;
    if *nodes > budget.branch_nodes {
        return Err(SolveError::BudgetExceeded {
            budget: budget.branch_nodes,
        });
    }
    let (tied, _) = optimal_candidates(oracle, residual, rule, budget)?;
    let mut lo = u32::MAX;
    let mut hi = 0u32;
    for x in tied {
        let (a, b) = branch_min_max(oracle, residual & !x, rule, budget, memo, nodes)?;
        lo = lo.min(a + 1);
        hi = hi.max(b + 1);
    }
    memo.insert(residual, (lo, hi));
    Ok((lo, hi))
}

/// Runs one peeling procedure to completion. Each round enumerates the
/// maximum independent sets of the residual graph, keeps those optimal for
/// `rule`, colours the tie-break winner (smallest mask) with the next
/// colour, and removes it.
pub fn peel_colouring(
    g: &Graph,
    rule: PeelRule,
    mode: PeelMode,
    budget: &PeelBudget,
) -> Result<PeelOutcome, SolveError> {
    let oracle = AlphaOracle::new(g);
    let mut residual = g.full_set().mask();
    let mut class_masks: Vec<u64> = Vec::new();
    let mut rounds = Vec::new();
    while residual != 0 {
        let (tied, best) = optimal_candidates(&oracle, residual, rule, budget)?;
        let chosen = tied[0];
        rounds.push(TraceRound {
            iteration: class_masks.len() as u32 + 1,
            chosen: VertexSet::from_mask(chosen),
            residual_alpha: best,
            tied_candidates: tied.len() as u32,
        });
        class_masks.push(chosen);
        residual &= !chosen;
    }
    let colouring = Colouring::from_class_masks(g.order(), &class_masks);
    let (min_colours, max_colours) = match mode {
        PeelMode::Deterministic => (None, None),
        PeelMode::Exhaustive => {
            let mut memo = HashMap::new();
            let mut nodes = 0u64;
            let (lo, hi) = branch_min_max(
                &oracle,
                g.full_set().mask(),
                rule,
                budget,
                &mut memo,
                &mut nodes,
            )?;
            (Some(lo), Some(hi))
        }
    };
    Ok(PeelOutcome {
        colouring,
        trace: ColouringTrace { rounds },
        min_colours,
        max_colours,
    })
}

/// Maximax-independence colouring: peel maximum independent sets, always
/// minimising the residual independence number.
pub fn imax_colouring(g: &Graph, mode: PeelMode) -> Result<PeelOutcome, SolveError> {
    peel_colouring(g, PeelRule::MinResidualAlpha, mode, &PeelBudget::default())
}

/// Rainbow neighbourhood convention colouring: peel maximum independent
/// sets, always maximising the residual independence number.
pub fn convention_colouring(g: &Graph, mode: PeelMode) -> Result<PeelOutcome, SolveError> {
    peel_colouring(g, PeelRule::MaxResidualAlpha, mode, &PeelBudget::default())
}

/// Colour count of the deterministic maximax-independence colouring.
pub fn chi_imax(g: &Graph) -> Result<u32, SolveError> {
    Ok(imax_colouring(g, PeelMode::Deterministic)?
        .colouring
        .num_colours())
}

/// Excess of the maximax-independence colour count over the chromatic
/// number. Zero exactly when the procedure attains a minimum colouring.
pub fn imax_number(g: &Graph) -> Result<u32, SolveError> {
    let ci = chi_imax(g)?;
    let chi = chromatic_number(g)?;
    debug_assert!(ci >= chi);
    Ok(ci - chi)
}

/// Streams every partition of the vertices into exactly `num_classes`
/// nonempty independent sets, each partition once, in canonical form:
/// classes ordered by minimum member, vertex 0 in the first class.
///
/// The enumeration assigns vertices in ascending order; a vertex may join an
/// existing compatible class or open class k+1, which yields the canonical
/// representative directly.
pub struct ChromaticPartitions<'g> {
    g: &'g Graph,
    num_classes: u32,
    // DFS over (vertex, next option); option k < open_count joins class k,
    // option == open_count opens a new class.
    stack: Vec<(u32, u32)>,
    classes: Vec<u64>,
    done: bool,
    emit_empty: bool,
}

impl<'g> ChromaticPartitions<'g> {
    pub fn new(g: &'g Graph, num_classes: u32) -> ChromaticPartitions<'g> {
        ChromaticPartitions {
            g,
            num_classes,
            stack: vec![(0, 0)],
            classes: Vec::new(),
            done: g.order() == 0,
            emit_empty: g.order() == 0 && num_classes == 0,
        }
    }

    fn feasible(&self, next_vertex: u32) -> bool {
        let open = self.classes.len() as u32;
        let remaining = self.g.order() - next_vertex;
        open <= self.num_classes && open + remaining >= self.num_classes
    }
}

impl Iterator for ChromaticPartitions<'_> {
    type Item = Colouring;

    fn next(&mut self) -> Option<Colouring> {
        if self.emit_empty {
            self.emit_empty = false;
            return Some(Colouring::from_class_masks(0, &[]));
        }
        if self.done {
            return None;
        }
        let n = self.g.order();
        loop {
            let Some(&(v, option)) = self.stack.last() else {
                self.done = true;
                return None;
            };
            let open = self.classes.len() as u32;
            if v == n {
                // A complete assignment sits on the stack; emit once, then
                // retract the parent's choice so its next option is tried.
                self.stack.pop();
                let out = Colouring::from_class_masks(n, &self.classes);
                self.retract_top_choice();
                return Some(out);
            }
            if option > open || (option == open && open == self.num_classes) {
                // Options exhausted at v; backtrack past it.
                self.stack.pop();
                self.retract_top_choice();
                continue;
            }
            self.stack.last_mut().expect("top exists").1 += 1;
            let adj = self.g.neighbours(v).mask();
            if option < open {
                if self.classes[option as usize] & adj != 0 {
                    continue;
                }
                self.classes[option as usize] |= 1u64 << v;
            } else {
                self.classes.push(1u64 << v);
            }
            if self.feasible(v + 1) {
                self.stack.push((v + 1, 0));
            } else {
                self.unassign(v, option);
            }
        }
    }
}

impl ChromaticPartitions<'_> {
    // The stack top's counter sits one past its active option; undo that
    // option's class assignment.
    fn retract_top_choice(&mut self) {
        if let Some(&(pv, popt)) = self.stack.last() {
            self.unassign(pv, popt - 1);
        }
    }

    fn unassign(&mut self, v: u32, option: u32) {
        let open = self.classes.len() as u32;
        if option + 1 == open && self.classes[option as usize] == 1u64 << v {
            self.classes.pop();
        } else {
            self.classes[option as usize] &= !(1u64 << v);
        }
    }
}

/// Partition stream for minimum proper colourings: `num_classes` is the
/// chromatic number computed here.
pub fn chromatic_partitions(g: &Graph) -> Result<ChromaticPartitions<'_>, SolveError> {
    let chi = chromatic_number(g)?;
    Ok(ChromaticPartitions::new(g, chi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, null, path, set_graph};

    fn masks(c: &Colouring) -> Vec<Vec<u32>> {
        c.classes().iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn from_assignment_validates() {
        assert!(Colouring::from_assignment(3, vec![1, 2, 1]).is_ok());
        assert!(matches!(
            Colouring::from_assignment(3, vec![1, 2]),
            Err(ColouringError::LengthMismatch { .. })
        ));
        assert!(matches!(
            Colouring::from_assignment(3, vec![1, 3, 1]),
            Err(ColouringError::EmptyClass(2))
        ));
        assert!(matches!(
            Colouring::from_assignment(2, vec![0, 1]),
            Err(ColouringError::ColourOutOfRange { .. })
        ));
    }

    #[test]
    fn weights_sum_to_order() {
        let c = Colouring::from_assignment(4, vec![1, 2, 1, 2]).unwrap();
        assert_eq!(c.weights().iter().sum::<u32>(), 4);
    }

    #[test]
    fn properness() {
        let p3 = path(3).unwrap();
        let good = Colouring::from_assignment(3, vec![1, 2, 1]).unwrap();
        let bad = Colouring::from_assignment(3, vec![1, 1, 2]).unwrap();
        assert!(is_proper(&p3, &good));
        assert!(!is_proper(&p3, &bad));
    }

    #[test]
    fn imax_on_p4_uses_three_colours() {
        // Round 1 must take {0,3}: it is the unique candidate leaving
        // residual independence number 1.
        let p4 = path(4).unwrap();
        let out = imax_colouring(&p4, PeelMode::Deterministic).unwrap();
        assert_eq!(masks(&out.colouring), vec![vec![0, 3], vec![1], vec![2]]);
        let r1 = &out.trace.rounds[0];
        assert_eq!(r1.chosen.to_vec(), vec![0, 3]);
        assert_eq!(r1.residual_alpha, 1);
        assert_eq!(r1.tied_candidates, 1);
    }

    #[test]
    fn convention_on_p4_uses_two_colours() {
        let p4 = path(4).unwrap();
        let out = convention_colouring(&p4, PeelMode::Deterministic).unwrap();
        assert_eq!(out.colouring.num_colours(), 2);
        assert!(is_proper(&p4, &out.colouring));
    }

    #[test]
    fn set_graph_three_peels_match_each_other() {
        // The singleton subsets form the unique maximum independent set, so
        // both procedures peel them first and then colour the remaining
        // clique one vertex per round.
        let sg = set_graph(3).unwrap();
        let imax = imax_colouring(&sg.graph, PeelMode::Deterministic).unwrap();
        let conv = convention_colouring(&sg.graph, PeelMode::Deterministic).unwrap();
        assert_eq!(imax.colouring.num_colours(), 5);
        assert_eq!(conv.colouring.num_colours(), 5);
        assert_eq!(
            masks(&imax.colouring),
            vec![vec![0, 1, 2], vec![3], vec![4], vec![5], vec![6]]
        );
    }

    #[test]
    fn chi_imax_values() {
        assert_eq!(chi_imax(&path(4).unwrap()).unwrap(), 3);
        assert_eq!(chi_imax(&path(5).unwrap()).unwrap(), 2);
        assert_eq!(chi_imax(&cycle(4).unwrap()).unwrap(), 2);
        assert_eq!(chi_imax(&cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chi_imax(&complete(4).unwrap()).unwrap(), 4);
        assert_eq!(imax_number(&set_graph(3).unwrap().graph).unwrap(), 1);
    }

    #[test]
    fn exhaustive_mode_brackets_deterministic_count() {
        for g in [path(6).unwrap(), cycle(6).unwrap(), cycle(7).unwrap()] {
            let out = imax_colouring(&g, PeelMode::Exhaustive).unwrap();
            let det = out.colouring.num_colours();
            assert!(out.min_colours.unwrap() <= det);
            assert!(out.max_colours.unwrap() >= det);
        }
    }

    #[test]
    fn peel_handles_empty_graph() {
        let g = null(0).unwrap();
        let out = imax_colouring(&g, PeelMode::Exhaustive).unwrap();
        assert_eq!(out.colouring.num_colours(), 0);
        assert_eq!(out.min_colours, Some(0));
        assert_eq!(out.trace.rounds.len(), 0);
    }

    #[test]
    fn partitions_of_p4_are_unique() {
        let p4 = path(4).unwrap();
        let parts: Vec<_> = chromatic_partitions(&p4).unwrap().collect();
        assert_eq!(parts.len(), 1);
        assert_eq!(masks(&parts[0]), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn partitions_of_c5_number_five() {
        let c5 = cycle(5).unwrap();
        let parts: Vec<_> = chromatic_partitions(&c5).unwrap().collect();
        assert_eq!(parts.len(), 5);
        for p in &parts {
            assert!(is_proper(&c5, p));
            assert_eq!(p.num_colours(), 3);
            assert!(p.classes()[0].contains(0));
            // Classes are ordered by minimum member.
            let mins: Vec<u32> = p.classes().iter().map(|c| c.lowest().unwrap()).collect();
            assert!(mins.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn partitions_of_complete_graph_is_single() {
        let k4 = complete(4).unwrap();
        let parts: Vec<_> = chromatic_partitions(&k4).unwrap().collect();
        assert_eq!(parts.len(), 1);
    }

    #[test]
    fn partition_stream_of_empty_graph_is_one_empty_colouring() {
        let g = null(0).unwrap();
        let parts: Vec<_> = chromatic_partitions(&g).unwrap().collect();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].num_colours(), 0);
    }
}
