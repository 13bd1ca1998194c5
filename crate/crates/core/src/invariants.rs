//! Exact invariant solvers: clique number, independence number, chromatic
//! number, and the counting/enumeration variants the claim checks rely on.
//!
//! Everything here is exact. Searches that can grow past desk scale take a
//! node budget and fail loudly instead of returning an approximation.

use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("search exceeded the node budget of {budget}")]
    BudgetExceeded { budget: u64 },
    #[error("order {order} exceeds the limit of {max} for this operation")]
    OrderTooLarge { order: u32, max: u32 },
}

/// Largest order for which per-subset lookup tables are built eagerly.
pub(crate) const ALPHA_TABLE_MAX_ORDER: u32 = 20;
const CHI_TABLE_MAX_ORDER: u32 = 13;
pub const DEFAULT_CHI_BUDGET: u64 = 20_000_000;

pub(crate) fn complement_adj(adj: &[u64], order: u32) -> Vec<u64> {
    let full = if order == 0 { 0 } else { (1u64 << order) - 1 };
    adj.iter()
        .enumerate()
        .map(|(v, m)| !m & full & !(1u64 << v))
        .collect()
}

/// Greedy sequential colouring of the vertices in `mask`, ascending index.
/// Returns the number of colours used; an upper bound for the chromatic
/// number of the induced subgraph.
pub(crate) fn greedy_colour_count(adj: &[u64], mask: u64) -> u32 {
    let mut classes: Vec<u64> = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        match classes.iter_mut().find(|c| **c & adj[v as usize] == 0) {
            Some(c) => *c |= 1u64 << v,
            None => classes.push(1u64 << v),
        }
    }
    classes.len() as u32
}

/// Candidates of `cand` in greedy-colour order: grouped by colour class,
/// classes in discovery order. The colour number bounds any clique through
/// that vertex inside `cand`.
fn colour_sorted(adj: &[u64], cand: u64) -> Vec<(u32, u32)> {
    let mut classes: Vec<u64> = Vec::new();
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        match classes.iter_mut().position(|c| *c & adj[v as usize] == 0) {
            Some(i) => classes[i] |= 1u64 << v,
            None => classes.push(1u64 << v),
        }
    }
    let mut out = Vec::with_capacity(cand.count_ones() as usize);
    for (i, class) in classes.iter().enumerate() {
        let mut c = *class;
        while c != 0 {
            let v = c.trailing_zeros();
            c &= c - 1;
            out.push((v, i as u32 + 1));
        }
    }
    out
}

fn clique_expand(adj: &[u64], cand: u64, cur: u64, cur_size: u32, best: &mut (u32, u64)) {
    if cand == 0 {
        if cur_size > best.0 {
            *best = (cur_size, cur);
        }
        return;
    }
    let order = colour_sorted(adj, cand);
    let mut cand_left = cand;
    for &(v, colour) in order.iter().rev() {
        if cur_size + colour <= best.0 {
            return;
        }
        clique_expand(
            adj,
            cand_left & adj[v as usize],
            cur | (1u64 << v),
            cur_size + 1,
            best,
        );
        cand_left &= !(1u64 << v);
    }
}

/// Maximum clique restricted to `mask`: (size, witness mask).
pub(crate) fn max_clique_in(adj: &[u64], mask: u64) -> (u32, u64) {
    let mut best = (0u32, 0u64);
    clique_expand(adj, mask, 0, 0, &mut best);
    best
}

fn cliques_of_size_rec(
    adj: &[u64],
    cur: u64,
    cur_size: u32,
    cand: u64,
    k: u32,
    limit: Option<u64>,
    out: &mut Vec<u64>,
) -> Result<(), SolveError> {
    if cur_size == k {
        if let Some(lim) = limit {
            if out.len() as u64 >= lim {
                return Err(SolveError::BudgetExceeded { budget: lim });
            }
        }
        out.push(cur);
        return Ok(());
    }
    let mut cand = cand;
    while cand != 0 {
        if cur_size + cand.count_ones() < k {
            return Ok(());
        }
        let v = cand.trailing_zeros();
        cand &= cand - 1;
        cliques_of_size_rec(
            adj,
            cur | (1u64 << v),
            cur_size + 1,
            cand & adj[v as usize],
            k,
            limit,
            out,
        )?;
    }
    Ok(())
}

/// All cliques of exactly size `k` within `mask`, as masks in ascending
/// numeric order. `limit` caps the number of emitted sets.
pub(crate) fn cliques_of_size(
    adj: &[u64],
    mask: u64,
    k: u32,
    limit: Option<u64>,
) -> Result<Vec<u64>, SolveError> {
    let mut out = Vec::new();
    if k == 0 {
        return Ok(out);
    }
    cliques_of_size_rec(adj, 0, 0, mask, k, limit, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

pub fn clique_number(g: &Graph) -> u32 {
    max_clique_in(g.adj(), g.full_set().mask()).0
}

/// All maximum cliques, ascending by vertex-set mask.
pub fn maximum_cliques(g: &Graph) -> Vec<VertexSet> {
    if g.order() == 0 {
        return Vec::new();
    }
    let full = g.full_set().mask();
    let (omega, _) = max_clique_in(g.adj(), full);
    cliques_of_size(g.adj(), full, omega, None)
        .expect("unbounded enumeration")
        .into_iter()
        .map(VertexSet::from_mask)
        .collect()
}

pub fn count_maximum_cliques(g: &Graph) -> u64 {
    maximum_cliques(g).len() as u64
}

/// Per-subset independence numbers for graphs of order at most 20.
/// alpha(S) = max(alpha(S minus v), 1 + alpha(S minus N[v])) with v the
/// lowest vertex of S.
fn alpha_table(adj: &[u64], order: u32) -> Vec<u8> {
    let size = 1usize << order;
    let mut table = vec![0u8; size];
    for mask in 1..size as u64 {
        let v = mask.trailing_zeros() as usize;
        let skip = table[(mask & (mask - 1)) as usize];
        let take = 1 + table[(mask & !(adj[v] | (1u64 << v))) as usize];
        table[mask as usize] = skip.max(take);
    }
    table
}

/// Independence-number queries against a fixed graph, restricted to vertex
/// masks. Small orders use a per-subset table; larger orders fall back to a
/// clique search on the complement.
pub(crate) struct AlphaOracle {
    comp: Vec<u64>,
    table: Option<Vec<u8>>,
}

impl AlphaOracle {
    pub fn new(g: &Graph) -> AlphaOracle {
        let comp = complement_adj(g.adj(), g.order());
        let table = if g.order() <= ALPHA_TABLE_MAX_ORDER {
            Some(alpha_table(g.adj(), g.order()))
        } else {
            None
        };
        AlphaOracle { comp, table }
    }

    pub fn alpha(&self, mask: u64) -> u32 {
        match &self.table {
            Some(t) => t[mask as usize] as u32,
            None => max_clique_in(&self.comp, mask).0,
        }
    }

    /// All maximum independent sets within `mask`, ascending by mask.
    pub fn maximum_independent_sets(
        &self,
        mask: u64,
        limit: Option<u64>,
    ) -> Result<Vec<u64>, SolveError> {
        let a = self.alpha(mask);
        cliques_of_size(&self.comp, mask, a, limit)
    }
}

pub fn independence_number(g: &Graph) -> u32 {
    AlphaOracle::new(g).alpha(g.full_set().mask())
}

/// All maximum independent sets, ascending by vertex-set mask.
pub fn enumerate_maximum_independent_sets(g: &Graph) -> Vec<VertexSet> {
    if g.order() == 0 {
        return Vec::new();
    }
    AlphaOracle::new(g)
        .maximum_independent_sets(g.full_set().mask(), None)
        .expect("unbounded enumeration")
        .into_iter()
        .map(VertexSet::from_mask)
        .collect()
}

pub fn count_maximum_independent_sets(g: &Graph) -> u64 {
    enumerate_maximum_independent_sets(g).len() as u64
}

fn independent_set_table(adj: &[u64], order: u32) -> Vec<bool> {
    let size = 1usize << order;
    let mut ind = vec![false; size];
    ind[0] = true;
    for mask in 1..size as u64 {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        ind[mask as usize] = ind[rest as usize] && adj[v] & rest == 0;
    }
    ind
}

/// Per-subset chromatic numbers, exact, for order at most 15. Runs in
/// O(3^n): for each subset the class of its lowest vertex ranges over the
/// independent submasks containing that vertex.
pub(crate) fn chi_table(adj: &[u64], order: u32) -> Vec<u8> {
    assert!(order <= 15, "chi table limited to order 15");
    let size = 1usize << order;
    let ind = independent_set_table(adj, order);
    let mut chi = vec![0u8; size];
    for mask in 1..size as u64 {
        let v = mask.trailing_zeros() as usize;
        let vbit = 1u64 << v;
        let free = mask & !adj[v] & !vbit;
        let mut best = u8::MAX;
        let mut t = free;
        loop {
            let class = t | vbit;
            if ind[class as usize] {
                best = best.min(1 + chi[(mask & !class) as usize]);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & free;
        }
        chi[mask as usize] = best;
    }
    chi
}

/// Per-subset clique numbers (exact, any order up to 25 or so in memory,
/// used for order <= 15).
pub(crate) fn omega_table(adj: &[u64], order: u32) -> Vec<u8> {
    let size = 1usize << order;
    let mut table = vec![0u8; size];
    for mask in 1..size as u64 {
        let v = mask.trailing_zeros() as usize;
        let skip = table[(mask & (mask - 1)) as usize];
        let take = 1 + table[(mask & adj[v]) as usize];
        table[mask as usize] = skip.max(take);
    }
    table
}

/// Maximal independent sets of the subgraph induced by `mask` that contain
/// `v`, via pivoted Bron-Kerbosch on the complement.
fn maximal_ind_sets_containing(comp: &[u64], mask: u64, v: u32) -> Vec<u64> {
    let mut out = Vec::new();
    bron_kerbosch(comp, 1u64 << v, comp[v as usize] & mask, 0, &mut out);
    out
}

fn bron_kerbosch(adj: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let mut pivot = 0u32;
    let mut best = u32::MAX;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros();
        scan &= scan - 1;
        let missed = (p & !adj[u as usize]).count_ones();
        if missed < best {
            best = missed;
            pivot = u;
        }
    }
    let mut ext = p & !adj[pivot as usize];
    let mut p = p;
    let mut x = x;
    while ext != 0 {
        let u = ext.trailing_zeros();
        ext &= ext - 1;
        let ubit = 1u64 << u;
        bron_kerbosch(adj, r | ubit, p & adj[u as usize], x & adj[u as usize], out);
        p &= !ubit;
        x |= ubit;
    }
}

struct LawlerSearch<'a> {
    comp: &'a [u64],
    memo: HashMap<u64, u32>,
    nodes: u64,
    budget: u64,
}

impl LawlerSearch<'_> {
    fn chi(&mut self, mask: u64) -> Result<u32, SolveError> {
        if mask == 0 {
            return Ok(0);
        }
        if let Some(&c) = self.memo.get(&mask) {
            return Ok(c);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExceeded {
                budget: self.budget,
            });
        }
        let v = mask.trailing_zeros();
        let candidates = maximal_ind_sets_containing(self.comp, mask, v);
        self.nodes += candidates.len() as u64;
        let mut best = u32::MAX;
        for class in candidates {
            best = best.min(1 + self.chi(mask & !class)?);
        }
        self.memo.insert(mask, best);
        Ok(best)
    }
}

/// Exact chromatic number. Orders up to 13 use the per-subset table; larger
/// orders use memoised minimum independent-set covering with clique and
/// greedy bounds, guarded by `budget`.
pub fn chromatic_number_with_budget(g: &Graph, budget: u64) -> Result<u32, SolveError> {
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let full = g.full_set().mask();
    if n <= CHI_TABLE_MAX_ORDER {
        return Ok(chi_table(g.adj(), n)[full as usize] as u32);
    }
    let lower = max_clique_in(g.adj(), full).0;
    let upper = greedy_colour_count(g.adj(), full);
    if lower == upper {
        return Ok(lower);
    }
    let comp = complement_adj(g.adj(), n);
    let mut search = LawlerSearch {
        comp: &comp,
        memo: HashMap::new(),
        nodes: 0,
        budget,
    };
    search.chi(full)
}

pub fn chromatic_number(g: &Graph) -> Result<u32, SolveError> {
    chromatic_number_with_budget(g, DEFAULT_CHI_BUDGET)
}

pub fn min_degree(g: &Graph) -> u32 {
    g.min_degree()
}

/// Bundle of the scalar invariants for one graph.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InvariantReport {
    pub order: u32,
    pub size: u32,
    pub min_degree: u32,
    pub max_degree: u32,
    pub omega: u32,
    pub max_clique_count: u64,
    pub alpha: u32,
    pub max_independent_set_count: u64,
    pub chi: u32,
}

pub fn invariant_report(g: &Graph) -> Result<InvariantReport, SolveError> {
    Ok(InvariantReport {
        order: g.order(),
        size: g.size(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        omega: clique_number(g),
        max_clique_count: count_maximum_cliques(g),
        alpha: independence_number(g),
        max_independent_set_count: count_maximum_independent_sets(g),
        chi: chromatic_number(g)?,
    })
}
