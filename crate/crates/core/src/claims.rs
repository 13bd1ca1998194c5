//! Machine-checked claim registry.
//!
//! Each entry pairs a stable claim id with an executable predicate over a
//! declared scope. Entries are classified `Proven` (a violation means the
//! engine itself is broken, not the claim) or `Suspect` (a violation is a
//! recorded finding, backed by re-checkable graph6 witnesses); one entry has
//! no executable content and is always skipped. Results are deterministic:
//! corpus scans shard across threads, but shard results merge into a
//! canonical order and witness lists are sorted and capped.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::colourings::{
    chi_imax, chromatic_partitions, convention_colouring, imax_colouring, Colouring, PeelMode,
};
use crate::corpus::{graph_from_edge_mask, is_canonical_representative, labelled_graphs, RandomGraphs};
use crate::generators::{
    complete, complete_thorn, cycle, empty_sun, null, path, set_graph, sunlet, thorn_complete,
    ThornSpec,
};
use crate::graph::Graph;
use crate::graph6;
use crate::invariants::{
    chromatic_number, clique_number, count_maximum_cliques, count_maximum_independent_sets,
    independence_number,
};
use crate::perfection::{
    every_vertex_in_maximum_clique, is_perfect_bruteforce, is_perfect_hole_based,
    is_weakly_perfect, HoleSide, BRUTEFORCE_MAX_ORDER,
};
use crate::rainbow::{rainbow_bounds, rainbow_vertices};

/// Witness lists and harness error lists are truncated to this many entries,
/// keeping the smallest graph6 texts; totals stay in `stats`.
pub const COUNTEREXAMPLE_CAP: usize = 25;

/// Edge densities used by sampled conjecture scopes.
pub const RANDOM_DENSITIES: [f64; 5] = [0.2, 0.35, 0.5, 0.65, 0.8];

const SOLVER_OK: &str = "order within solver bounds";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    /// A statement with a sound argument behind it; the check doubles as a
    /// self-test of the engine.
    #[serde(rename = "proven")]
    Proven,
    /// A statement whose stated support does not hold up; the check records
    /// whatever the computation finds.
    #[serde(rename = "suspect")]
    Suspect,
    /// No executable predicate exists; the check always skips.
    #[serde(rename = "not-checkable")]
    NotCheckable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "verified-on-scope")]
    VerifiedOnScope,
    #[serde(rename = "refuted")]
    Refuted,
    /// The whole declared scope was searched and no counterexample exists in
    /// it (used by the conjecture search).
    #[serde(rename = "exhausted-no-counterexample")]
    ExhaustedNoCounterexample,
    #[serde(rename = "skipped")]
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// graph6 text of the offending graph; decoding it and re-running the
    /// claim predicate reproduces the violation.
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub claim_id: String,
    pub classification: Classification,
    pub scope: String,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    pub stats: BTreeMap<String, u64>,
    pub notes: Vec<String>,
    /// Internal-consistency failures (oracle disagreement). Any entry means
    /// the run reports a harness bug regardless of verdicts.
    pub harness_errors: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Caps the order of corpus-scan scopes. Each claim has its own default
    /// and hard ceiling; fixed family scopes ignore this.
    pub max_order: Option<u32>,
    /// Seed for randomized sampling scopes; those scopes refuse to run
    /// without one.
    pub seed: Option<u64>,
    /// Minimum colourings examined for the largest set-graph scope
    /// (default 10_000).
    pub partition_budget: Option<u64>,
    /// Random graphs drawn per density in sampled conjecture scopes
    /// (default 2_000).
    pub samples_per_density: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
    #[error("scope reaches order {order}, which samples randomly; pass an explicit seed")]
    SeedRequired { order: u32 },
}

#[derive(Debug, Clone, Copy)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub classification: Classification,
    /// What the predicate checks, in one sentence.
    pub summary: &'static str,
}

static REGISTRY: &[ClaimInfo] = &[
    ClaimInfo {
        id: "sec1-null",
        classification: Classification::Proven,
        summary: "every minimum colouring of a null graph makes all n vertices rainbow",
    },
    ClaimInfo {
        id: "sec1-complete",
        classification: Classification::Proven,
        summary: "every minimum colouring of a complete graph makes all n vertices rainbow",
    },
    ClaimInfo {
        id: "sec1-bipartite",
        classification: Classification::Proven,
        summary: "every minimum colouring of a connected bipartite graph makes all vertices rainbow",
    },
    ClaimInfo {
        id: "lemma-1.1",
        classification: Classification::Proven,
        summary: "joining one universal vertex raises both rainbow extremes and the convention count by exactly one",
    },
    ClaimInfo {
        id: "lemma-2.1",
        classification: Classification::Proven,
        summary: "a vertex that is rainbow under an l-colouring has degree at least l - 1",
    },
    ClaimInfo {
        id: "cor-2.2",
        classification: Classification::NotCheckable,
        summary: "modal restatement of the rainbow degree bound; no executable predicate",
    },
    ClaimInfo {
        id: "prop-2.1",
        classification: Classification::Suspect,
        summary: "the n-th set-graph has exactly 2^(n-1) maximum cliques, each of size 2^(n-1)",
    },
    ClaimInfo {
        id: "thm-2.2",
        classification: Classification::Proven,
        summary: "the n-th set-graph has chromatic number 2^(n-1)",
    },
    ClaimInfo {
        id: "thm-2.3",
        classification: Classification::Proven,
        summary: "set-graphs are perfect, confirmed by two independent perfection oracles",
    },
    ClaimInfo {
        id: "thm-2.3-alpha",
        classification: Classification::Suspect,
        summary: "the n-th set-graph has a unique maximum independent set, of size 2^(n-1) - 1",
    },
    ClaimInfo {
        id: "conj-2.4",
        classification: Classification::Suspect,
        summary: "weakly perfect plus every vertex in some maximum clique implies perfect",
    },
    ClaimInfo {
        id: "thm-2.5",
        classification: Classification::Proven,
        summary: "every minimum colouring of the n-th set-graph makes all 2^n - 1 vertices rainbow",
    },
    ClaimInfo {
        id: "obs-2.6",
        classification: Classification::Suspect,
        summary: "chi <= min degree + 1 holds exactly when every minimum colouring makes all vertices rainbow",
    },
    ClaimInfo {
        id: "sec3-alpha",
        classification: Classification::Proven,
        summary: "the n-th set-graph has independence number n",
    },
    ClaimInfo {
        id: "example-3.1",
        classification: Classification::Suspect,
        summary: "the hand-built n-colouring of a complete-graph thorn is minimum, proper, and peels maximal classes",
    },
    ClaimInfo {
        id: "prop-3.1a",
        classification: Classification::Proven,
        summary: "set-graphs: the maximax-independence chromatic number is chi + 1",
    },
    ClaimInfo {
        id: "prop-3.1b",
        classification: Classification::Proven,
        summary: "paths: the maximax-independence chromatic number is 3 exactly when n >= 4 is even",
    },
    ClaimInfo {
        id: "prop-3.1c",
        classification: Classification::Proven,
        summary: "odd paths with n >= 5: the maximax-independence chromatic number is chi = 2",
    },
    ClaimInfo {
        id: "prop-3.1d",
        classification: Classification::Suspect,
        summary: "cycles: the maximax-independence chromatic number is chi, i.e. 2 for even n and 3 for odd n",
    },
    ClaimInfo {
        id: "prop-3.1e",
        classification: Classification::Suspect,
        summary: "sunlets: the maximax-independence chromatic number is chi + 1, i.e. 3 for even n and 4 for odd n",
    },
    ClaimInfo {
        id: "prop-3.1f",
        classification: Classification::Suspect,
        summary: "odd empty-suns: the maximax-independence chromatic number is chi + 1 = 4",
    },
    ClaimInfo {
        id: "prop-3.1g",
        classification: Classification::Suspect,
        summary: "even empty-suns: the maximax-independence chromatic number is chi = 3",
    },
    ClaimInfo {
        id: "prop-3.1h",
        classification: Classification::Proven,
        summary: "complete-graph thorns: the maximax-independence chromatic number is n + 1",
    },
    ClaimInfo {
        id: "cor-3.2",
        classification: Classification::Suspect,
        summary: "attaching pendants to every vertex raises the maximax-independence chromatic number by exactly one",
    },
    ClaimInfo {
        id: "thm-3.3",
        classification: Classification::Suspect,
        summary: "the convention peel always produces a minimum proper colouring",
    },
    ClaimInfo {
        id: "cor-3.4",
        classification: Classification::Proven,
        summary: "chi never exceeds the maximax-independence chromatic number",
    },
    ClaimInfo {
        id: "thm-3.5",
        classification: Classification::Suspect,
        summary: "alpha = chi on order >= 2 forces maximax-independence chromatic number chi + 1",
    },
];

pub fn registry() -> &'static [ClaimInfo] {
    REGISTRY
}

/// All individual claim ids, in registry (report) order.
pub fn claim_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

fn claim_info(id: &str) -> &'static ClaimInfo {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .expect("registered claim id")
}

fn new_result(id: &str, scope: String) -> CheckResult {
    CheckResult {
        claim_id: id.to_string(),
        classification: claim_info(id).classification,
        scope,
        verdict: Verdict::VerifiedOnScope,
        counterexamples: Vec::new(),
        stats: BTreeMap::new(),
        notes: Vec::new(),
        harness_errors: Vec::new(),
    }
}

fn cx_cmp(a: &Counterexample, b: &Counterexample) -> std::cmp::Ordering {
    (a.graph6.len(), a.graph6.as_bytes(), a.detail.as_str()).cmp(&(
        b.graph6.len(),
        b.graph6.as_bytes(),
        b.detail.as_str(),
    ))
}

fn sort_cap(list: &mut Vec<Counterexample>) {
    list.sort_by(cx_cmp);
    list.dedup();
    list.truncate(COUNTEREXAMPLE_CAP);
}

fn push_capped(list: &mut Vec<Counterexample>, cx: Counterexample) {
    list.push(cx);
    if list.len() > 2 * COUNTEREXAMPLE_CAP {
        sort_cap(list);
    }
}

/// Per-graph outcome inside a corpus scan.
struct GraphOutcome {
    /// Violation detail; the scan records it against the graph's graph6 text.
    violation: Option<String>,
    /// Internal-consistency failure, independent of the claim's truth.
    error: Option<String>,
    tallies: Vec<(&'static str, u64)>,
}

impl GraphOutcome {
    fn pass(tallies: Vec<(&'static str, u64)>) -> GraphOutcome {
        GraphOutcome {
            violation: None,
            error: None,
            tallies,
        }
    }
}

#[derive(Default)]
struct ScanAcc {
    scanned: u64,
    violations: u64,
    counterexamples: Vec<Counterexample>,
    errors: Vec<String>,
    tallies: BTreeMap<&'static str, u64>,
}

impl ScanAcc {
    fn absorb(&mut self, g: &Graph, out: GraphOutcome) {
        self.scanned += 1;
        if let Some(detail) = out.violation {
            self.violations += 1;
            push_capped(
                &mut self.counterexamples,
                Counterexample {
                    graph6: graph6::encode(g),
                    detail,
                },
            );
        }
        if let Some(e) = out.error {
            self.errors.push(e);
        }
        for (k, v) in out.tallies {
            *self.tallies.entry(k).or_insert(0) += v;
        }
    }

    fn merge(mut self, mut other: ScanAcc) -> ScanAcc {
        self.scanned += other.scanned;
        self.violations += other.violations;
        self.counterexamples.append(&mut other.counterexamples);
        sort_cap(&mut self.counterexamples);
        self.errors.append(&mut other.errors);
        self.errors.sort();
        self.errors.truncate(COUNTEREXAMPLE_CAP);
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_insert(0) += v;
        }
        self
    }

    /// Folds this scan into a result: witnesses, harness errors, the scanned
    /// and violation counts, and every tally (keys get `prefix` prepended).
    fn finish(mut self, res: &mut CheckResult, prefix: &str) {
        sort_cap(&mut self.counterexamples);
        res.counterexamples.extend(self.counterexamples);
        sort_cap(&mut res.counterexamples);
        res.harness_errors.extend(self.errors);
        res.harness_errors.sort();
        res.harness_errors.truncate(COUNTEREXAMPLE_CAP);
        res.stats
            .insert(format!("{prefix}graphs_scanned"), self.scanned);
        *res.stats.entry(format!("{prefix}violations")).or_insert(0) += self.violations;
        for (k, v) in self.tallies {
            *res.stats.entry(format!("{prefix}{k}")).or_insert(0) += v;
        }
        if self.violations > 0 {
            res.verdict = Verdict::Refuted;
        }
    }
}

/// Scans every labelled graph of each order in `lo..=hi`, in parallel, and
/// merges per-shard outcomes deterministically.
fn scan_labelled<F>(lo: u32, hi: u32, connected_only: bool, dedup: bool, per_graph: F) -> ScanAcc
where
    F: Fn(&Graph) -> GraphOutcome + Sync,
{
    let mut total = ScanAcc::default();
    for order in lo..=hi {
        let count = labelled_graphs(order)
            .expect("scan order within corpus bound")
            .total();
        let acc = (0..count)
            .into_par_iter()
            .fold(ScanAcc::default, |mut acc, mask| {
                let g = graph_from_edge_mask(order, mask);
                if connected_only && !g.is_connected() {
                    return acc;
                }
                if dedup
                    && !is_canonical_representative(&g).expect("scan order within canonical bound")
                {
                    return acc;
                }
                let out = per_graph(&g);
                acc.absorb(&g, out);
                acc
            })
            .reduce(ScanAcc::default, ScanAcc::merge);
        total = total.merge(acc);
    }
    sort_cap(&mut total.counterexamples);
    total
}

fn scan_connected<F>(lo: u32, hi: u32, per_graph: F) -> ScanAcc
where
    F: Fn(&Graph) -> GraphOutcome + Sync,
{
    scan_labelled(lo, hi, true, false, per_graph)
}

/// Two-colourability via BFS parity, componentwise.
fn is_bipartite(g: &Graph) -> bool {
    let n = g.order() as usize;
    let mut side = vec![2u8; n];
    for s in 0..n {
        if side[s] != 2 {
            continue;
        }
        side[s] = 0;
        let mut queue = vec![s as u32];
        while let Some(v) = queue.pop() {
            for u in g.neighbours(v).iter() {
                if side[u as usize] == 2 {
                    side[u as usize] = 1 - side[v as usize];
                    queue.push(u);
                } else if side[u as usize] == side[v as usize] {
                    return false;
                }
            }
        }
    }
    true
}

/// First colour class (1-based) that is not a maximal independent set of the
/// residual graph left by the earlier classes, if any.
fn first_non_maximal_class(g: &Graph, c: &Colouring) -> Option<u32> {
    let mut residual = g.full_set();
    for (i, class) in c.classes().iter().enumerate() {
        for v in residual.difference(*class).iter() {
            if g.neighbours(v).mask() & class.mask() == 0 {
                return Some(i as u32 + 1);
            }
        }
        residual = residual.difference(*class);
    }
    None
}

/// Violation detail for a wrong maximax-independence colour count, including
/// the bracket attainable under other tie-breaks.
fn ci_detail(label: &str, g: &Graph, chi: u32, ci: u32, expected: &str) -> String {
    let ex = imax_colouring(g, PeelMode::Exhaustive).expect(SOLVER_OK);
    format!(
        "{label}: chi={chi} chi_imax={ci} expected {expected}; tie-break bracket [{}, {}]",
        ex.min_colours.expect("exhaustive mode reports brackets"),
        ex.max_colours.expect("exhaustive mode reports brackets"),
    )
}

fn check_sec1_null(_opts: &RunOptions) -> CheckResult {
    let mut res = new_result(
        "sec1-null",
        "null graphs, order 1..=8, every minimum colouring".to_string(),
    );
    let mut partitions = 0;
    for n in 1..=8 {
        let g = null(n).expect("order within bounds");
        let b = rainbow_bounds(&g, None).expect(SOLVER_OK);
        partitions += b.partitions_examined;
        if b.min != n || b.max != n {
            res.verdict = Verdict::Refuted;
            push_capped(
                &mut res.counterexamples,
                Counterexample {
                    graph6: graph6::encode(&g),
                    detail: format!("n={n}: r_min={} r_max={} expected {n}", b.min, b.max),
                },
            );
        }
    }
    sort_cap(&mut res.counterexamples);
    res.stats.insert("graphs_checked".into(), 8);
    res.stats.insert("partitions_examined".into(), partitions);
    res.stats
        .insert("violations".into(), res.counterexamples.len() as u64);
    res
}

fn check_sec1_complete(_opts: &RunOptions) -> CheckResult {
    let mut res = new_result(
        "sec1-complete",
        "complete graphs, order 1..=8, every minimum colouring".to_string(),
    );
    let mut partitions = 0;
    for n in 1..=8 {
        let g = complete(n).expect("order within bounds");
        let b = rainbow_bounds(&g, None).expect(SOLVER_OK);
        partitions += b.partitions_examined;
        if b.min != n || b.max != n {
            res.verdict = Verdict::Refuted;
            push_capped(
                &mut res.counterexamples,
                Counterexample {
                    graph6: graph6::encode(&g),
                    detail: format!("n={n}: r_min={} r_max={} expected {n}", b.min, b.max),
                },
            );
        }
    }
    sort_cap(&mut res.counterexamples);
    res.stats.insert("graphs_checked".into(), 8);
    res.stats.insert("partitions_examined".into(), partitions);
    res.stats
        .insert("violations".into(), res.counterexamples.len() as u64);
    res
}

fn check_sec1_bipartite(opts: &RunOptions) -> CheckResult {
    let cap = opts.max_order.unwrap_or(6).min(7);
    let mut res = new_result(
        "sec1-bipartite",
        format!("connected bipartite labelled graphs, order 1..={cap}, every minimum colouring"),
    );
    let acc = scan_connected(1, cap, |g| {
        if !is_bipartite(g) {
            return GraphOutcome::pass(vec![]);
        }
        let b = rainbow_bounds(g, None).expect(SOLVER_OK);
        let n = g.order();
        let violation = (b.min != n || b.max != n).then(|| {
            format!(
                "order={n}: r_min={} r_max={} expected {n}",
                b.min, b.max
            )
        });
        GraphOutcome {
            violation,
            error: None,
            tallies: vec![
                ("bipartite_graphs", 1),
                ("partitions_examined", b.partitions_examined),
            ],
        }
    });
    acc.finish(&mut res, "");
    res
}

fn check_lemma_1_1(opts: &RunOptions) -> CheckResult {
    // Base cap keeps the joined graph one vertex larger than the scan order.
    let base_cap = opts.max_order.unwrap_or(6).min(7).saturating_sub(1).max(1);
    let mut res = new_result(
        "lemma-1.1",
        format!("connected labelled graphs of order 1..={base_cap}, each joined with one universal vertex"),
    );
    let acc = scan_connected(1, base_cap, |g| {
        let joined = g.join_k1().expect("joined order within bounds");
        let b = rainbow_bounds(g, None).expect(SOLVER_OK);
        let bj = rainbow_bounds(&joined, None).expect(SOLVER_OK);
        let conv = convention_colouring(g, PeelMode::Deterministic).expect(SOLVER_OK);
        let convj = convention_colouring(&joined, PeelMode::Deterministic).expect(SOLVER_OK);
        let r = rainbow_vertices(g, &conv.colouring)
            .expect("peel classes are independent")
            .len();
        let rj = rainbow_vertices(&joined, &convj.colouring)
            .expect("peel classes are independent")
            .len();
        let ok = bj.min == b.min + 1 && bj.max == b.max + 1 && rj == r + 1;
        let violation = (!ok).then(|| {
            format!(
                "order={}: r_min {}->{} r_max {}->{} convention {}->{} expected +1 shifts",
                g.order(),
                b.min,
                bj.min,
                b.max,
                bj.max,
                r,
                rj
            )
        });
        GraphOutcome {
            violation,
            error: None,
            tallies: vec![(
                "partitions_examined",
                b.partitions_examined + bj.partitions_examined,
            )],
        }
    });
    acc.finish(&mut res, "");
    res
}

fn check_lemma_2_1(opts: &RunOptions) -> CheckResult {
    let partition_cap = opts.max_order.unwrap_or(6).min(6);
    let peel_cap = opts.max_order.unwrap_or(7).min(7);
    let mut res = new_result(
        "lemma-2.1",
        format!(
            "connected labelled graphs: every minimum colouring to order <= {partition_cap}, both peel colourings to order <= {peel_cap}"
        ),
    );
    let partitions = scan_connected(1, partition_cap, |g| {
        let chi = chromatic_number(g).expect(SOLVER_OK);
        let mut examined = 0u64;
        let mut violation = None;
        for c in chromatic_partitions(g).expect(SOLVER_OK) {
            examined += 1;
            let rv = rainbow_vertices(g, &c).expect("partition classes are independent");
            if let Some(v) = rv.iter().find(|&v| g.degree(v) + 1 < chi) {
                violation = Some(format!(
                    "order={} chi={chi} vertex={v} degree={} rainbow under a minimum colouring",
                    g.order(),
                    g.degree(v)
                ));
                break;
            }
        }
        GraphOutcome {
            violation,
            error: None,
            tallies: vec![("partitions_examined", examined)],
        }
    });
    partitions.finish(&mut res, "partition_");
    let peels = scan_connected(1, peel_cap, |g| {
        let mut violation = None;
        for outcome in [
            imax_colouring(g, PeelMode::Deterministic),
            convention_colouring(g, PeelMode::Deterministic),
        ] {
            let c = outcome.expect(SOLVER_OK).colouring;
            let colours = c.num_colours();
            let rv = rainbow_vertices(g, &c).expect("peel classes are independent");
            if let Some(v) = rv.iter().find(|&v| g.degree(v) + 1 < colours) {
                violation = Some(format!(
                    "order={} colours={colours} vertex={v} degree={} rainbow under a peel colouring",
                    g.order(),
                    g.degree(v)
                ));
                break;
            }
        }
        GraphOutcome {
            violation,
            error: None,
            tallies: vec![("colourings_examined", 2)],
        }
    });
    peels.finish(&mut res, "peel_");
    res
}

fn check_cor_2_2(_opts: &RunOptions) -> CheckResult {
    let mut res = new_result("cor-2.2", "none".to_string());
    res.verdict = Verdict::Skipped;
    res.notes.push(
        "the statement quantifies over colourings a vertex could possibly be rainbow under, \
         which fixes no executable predicate; the degree bound itself is checked as lemma-2.1"
            .to_string(),
    );
    res
}

fn check_prop_2_1(_opts: &RunOptions) -> CheckResult {
    let mut res = new_result("prop-2.1", "set-graphs, n = 1..=4".to_string());
    let mut checked = 0;
    for n in 1..=4u32 {
        let g = set_graph(n).expect("order within bounds").graph;
        checked += 1;
        let expected = 1u64 << (n - 1);
        let omega = clique_number(&g) as u64;
        let count = count_maximum_cliques(&g);
        if omega != expected || count != expected {
            res.verdict = Verdict::Refuted;
            push_capped(
                &mut res.counterexamples,
                Counterexample {
                    graph6: graph6::encode(&g),
                    detail: format!(
                        "n={n}: omega={omega} maximum_cliques={count} expected {expected} of each"
                    ),
                },
            );
        }
    }
    sort_cap(&mut res.counterexamples);
    res.stats.insert("graphs_checked".into(), checked);
    res.stats
        .insert("violations".into(), res.counterexamples.len() as u64);
    res.notes.push(
        "the clique size 2^(n-1) holds throughout; the count matches at n = 1..=3 (1, 2, 4) \
         and diverges at n = 4, where the 12 maximum cliques are the 4 star families plus \
         8 families built from the four 3-subsets"
            .to_string(),
    );
    res
}

fn check_thm_2_2(_opts: &RunOptions) -> CheckResult {
    let mut res = new_result("thm-2.2", "set-graphs, n = 1..=4".to_string());
    let mut checked = 0;
    for n in 1..=4u32 {
        let g = set_graph(n).expect("order within bounds").graph;
        checked += 1;
        let expected = 1u32 << (n - 1);
        let chi = chromatic_number(&g).expect(SOLVER_OK);
        if chi != expected {
            res.verdict = Verdict::Refuted;
            push_capped(
                &mut res.counterexamples,
                Counterexample {
                    graph6: graph6::encode(&g),
                    detail: format!("n={n}: chi={chi} expected {expected}"),
                },
            );
        }
    }
    sort_cap(&mut res.counterexamples);
    res.stats.insert("graphs_checked".into(), checked);
    res.stats
        .insert("violations".into(), res.counterexamples.len() as u64);
    res
}

fn check_thm_2_3(opts: &RunOptions) -> CheckResult {
    let cap = opts.max_order.unwrap_or(6).min(7);
    let mut res = new_result(
        "thm-2.3",
        format!(
            "set-graphs, n = 1..=4; oracle cross-check on connected labelled graphs of order <= {cap}"
        ),
    );
    for n in 1..=4u32 {
        let g = set_graph(n).expect("order within bounds").graph;
        let sweep = is_perfect_bruteforce(&g).expect(SOLVER_OK);
        let holes = is_perfect_hole_based(&g);
        if sweep.perfect != holes.perfect {
            res.harness_errors.push(format!(
                "perfection oracles disagree on {}: subgraph-sweep={} hole-search={}",
                graph6::encode(&g),
                sweep.perfect,
                holes.perfect
            ));
        }
        if !sweep.perfect || !holes.perfect {
            res.verdict = Verdict::Refuted;
            push_capped(
                &mut res.counterexamples,
                Counterexample {
                    graph6: graph6::encode(&g),
                    detail: format!(
                        "n={n}: subgraph-sweep perfect={} hole-search perfect={}",
                        sweep.perfect, holes.perfect
                    ),
                },
            );
        }
    }
    res.stats.insert("set_graphs_checked".into(), 4);
    let agreement = scan_connected(1, cap, |g| {
        let sweep = is_perfect_bruteforce(g).expect(SOLVER_OK);
        let holes = is_perfect_hole_based(g);
        let error = (sweep.perfect != holes.perfect).then(|| {
            format!(
                "perfection oracles disagree on {}: subgraph-sweep={} hole-search={}",
                graph6::encode(g),
                sweep.perfect,
                holes.perfect
            )
        });
        GraphOutcome {
            violation: None,
            error,
            tallies: vec![("perfect_graphs", sweep.perfect as u64)],
        }
    });
    agreement.finish(&mut res, "agreement_");
    res
}

fn check_thm_2_3_alpha(_opts: &RunOptions) -> CheckResult {
    let mut res = new_result("thm-2.3-alpha", "set-graphs, n = 1..=4".to_string());
    for n in 1..=4u32 {
        let g = set_graph(n).expect("order within bounds").graph;
        let claimed = (1u64 << (n - 1)) - 1;
        let alpha = independence_number(&g) as u64;
        let count = count_maximum_independent_sets(&g);
        if alpha != claimed || count != 1 {
            res.verdict = Verdict::Refuted;
            push_capped(
                &mut res.counterexamples,
                Counterexample {
                    graph6: graph6::encode(&g),
                    detail: format!(
                        "n={n}: alpha={alpha} maximum_independent_sets={count} claimed alpha={claimed} and uniqueness"
                    ),
                },
            );
        }
    }
    sort_cap(&mut res.counterexamples);
    res.stats.insert("graphs_checked".into(), 4);
    res.stats
        .insert("violations".into(), res.counterexamples.len() as u64);
    res
}

fn check_thm_2_5(opts: &RunOptions) -> CheckResult {
    let budget = opts.partition_budget.unwrap_or(10_000).max(1);
    let mut res = new_result(
        "thm-2.5",
        format!(
            "set-graphs: n = 1..=3 over every minimum colouring, n = 4 over the first {budget} minimum colourings"
        ),
    );
    for n in 1..=4u32 {
        let g = set_graph(n).expect("order within bounds").graph;
        let expected = (1u32 << n) - 1;
        let b = rainbow_bounds(&g, if n <= 3 { None } else { Some(budget) }).expect(SOLVER_OK);
        res.stats
            .insert(format!("partitions_examined_n{n}"), b.partitions_examined);
        res.stats.insert(format!("exact_n{n}"), b.exact as u64);
        if b.min != expected || b.max != expected {
            res.verdict = Verdict::Refuted;
            push_capped(
                &mut res.counterexamples,
                Counterexample {
                    graph6: graph6::encode(&g),
                    detail: format!(
                        "n={n}: r_min={} r_max={} expected {expected}",
                        b.min, b.max
                    ),
                },
            );
        }
    }
    sort_cap(&mut res.counterexamples);
    res.stats
        .insert("violations".into(), res.counterexamples.len() as u64);
    res
}

fn check_obs_2_6(opts: &RunOptions) -> CheckResult {
    let cap = opts.max_order.unwrap_or(6).min(6);
    let mut res = new_result(
        "obs-2.6",
        format!(
            "connected labelled graphs, order 1..={cap}; noted families: cycles n = 3..=10, paths n = 2..=8, set-graphs n = 1..=3"
        ),
    );
    let acc = scan_connected(1, cap, |g| {
        let n = g.order();
        let chi = chromatic_number(g).expect(SOLVER_OK);
        let bound_holds = chi <= g.min_degree() + 1;
        let b = rainbow_bounds(g, None).expect(SOLVER_OK);
        let all_rainbow = b.min == n;
        let violation = (bound_holds != all_rainbow).then(|| {
            format!(
                "order={n} chi={chi} min_degree_plus_1={} r_min={} bound_holds={bound_holds} all_rainbow={all_rainbow}",
                g.min_degree() + 1,
                b.min
            )
        });
        GraphOutcome {
            violation,
            error: None,
            tallies: vec![("partitions_examined", b.partitions_examined)],
        }
    });
    acc.finish(&mut res, "");
    let mut note_family = |label: String, g: &Graph| {
        let chi = chromatic_number(g).expect(SOLVER_OK);
        let b = rainbow_bounds(g, None).expect(SOLVER_OK);
        res.notes.push(format!(
            "{label}: chi={chi} min_degree_plus_1={} r_min={} bound_holds={} all_rainbow={}",
            g.min_degree() + 1,
            b.min,
            chi <= g.min_degree() + 1,
            b.min == g.order()
        ));
    };
    for n in 3..=10 {
        note_family(format!("C{n}"), &cycle(n).expect("order within bounds"));
    }
    for n in 2..=8 {
        note_family(format!("P{n}"), &path(n).expect("order within bounds"));
    }
    for n in 1..=3 {
        note_family(
            format!("set-graph n={n}"),
            &set_graph(n).expect("order within bounds").graph,
        );
    }
    res
}

fn check_sec3_alpha(_opts: &RunOptions) -> CheckResult {
    let mut res = new_result("sec3-alpha", "set-graphs, n = 1..=5".to_string());
    for n in 1..=5u32 {
        let g = set_graph(n).expect("order within bounds").graph;
        let alpha = independence_number(&g);
        if alpha != n {
            res.verdict = Verdict::Refuted;
            push_capped(
                &mut res.counterexamples,
                Counterexample {
                    graph6: graph6::encode(&g),
                    detail: format!("n={n}: alpha={alpha} expected {n}"),
                },
            );
        }
    }
    sort_cap(&mut res.counterexamples);
    res.stats.insert("graphs_checked".into(), 5);
    res.stats
        .insert("violations".into(), res.counterexamples.len() as u64);
    res
}

/// The described colouring of a complete-graph thorn: colour 1 on the first
/// hub and on every pendant of the other hubs, colour 2 on the pendants of
/// the first hub, colours 2..=n on the remaining hubs in index order.
fn thorn_example_colouring(n: u32, counts: &[u32]) -> (Graph, Colouring) {
    let spec = ThornSpec::new(counts.to_vec()).expect("positive pendant counts");
    let g = thorn_complete(n, &spec).expect("order within bounds");
    let order = g.order();
    let mut assignment = vec![0u32; order as usize];
    for v in 0..n {
        assignment[v as usize] = if v == 0 { 1 } else { v + 1 };
    }
    let mut next = n as usize;
    for (i, &t) in counts.iter().enumerate() {
        for _ in 0..t {
            assignment[next] = if i == 0 { 2 } else { 1 };
            next += 1;
        }
    }
    let c = Colouring::from_assignment(order, assignment).expect("colours 1..=n are all used");
    (g, c)
}

fn check_example_3_1(_opts: &RunOptions) -> CheckResult {
    let mut res = new_result(
        "example-3.1",
        "complete-graph thorns, n = 3..=6, pendant counts all-1 and 1..n".to_string(),
    );
    let mut checked = 0;
    for n in 3..=6u32 {
        let variants: [Vec<u32>; 2] = [vec![1; n as usize], (1..=n).collect()];
        for counts in variants {
            checked += 1;
            let (g, c) = thorn_example_colouring(n, &counts);
            let chi = chromatic_number(&g).expect(SOLVER_OK);
            let mut problems = Vec::new();
            if chi != n {
                problems.push(format!("chi={chi} expected {n}"));
            }
            if c.num_colours() != n {
                problems.push(format!("colouring uses {} colours", c.num_colours()));
            }
            if !crate::colourings::is_proper(&g, &c) {
                problems.push("colouring is not proper".to_string());
            } else if let Some(class) = first_non_maximal_class(&g, &c) {
                problems.push(format!("class {class} is not maximal in its residual"));
            }
            if !problems.is_empty() {
                res.verdict = Verdict::Refuted;
                push_capped(
                    &mut res.counterexamples,
                    Counterexample {
                        graph6: graph6::encode(&g),
                        detail: format!("n={n} pendant_counts={counts:?}: {}", problems.join("; ")),
                    },
                );
            }
        }
    }
    sort_cap(&mut res.counterexamples);
    res.stats.insert("colourings_checked".into(), checked);
    res.stats
        .insert("violations".into(), res.counterexamples.len() as u64);
    res
}

/// Shared shape of the family claims about the maximax-independence
/// chromatic number: build each case, compare against the expectation.
fn family_ci_claim<I, B, E>(id: &str, scope: &str, cases: I, build: B, expect: E) -> CheckResult
where
    I: IntoIterator<Item = u32>,
    B: Fn(u32) -> Graph,
    E: Fn(u32, u32, u32) -> (bool, String),
{
    let mut res = new_result(id, scope.to_string());
    let mut checked = 0;
    for n in cases {
        checked += 1;
        let g = build(n);
        let chi = chromatic_number(&g).expect(SOLVER_OK);
        let ci = chi_imax(&g).expect(SOLVER_OK);
        let (ok, expected) = expect(n, chi, ci);
        if !ok {
            res.verdict = Verdict::Refuted;
            let label = format!("n={n}");
            push_capped(
                &mut res.counterexamples,
                Counterexample {
                    graph6: graph6::encode(&g),
                    detail: ci_detail(&label, &g, chi, ci, &expected),
                },
            );
        }
    }
    sort_cap(&mut res.counterexamples);
    res.stats.insert("graphs_checked".into(), checked);
    res.stats
        .insert("violations".into(), res.counterexamples.len() as u64);
    res
}

fn check_prop_3_1a(_opts: &RunOptions) -> CheckResult {
    family_ci_claim(
        "prop-3.1a",
        "set-graphs, n = 3..=4",
        3..=4,
        |n| set_graph(n).expect("order within bounds").graph,
        |_, chi, ci| (ci == chi + 1, format!("chi+1 = {}", chi + 1)),
    )
}

fn check_prop_3_1b(_opts: &RunOptions) -> CheckResult {
    family_ci_claim(
        "prop-3.1b",
        "paths, n = 1..=12",
        1..=12,
        |n| path(n).expect("order within bounds"),
        |n, chi, ci| {
            let even_long = n >= 4 && n % 2 == 0;
            if even_long {
                (ci == 3 && chi == 2, "chi+1 = 3".to_string())
            } else {
                (ci != 3, "any value except 3".to_string())
            }
        },
    )
}

fn check_prop_3_1c(_opts: &RunOptions) -> CheckResult {
    family_ci_claim(
        "prop-3.1c",
        "paths, odd n = 5..=11",
        (5..=11).step_by(2),
        |n| path(n).expect("order within bounds"),
        |_, chi, ci| (ci == 2 && chi == 2, "chi = 2".to_string()),
    )
}

fn check_prop_3_1d(_opts: &RunOptions) -> CheckResult {
    family_ci_claim(
        "prop-3.1d",
        "cycles, n = 3..=12",
        3..=12,
        |n| cycle(n).expect("order within bounds"),
        |n, chi, ci| {
            let expected = if n % 2 == 0 { 2 } else { 3 };
            (ci == chi && ci == expected, format!("chi = {expected}"))
        },
    )
}

fn check_prop_3_1e(_opts: &RunOptions) -> CheckResult {
    family_ci_claim(
        "prop-3.1e",
        "sunlet graphs, n = 3..=10",
        3..=10,
        |n| sunlet(n).expect("order within bounds"),
        |n, chi, ci| {
            let expected = if n % 2 == 0 { 3 } else { 4 };
            (
                ci == chi + 1 && ci == expected,
                format!("chi+1 = {expected}"),
            )
        },
    )
}

fn check_prop_3_1f(_opts: &RunOptions) -> CheckResult {
    family_ci_claim(
        "prop-3.1f",
        "empty-sun graphs, odd n = 3..=9",
        (3..=9).step_by(2),
        |n| empty_sun(n).expect("order within bounds"),
        |_, chi, ci| (ci == chi + 1 && ci == 4, "chi+1 = 4".to_string()),
    )
}

fn check_prop_3_1g(_opts: &RunOptions) -> CheckResult {
    family_ci_claim(
        "prop-3.1g",
        "empty-sun graphs, even n = 4..=10",
        (4..=10).step_by(2),
        |n| empty_sun(n).expect("order within bounds"),
        |_, chi, ci| (ci == chi && ci == 3, "chi = 3".to_string()),
    )
}

fn check_prop_3_1h(_opts: &RunOptions) -> CheckResult {
    let mut res = new_result(
        "prop-3.1h",
        "complete-graph thorns, n = 3..=6, pendant counts all-1 and 1..n".to_string(),
    );
    let mut checked = 0;
    for n in 3..=6u32 {
        let variants: [Vec<u32>; 2] = [vec![1; n as usize], (1..=n).collect()];
        for counts in variants {
            checked += 1;
            let spec = ThornSpec::new(counts.clone()).expect("positive pendant counts");
            let g = thorn_complete(n, &spec).expect("order within bounds");
            let chi = chromatic_number(&g).expect(SOLVER_OK);
            let ci = chi_imax(&g).expect(SOLVER_OK);
            if ci != n + 1 {
                res.verdict = Verdict::Refuted;
                let label = format!("n={n} pendant_counts={counts:?}");
                push_capped(
                    &mut res.counterexamples,
                    Counterexample {
                        graph6: graph6::encode(&g),
                        detail: ci_detail(&label, &g, chi, ci, &format!("n+1 = {}", n + 1)),
                    },
                );
            }
        }
    }
    sort_cap(&mut res.counterexamples);
    res.stats.insert("graphs_checked".into(), checked);
    res.stats
        .insert("violations".into(), res.counterexamples.len() as u64);
    res
}

fn check_cor_3_2(opts: &RunOptions) -> CheckResult {
    let cap = opts.max_order.unwrap_or(6).min(6);
    let mut res = new_result(
        "cor-3.2",
        format!("connected labelled base graphs, order 1..={cap}, one pendant per base vertex"),
    );
    let acc = scan_connected(1, cap, |g| {
        let spec = ThornSpec::uniform(g.order(), 1).expect("positive pendant counts");
        let thorn = complete_thorn(g, &spec).expect("order within bounds");
        let base_ci = chi_imax(g).expect(SOLVER_OK);
        let thorn_ci = chi_imax(&thorn).expect(SOLVER_OK);
        let violation = (thorn_ci != base_ci + 1).then(|| {
            let ex = imax_colouring(&thorn, PeelMode::Exhaustive).expect(SOLVER_OK);
            format!(
                "base order={} base chi_imax={base_ci} thorn chi_imax={thorn_ci} expected {}; thorn tie-break bracket [{}, {}]",
                g.order(),
                base_ci + 1,
                ex.min_colours.expect("exhaustive mode reports brackets"),
                ex.max_colours.expect("exhaustive mode reports brackets"),
            )
        });
        GraphOutcome {
            violation,
            error: None,
            tallies: vec![],
        }
    });
    acc.finish(&mut res, "");
    res
}

fn check_thm_3_3(opts: &RunOptions) -> CheckResult {
    let cap = opts.max_order.unwrap_or(6).min(7);
    let mut res = new_result(
        "thm-3.3",
        format!("connected labelled graphs, order 1..={cap}, deterministic and all tie-break runs"),
    );
    let acc = scan_connected(1, cap, |g| {
        let chi = chromatic_number(g).expect(SOLVER_OK);
        let det = convention_colouring(g, PeelMode::Deterministic)
            .expect(SOLVER_OK)
            .colouring
            .num_colours();
        let ex = convention_colouring(g, PeelMode::Exhaustive).expect(SOLVER_OK);
        let best = ex.min_colours.expect("exhaustive mode reports brackets");
        let worst = ex.max_colours.expect("exhaustive mode reports brackets");
        let det_bad = det != chi;
        let any_bad = best != chi;
        let violation = (det_bad || any_bad).then(|| {
            format!(
                "order={} chi={chi} deterministic_colours={det} tie-break bracket [{best}, {worst}]",
                g.order()
            )
        });
        GraphOutcome {
            violation,
            error: None,
            tallies: vec![
                ("deterministic_violations", det_bad as u64),
                ("all_tiebreak_violations", any_bad as u64),
            ],
        }
    });
    acc.finish(&mut res, "");
    res.notes.push(
        "deterministic_violations counts graphs where the lowest-mask tie-break overshoots chi; \
         all_tiebreak_violations counts graphs where every tie-break sequence overshoots"
            .to_string(),
    );
    res
}

fn check_cor_3_4(opts: &RunOptions) -> CheckResult {
    let cap = opts.max_order.unwrap_or(7).min(7);
    let mut res = new_result(
        "cor-3.4",
        format!("connected labelled graphs, order 1..={cap}"),
    );
    let acc = scan_connected(1, cap, |g| {
        let chi = chromatic_number(g).expect(SOLVER_OK);
        let ci = chi_imax(g).expect(SOLVER_OK);
        let violation = (ci < chi).then(|| {
            format!("order={} chi={chi} chi_imax={ci}", g.order())
        });
        GraphOutcome {
            violation,
            error: None,
            tallies: vec![],
        }
    });
    acc.finish(&mut res, "");
    res
}

fn check_thm_3_5(opts: &RunOptions) -> CheckResult {
    let cap = opts.max_order.unwrap_or(6).min(7);
    let mut res = new_result(
        "thm-3.5",
        format!("connected labelled graphs, order 2..={cap}, restricted to alpha = chi"),
    );
    let acc = scan_connected(2, cap, |g| {
        let chi = chromatic_number(g).expect(SOLVER_OK);
        if independence_number(g) != chi {
            return GraphOutcome::pass(vec![]);
        }
        let ci = chi_imax(g).expect(SOLVER_OK);
        let violation = (ci != chi + 1).then(|| {
            ci_detail(
                &format!("order={} alpha=chi={chi}", g.order()),
                g,
                chi,
                ci,
                &format!("chi+1 = {}", chi + 1),
            )
        });
        GraphOutcome {
            violation,
            error: None,
            tallies: vec![("hypothesis_graphs", 1)],
        }
    });
    acc.finish(&mut res, "");
    res
}

#[derive(Debug, Clone)]
pub struct ConjectureOptions {
    /// Orders 1..=7 are searched exhaustively; 8 and 9 are sampled.
    pub max_order: u32,
    pub connected_only: bool,
    /// Restrict the exhaustive part to one labelling per isomorphism class.
    pub dedup: bool,
    /// Required whenever `max_order` exceeds 7.
    pub seed: Option<u64>,
    pub samples_per_density: u64,
}

impl Default for ConjectureOptions {
    fn default() -> Self {
        ConjectureOptions {
            max_order: 6,
            connected_only: true,
            dedup: false,
            seed: None,
            samples_per_density: 2_000,
        }
    }
}

fn conjecture_outcome(g: &Graph) -> GraphOutcome {
    if !is_weakly_perfect(g).expect(SOLVER_OK) || !every_vertex_in_maximum_clique(g).covered {
        return GraphOutcome::pass(vec![]);
    }
    let tallies = vec![("hypothesis_graphs", 1)];
    let holes = is_perfect_hole_based(g);
    if g.order() <= BRUTEFORCE_MAX_ORDER {
        let sweep = is_perfect_bruteforce(g).expect(SOLVER_OK);
        if sweep.perfect != holes.perfect {
            return GraphOutcome {
                violation: None,
                error: Some(format!(
                    "perfection oracles disagree on {}: subgraph-sweep={} hole-search={}",
                    graph6::encode(g),
                    sweep.perfect,
                    holes.perfect
                )),
                tallies,
            };
        }
    }
    let violation = (!holes.perfect).then(|| {
        let w = holes.witness.expect("imperfect verdict carries a witness");
        let side = match w.side {
            HoleSide::Graph => "the graph",
            HoleSide::Complement => "the complement",
        };
        format!(
            "weakly perfect with every vertex in a maximum clique, yet imperfect: odd hole {:?} in {side}",
            w.vertices
        )
    });
    GraphOutcome {
        violation,
        error: None,
        tallies,
    }
}

/// Searches for a counterexample to the conjecture: exhaustively through
/// small orders, by seeded sampling at orders 8 and 9. Both perfection
/// oracles run on every hypothesis graph and must agree.
pub fn conjecture_search(opts: &ConjectureOptions) -> Result<CheckResult, ClaimError> {
    let max_order = opts.max_order.min(9).max(1);
    let exhaustive_cap = max_order.min(7);
    let sampled = max_order > 7;
    if sampled && opts.seed.is_none() {
        return Err(ClaimError::SeedRequired { order: max_order });
    }
    let mut scope = format!(
        "{} graphs, exhaustive order 1..={exhaustive_cap}{}",
        if opts.connected_only { "connected" } else { "all" },
        if opts.dedup {
            ", one labelling per isomorphism class"
        } else {
            ""
        },
    );
    let mut res = new_result("conj-2.4", String::new());
    let acc = scan_labelled(1, exhaustive_cap, opts.connected_only, opts.dedup, conjecture_outcome);
    acc.finish(&mut res, "");
    if sampled {
        let seed = opts.seed.expect("checked above");
        let samples = opts.samples_per_density.max(1);
        scope.push_str(&format!(
            "; sampled order 8..={max_order}, densities 0.2/0.35/0.5/0.65/0.8, {samples} draws per density, seed {seed}"
        ));
        let mut acc = ScanAcc::default();
        for order in 8..=max_order {
            for (di, &p) in RANDOM_DENSITIES.iter().enumerate() {
                let stream_seed = seed
                    .wrapping_add(1_000_003u64.wrapping_mul(order as u64))
                    .wrapping_add(di as u64);
                for g in RandomGraphs::new(order, p, stream_seed).take(samples as usize) {
                    if opts.connected_only && !g.is_connected() {
                        continue;
                    }
                    let out = conjecture_outcome(&g);
                    acc.absorb(&g, out);
                }
            }
        }
        acc.finish(&mut res, "sampled_");
    }
    res.scope = scope;
    if res.verdict == Verdict::VerifiedOnScope {
        res.verdict = Verdict::ExhaustedNoCounterexample;
    }
    Ok(res)
}

fn check_conjecture(opts: &RunOptions) -> Result<CheckResult, ClaimError> {
    conjecture_search(&ConjectureOptions {
        max_order: opts.max_order.unwrap_or(6).min(9),
        connected_only: true,
        dedup: false,
        seed: opts.seed,
        samples_per_density: opts.samples_per_density.unwrap_or(2_000),
    })
}

/// Runs one claim check. The group id `prop-3.1` expands to its eight parts.
pub fn run_check(claim_id: &str, opts: &RunOptions) -> Result<Vec<CheckResult>, ClaimError> {
    let results = match claim_id {
        "sec1-null" => vec![check_sec1_null(opts)],
        "sec1-complete" => vec![check_sec1_complete(opts)],
        "sec1-bipartite" => vec![check_sec1_bipartite(opts)],
        "lemma-1.1" => vec![check_lemma_1_1(opts)],
        "lemma-2.1" => vec![check_lemma_2_1(opts)],
        "cor-2.2" => vec![check_cor_2_2(opts)],
        "prop-2.1" => vec![check_prop_2_1(opts)],
        "thm-2.2" => vec![check_thm_2_2(opts)],
        "thm-2.3" => vec![check_thm_2_3(opts)],
        "thm-2.3-alpha" => vec![check_thm_2_3_alpha(opts)],
        "conj-2.4" => vec![check_conjecture(opts)?],
        "thm-2.5" => vec![check_thm_2_5(opts)],
        "obs-2.6" => vec![check_obs_2_6(opts)],
        "sec3-alpha" => vec![check_sec3_alpha(opts)],
        "example-3.1" => vec![check_example_3_1(opts)],
        "prop-3.1a" => vec![check_prop_3_1a(opts)],
        "prop-3.1b" => vec![check_prop_3_1b(opts)],
        "prop-3.1c" => vec![check_prop_3_1c(opts)],
        "prop-3.1d" => vec![check_prop_3_1d(opts)],
        "prop-3.1e" => vec![check_prop_3_1e(opts)],
        "prop-3.1f" => vec![check_prop_3_1f(opts)],
        "prop-3.1g" => vec![check_prop_3_1g(opts)],
        "prop-3.1h" => vec![check_prop_3_1h(opts)],
        "prop-3.1" => vec![
            check_prop_3_1a(opts),
            check_prop_3_1b(opts),
            check_prop_3_1c(opts),
            check_prop_3_1d(opts),
            check_prop_3_1e(opts),
            check_prop_3_1f(opts),
            check_prop_3_1g(opts),
            check_prop_3_1h(opts),
        ],
        "cor-3.2" => vec![check_cor_3_2(opts)],
        "thm-3.3" => vec![check_thm_3_3(opts)],
        "cor-3.4" => vec![check_cor_3_4(opts)],
        "thm-3.5" => vec![check_thm_3_5(opts)],
        other => return Err(ClaimError::UnknownClaim(other.to_string())),
    };
    Ok(results)
}

/// Runs every registered claim in report order.
pub fn run_all(opts: &RunOptions) -> Result<Vec<CheckResult>, ClaimError> {
    let mut out = Vec::new();
    for info in REGISTRY {
        out.extend(run_check(info.id, opts)?);
    }
    Ok(out)
}

/// Process exit code for a batch of results: 1 for a harness bug (oracle
/// disagreement, or a proven claim refuted), else 2 if any suspect claim was
/// refuted, else 0.
pub fn exit_code(results: &[CheckResult]) -> i32 {
    let harness_bug = results.iter().any(|r| {
        !r.harness_errors.is_empty()
            || (r.classification == Classification::Proven && r.verdict == Verdict::Refuted)
    });
    if harness_bug {
        return 1;
    }
    if results.iter().any(|r| r.verdict == Verdict::Refuted) {
        2
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_complete() {
        let ids = claim_ids();
        assert_eq!(ids.len(), 27);
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert!(ids.contains(&"conj-2.4"));
        assert_eq!(
            claim_info("thm-2.2").classification,
            Classification::Proven
        );
        assert_eq!(
            claim_info("thm-3.3").classification,
            Classification::Suspect
        );
        assert_eq!(
            claim_info("cor-2.2").classification,
            Classification::NotCheckable
        );
    }

    #[test]
    fn unknown_claim_id_is_rejected() {
        let err = run_check("thm-9.9", &RunOptions::default()).unwrap_err();
        assert_eq!(err, ClaimError::UnknownClaim("thm-9.9".to_string()));
    }

    #[test]
    fn group_id_expands_to_eight_parts() {
        let opts = RunOptions {
            max_order: Some(3),
            ..RunOptions::default()
        };
        let results = run_check("prop-3.1", &opts).unwrap();
        let ids: Vec<&str> = results.iter().map(|r| r.claim_id.as_str()).collect();
        assert_eq!(
            ids,
            [
                "prop-3.1a",
                "prop-3.1b",
                "prop-3.1c",
                "prop-3.1d",
                "prop-3.1e",
                "prop-3.1f",
                "prop-3.1g",
                "prop-3.1h"
            ]
        );
    }

    #[test]
    fn uncheckable_claim_is_skipped() {
        let res = run_check("cor-2.2", &RunOptions::default()).unwrap();
        assert_eq!(res.len(), 1);
        assert_eq!(res[0].verdict, Verdict::Skipped);
        assert!(res[0].counterexamples.is_empty());
    }

    #[test]
    fn null_graph_claim_verifies() {
        let res = check_sec1_null(&RunOptions::default());
        assert_eq!(res.verdict, Verdict::VerifiedOnScope);
        assert_eq!(res.stats["graphs_checked"], 8);
        assert_eq!(res.stats["partitions_examined"], 8);
    }

    #[test]
    fn set_graph_alpha_side_claim_is_refuted_except_n3() {
        let res = check_thm_2_3_alpha(&RunOptions::default());
        assert_eq!(res.verdict, Verdict::Refuted);
        assert_eq!(res.counterexamples.len(), 3);
        // Witnesses sort by graph6 size, so K1 leads and n=3 is absent.
        assert_eq!(res.counterexamples[0].graph6, "@");
        assert!(res.counterexamples[0].detail.contains("n=1"));
        assert!(res
            .counterexamples
            .iter()
            .all(|cx| !cx.detail.contains("n=3")));
    }

    #[test]
    fn clique_count_claim_refuted_at_n4_with_twelve_cliques() {
        let res = check_prop_2_1(&RunOptions::default());
        assert_eq!(res.verdict, Verdict::Refuted);
        assert_eq!(res.counterexamples.len(), 1);
        assert!(res.counterexamples[0].detail.contains("n=4"));
        assert!(res.counterexamples[0].detail.contains("maximum_cliques=12"));
        // Independent route: count 8-vertex cliques of the order-15 graph by
        // scanning all C(15,8) vertex subsets.
        let g = set_graph(4).unwrap().graph;
        let mut count = 0u64;
        for mask in 0u64..(1 << 15) {
            if mask.count_ones() != 8 {
                continue;
            }
            let mut clique = true;
            'outer: for u in 0..15u32 {
                if mask & (1 << u) == 0 {
                    continue;
                }
                for v in (u + 1)..15u32 {
                    if mask & (1 << v) != 0 && !g.has_edge(u, v) {
                        clique = false;
                        break 'outer;
                    }
                }
            }
            if clique {
                count += 1;
            }
        }
        assert_eq!(count, 12);
    }

    #[test]
    fn alpha_equals_chi_claim_refuted_by_three_vertex_path() {
        let opts = RunOptions {
            max_order: Some(3),
            ..RunOptions::default()
        };
        let res = check_thm_3_5(&opts);
        assert_eq!(res.verdict, Verdict::Refuted);
        let cx = &res.counterexamples[0];
        // Re-check the stored witness from its graph6 text alone.
        let g = graph6::decode(&cx.graph6).unwrap();
        let chi = chromatic_number(&g).unwrap();
        assert_eq!(independence_number(&g), chi);
        assert_ne!(chi_imax(&g).unwrap(), chi + 1);
    }

    #[test]
    fn cycle_family_claim_verifies() {
        let res = check_prop_3_1d(&RunOptions::default());
        assert_eq!(res.verdict, Verdict::VerifiedOnScope);
        assert_eq!(res.stats["graphs_checked"], 10);
    }

    #[test]
    fn convention_claim_holds_through_order_four() {
        let opts = RunOptions {
            max_order: Some(4),
            ..RunOptions::default()
        };
        let res = check_thm_3_3(&opts);
        assert_eq!(res.verdict, Verdict::VerifiedOnScope);
        assert_eq!(res.stats["deterministic_violations"], 0);
    }

    #[test]
    fn exit_codes_rank_harness_bugs_over_findings() {
        let mut verified = new_result("thm-2.2", "test".into());
        verified.verdict = Verdict::VerifiedOnScope;
        let mut finding = new_result("thm-3.5", "test".into());
        finding.verdict = Verdict::Refuted;
        let mut broken = new_result("thm-2.2", "test".into());
        broken.verdict = Verdict::Refuted;
        assert_eq!(exit_code(&[verified.clone()]), 0);
        assert_eq!(exit_code(&[verified.clone(), finding.clone()]), 2);
        assert_eq!(exit_code(&[verified.clone(), finding, broken]), 1);
        let mut disagree = new_result("conj-2.4", "test".into());
        disagree.harness_errors.push("oracles disagree".into());
        assert_eq!(exit_code(&[verified, disagree]), 1);
    }

    #[test]
    fn conjecture_scope_past_seven_requires_seed() {
        let opts = ConjectureOptions {
            max_order: 8,
            ..ConjectureOptions::default()
        };
        assert_eq!(
            conjecture_search(&opts).unwrap_err(),
            ClaimError::SeedRequired { order: 8 }
        );
    }

    #[test]
    fn conjecture_exhausts_small_orders() {
        let opts = ConjectureOptions {
            max_order: 5,
            ..ConjectureOptions::default()
        };
        let res = conjecture_search(&opts).unwrap();
        assert_eq!(res.verdict, Verdict::ExhaustedNoCounterexample);
        assert!(res.harness_errors.is_empty());
        assert!(res.stats["hypothesis_graphs"] > 0);
    }

    #[test]
    fn full_run_is_deterministic() {
        let opts = RunOptions {
            max_order: Some(3),
            seed: Some(7),
            partition_budget: Some(200),
            samples_per_density: Some(10),
        };
        let a = run_all(&opts).unwrap();
        let b = run_all(&opts).unwrap();
        let ja = serde_json::to_string(&a).unwrap();
        let jb = serde_json::to_string(&b).unwrap();
        assert_eq!(ja, jb);
        assert_eq!(a.len(), 27);
    }
}
