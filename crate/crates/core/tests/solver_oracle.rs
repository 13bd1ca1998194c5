//! Exhaustive cross-checks of the optimized solvers against the slow
//! reference oracles on complete labelled-graph corpora.

use rainbow_graphs::corpus::labelled_graphs;
use rainbow_graphs::generators::set_graph;
use rainbow_graphs::invariants::{
    chromatic_number, clique_number, enumerate_maximum_independent_sets, independence_number,
};
use rainbow_graphs::oracles::{
    brute_chromatic_number, brute_clique_number, brute_independence_number,
    brute_maximum_independent_sets, set_graph_by_definition,
};
use rainbow_graphs::perfection::{is_perfect_bruteforce, is_perfect_hole_based};

#[test]
fn chromatic_number_matches_brute_oracle_on_all_graphs_up_to_order_five() {
    for order in 0..=5 {
        for g in labelled_graphs(order).unwrap() {
            assert_eq!(
                chromatic_number(&g).unwrap(),
                brute_chromatic_number(&g),
                "chi mismatch on {}",
                g.to_graph6()
            );
        }
    }
}

#[test]
fn clique_and_independence_match_brute_oracles_on_all_graphs_up_to_order_five() {
    for order in 0..=5 {
        for g in labelled_graphs(order).unwrap() {
            assert_eq!(clique_number(&g), brute_clique_number(&g));
            assert_eq!(independence_number(&g), brute_independence_number(&g));
        }
    }
}

#[test]
fn maximum_independent_sets_match_power_set_filter_on_all_graphs_up_to_order_six() {
    for order in 1..=6 {
        for g in labelled_graphs(order).unwrap() {
            let fast: Vec<u64> = enumerate_maximum_independent_sets(&g)
                .iter()
                .map(|s| s.mask())
                .collect();
            let slow: Vec<u64> = brute_maximum_independent_sets(&g)
                .iter()
                .map(|s| s.mask())
                .collect();
            assert_eq!(fast, slow, "MIS mismatch on {}", g.to_graph6());
        }
    }
}

#[test]
fn perfection_oracles_agree_on_all_graphs_up_to_order_five() {
    for order in 1..=5 {
        for g in labelled_graphs(order).unwrap() {
            let sweep = is_perfect_bruteforce(&g).unwrap();
            let holes = is_perfect_hole_based(&g);
            assert_eq!(
                sweep.perfect,
                holes.perfect,
                "perfection oracle disagreement on {}",
                g.to_graph6()
            );
        }
    }
}

#[test]
fn set_graph_generator_matches_subset_intersection_definition() {
    for n in 1..=5 {
        let fast = set_graph(n).unwrap().graph;
        let slow = set_graph_by_definition(n);
        assert_eq!(fast.order(), slow.order());
        assert_eq!(fast.edges(), slow.edges());
    }
}
