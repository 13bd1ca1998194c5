//! Frozen expected values for the named families and the corpus streams.
//! Each number here was computed at least twice: once by the optimized
//! solvers and once by hand or by a reference oracle.

use rainbow_graphs::colourings::{chi_imax, convention_colouring, imax_number, PeelMode};
use rainbow_graphs::corpus::{is_canonical_representative, labelled_graphs};
use rainbow_graphs::generators::{cycle, empty_sun, path, set_graph, sunlet, thorn_complete, ThornSpec};
use rainbow_graphs::graph6;
use rainbow_graphs::invariants::{
    chromatic_number, clique_number, count_maximum_cliques, count_maximum_independent_sets,
    independence_number,
};
use rainbow_graphs::perfection::perfection_report;
use rainbow_graphs::rainbow::rainbow_bounds;

#[test]
fn set_graph_orders_and_sizes() {
    // Order 2^n - 1; size C(order, 2) minus the disjoint nonempty pairs
    // (3^n - 2^(n+1) + 1) / 2, by inclusion-exclusion.
    let expected = [(1u32, 0u32), (3, 2), (7, 15), (15, 80), (31, 375)];
    for (n, (order, size)) in (1u32..=5).zip(expected) {
        let g = set_graph(n).unwrap().graph;
        assert_eq!(g.order(), order, "order at n={n}");
        assert_eq!(g.size(), size, "size at n={n}");
    }
}

#[test]
fn set_graph_invariant_table() {
    // (omega, alpha, chi, max cliques, max independent sets) for n = 1..=4.
    let expected = [
        (1, 1, 1, 1, 1),
        (2, 2, 2, 2, 1),
        (4, 3, 4, 4, 1),
        (8, 4, 8, 12, 1),
    ];
    for (n, (omega, alpha, chi, cliques, mis)) in (1u32..=4).zip(expected) {
        let g = set_graph(n).unwrap().graph;
        assert_eq!(clique_number(&g), omega, "omega at n={n}");
        assert_eq!(independence_number(&g), alpha, "alpha at n={n}");
        assert_eq!(chromatic_number(&g).unwrap(), chi, "chi at n={n}");
        assert_eq!(count_maximum_cliques(&g), cliques, "clique count at n={n}");
        assert_eq!(
            count_maximum_independent_sets(&g),
            mis,
            "independent-set count at n={n}"
        );
    }
}

#[test]
fn set_graph_three_full_profile() {
    let g = set_graph(3).unwrap().graph;
    assert_eq!(g.min_degree(), 3);
    assert_eq!(g.max_degree(), 6);
    let b = rainbow_bounds(&g, None).unwrap();
    assert!(b.exact);
    assert_eq!((b.min, b.max), (7, 7));
    // Exactly one way to partition into 4 independent classes.
    assert_eq!(b.partitions_examined, 1);
    assert_eq!(chi_imax(&g).unwrap(), 5);
    assert_eq!(imax_number(&g).unwrap(), 1);
    let report = perfection_report(&g).unwrap();
    assert!(report.weakly_perfect);
    assert_eq!(report.perfect_bruteforce, Some(true));
    assert!(report.perfect_hole_based);
    assert!(report.every_vertex_in_max_clique);
}

#[test]
fn set_graph_four_rainbow_sample_is_constant() {
    let g = set_graph(4).unwrap().graph;
    let b = rainbow_bounds(&g, Some(10_000)).unwrap();
    assert_eq!((b.min, b.max), (15, 15));
    assert!(b.partitions_examined >= 10_000 || b.exact);
}

#[test]
fn path_and_cycle_peel_values() {
    // (n, chi, chi_imax) for paths.
    for (n, chi, ci) in [
        (1, 1, 1),
        (2, 2, 2),
        (3, 2, 2),
        (4, 2, 3),
        (5, 2, 2),
        (6, 2, 3),
        (7, 2, 2),
        (8, 2, 3),
        (9, 2, 2),
        (10, 2, 3),
        (11, 2, 2),
        (12, 2, 3),
    ] {
        let g = path(n).unwrap();
        assert_eq!(chromatic_number(&g).unwrap(), chi, "chi of P{n}");
        assert_eq!(chi_imax(&g).unwrap(), ci, "chi_imax of P{n}");
    }
    for n in 3..=12 {
        let g = cycle(n).unwrap();
        let chi = if n % 2 == 0 { 2 } else { 3 };
        assert_eq!(chromatic_number(&g).unwrap(), chi, "chi of C{n}");
        assert_eq!(chi_imax(&g).unwrap(), chi, "chi_imax of C{n}");
    }
}

#[test]
fn sunlet_and_empty_sun_peel_values() {
    for n in 3..=10u32 {
        let s = sunlet(n).unwrap();
        let chi = if n % 2 == 0 { 2 } else { 3 };
        assert_eq!(chromatic_number(&s).unwrap(), chi, "chi of sunlet {n}");
        assert_eq!(chi_imax(&s).unwrap(), chi + 1, "chi_imax of sunlet {n}");

        let e = empty_sun(n).unwrap();
        assert_eq!(chromatic_number(&e).unwrap(), 3, "chi of empty-sun {n}");
        let expected = if n % 2 == 0 { 3 } else { 4 };
        assert_eq!(chi_imax(&e).unwrap(), expected, "chi_imax of empty-sun {n}");
    }
}

#[test]
fn complete_graph_thorn_values() {
    for n in 3..=6u32 {
        let spec = ThornSpec::new((1..=n).collect()).unwrap();
        let g = thorn_complete(n, &spec).unwrap();
        assert_eq!(g.order(), n + n * (n + 1) / 2);
        assert_eq!(chromatic_number(&g).unwrap(), n);
        assert_eq!(chi_imax(&g).unwrap(), n + 1);
    }
}

#[test]
fn five_vertex_path_convention_colouring_is_minimum() {
    let g = path(5).unwrap();
    let out = convention_colouring(&g, PeelMode::Deterministic).unwrap();
    assert_eq!(out.colouring.num_colours(), 2);
    assert_eq!(chromatic_number(&g).unwrap(), 2);
}

#[test]
fn bg_decodes_to_three_vertex_path_profile() {
    let g = graph6::decode("Bg").unwrap();
    assert_eq!(g.order(), 3);
    assert_eq!(chromatic_number(&g).unwrap(), 2);
    let b = rainbow_bounds(&g, None).unwrap();
    assert_eq!((b.min, b.max), (3, 3));
}

#[test]
fn corpus_counts_match_classical_values() {
    assert_eq!(labelled_graphs(3).unwrap().count(), 8);
    let connected_4 = labelled_graphs(4)
        .unwrap()
        .filter(|g| g.is_connected())
        .count();
    assert_eq!(connected_4, 38);

    let canonical = |order: u32, connected: bool| {
        labelled_graphs(order)
            .unwrap()
            .filter(|g| (!connected || g.is_connected()) && is_canonical_representative(g).unwrap())
            .count()
    };
    assert_eq!(canonical(4, false), 11);
    assert_eq!(canonical(5, false), 34);
    assert_eq!(canonical(5, true), 21);
    assert_eq!(canonical(6, true), 112);
}
