//! Checks that only make sense across module boundaries: exact graph counts
//! feeding the bound formulas, and greedy constructions against the graph's
//! ground truth.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use permcode::bounds::{
    aks_corollary_lower, e_upper_bound, triangle_free_lower, triangle_lemma_lower, AlphaBound,
    CodeParameters,
};
use permcode::codes::{greedy_construct, verify, ConstructionOrder, PermutationCode};
use permcode::combinatorics::factorial;
use permcode::exactgraph::{build_graph, exact_alpha, neighborhood_stats};

fn params(n: u32, d: u32) -> CodeParameters {
    CodeParameters::new(n, d).unwrap()
}

#[test]
fn edge_bound_dominates_exact_neighborhood_counts() {
    // The whole chain rests on the quadruple sum being a true upper bound on
    // the neighborhood edge count; check it against the exact graphs.
    for n in 2..=6u32 {
        for d in 2..=n {
            let p = params(n, d);
            let graph = build_graph(&p).unwrap();
            let stats = neighborhood_stats(&graph);
            let exact = BigUint::from(stats.neighborhood_edges);
            assert!(
                exact <= e_upper_bound(&p),
                "E* = {} exceeds the bound at {p}",
                stats.neighborhood_edges
            );
        }
    }
}

#[test]
fn triangle_lemma_with_exact_counts_from_s6() {
    // d = 3: neighbors of the identity are the 15 transpositions, pairwise
    // at distance >= 3, so this graph has no triangles at all and the
    // few-triangles bound must fall back to the triangle-free one.
    let p = params(6, 3);
    let graph = build_graph(&p).unwrap();
    let stats = neighborhood_stats(&graph);
    assert_eq!(stats.neighborhood_edges, 0);
    assert_eq!(stats.triangles_total, 0);
    let vertices = factorial(6);
    let bound = triangle_lemma_lower(
        &vertices,
        &BigUint::from(stats.degree),
        &BigUint::from(stats.triangles_total),
    );
    // floor(720 * log2(15) / (8 * 15)) = 23
    assert_eq!(bound, AlphaBound::Value(BigUint::from(23u32)));

    // d = 4 has genuine triangles; cross-check the ln-based formula.
    let p = params(6, 4);
    let graph = build_graph(&p).unwrap();
    let stats = neighborhood_stats(&graph);
    assert!(stats.triangles_total > 0);
    assert_eq!(
        3 * stats.triangles_total as u128,
        720 * stats.neighborhood_edges as u128
    );
    let degree = BigUint::from(stats.degree);
    let triangles = BigUint::from(stats.triangles_total);
    let bound = triangle_lemma_lower(&vertices, &degree, &triangles);
    let parenthetical = (stats.degree as f64).ln()
        - 0.5 * ((stats.triangles_total as f64) / 720.0).ln();
    if parenthetical > 0.0 {
        let expected = (720.0 * parenthetical / (10.0 * stats.degree as f64)).floor() as u64;
        assert_eq!(bound, AlphaBound::Value(BigUint::from(expected)));
    } else {
        assert!(bound.is_vacuous());
    }
}

#[test]
fn triangle_free_graph_routes_to_the_log2_bound() {
    // In the d = 3 graph on S_4 the identity's neighbors are the six
    // transpositions, which are pairwise at distance >= 3: no triangles.
    let p = params(4, 3);
    let graph = build_graph(&p).unwrap();
    let stats = neighborhood_stats(&graph);
    assert_eq!(stats.neighborhood_edges, 0);
    assert_eq!(stats.triangles_total, 0);

    let vertices = factorial(4);
    let degree = BigUint::from(stats.degree);
    let via_edges = aks_corollary_lower(&vertices, &degree, &BigUint::from(0u32));
    let via_triangles = triangle_lemma_lower(&vertices, &degree, &BigUint::from(0u32));
    let direct = triangle_free_lower(&vertices, &degree);
    assert_eq!(via_edges, direct);
    assert_eq!(via_triangles, direct);
    // floor(24 * log2(6) / (8 * 6))
    let expected = (24.0 * 6f64.log2() / 48.0).floor() as u64;
    assert_eq!(direct, AlphaBound::Value(BigUint::from(expected)));
}

#[test]
fn greedy_codes_live_between_gv_and_alpha() {
    for n in 2..=5u32 {
        for d in 2..=n {
            let p = params(n, d);
            let code = greedy_construct(&p, ConstructionOrder::Lexicographic, 0).unwrap();
            let graph = build_graph(&p).unwrap();
            let (alpha, witness) = exact_alpha(&graph, false).unwrap();
            assert!(code.words.len() <= alpha, "{p}");

            // The optimal witness itself must verify as a code.
            let witness_code = PermutationCode { n, d, words: witness };
            let report = verify(&witness_code).unwrap();
            assert!(report.ok, "{p}: exact-alpha witness failed verification");
        }
    }
}

#[test]
fn graph_degree_equals_bound_module_prediction() {
    for (n, d) in [(5u32, 3u32), (6, 4)] {
        let p = params(n, d);
        let graph = build_graph(&p).unwrap();
        let stats = neighborhood_stats(&graph);
        assert_eq!(
            stats.degree,
            permcode::bounds::true_max_degree(&p).to_u64().unwrap(),
            "{p}"
        );
    }
}
