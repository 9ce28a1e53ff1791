//! Exhaustive structural invariants over the small-order corpora.


use gammagraph::domination::{enumerate_gamma_sets, private_neighbors};
use gammagraph::gamma::{build_gamma_graph, Model};
use gammagraph::gen::generate_graphs;
use gammagraph::graph::Diameter;

#[test]
fn slide_edges_are_a_subset_of_jump_edges_and_orders_agree() {
    for n in 1..=7 {
        for g in generate_graphs(n, |_| true).unwrap() {
            let slide = build_gamma_graph(&g, Model::Slide);
            let jump = build_gamma_graph(&g, Model::Jump);
            assert_eq!(slide.order(), jump.order());
            assert_eq!(slide.gamma_sets(), jump.gamma_sets());
            let jump_edges: std::collections::HashSet<_> =
                jump.edges().iter().copied().collect();
            for e in slide.edges() {
                assert!(jump_edges.contains(e), "slide edge {e:?} missing from jump");
            }
        }
    }
}

#[test]
fn every_gamma_set_member_has_a_private_neighbor() {
    for n in 1..=7 {
        for g in generate_graphs(n, |_| true).unwrap() {
            for d in enumerate_gamma_sets(&g).gamma_sets {
                for x in d.iter() {
                    let pn = private_neighbors(&g, d, x).unwrap();
                    assert!(
                        !pn.pn.is_empty(),
                        "empty private neighbourhood in a gamma-set"
                    );
                }
            }
        }
    }
}

#[test]
fn gamma_graph_vertices_match_the_domination_report() {
    for n in 1..=6 {
        for g in generate_graphs(n, |_| true).unwrap() {
            let report = enumerate_gamma_sets(&g);
            for model in [Model::Slide, Model::Jump] {
                let gg = build_gamma_graph(&g, model);
                assert_eq!(gg.gamma_sets(), report.gamma_sets.as_slice());
            }
        }
    }
}

/// The γ-graph's structural queries run on its own adjacency lists; the
/// converted Graph uses the bit-mask code. The two routes must agree.
#[test]
fn gamma_graph_queries_agree_with_converted_graph() {
    for n in 1..=6 {
        for g in generate_graphs(n, |_| true).unwrap() {
            for model in [Model::Slide, Model::Jump] {
                let gg = build_gamma_graph(&g, model);
                let converted = gg.as_graph().unwrap();
                assert_eq!(gg.is_connected(), converted.is_connected());
                assert_eq!(gg.max_degree(), converted.max_degree());
                assert_eq!(gg.diameter(), converted.diameter());
                assert_eq!(gg.is_bipartite(), converted.is_bipartite());
                assert_eq!(gg.has_triangle(), !converted.is_triangle_free());
            }
        }
    }
}

#[test]
fn adding_any_edge_never_increases_gamma() {
    use gammagraph::domination::domination_number;
    for n in 2..=6 {
        for g in generate_graphs(n, |_| true).unwrap() {
            let gamma = domination_number(&g);
            for u in 0..n {
                for v in (u + 1)..n {
                    if !g.has_edge(u, v) {
                        let mut bigger = g.clone();
                        bigger.add_edge(u, v);
                        assert!(
                            domination_number(&bigger) <= gamma,
                            "adding ({u},{v}) increased gamma"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn diameters_of_disconnected_gamma_graphs_are_infinite() {
    for g in generate_graphs(6, |_| true).unwrap() {
        let gg = build_gamma_graph(&g, Model::Slide);
        match gg.diameter() {
            Diameter::Infinite => assert!(!gg.is_connected()),
            Diameter::Finite(_) => assert!(gg.is_connected()),
        }
    }
}
