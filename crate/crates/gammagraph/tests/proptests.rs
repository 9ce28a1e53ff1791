//! Randomized property tests.

mod common;

use gammagraph::canon::canonical_form;
use gammagraph::domination::{
    closed_neighborhood, domination_number, open_neighborhood,
};
use gammagraph::gamma::{jump_adjacent, slide_adjacent};
use gammagraph::graph::{Graph, VertexSet};
use gammagraph::graph6::{parse_graph6, write_graph6};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |flags| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if flags[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let encoded = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(encoded.as_bytes()).unwrap(), g.clone());
        prop_assert_eq!(common::reference_decode_graph6(&encoded), g);
    }

    #[test]
    fn certificates_ignore_labels(g in arb_graph(8), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let perm = common::random_permutation(g.n(), &mut rng);
        prop_assert_eq!(
            canonical_form(&g.relabel(&perm)).unwrap(),
            canonical_form(&g).unwrap()
        );
    }

    #[test]
    fn closed_neighborhood_contains_set_and_splits(g in arb_graph(10), bits in any::<u64>()) {
        for s in [
            VertexSet::EMPTY,
            g.vertices(),
            VertexSet::from_bits(bits & g.vertices().bits()),
        ] {
            let closed = closed_neighborhood(&g, s);
            prop_assert!(s.is_subset_of(closed));
            prop_assert_eq!(closed, s.union(open_neighborhood(&g, s)));
        }
    }

    #[test]
    fn gamma_never_rises_when_an_edge_is_added(g in arb_graph(8)) {
        prop_assume!(g.n() >= 2);
        let gamma = domination_number(&g);
        let mut non_edges = Vec::new();
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                if !g.has_edge(u, v) {
                    non_edges.push((u, v));
                }
            }
        }
        if let Some(&(u, v)) = non_edges.first() {
            let mut bigger = g.clone();
            bigger.add_edge(u, v);
            prop_assert!(domination_number(&bigger) <= gamma);
        }
    }

    #[test]
    fn bipartition_verdict_is_witnessed(g in arb_graph(10)) {
        match g.bipartition() {
            Ok(b) => {
                prop_assert_eq!(b.side_a.union(b.side_b), g.vertices());
                prop_assert!(b.side_a.intersection(b.side_b).is_empty());
                for (u, v) in g.edges() {
                    prop_assert!(b.side_a.contains(u) != b.side_a.contains(v));
                }
            }
            Err(walk) => {
                let w = &walk.0;
                prop_assert_eq!(w.first(), w.last());
                prop_assert_eq!((w.len() - 1) % 2, 1);
                for pair in w.windows(2) {
                    prop_assert!(g.has_edge(pair[0], pair[1]));
                }
            }
        }
    }

    #[test]
    fn adjacency_predicates_are_symmetric(g in arb_graph(8), a in any::<u64>(), b in any::<u64>()) {
        let mask = g.vertices().bits();
        let d1 = VertexSet::from_bits(a & mask);
        let d2 = VertexSet::from_bits(b & mask);
        prop_assert_eq!(jump_adjacent(&g, d1, d2), jump_adjacent(&g, d2, d1));
        prop_assert_eq!(slide_adjacent(&g, d1, d2), slide_adjacent(&g, d2, d1));
    }
}
