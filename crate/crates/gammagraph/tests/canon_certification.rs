//! Certifies the canonical-form subsystem against brute-force permutation
//! search on small orders: certificates agree exactly when an
//! edge-preserving bijection exists.

mod common;

use gammagraph::canon::{are_isomorphic, canonical_form};
use gammagraph::gen::generate_graphs;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn certificates_are_invariant_under_100_random_relabellings_per_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0DDC0FFE);
    for n in 1..=7 {
        for g in generate_graphs(n, |_| true).unwrap() {
            let cert = canonical_form(&g).unwrap();
            for _ in 0..100 {
                let a = g.relabel(&common::random_permutation(n, &mut rng));
                let b = g.relabel(&common::random_permutation(n, &mut rng));
                assert_eq!(canonical_form(&a).unwrap(), cert);
                assert_eq!(canonical_form(&b).unwrap(), cert);
                assert!(
                    common::brute_force_isomorphic(&a, &b),
                    "brute force must confirm relabelled copies isomorphic"
                );
            }
        }
    }
}

#[test]
fn certificate_equality_matches_brute_force_across_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xCA11AB1E);
    for n in 2..=7 {
        let classes = generate_graphs(n, |_| true).unwrap();
        let certs: Vec<_> = classes
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        // Distinct classes must get distinct certificates.
        let mut sorted = certs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), classes.len(), "certificate collision at order {n}");

        // Sampled pairs, relabelled to hide the class identity from the
        // brute-force oracle.
        for _ in 0..300 {
            let i = rng.gen_range(0..classes.len());
            let j = rng.gen_range(0..classes.len());
            let a = classes[i].relabel(&common::random_permutation(n, &mut rng));
            let b = classes[j].relabel(&common::random_permutation(n, &mut rng));
            assert_eq!(
                certs[i] == certs[j],
                common::brute_force_isomorphic(&a, &b),
                "certificate verdict diverged from brute force at order {n}"
            );
            assert_eq!(are_isomorphic(&a, &b).unwrap(), i == j);
        }
    }
}

#[test]
fn brute_force_oracle_sanity() {
    use gammagraph::families;
    let c4 = families::cycle(4).unwrap();
    let p4 = families::path(4).unwrap();
    assert!(common::brute_force_isomorphic(&c4, &c4.relabel(&[3, 1, 0, 2])));
    assert!(!common::brute_force_isomorphic(&c4, &p4));
    let c6 = families::cycle(6).unwrap();
    let k33 = families::complete_bipartite(3, 3).unwrap();
    assert!(!common::brute_force_isomorphic(&c6, &k33));
}
