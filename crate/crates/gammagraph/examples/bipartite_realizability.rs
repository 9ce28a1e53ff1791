//! The headline sweep: which bipartite base graphs have a slide γ-graph
//! isomorphic to K2,3? None up to order 9 - and, for contrast, K2,4 is
//! realized already at order 4 (by C4).
//!
//! Run with: cargo run --release --example bipartite_realizability

use gammagraph::families;
use gammagraph::gamma::Model;
use gammagraph::search::{realizability_search, verify_main_theorem};

fn main() {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);

    let outcome = verify_main_theorem(max_n).expect("orders within the sweep cap");
    print!("{}", outcome.to_records());
    if outcome.witnesses.is_empty() {
        println!(
            "=> no bipartite graph of order <= {max_n} has slide gamma-graph K2,3"
        );
    }

    println!();
    let k24 = families::complete_bipartite(2, 4).unwrap();
    let outcome = realizability_search(&k24, 1, 4, true, Model::Slide).unwrap();
    print!("{}", outcome.to_records());
    println!("=> K2,4 is realized at order 4 (the witness is C4)");
}
