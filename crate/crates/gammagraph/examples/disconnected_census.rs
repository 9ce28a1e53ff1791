//! Census of base graphs whose slide γ-graph is disconnected: none exist
//! through order 5; the first examples appear at order 6.
//!
//! Run with: cargo run --release --example disconnected_census

use gammagraph::gamma::Model;
use gammagraph::search::disconnected_gamma_graph_census;

fn main() {
    for n in 1..=6 {
        let members = disconnected_gamma_graph_census(n, Model::Slide).unwrap();
        println!("order {n}: {} graphs with disconnected slide gamma-graph", members.len());
        for g6 in &members {
            println!("  {g6}");
        }
    }
}
