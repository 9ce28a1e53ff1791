//! Builds the slide γ-graph of the 4-cycle, checks it against K2,4, and
//! prints the DOT rendering.
//!
//! Run with: cargo run --release --example gamma_graph_of_c4

use gammagraph::canon::are_isomorphic;
use gammagraph::families;
use gammagraph::gamma::{build_gamma_graph, Model};

fn main() {
    let c4 = families::cycle(4).unwrap();
    let gg = build_gamma_graph(&c4, Model::Slide);
    println!(
        "slide gamma-graph of C4: {} vertices, {} edges",
        gg.order(),
        gg.edges().len()
    );

    let k24 = families::complete_bipartite(2, 4).unwrap();
    let iso = are_isomorphic(&gg.as_graph().unwrap(), &k24).unwrap();
    println!("isomorphic to K2,4: {iso}");

    println!("\n{}", gg.to_dot());
}
