//! Exhaustive enumeration of small graphs and free trees, one
//! representative per isomorphism class, with the class counts.
//!
//! Run with: cargo run --release --example enumerate_classes

use gammagraph::gen::{generate_graphs, generate_graphs_in, generate_trees, HereditaryClass};
use gammagraph::graph6::write_graph6;

fn main() {
    println!("order  graphs  bipartite  triangle-free  trees");
    for n in 1..=8 {
        let all = generate_graphs(n, |_| true).unwrap().len();
        let bip = generate_graphs_in(n, HereditaryClass::Bipartite).unwrap().len();
        let tf = generate_graphs_in(n, HereditaryClass::TriangleFree).unwrap().len();
        let trees = generate_trees(n).unwrap().len();
        println!("{n:5}  {all:6}  {bip:9}  {tf:13}  {trees:5}");
    }

    println!("\nthe 11 classes of order 4, in certificate order:");
    for g in generate_graphs(4, |_| true).unwrap() {
        println!("  {}", write_graph6(&g).unwrap());
    }
}
