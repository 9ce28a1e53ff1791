//! Domination basics: γ, the γ-sets, and private neighbourhoods.
//!
//! Run with: cargo run --release --example gamma_basics

use gammagraph::domination::{enumerate_gamma_sets, private_neighbors};
use gammagraph::families;

fn main() {
    for name in ["p4", "c4", "c5", "k1,3", "k2,3"] {
        let g = families::parse_named(name).unwrap();
        let report = enumerate_gamma_sets(&g);
        println!(
            "{name:5} n={} gamma={} gamma-sets={}",
            g.n(),
            report.gamma,
            report.gamma_sets.len()
        );
        for d in &report.gamma_sets {
            let pns: Vec<String> = d
                .iter()
                .map(|x| {
                    let pn = private_neighbors(&g, *d, x).unwrap();
                    format!("pn({x})={}", pn.pn)
                })
                .collect();
            println!("      {d}  {}", pns.join(" "));
        }
    }
}
