//! Runs every verification suite at its default order and prints the
//! summary records.
//!
//! Run with: cargo run --release --example observation_suites

use gammagraph::verify::{run_suite, Suite};

fn main() {
    for suite in Suite::ALL {
        let report = run_suite(suite, suite.default_max_n()).unwrap();
        println!("{}", report.summary_record());
        for v in &report.violations {
            println!("  violation {v}");
        }
        eprintln!(
            "  ({} elements in {:.2}s)",
            report.corpus_size,
            report.elapsed.as_secs_f64()
        );
    }
}
