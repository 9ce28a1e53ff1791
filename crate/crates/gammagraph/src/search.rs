//! Exhaustive realizability sweeps: scan all isomorphism classes in an
//! order range and report every base graph whose γ-graph is isomorphic to a
//! target.
//!
//! A sweep with target `K_{2,3}`, the slide model, and the bipartite filter
//! over orders `1..=9` is the desk-scale corroboration of the fact that no
//! small bipartite graph realizes `K_{2,3}`; the sweep is a finite check,
//! not a proof.

use crate::canon::{self, CanonicalForm};
use crate::domination::enumerate_gamma_sets;
use crate::families;
use crate::gamma::{build_gamma_graph, Model};
use crate::gen::{self, HereditaryClass};
use crate::graph::Graph;
use crate::graph6;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

/// Largest base-graph order a sweep may scan.
pub const MAX_SEARCH_ORDER: usize = gen::MAX_GEN_VERTICES;
/// Largest order for the disconnected γ-graph census.
pub const MAX_CENSUS_ORDER: usize = 8;
/// Candidates re-checked from scratch after each sweep.
const SPOT_CHECK_SAMPLES: usize = 50;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("order range {lo}..={hi} invalid; need 1 <= lo <= hi <= {max}")]
    InvalidRange { lo: usize, hi: usize, max: usize },
    #[error("target graph on {n} vertices exceeds the isomorphism cap")]
    TargetTooLarge { n: usize },
    #[error("sweep self-check failed on candidate {graph6}")]
    SelfCheckFailed { graph6: String },
}

/// Result of one realizability sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub target_cert: CanonicalForm,
    pub model: Model,
    pub n_lo: usize,
    pub n_hi: usize,
    pub bipartite_only: bool,
    /// Isomorphism classes scanned (after the bipartite filter, if set).
    pub examined: u64,
    /// Classes rejected because their γ-set count differs from the target
    /// order, before any edges were built.
    pub pruned_by_count: u64,
    /// graph6 of every base graph whose γ-graph matches, canonical order.
    pub witnesses: Vec<String>,
    /// Seed of the post-sweep sample re-check, derived from the inputs so
    /// that outcomes serialize identically across runs and worker counts.
    pub spot_check_seed: u64,
    pub spot_checked: u32,
}

impl SearchOutcome {
    /// Line-delimited record serialization with stable field order.
    pub fn to_records(&self) -> String {
        let mut s = format!(
            "search target={} model={} min_n={} max_n={} bipartite={} examined={} pruned_by_count={} witness_count={} spot_check_seed={} spot_checked={}\n",
            self.target_cert.graph6(),
            self.model,
            self.n_lo,
            self.n_hi,
            self.bipartite_only,
            self.examined,
            self.pruned_by_count,
            self.witnesses.len(),
            self.spot_check_seed,
            self.spot_checked,
        );
        for w in &self.witnesses {
            s.push_str("witness g6=");
            s.push_str(w);
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Reject candidates by γ-set count before building γ-graph edges.
    /// Disabled only by tests that certify the fast path changes nothing.
    pub count_fastpath: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            count_fastpath: true,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Decision {
    PrunedByCount,
    Rejected,
    Witness,
}

impl Decision {
    fn accepted(self) -> bool {
        self == Decision::Witness
    }
}

/// Scans every isomorphism class of orders `n_lo..=n_hi` (bipartite classes
/// only when the flag is set) and reports the ones whose γ-graph under
/// `model` is isomorphic to `target`. Deterministic across runs and worker
/// counts.
pub fn realizability_search(
    target: &Graph,
    n_lo: usize,
    n_hi: usize,
    bipartite_only: bool,
    model: Model,
) -> Result<SearchOutcome, SearchError> {
    realizability_search_with(
        target,
        n_lo,
        n_hi,
        bipartite_only,
        model,
        SearchOptions::default(),
    )
}

pub fn realizability_search_with(
    target: &Graph,
    n_lo: usize,
    n_hi: usize,
    bipartite_only: bool,
    model: Model,
    opts: SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    if n_lo == 0 || n_lo > n_hi || n_hi > MAX_SEARCH_ORDER {
        return Err(SearchError::InvalidRange {
            lo: n_lo,
            hi: n_hi,
            max: MAX_SEARCH_ORDER,
        });
    }
    let target_cert = target_certificate(target)?;
    let class = if bipartite_only {
        HereditaryClass::Bipartite
    } else {
        HereditaryClass::All
    };
    let levels = gen::class_levels(n_hi, class).expect("range validated");
    let mut sweep = Sweep::new(target, target_cert, model, n_lo, n_hi, bipartite_only, opts);
    for n in n_lo..=n_hi {
        let graphs = gen::decode_level(n, &levels[n - 1]);
        sweep.consume(&graphs);
    }
    sweep.finish()
}

/// Same sweep over an externally supplied candidate list (for
/// cross-validation against an independent generator). Candidates outside
/// the order range or failing the bipartite filter are skipped; the rest
/// are examined in list order.
pub fn realizability_search_over(
    target: &Graph,
    candidates: &[Graph],
    n_lo: usize,
    n_hi: usize,
    bipartite_only: bool,
    model: Model,
    opts: SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    if n_lo == 0 || n_lo > n_hi || n_hi > MAX_SEARCH_ORDER {
        return Err(SearchError::InvalidRange {
            lo: n_lo,
            hi: n_hi,
            max: MAX_SEARCH_ORDER,
        });
    }
    let target_cert = target_certificate(target)?;
    let kept: Vec<Graph> = candidates
        .iter()
        .filter(|g| {
            (n_lo..=n_hi).contains(&g.n()) && (!bipartite_only || g.is_bipartite())
        })
        .cloned()
        .collect();
    let mut sweep = Sweep::new(target, target_cert, model, n_lo, n_hi, bipartite_only, opts);
    sweep.consume(&kept);
    sweep.finish()
}

/// Convenience wrapper for the headline sweep: target `K_{2,3}`, slide
/// model, bipartite bases of orders `1..=max_n`. Empty witnesses means the
/// sweep corroborates the statement at this scale.
pub fn verify_main_theorem(max_n: usize) -> Result<SearchOutcome, SearchError> {
    let k23 = families::complete_bipartite(2, 3).expect("K2,3 within cap");
    realizability_search(&k23, 1, max_n, true, Model::Slide)
}

/// All isomorphism classes of order `n` whose γ-graph under `model` is
/// disconnected, as graph6 in canonical order.
pub fn disconnected_gamma_graph_census(
    n: usize,
    model: Model,
) -> Result<Vec<String>, SearchError> {
    if n == 0 || n > MAX_CENSUS_ORDER {
        return Err(SearchError::InvalidRange {
            lo: n,
            hi: n,
            max: MAX_CENSUS_ORDER,
        });
    }
    let graphs = gen::generate_graphs(n, |_| true).expect("range validated");
    let flags: Vec<bool> = graphs
        .par_iter()
        .map(|g| !build_gamma_graph(g, model).is_connected())
        .collect();
    Ok(graphs
        .iter()
        .zip(flags)
        .filter(|(_, disconnected)| *disconnected)
        .map(|(g, _)| graph6::write_graph6(g).expect("generated graphs are small"))
        .collect())
}

fn target_certificate(target: &Graph) -> Result<CanonicalForm, SearchError> {
    canon::canonical_form(target).map_err(|_| SearchError::TargetTooLarge { n: target.n() })
}

fn decide(g: &Graph, target: &Graph, target_cert: &CanonicalForm, model: Model, fastpath: bool) -> Decision {
    let report = enumerate_gamma_sets(g);
    if fastpath && report.gamma_sets.len() != target.n() {
        return Decision::PrunedByCount;
    }
    let gg = build_gamma_graph(g, model);
    if gg.order() != target.n() {
        return Decision::Rejected;
    }
    let as_graph = gg.as_graph().expect("gamma-graph order equals target order, within cap");
    let cert = canon::canonical_form(&as_graph).expect("target order within cap");
    if cert == *target_cert {
        Decision::Witness
    } else {
        Decision::Rejected
    }
}

struct Sweep {
    target: Graph,
    target_cert: CanonicalForm,
    model: Model,
    n_lo: usize,
    n_hi: usize,
    bipartite_only: bool,
    opts: SearchOptions,
    examined: u64,
    pruned_by_count: u64,
    witnesses: Vec<String>,
    rng: ChaCha8Rng,
    seed: u64,
    reservoir: Vec<(String, Decision)>,
}

impl Sweep {
    #[allow(clippy::too_many_arguments)]
    fn new(
        target: &Graph,
        target_cert: CanonicalForm,
        model: Model,
        n_lo: usize,
        n_hi: usize,
        bipartite_only: bool,
        opts: SearchOptions,
    ) -> Self {
        let seed = derive_seed(&target_cert, model, n_lo, n_hi, bipartite_only, opts.count_fastpath);
        Sweep {
            target: target.clone(),
            target_cert,
            model,
            n_lo,
            n_hi,
            bipartite_only,
            opts,
            examined: 0,
            pruned_by_count: 0,
            witnesses: Vec::new(),
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
            reservoir: Vec::with_capacity(SPOT_CHECK_SAMPLES),
        }
    }

    /// Decides a batch in parallel, then folds the results in emission
    /// order so the outcome is independent of the worker count.
    fn consume(&mut self, graphs: &[Graph]) {
        let decisions: Vec<Decision> = graphs
            .par_iter()
            .map(|g| {
                decide(
                    g,
                    &self.target,
                    &self.target_cert,
                    self.model,
                    self.opts.count_fastpath,
                )
            })
            .collect();
        for (g, decision) in graphs.iter().zip(decisions) {
            self.examined += 1;
            let g6 = graph6::write_graph6(g).expect("candidates are small");
            match decision {
                Decision::PrunedByCount => self.pruned_by_count += 1,
                Decision::Witness => self.witnesses.push(g6.clone()),
                Decision::Rejected => {}
            }
            // Reservoir sample for the post-sweep re-check.
            if self.reservoir.len() < SPOT_CHECK_SAMPLES {
                self.reservoir.push((g6, decision));
            } else {
                let j = self.rng.gen_range(0..self.examined);
                if (j as usize) < SPOT_CHECK_SAMPLES {
                    self.reservoir[j as usize] = (g6, decision);
                }
            }
        }
    }

    fn finish(mut self) -> Result<SearchOutcome, SearchError> {
        // Re-evaluate the sampled candidates from scratch, fast path off;
        // the recorded accept/reject decision must reproduce.
        let spot_checked = self.reservoir.len() as u32;
        for (g6, decision) in &self.reservoir {
            let g = graph6::parse_graph6(g6.as_bytes()).expect("witness strings round-trip");
            let fresh = decide(&g, &self.target, &self.target_cert, self.model, false);
            if fresh.accepted() != decision.accepted() {
                return Err(SearchError::SelfCheckFailed { graph6: g6.clone() });
            }
        }
        self.witnesses.sort_unstable();
        Ok(SearchOutcome {
            target_cert: self.target_cert,
            model: self.model,
            n_lo: self.n_lo,
            n_hi: self.n_hi,
            bipartite_only: self.bipartite_only,
            examined: self.examined,
            pruned_by_count: self.pruned_by_count,
            witnesses: self.witnesses,
            spot_check_seed: self.seed,
            spot_checked,
        })
    }
}

/// FNV-1a over the sweep parameters; fixed so reruns agree byte for byte.
fn derive_seed(
    target_cert: &CanonicalForm,
    model: Model,
    n_lo: usize,
    n_hi: usize,
    bipartite_only: bool,
    fastpath: bool,
) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let eat = |h: &mut u64, b: u8| {
        *h ^= b as u64;
        *h = h.wrapping_mul(0x0000_0100_0000_01b3);
    };
    for &b in target_cert.graph6().as_bytes() {
        eat(&mut h, b);
    }
    eat(
        &mut h,
        match model {
            Model::Slide => 1,
            Model::Jump => 2,
        },
    );
    eat(&mut h, n_lo as u8);
    eat(&mut h, n_hi as u8);
    eat(&mut h, bipartite_only as u8);
    eat(&mut h, fastpath as u8);
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::Graph;

    #[test]
    fn k1_realizes_itself() {
        let k1 = Graph::empty(1).unwrap();
        let outcome = realizability_search(&k1, 1, 1, false, Model::Slide).unwrap();
        assert_eq!(outcome.examined, 1);
        assert_eq!(outcome.witnesses, vec!["@".to_string()]);
    }

    #[test]
    fn c4_is_the_only_order_4_bipartite_base_for_k24() {
        let k24 = families::complete_bipartite(2, 4).unwrap();
        let outcome = realizability_search(&k24, 4, 4, true, Model::Slide).unwrap();
        assert_eq!(outcome.witnesses.len(), 1);
        let witness = graph6::parse_graph6(outcome.witnesses[0].as_bytes()).unwrap();
        assert!(are_isomorphic(&witness, &families::cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn main_theorem_holds_up_to_order_six() {
        let outcome = verify_main_theorem(6).unwrap();
        assert!(outcome.witnesses.is_empty());
        // Bipartite classes of orders 1..=6: 1 + 2 + 3 + 7 + 13 + 35.
        assert_eq!(outcome.examined, 61);
    }

    #[test]
    fn fastpath_does_not_change_witnesses() {
        let k24 = families::complete_bipartite(2, 4).unwrap();
        let with = realizability_search_with(
            &k24,
            1,
            5,
            false,
            Model::Slide,
            SearchOptions { count_fastpath: true },
        )
        .unwrap();
        let without = realizability_search_with(
            &k24,
            1,
            5,
            false,
            Model::Slide,
            SearchOptions {
                count_fastpath: false,
            },
        )
        .unwrap();
        assert_eq!(with.witnesses, without.witnesses);
        assert_eq!(with.examined, without.examined);
        assert_eq!(without.pruned_by_count, 0);
        assert!(with.pruned_by_count > 0);
    }

    #[test]
    fn range_validation() {
        let k1 = Graph::empty(1).unwrap();
        assert!(matches!(
            realizability_search(&k1, 0, 3, false, Model::Slide),
            Err(SearchError::InvalidRange { .. })
        ));
        assert!(matches!(
            realizability_search(&k1, 5, 3, false, Model::Slide),
            Err(SearchError::InvalidRange { .. })
        ));
        assert!(matches!(
            realizability_search(&k1, 1, 11, false, Model::Slide),
            Err(SearchError::InvalidRange { .. })
        ));
        let big = Graph::empty(17).unwrap();
        assert!(matches!(
            realizability_search(&big, 1, 3, false, Model::Slide),
            Err(SearchError::TargetTooLarge { n: 17 })
        ));
    }

    #[test]
    fn census_is_empty_below_order_six() {
        for n in 1..=5 {
            for model in [Model::Slide, Model::Jump] {
                assert_eq!(
                    disconnected_gamma_graph_census(n, model).unwrap(),
                    Vec::<String>::new(),
                    "order {n} model {model}"
                );
            }
        }
    }

    #[test]
    fn census_at_order_six_contains_c6() {
        let members = disconnected_gamma_graph_census(6, Model::Slide).unwrap();
        assert!(!members.is_empty());
        let c6 = families::cycle(6).unwrap();
        let found = members.iter().any(|g6| {
            are_isomorphic(&graph6::parse_graph6(g6.as_bytes()).unwrap(), &c6).unwrap()
        });
        assert!(found, "C6 has three pairwise non-adjacent gamma-sets");
    }

    #[test]
    fn census_at_order_six_regression_snapshot() {
        // Frozen from the first census run; C6 is the EBj? entry.
        assert_eq!(
            disconnected_gamma_graph_census(6, Model::Slide).unwrap(),
            ["EBYW", "EBj?", "EFz_", "EImo", "EKNG"]
        );
    }

    #[test]
    fn census_range_is_enforced() {
        assert!(disconnected_gamma_graph_census(0, Model::Slide).is_err());
        assert!(disconnected_gamma_graph_census(9, Model::Slide).is_err());
    }

    #[test]
    fn corpus_sweep_matches_internal_generation() {
        let k24 = families::complete_bipartite(2, 4).unwrap();
        let corpus: Vec<Graph> = (1..=5)
            .flat_map(|n| gen::generate_graphs(n, |_| true).unwrap())
            .collect();
        let external = realizability_search_over(
            &k24,
            &corpus,
            1,
            5,
            true,
            Model::Slide,
            SearchOptions::default(),
        )
        .unwrap();
        let internal = realizability_search(&k24, 1, 5, true, Model::Slide).unwrap();
        assert_eq!(external.witnesses, internal.witnesses);
        assert_eq!(external.examined, internal.examined);
    }

    #[test]
    fn records_are_stable() {
        let k1 = Graph::empty(1).unwrap();
        let outcome = realizability_search(&k1, 1, 2, false, Model::Slide).unwrap();
        let records = outcome.to_records();
        assert!(records.starts_with("search target=@ model=slide min_n=1 max_n=2"));
        assert!(records.contains("witness g6=@"));
        let again = realizability_search(&k1, 1, 2, false, Model::Slide).unwrap();
        assert_eq!(records, again.to_records());
    }
}
