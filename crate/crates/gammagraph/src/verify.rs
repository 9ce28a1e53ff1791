//! Verification suites: replacement observations, tree bound checks, and
//! the exhaustive-subset domination oracle that certifies the search
//! implementation.

use crate::domination::{enumerate_gamma_sets, private_neighbors, DominationReport};
use crate::gamma::{build_gamma_graph, slide_adjacent, Model};
use crate::gen::{self, HereditaryClass};
use crate::graph::{Graph, VertexSet};
use crate::graph6::write_graph6;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("input is not a tree: order {n}, {edges} edges, connected: {connected}")]
    NotATree {
        n: usize,
        edges: usize,
        connected: bool,
    },
    #[error("trees of order below 2 have no leaf/support structure")]
    TreeTooSmall,
    #[error("observation sweep requires a bipartite graph")]
    NotBipartite,
    #[error("unknown suite name {0:?}")]
    UnknownSuite(String),
    #[error("max order {max_n} above the cap {cap} for suite {suite}")]
    AboveSuiteCap {
        suite: Suite,
        max_n: usize,
        cap: usize,
    },
}

/// Leaf and support structure of a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeStats {
    pub n: usize,
    pub leaves: VertexSet,
    pub supports: VertexSet,
    /// Supports adjacent to exactly one leaf (count `s'`).
    pub weak_supports: VertexSet,
    /// Supports adjacent to at least two leaves (count `s''`).
    pub strong_supports: VertexSet,
}

/// Per-tree bound evaluation. `measured` holds the observed quantities,
/// `limits` the bound values; a name lands in `violations` iff its hard
/// bound is exceeded. Advisory bounds report without failing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub tree: String,
    pub gamma: usize,
    pub stats: TreeStats,
    pub measured: BTreeMap<&'static str, u64>,
    pub limits: BTreeMap<&'static str, u64>,
    pub violations: Vec<&'static str>,
    pub advisory_violations: Vec<&'static str>,
}

/// Leaves = degree-one vertices; a support is adjacent to at least one
/// leaf, strong when adjacent to at least two, weak otherwise.
pub fn tree_stats(t: &Graph) -> Result<TreeStats, VerifyError> {
    let n = t.n();
    if n < 2 {
        return Err(VerifyError::TreeTooSmall);
    }
    let connected = t.is_connected();
    if !connected || t.edge_count() != n - 1 {
        return Err(VerifyError::NotATree {
            n,
            edges: t.edge_count(),
            connected,
        });
    }
    let leaves: VertexSet = (0..n).filter(|&v| t.degree(v) == 1).collect();
    let mut supports = VertexSet::EMPTY;
    let mut weak = VertexSet::EMPTY;
    let mut strong = VertexSet::EMPTY;
    for v in 0..n {
        match t.neighbors(v).intersection(leaves).len() {
            0 => {}
            1 => {
                supports = supports.with(v);
                weak = weak.with(v);
            }
            _ => {
                supports = supports.with(v);
                strong = strong.with(v);
            }
        }
    }
    Ok(TreeStats {
        n,
        leaves,
        supports,
        weak_supports: weak,
        strong_supports: strong,
    })
}

/// `m <= ((1 + sqrt(13)) / 2)^gamma`, decided in exact integer arithmetic:
/// with `(1 + sqrt(13))^g = a + b*sqrt(13)`, the inequality becomes
/// `m * 2^g - a <= b * sqrt(13)`, squared when the left side is positive.
fn growth_bound_holds(m: u64, gamma: u32) -> bool {
    let (mut a, mut b): (i128, i128) = (1, 0);
    for _ in 0..gamma {
        let (na, nb) = (a + 13 * b, a + b);
        a = na;
        b = nb;
    }
    let l = ((m as i128) << gamma) - a;
    if l <= 0 {
        return true;
    }
    l * l <= 13 * b * b
}

fn growth_bound_floor(gamma: u32) -> u64 {
    let (mut lo, mut hi) = (0u64, 4u64.pow(gamma).max(1));
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if growth_bound_holds(mid, gamma) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

const HARD_DEGREE_SLIDE: &str = "max_degree_slide";
const HARD_DEGREE_JUMP: &str = "max_degree_jump";
const HARD_DIAM_SLIDE_SUPPORT: &str = "diam_slide_support";
const HARD_DIAM_JUMP_GAMMA: &str = "diam_jump_gamma";
const HARD_ORDER_GROWTH: &str = "order_growth";
const HARD_DIAM_SLIDE_REFINED: &str = "diam_slide_refined";
const ADVISORY_DIAM_JUMP: &str = "diam_jump_weak_support";

/// Evaluates every γ-graph bound for a tree of order `2..=14`.
///
/// The support-sensitive diameter bounds hold for trees of order at least
/// 3 (the two-vertex path already exceeds the slide bound `2(2γ - s)`), so
/// they are evaluated only there. The jump diameter bound `γ - s'` is
/// recorded as advisory: the path on four vertices exceeds it.
pub fn check_tree_bounds(t: &Graph) -> Result<BoundReport, VerifyError> {
    let stats = tree_stats(t)?;
    let n = t.n();
    let gamma = enumerate_gamma_sets(t).gamma;
    let s = stats.supports.len();
    let s_weak = stats.weak_supports.len();
    let s_strong = stats.strong_supports.len();
    let slide = build_gamma_graph(t, Model::Slide);
    let jump = build_gamma_graph(t, Model::Jump);

    let mut measured: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut limits: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut advisory_violations = Vec::new();

    measured.insert(HARD_DEGREE_SLIDE, slide.max_degree() as u64);
    measured.insert(HARD_DEGREE_JUMP, jump.max_degree() as u64);
    limits.insert(HARD_DEGREE_SLIDE, (n - gamma) as u64);
    limits.insert(HARD_DEGREE_JUMP, (n - gamma) as u64);

    let slide_diam = slide.diameter().finite().map(|d| d as u64);
    let jump_diam = jump.diameter().finite().map(|d| d as u64);
    if let Some(d) = slide_diam {
        measured.insert(HARD_DIAM_SLIDE_SUPPORT, d);
        measured.insert(HARD_DIAM_SLIDE_REFINED, d);
    }
    if let Some(d) = jump_diam {
        measured.insert(HARD_DIAM_JUMP_GAMMA, d);
        measured.insert(ADVISORY_DIAM_JUMP, d);
    }
    limits.insert(HARD_DIAM_JUMP_GAMMA, 2 * gamma as u64);

    let order = slide.order() as u64;
    debug_assert_eq!(order, jump.order() as u64);
    measured.insert(HARD_ORDER_GROWTH, order);
    limits.insert(HARD_ORDER_GROWTH, growth_bound_floor(gamma as u32));

    if n >= 3 {
        debug_assert!(gamma >= s, "trees of order >= 3 have at most gamma supports");
        limits.insert(HARD_DIAM_SLIDE_SUPPORT, 2 * (2 * gamma - s) as u64);
        let refined = (2 * (gamma - s_strong) - s_weak).min(2 * (n - 1) / 3) as u64;
        limits.insert(HARD_DIAM_SLIDE_REFINED, refined);
        limits.insert(ADVISORY_DIAM_JUMP, (gamma - s_weak) as u64);
    }

    let hard_diam_checks = [
        (HARD_DIAM_SLIDE_SUPPORT, slide_diam),
        (HARD_DIAM_SLIDE_REFINED, slide_diam),
        (HARD_DIAM_JUMP_GAMMA, jump_diam),
    ];
    for (key, diam) in hard_diam_checks {
        let Some(&limit) = limits.get(key) else {
            continue;
        };
        match diam {
            Some(d) if d <= limit => {}
            _ => violations.push(key),
        }
    }
    for key in [HARD_DEGREE_SLIDE, HARD_DEGREE_JUMP] {
        if measured[key] > limits[key] {
            violations.push(key);
        }
    }
    // Verdict from the exact comparison; the stored limit is its floor.
    if !growth_bound_holds(order, gamma as u32) {
        violations.push(HARD_ORDER_GROWTH);
    }
    debug_assert_eq!(
        growth_bound_holds(order, gamma as u32),
        order <= limits[HARD_ORDER_GROWTH]
    );
    if let Some(&limit) = limits.get(ADVISORY_DIAM_JUMP) {
        match jump_diam {
            Some(d) if d <= limit => {}
            _ => advisory_violations.push(ADVISORY_DIAM_JUMP),
        }
    }

    Ok(BoundReport {
        tree: write_graph6(t).expect("trees within IO cap"),
        gamma,
        stats,
        measured,
        limits,
        violations,
        advisory_violations,
    })
}

/// Single-vertex replacement observation: if `pn(u, D) = {u}` for a γ-set
/// `D`, then for every neighbour `v` of `u`, `(D - {u}) ∪ {v}` is again a
/// γ-set and slide-adjacent to `D`. Returns all counterexamples.
pub fn check_obs_spn(g: &Graph) -> Vec<String> {
    let report = enumerate_gamma_sets(g);
    let index: HashSet<VertexSet> = report.gamma_sets.iter().copied().collect();
    let mut violations = Vec::new();
    for &d in &report.gamma_sets {
        for u in d.iter() {
            let pn = private_neighbors(g, d, u).expect("member of d");
            if pn.pn != VertexSet::single(u) {
                continue;
            }
            for v in g.neighbors(u).iter() {
                let dv = d.without(u).with(v);
                if !index.contains(&dv) {
                    violations.push(format!(
                        "spn d={d} u={u} v={v}: replacement is not a gamma-set"
                    ));
                } else if !slide_adjacent(g, d, dv) {
                    violations.push(format!(
                        "spn d={d} u={u} v={v}: replacement not slide-adjacent"
                    ));
                }
            }
        }
    }
    violations
}

/// Bipartite double-replacement observation: for distinct γ-sets
/// `D1`, `D2 = (D1 - {u}) ∪ {v}`, `D3 = (D1 - {u}) ∪ {w}` with
/// `v, w ∈ N(u)`, the private neighbourhoods `pn(u, D1)`, `pn(v, D2)`,
/// `pn(w, D3)` all equal `{u}`. Returns all counterexamples.
pub fn check_obs_bipn(g: &Graph) -> Result<Vec<String>, VerifyError> {
    if !g.is_bipartite() {
        return Err(VerifyError::NotBipartite);
    }
    let report = enumerate_gamma_sets(g);
    let index: HashSet<VertexSet> = report.gamma_sets.iter().copied().collect();
    let mut violations = Vec::new();
    for &d1 in &report.gamma_sets {
        for u in d1.iter() {
            let swaps: Vec<usize> = g
                .neighbors(u)
                .iter()
                .filter(|&v| index.contains(&d1.without(u).with(v)))
                .collect();
            for (i, &v) in swaps.iter().enumerate() {
                for &w in &swaps[i + 1..] {
                    let d2 = d1.without(u).with(v);
                    let d3 = d1.without(u).with(w);
                    let expect = VertexSet::single(u);
                    let pn1 = private_neighbors(g, d1, u).expect("member").pn;
                    let pn2 = private_neighbors(g, d2, v).expect("member").pn;
                    let pn3 = private_neighbors(g, d3, w).expect("member").pn;
                    if pn1 != expect || pn2 != expect || pn3 != expect {
                        violations.push(format!(
                            "bipn d1={d1} u={u} v={v} w={w}: pn {pn1} {pn2} {pn3} != {expect}"
                        ));
                    }
                }
            }
        }
    }
    Ok(violations)
}

/// Reference implementation of γ and the γ-set list: test every subset of
/// the vertices in ascending size order, with a domination check written
/// directly against the adjacency rows. Kept deliberately independent of
/// the branch-and-bound path it certifies.
pub fn brute_force_domination(g: &Graph) -> DominationReport {
    let n = g.n();
    assert!(n <= 24, "subset oracle is for desk-scale orders");
    for k in 0..=n {
        let mut sets = Vec::new();
        for mask in 0u64..(1u64 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut dominating = true;
            for v in 0..n {
                if mask & (1u64 << v) == 0 && g.neighbors(v).bits() & mask == 0 {
                    dominating = false;
                    break;
                }
            }
            if dominating {
                sets.push(VertexSet::from_bits(mask));
            }
        }
        if !sets.is_empty() {
            return DominationReport {
                gamma: k,
                gamma_sets: sets,
            };
        }
    }
    unreachable!("the full vertex set dominates")
}

/// The named verification suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Observations,
    TreeBounds,
    SmallOrderConnectivity,
    TriangleFree,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Observations,
        Suite::TreeBounds,
        Suite::SmallOrderConnectivity,
        Suite::TriangleFree,
        Suite::Oracle,
    ];

    /// Largest corpus order the suite accepts.
    pub fn cap(self) -> usize {
        match self {
            Suite::Observations => 8,
            Suite::TreeBounds => 14,
            Suite::SmallOrderConnectivity => 8,
            Suite::TriangleFree => 8,
            Suite::Oracle => 8,
        }
    }

    /// Order used when the command line does not pick one.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Observations => 7,
            Suite::TreeBounds => 12,
            Suite::SmallOrderConnectivity => 5,
            Suite::TriangleFree => 7,
            Suite::Oracle => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Observations => "observations",
            Suite::TreeBounds => "tree-bounds",
            Suite::SmallOrderConnectivity => "small-order-connectivity",
            Suite::TriangleFree => "triangle-free",
            Suite::Oracle => "oracle",
        })
    }
}

impl FromStr for Suite {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "observations" => Ok(Suite::Observations),
            "tree-bounds" => Ok(Suite::TreeBounds),
            "small-order-connectivity" => Ok(Suite::SmallOrderConnectivity),
            "triangle-free" => Ok(Suite::TriangleFree),
            "oracle" => Ok(Suite::Oracle),
            other => Err(VerifyError::UnknownSuite(other.to_string())),
        }
    }
}

/// Outcome of one suite run. Violations and advisories are merged in
/// corpus (canonical) order; wall time is reporting-only and never part of
/// the data records.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub corpus_size: u64,
    pub violations: Vec<String>,
    pub advisories: Vec<String>,
    /// Sharpest observed (measured, limit) pair per bound, by cross-ratio.
    pub max_ratios: BTreeMap<&'static str, (u64, u64)>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Summary line in stable field order.
    pub fn summary_record(&self) -> String {
        format!(
            "suite name={} max_n={} corpus={} violations={} advisories={} result={}",
            self.suite,
            self.max_n,
            self.corpus_size,
            self.violations.len(),
            self.advisories.len(),
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

/// Per-element outcome used for verbose reporting.
struct ElementOutcome {
    label: String,
    violations: Vec<String>,
    advisories: Vec<String>,
    ratios: Vec<(&'static str, u64, u64)>,
}

/// Runs a suite over the exhaustive corpus up to `max_n`.
pub fn run_suite(suite: Suite, max_n: usize) -> Result<SuiteReport, VerifyError> {
    run_suite_over(suite, max_n, None, &mut |_| {})
}

/// Runs a suite over an external corpus instead of internal generation.
/// Corpus elements that do not qualify for the suite (wrong order range,
/// non-tree for the tree suite, triangle for the triangle-free suite) are
/// skipped.
pub fn run_suite_with_corpus(
    suite: Suite,
    max_n: usize,
    corpus: &[Graph],
) -> Result<SuiteReport, VerifyError> {
    run_suite_over(suite, max_n, Some(corpus), &mut |_| {})
}

/// Full-control entry point: optional external corpus and a sink invoked
/// with one record line per corpus element.
pub fn run_suite_over(
    suite: Suite,
    max_n: usize,
    corpus: Option<&[Graph]>,
    element_sink: &mut dyn FnMut(&str),
) -> Result<SuiteReport, VerifyError> {
    if max_n > suite.cap() || max_n == 0 {
        return Err(VerifyError::AboveSuiteCap {
            suite,
            max_n,
            cap: suite.cap(),
        });
    }
    let start = Instant::now();
    let elements = suite_corpus(suite, max_n, corpus);
    let corpus_size = elements.len() as u64;
    let outcomes: Vec<ElementOutcome> = elements
        .par_iter()
        .map(|g| check_element(suite, g))
        .collect();

    let mut violations = Vec::new();
    let mut advisories = Vec::new();
    let mut max_ratios: BTreeMap<&'static str, (u64, u64)> = BTreeMap::new();
    for o in outcomes {
        element_sink(&format!(
            "element g6={} violations={} advisories={}",
            o.label,
            o.violations.len(),
            o.advisories.len()
        ));
        violations.extend(o.violations);
        advisories.extend(o.advisories);
        for (key, m, l) in o.ratios {
            if l == 0 {
                continue;
            }
            let sharper = match max_ratios.get(key) {
                // m/l > bm/bl  ⟺  m*bl > bm*l, exactly.
                Some(&(bm, bl)) => (m as u128) * (bl as u128) > (bm as u128) * (l as u128),
                None => true,
            };
            if sharper {
                max_ratios.insert(key, (m, l));
            }
        }
    }
    Ok(SuiteReport {
        suite,
        max_n,
        corpus_size,
        violations,
        advisories,
        max_ratios,
        elapsed: start.elapsed(),
    })
}

fn suite_corpus(suite: Suite, max_n: usize, corpus: Option<&[Graph]>) -> Vec<Graph> {
    if let Some(graphs) = corpus {
        return graphs
            .iter()
            .filter(|g| match suite {
                Suite::TreeBounds => {
                    (2..=max_n).contains(&g.n())
                        && g.is_connected()
                        && g.edge_count() == g.n() - 1
                }
                Suite::TriangleFree => g.n() >= 1 && g.n() <= max_n && g.is_triangle_free(),
                _ => g.n() >= 1 && g.n() <= max_n,
            })
            .cloned()
            .collect();
    }
    match suite {
        Suite::TreeBounds => (2..=max_n)
            .flat_map(|n| gen::generate_trees(n).expect("order within tree cap"))
            .collect(),
        Suite::TriangleFree => {
            let levels = gen::class_levels(max_n, HereditaryClass::TriangleFree)
                .expect("order within generator cap");
            (1..=max_n)
                .flat_map(|n| gen::decode_level(n, &levels[n - 1]))
                .collect()
        }
        _ => {
            let levels = gen::class_levels(max_n, HereditaryClass::All)
                .expect("order within generator cap");
            (1..=max_n)
                .flat_map(|n| gen::decode_level(n, &levels[n - 1]))
                .collect()
        }
    }
}

fn check_element(suite: Suite, g: &Graph) -> ElementOutcome {
    let label = write_graph6(g).expect("corpus graphs within IO cap");
    let mut out = ElementOutcome {
        label: label.clone(),
        violations: Vec::new(),
        advisories: Vec::new(),
        ratios: Vec::new(),
    };
    match suite {
        Suite::Observations => {
            for v in check_obs_spn(g) {
                out.violations.push(format!("g6={label} {v}"));
            }
            if g.is_bipartite() {
                for v in check_obs_bipn(g).expect("bipartite checked") {
                    out.violations.push(format!("g6={label} {v}"));
                }
            }
        }
        Suite::TreeBounds => {
            let report = check_tree_bounds(g).expect("corpus filtered to trees");
            for key in &report.violations {
                out.violations.push(format!(
                    "g6={label} bound={key} measured={} limit={}",
                    report.measured.get(key).copied().unwrap_or(u64::MAX),
                    report.limits[key]
                ));
            }
            for key in &report.advisory_violations {
                out.advisories.push(format!(
                    "g6={label} bound={key} measured={} limit={}",
                    report.measured.get(key).copied().unwrap_or(u64::MAX),
                    report.limits[key]
                ));
            }
            for (&key, &m) in &report.measured {
                if let Some(&l) = report.limits.get(key) {
                    out.ratios.push((key, m, l));
                }
            }
            let slide = build_gamma_graph(g, Model::Slide);
            if !slide.is_connected() {
                out.violations
                    .push(format!("g6={label} slide gamma-graph disconnected"));
            }
            if !slide.is_bipartite() {
                out.violations
                    .push(format!("g6={label} slide gamma-graph not bipartite"));
            }
        }
        Suite::SmallOrderConnectivity => {
            if !build_gamma_graph(g, Model::Slide).is_connected() {
                out.violations
                    .push(format!("g6={label} slide gamma-graph disconnected"));
            }
        }
        Suite::TriangleFree => {
            if build_gamma_graph(g, Model::Slide).has_triangle() {
                out.violations.push(format!(
                    "g6={label} slide gamma-graph of a triangle-free base has a triangle"
                ));
            }
        }
        Suite::Oracle => {
            let fast = enumerate_gamma_sets(g);
            let brute = brute_force_domination(g);
            if fast != brute {
                out.violations.push(format!(
                    "g6={label} oracle mismatch: gamma {} vs {}, {} vs {} sets",
                    fast.gamma,
                    brute.gamma,
                    fast.gamma_sets.len(),
                    brute.gamma_sets.len()
                ));
            }
        }
    }
    out
}
