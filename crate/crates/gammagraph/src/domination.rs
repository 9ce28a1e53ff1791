//! Domination numbers, exhaustive γ-set enumeration, and private
//! neighbourhoods.

use crate::graph::{Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominationError {
    #[error("vertex {x} is not a member of the dominating set {d}")]
    VertexNotInSet { x: usize, d: VertexSet },
}

/// The domination number together with every minimum dominating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationReport {
    pub gamma: usize,
    /// All γ-sets, strictly ascending in bit-mask value.
    pub gamma_sets: Vec<VertexSet>,
}

/// The private neighbours `pn(x, D) = N[x] − N[D − {x}]` of `x` in `D`,
/// with the self/external split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrivateNeighborhood {
    pub x: usize,
    pub pn: VertexSet,
    pub is_self_pn: bool,
    pub external: VertexSet,
}

/// `N[S] = S ∪ N(S)`.
pub fn closed_neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    debug_assert!(s.is_subset_of(g.vertices()));
    let mut out = s;
    for v in s.iter() {
        out = out.union(g.neighbors(v));
    }
    out
}

/// `N(S) = ⋃_{x ∈ S} N(x)`; may intersect `S`.
pub fn open_neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    debug_assert!(s.is_subset_of(g.vertices()));
    let mut out = VertexSet::EMPTY;
    for v in s.iter() {
        out = out.union(g.neighbors(v));
    }
    out
}

/// True iff `N[d] = V(G)`.
pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    closed_neighborhood(g, d) == g.vertices()
}

/// Exact domination number by iterative deepening on the target size,
/// branching on a not-yet-dominated vertex with the fewest candidate
/// dominators, candidates being its closed neighbourhood.
pub fn domination_number(g: &Graph) -> usize {
    for k in 0..=g.n() {
        if dominates_with(g, VertexSet::EMPTY, k) {
            return k;
        }
    }
    unreachable!("the full vertex set dominates every graph")
}

fn dominates_with(g: &Graph, dominated: VertexSet, picks_left: usize) -> bool {
    if dominated == g.vertices() {
        return true;
    }
    if picks_left == 0 {
        return false;
    }
    let undominated = g.vertices().minus(dominated);
    let v = undominated
        .iter()
        .min_by_key(|&v| g.closed_neighbors(v).len())
        .expect("undominated set nonempty");
    for u in g.closed_neighbors(v).iter() {
        if dominates_with(g, dominated.union(g.closed_neighbors(u)), picks_left - 1) {
            return true;
        }
    }
    false
}

/// Every γ-set exactly once, ascending in bit-mask value. Enumeration runs
/// over size-γ subsets in index order with two prunes: a vertex left
/// undominated with no candidate dominator ahead kills the branch, and so
/// does a remaining-cover bound (picks left times the best single-vertex
/// cover cannot reach the undominated count).
pub fn enumerate_gamma_sets(g: &Graph) -> DominationReport {
    let gamma = domination_number(g);
    let mut sets = Vec::new();
    collect_sets(
        g,
        0,
        VertexSet::EMPTY,
        VertexSet::EMPTY,
        gamma,
        &mut sets,
    );
    sets.sort_unstable();
    debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
    DominationReport {
        gamma,
        gamma_sets: sets,
    }
}

fn collect_sets(
    g: &Graph,
    start: usize,
    chosen: VertexSet,
    dominated: VertexSet,
    picks_left: usize,
    out: &mut Vec<VertexSet>,
) {
    if picks_left == 0 {
        if dominated == g.vertices() {
            out.push(chosen);
        }
        return;
    }
    let n = g.n();
    let undominated = g.vertices().minus(dominated);
    if !undominated.is_empty() {
        let ahead = g.vertices().minus(VertexSet::full(start));
        let mut best_cover = 0usize;
        for u in ahead.iter() {
            best_cover = best_cover.max(g.closed_neighbors(u).intersection(undominated).len());
        }
        if picks_left * best_cover < undominated.len() {
            return;
        }
        for v in undominated.iter() {
            if g.closed_neighbors(v).intersection(ahead).is_empty() {
                return;
            }
        }
    }
    for u in start..n {
        collect_sets(
            g,
            u + 1,
            chosen.with(u),
            dominated.union(g.closed_neighbors(u)),
            picks_left - 1,
            out,
        );
    }
}

/// Private neighbours of `x` with respect to `d`; `x` must belong to `d`.
pub fn private_neighbors(
    g: &Graph,
    d: VertexSet,
    x: usize,
) -> Result<PrivateNeighborhood, DominationError> {
    if !d.contains(x) {
        return Err(DominationError::VertexNotInSet { x, d });
    }
    let others = d.without(x);
    let pn = g
        .closed_neighbors(x)
        .minus(closed_neighborhood(g, others));
    Ok(PrivateNeighborhood {
        x,
        pn,
        is_self_pn: pn.contains(x),
        external: pn.without(x),
    })
}
