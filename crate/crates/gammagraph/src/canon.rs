//! Canonical forms and isomorphism for graphs on at most 16 vertices.
//!
//! The certificate is the lexicographically smallest upper-triangle bit
//! string over all vertex labelings, found by colour refinement plus
//! backtracking over refined colour classes. Automorphisms discovered when
//! two leaves produce the same labelled graph prune branches whose target
//! vertex is equivalent, under the generators found so far, to one already
//! expanded. Certificates of isomorphic graphs are equal by construction;
//! the test suite certifies the converse against brute-force permutation
//! search on small orders.

use crate::graph::{Graph, VertexSet};
use crate::graph6;
use std::fmt;
use thiserror::Error;

/// Cap for the isomorphism subsystem.
pub const MAX_CANON_VERTICES: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("order {n} exceeds the isomorphism cap of {MAX_CANON_VERTICES} vertices")]
    OrderAboveCap { n: usize },
    #[error("induced pattern on {pattern} vertices exceeds host order {host}")]
    PatternLargerThanHost { pattern: usize, host: usize },
}

/// Relabelling-invariant certificate of an isomorphism class.
///
/// Two graphs within the cap are isomorphic iff their certificates are
/// equal. The byte form is the graph6 encoding of the canonically
/// relabelled copy, so certificate order is (order, adjacency bits).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: u128,
}

impl CanonicalForm {
    pub(crate) fn from_parts(n: usize, bits: u128) -> Self {
        CanonicalForm { n, bits }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub(crate) fn bits(&self) -> u128 {
        self.bits
    }

    /// The canonically relabelled copy itself.
    pub fn to_graph(&self) -> Graph {
        unpack_bits(self.n, self.bits)
    }

    /// graph6 encoding of the canonical copy.
    pub fn graph6(&self) -> String {
        graph6::write_graph6(&self.to_graph()).expect("canonical graphs are within the I/O cap")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

/// Packs the upper triangle column-wise, most significant bit first; the
/// same bit order as graph6 bodies, so dropping the last vertex of a
/// canonical copy is a plain right shift by `n - 1`.
#[cfg(test)]
pub(crate) fn pack_bits(g: &Graph) -> u128 {
    let n = g.n();
    let mut bits = 0u128;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | g.has_edge(i, j) as u128;
        }
    }
    bits
}

pub(crate) fn unpack_bits(n: usize, bits: u128) -> Graph {
    let m = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n).expect("within cap");
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if (bits >> (m - 1 - k)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

fn adj16(g: &Graph) -> Result<[u16; 16], CanonError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(CanonError::OrderAboveCap { n });
    }
    let mut adj = [0u16; 16];
    for (v, row) in adj.iter_mut().enumerate().take(n) {
        *row = g.neighbors(v).bits() as u16;
    }
    Ok(adj)
}

/// Computes the certificate of `g`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let (bits, _) = canonical_search(g)?;
    Ok(CanonicalForm::from_parts(g.n(), bits))
}

/// The canonically relabelled copy together with the permutation that maps
/// each original vertex to its canonical position.
pub fn canonical_labelling(g: &Graph) -> Result<(Graph, Vec<usize>), CanonError> {
    let n = g.n();
    let (bits, inv) = canonical_search(g)?;
    let mut perm = vec![0usize; n];
    for (pos, &v) in inv.iter().enumerate().take(n) {
        perm[v as usize] = pos;
    }
    let canonical = unpack_bits(n, bits);
    debug_assert_eq!(canonical, g.relabel(&perm));
    Ok((canonical, perm))
}

/// True iff an edge-preserving bijection between `g` and `h` exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, CanonError> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(CanonError::OrderAboveCap { n: g.n() });
    }
    if h.n() > MAX_CANON_VERTICES {
        return Err(CanonError::OrderAboveCap { n: h.n() });
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// True iff some vertex subset of `g` induces a copy of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Result<bool, CanonError> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(CanonError::OrderAboveCap { n: g.n() });
    }
    if h.n() > g.n() {
        return Err(CanonError::PatternLargerThanHost {
            pattern: h.n(),
            host: g.n(),
        });
    }
    let k = h.n();
    if k == 0 {
        return Ok(true);
    }
    let target = canonical_form(h)?;
    // Gosper's hack over all k-subsets of the host vertices.
    let limit: u64 = 1u64 << g.n();
    let mut mask: u64 = (1u64 << k) - 1;
    while mask < limit {
        let sub = g.induced(VertexSet::from_bits(mask));
        if canonical_form(&sub)? == target {
            return Ok(true);
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(false)
}

fn canonical_search(g: &Graph) -> Result<(u128, [u8; 16]), CanonError> {
    let n = g.n();
    let adj = adj16(g)?;
    if n == 0 {
        return Ok((0, [0u8; 16]));
    }
    let mut cells = vec![VertexSet::full(n).bits() as u16];
    refine(&adj, &mut cells);
    let mut searcher = Searcher {
        n,
        adj,
        have_best: false,
        best_bits: 0,
        best_inv: [0u8; 16],
        gens: Vec::new(),
    };
    searcher.search(&cells, &mut Vec::new());
    debug_assert!(searcher.have_best);
    Ok((searcher.best_bits, searcher.best_inv))
}

struct Searcher {
    n: usize,
    adj: [u16; 16],
    have_best: bool,
    best_bits: u128,
    best_inv: [u8; 16],
    gens: Vec<[u8; 16]>,
}

impl Searcher {
    fn search(&mut self, cells: &[u16], prefix: &mut Vec<u8>) {
        let Some(ti) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(cells);
            return;
        };
        let cell = cells[ti];
        let mut tried: Vec<u8> = Vec::new();
        let mut bits = cell;
        while bits != 0 {
            let v = bits.trailing_zeros() as u8;
            bits &= bits - 1;
            // Skip vertices reachable from an expanded sibling by an
            // automorphism that fixes the individualized prefix pointwise.
            if tried
                .iter()
                .any(|&u| self.same_orbit_fixing(prefix, u, v))
            {
                continue;
            }
            tried.push(v);
            let mut next: Vec<u16> = Vec::with_capacity(cells.len() + 1);
            for (idx, &c) in cells.iter().enumerate() {
                if idx == ti {
                    next.push(1u16 << v);
                    next.push(c & !(1u16 << v));
                } else {
                    next.push(c);
                }
            }
            refine(&self.adj, &mut next);
            prefix.push(v);
            self.search(&next, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[u16]) {
        debug_assert_eq!(cells.len(), self.n);
        let mut inv = [0u8; 16];
        for (pos, &c) in cells.iter().enumerate() {
            inv[pos] = c.trailing_zeros() as u8;
        }
        let bits = self.labelled_bits(&inv);
        if !self.have_best || bits < self.best_bits {
            self.have_best = true;
            self.best_bits = bits;
            self.best_inv = inv;
        } else if bits == self.best_bits {
            // Two labelings with identical images compose to an automorphism.
            let mut sigma: [u8; 16] = core::array::from_fn(|i| i as u8);
            let mut identity = true;
            for pos in 0..self.n {
                sigma[self.best_inv[pos] as usize] = inv[pos];
                if self.best_inv[pos] != inv[pos] {
                    identity = false;
                }
            }
            if !identity && !self.gens.contains(&sigma) {
                debug_assert!(self.is_automorphism(&sigma));
                self.gens.push(sigma);
            }
        }
    }

    fn labelled_bits(&self, inv: &[u8; 16]) -> u128 {
        let mut bits = 0u128;
        for j in 1..self.n {
            let vj = inv[j] as usize;
            for &vi in inv.iter().take(j) {
                bits = (bits << 1) | ((self.adj[vi as usize] >> vj) & 1) as u128;
            }
        }
        bits
    }

    /// Orbit test in the subgroup generated by the stored automorphisms that
    /// fix every prefix vertex. A subset of the true stabilizer, so pruning
    /// on it is sound.
    fn same_orbit_fixing(&self, prefix: &[u8], u: u8, v: u8) -> bool {
        if self.gens.is_empty() {
            return false;
        }
        let mut parent: [u8; 16] = core::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; 16], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for gen in &self.gens {
            if prefix.iter().all(|&p| gen[p as usize] == p) {
                for x in 0..self.n as u8 {
                    let a = find(&mut parent, x);
                    let b = find(&mut parent, gen[x as usize]);
                    if a != b {
                        parent[a as usize] = b;
                    }
                }
            }
        }
        find(&mut parent, u) == find(&mut parent, v)
    }

    fn is_automorphism(&self, sigma: &[u8; 16]) -> bool {
        for u in 0..self.n {
            for v in 0..self.n {
                let e = (self.adj[u] >> v) & 1;
                let f = (self.adj[sigma[u] as usize] >> sigma[v] as usize) & 1;
                if e != f {
                    return false;
                }
            }
        }
        true
    }
}

/// Colour refinement to the coarsest stable partition. Cells are bit masks
/// in partition order; sub-cells are emitted in ascending key order, which
/// depends only on the structure, never on labels.
fn refine(adj: &[u16; 16], cells: &mut Vec<u16>) {
    loop {
        let snapshot = cells.clone();
        let mut next: Vec<u16> = Vec::with_capacity(snapshot.len());
        let mut split = false;
        for &cell in &snapshot {
            if cell.count_ones() <= 1 {
                next.push(cell);
                continue;
            }
            // Key: neighbour counts against every cell, 4 bits each.
            let mut items: Vec<(u64, u8)> = Vec::with_capacity(cell.count_ones() as usize);
            let mut bits = cell;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let mut key = 0u64;
                for &s in &snapshot {
                    key = (key << 4) | (adj[v] & s).count_ones() as u64;
                }
                items.push((key, v as u8));
            }
            items.sort_unstable();
            let mut group = 0u16;
            let mut group_key = items[0].0;
            for &(key, v) in &items {
                if key != group_key {
                    next.push(group);
                    split = true;
                    group = 0;
                    group_key = key;
                }
                group |= 1u16 << v;
            }
            next.push(group);
        }
        *cells = next;
        if !split {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for slot in 0..n {
                let mut q = p.clone();
                q.insert(slot, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn c4_has_one_certificate_over_all_labelings() {
        let c4 = families::cycle(4).unwrap();
        let cert = canonical_form(&c4).unwrap();
        for p in perms(4) {
            assert_eq!(canonical_form(&c4.relabel(&p)).unwrap(), cert);
        }
    }

    #[test]
    fn p4_and_claw_have_distinct_certificates() {
        let p4 = families::path(4).unwrap();
        let claw = families::complete_bipartite(1, 3).unwrap();
        assert_ne!(
            canonical_form(&p4).unwrap(),
            canonical_form(&claw).unwrap()
        );
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = families::cycle(4).unwrap();
        let relabelled = c4.relabel(&[2, 0, 3, 1]);
        assert!(are_isomorphic(&c4, &relabelled).unwrap());
        let p4 = families::path(4).unwrap();
        assert!(!are_isomorphic(&c4, &p4).unwrap());
    }

    #[test]
    fn canonical_labelling_is_consistent() {
        for g in [
            families::cycle(5).unwrap(),
            families::complete_bipartite(2, 3).unwrap(),
            families::path(7).unwrap(),
        ] {
            let (canonical, perm) = canonical_labelling(&g).unwrap();
            assert_eq!(canonical, g.relabel(&perm));
            assert_eq!(
                canonical_form(&canonical).unwrap(),
                canonical_form(&g).unwrap()
            );
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let k24 = families::complete_bipartite(2, 4).unwrap();
        let k23 = families::complete_bipartite(2, 3).unwrap();
        assert!(contains_induced(&k24, &k23).unwrap());

        let c4 = families::cycle(4).unwrap();
        let k3 = families::complete(3).unwrap();
        assert!(!contains_induced(&c4, &k3).unwrap());

        let k1 = Graph::empty(1).unwrap();
        for g in [&k24, &c4] {
            assert!(contains_induced(g, &k1).unwrap());
        }
        assert!(contains_induced(&c4, &Graph::empty(0).unwrap()).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let big = Graph::empty(17).unwrap();
        assert_eq!(
            canonical_form(&big).unwrap_err(),
            CanonError::OrderAboveCap { n: 17 }
        );
        let k23 = families::complete_bipartite(2, 3).unwrap();
        assert_eq!(
            contains_induced(&k23, &families::complete_bipartite(2, 4).unwrap()).unwrap_err(),
            CanonError::PatternLargerThanHost {
                pattern: 6,
                host: 5
            }
        );
    }

    #[test]
    fn tiny_orders() {
        let g0 = Graph::empty(0).unwrap();
        let g1 = Graph::empty(1).unwrap();
        assert!(are_isomorphic(&g0, &g0).unwrap());
        assert!(!are_isomorphic(&g0, &g1).unwrap());
        assert_eq!(canonical_form(&g0).unwrap().graph6(), "?");
        assert_eq!(canonical_form(&g1).unwrap().graph6(), "@");
    }

    #[test]
    fn pack_unpack_round_trip() {
        for g in [
            families::path(6).unwrap(),
            families::cycle(7).unwrap(),
            families::complete(5).unwrap(),
        ] {
            assert_eq!(unpack_bits(g.n(), pack_bits(&g)), g);
        }
    }

    #[test]
    fn hard_symmetric_cases_terminate_quickly() {
        // Vertex-transitive graphs exercise the automorphism pruning.
        for g in [
            Graph::empty(10).unwrap(),
            families::complete(10).unwrap(),
            families::complete_bipartite(5, 5).unwrap(),
            families::cycle(12).unwrap(),
        ] {
            let cert = canonical_form(&g).unwrap();
            assert_eq!(cert.order(), g.n());
            assert_eq!(cert.to_graph().edge_count(), g.edge_count());
        }
    }
}
