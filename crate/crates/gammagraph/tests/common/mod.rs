//! Shared test oracles, independent of the library code paths they check.
#![allow(dead_code)] // each test binary uses its own subset

use gammagraph::graph::Graph;

/// Isomorphism by backtracking over vertex maps with degree and
/// adjacency-consistency pruning. Deliberately avoids the canonical-form
/// machinery so it can certify it.
pub fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, 0, &mut map, &mut used)
}

fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if consistent {
            map[v] = w;
            used[w] = true;
            if extend(g, h, v + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
    }
    false
}

/// A second graph6 decoder with a different shape (explicit bit list), for
/// cross-checking the production parser.
pub fn reference_decode_graph6(record: &str) -> Graph {
    let bytes = record.trim().as_bytes();
    let body = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let n = (body[0] - 63) as usize;
    let mut bits: Vec<bool> = Vec::new();
    for &b in &body[1..] {
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    let mut g = Graph::empty(n).unwrap();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    g
}

/// Fisher-Yates with a caller-supplied RNG, kept here so tests control
/// determinism.
pub fn random_permutation<R: rand::Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}
