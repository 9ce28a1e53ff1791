//! Exhaustive generation of small graphs and free trees, one representative
//! per isomorphism class.
//!
//! Graphs are produced by canonical augmentation: the canonical
//! representatives of order `n - 1` are extended by one vertex in every
//! possible way, and a child is kept iff deleting the last vertex of its
//! canonical copy reproduces the parent it was extended from. Children of
//! distinct parents can therefore never collide, which keeps the
//! per-parent work independent and the output exact without a global seen
//! set.
//!
//! Free trees come from the level-sequence successor enumeration of rooted
//! trees, deduplicated to free-tree classes by a centroid-rooted
//! certificate.

use crate::canon;
use crate::graph::Graph;
use rayon::prelude::*;
use std::collections::HashSet;
use thiserror::Error;

/// Generator cap for arbitrary graphs.
pub const MAX_GEN_VERTICES: usize = 10;
/// Generator cap for free trees.
pub const MAX_TREE_VERTICES: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("order {n} outside the generator range 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },
}

/// Hereditary graph classes the augmentation can restrict to directly.
/// Restricting is exact because deleting a vertex never leaves the class,
/// so every member's canonical parent is again a member.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HereditaryClass {
    All,
    Bipartite,
    TriangleFree,
}

impl HereditaryClass {
    pub fn admits(&self, g: &Graph) -> bool {
        match self {
            HereditaryClass::All => true,
            HereditaryClass::Bipartite => g.is_bipartite(),
            HereditaryClass::TriangleFree => g.is_triangle_free(),
        }
    }
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices satisfying `filter`, in canonical-certificate order.
pub fn generate_graphs<F: Fn(&Graph) -> bool>(n: usize, filter: F) -> Result<Vec<Graph>, GenError> {
    let mut graphs = generate_graphs_in(n, HereditaryClass::All)?;
    graphs.retain(|g| filter(g));
    Ok(graphs)
}

/// All classes of order `n` within a hereditary class, in certificate order.
pub fn generate_graphs_in(n: usize, class: HereditaryClass) -> Result<Vec<Graph>, GenError> {
    let levels = class_levels(n, class)?;
    Ok(decode_level(n, &levels[n - 1]))
}

/// Certificate lists for every order `1..=max_n` within a hereditary class;
/// `levels[k]` holds order `k + 1`. Used by the sweeps to scan a whole
/// order range without regenerating lower levels.
pub(crate) fn class_levels(
    max_n: usize,
    class: HereditaryClass,
) -> Result<Vec<Vec<u128>>, GenError> {
    if max_n == 0 || max_n > MAX_GEN_VERTICES {
        return Err(GenError::OrderOutOfRange {
            n: max_n,
            max: MAX_GEN_VERTICES,
        });
    }
    let mut levels: Vec<Vec<u128>> = vec![vec![0u128]]; // K1
    for n in 2..=max_n {
        let next = extend_level(n, &levels[n - 2], class);
        levels.push(next);
    }
    Ok(levels)
}

pub(crate) fn decode_level(n: usize, certs: &[u128]) -> Vec<Graph> {
    certs.iter().map(|&bits| canon::unpack_bits(n, bits)).collect()
}

fn extend_level(n: usize, parents: &[u128], class: HereditaryClass) -> Vec<u128> {
    let per_parent: Vec<Vec<u128>> = parents
        .par_iter()
        .map(|&parent_bits| {
            let parent = canon::unpack_bits(n - 1, parent_bits);
            let mut seen: HashSet<u128> = HashSet::new();
            let mut kept = Vec::new();
            for mask in 0u64..(1u64 << (n - 1)) {
                let mut adj: Vec<u64> = (0..n - 1)
                    .map(|v| parent.neighbors(v).bits() | (((mask >> v) & 1) << (n - 1)))
                    .collect();
                adj.push(mask);
                let child = Graph::from_adjacency(adj).expect("extension preserves validity");
                if !class.admits(&child) {
                    continue;
                }
                let cert = canon::canonical_form(&child).expect("order within canon cap");
                if !seen.insert(cert.bits()) {
                    continue;
                }
                // Keep the child iff this parent is its canonical parent:
                // dropping the last canonical vertex is a right shift in the
                // packed column-wise bit order.
                let deleted = canon::unpack_bits(n - 1, cert.bits() >> (n - 1));
                let deleted_cert = canon::canonical_form(&deleted).expect("order within canon cap");
                if deleted_cert.bits() == parent_bits {
                    kept.push(cert.bits());
                }
            }
            kept
        })
        .collect();
    let mut all: Vec<u128> = per_parent.into_iter().flatten().collect();
    all.sort_unstable();
    debug_assert!(all.windows(2).all(|w| w[0] < w[1]), "duplicate class emitted");
    all
}

/// One representative per isomorphism class of free trees on `n` vertices,
/// in first-encounter order of the rooted level-sequence enumeration.
pub fn generate_trees(n: usize) -> Result<Vec<Graph>, GenError> {
    if n == 0 || n > MAX_TREE_VERTICES {
        return Err(GenError::OrderOutOfRange {
            n,
            max: MAX_TREE_VERTICES,
        });
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1).expect("K1")]);
    }
    let mut seq: Vec<usize> = (1..=n).collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    loop {
        let tree = tree_from_level_sequence(&seq);
        if seen.insert(free_tree_certificate(&tree)) {
            out.push(tree);
        }
        // Successor of the canonical rooted level sequence: truncate at the
        // last entry above level 2 and tile the segment back to its most
        // recent shallower ancestor.
        let Some(p) = (0..n).rev().find(|&i| seq[i] > 2) else {
            break;
        };
        let q = (0..p)
            .rev()
            .find(|&i| seq[i] == seq[p] - 1)
            .expect("every level above 2 has an ancestor level");
        let period = p - q;
        for i in p..n {
            seq[i] = seq[i - period];
        }
    }
    Ok(out)
}

fn tree_from_level_sequence(seq: &[usize]) -> Graph {
    let n = seq.len();
    let mut g = Graph::empty(n).expect("within cap");
    for i in 1..n {
        let parent = (0..i)
            .rev()
            .find(|&j| seq[j] == seq[i] - 1)
            .expect("valid level sequence");
        g.add_edge(parent, i);
    }
    g
}

/// Relabelling-invariant certificate of a free tree: its AHU string rooted
/// at the centroid, or at the centroid edge when there are two.
fn free_tree_certificate(t: &Graph) -> Vec<u8> {
    let centroids = find_centroids(t);
    match centroids[..] {
        [c] => {
            let mut s = vec![b'1'];
            s.extend(ahu(t, c, usize::MAX));
            s
        }
        [c1, c2] => {
            let a = ahu(t, c1, c2);
            let b = ahu(t, c2, c1);
            let (x, y) = if a <= b { (a, b) } else { (b, a) };
            let mut s = vec![b'2'];
            s.extend(x);
            s.extend(y);
            s
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

fn ahu(t: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = t
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| ahu(t, u, v))
        .collect();
    children.sort();
    let mut s = vec![b'('];
    for c in children {
        s.extend(c);
    }
    s.push(b')');
    s
}

fn find_centroids(t: &Graph) -> Vec<usize> {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        order.push(v);
        for u in t.neighbors(v).iter() {
            if !visited[u] {
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let weight = |v: usize| {
        let mut w = n - size[v];
        for u in t.neighbors(v).iter() {
            if parent[u] == v {
                w = w.max(size[u]);
            }
        }
        w
    };
    let min_w = (0..n).map(weight).min().expect("nonempty tree");
    (0..n).filter(|&v| weight(v) == min_w).collect()
}
