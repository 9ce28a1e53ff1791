//! Small simple undirected graphs with bit-mask adjacency.
//!
//! Vertices are `0..n` with `n <= 64`, so every neighbourhood, dominating
//! set, and search frontier is a single `u64` and the hot loops of the
//! exhaustive searches reduce to word operations.

use std::fmt;
use thiserror::Error;

/// Hard cap on the number of vertices a [`Graph`] may have.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `0..n` of an ambient graph, stored as a bit mask.
///
/// The set itself does not know its ambient graph; operations that need the
/// graph take it as an argument and debug-assert containment.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn single(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// The smallest vertex in the set, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates the members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    /// Renders as a sorted element list, e.g. `{0,2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A two-sided partition of the vertex set with no edge inside either side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// Witness that a graph is not bipartite: a closed walk of odd length,
/// listed as vertices with `walk[0] == walk[len-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddClosedWalk(pub Vec<usize>);

/// Graph diameter; disconnected graphs get the distinguished infinite value
/// rather than a sentinel integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {n} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("adjacency not symmetric at ({u},{v})")]
    NotSymmetric { u: usize, v: usize },
}

/// A finite simple undirected graph on vertices `0..n`, `n <= 64`.
///
/// `adj[v]` is the open neighbourhood `N(v)` as a bit mask. Invariants
/// (no loops, symmetry, no bits at or above `n`) are established at
/// construction time; all operations preserve them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows, validating the invariants.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mask = VertexSet::full(n).bits();
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    v: (row & !mask).trailing_zeros() as usize,
                    n,
                });
            }
            if row & (1u64 << v) != 0 {
                return Err(GraphError::SelfLoop { v });
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if (adj[u] >> v) & 1 != (adj[v] >> u) & 1 {
                    return Err(GraphError::NotSymmetric { u, v });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    /// Adds the edge `{u, v}`. Panics on an invalid pair; use the
    /// constructors for fallible building.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | (1u64 << v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1u64 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Maximum degree; 0 for the graph on no vertices.
    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut bits = self.adj[u] & !VertexSet::full(u + 1).bits();
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                out.push((u, v));
                bits &= bits - 1;
            }
        }
        out
    }

    /// Connectivity by search from vertex 0; graphs with at most one vertex
    /// are connected by convention.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertices().bits()
    }

    /// Maximum shortest-path distance over connected pairs; `Infinite` when
    /// two nonempty components exist, 0 for graphs with at most one vertex.
    pub fn diameter(&self) -> Diameter {
        if self.n <= 1 {
            return Diameter::Finite(0);
        }
        if !self.is_connected() {
            return Diameter::Infinite;
        }
        let mut best = 0usize;
        for s in 0..self.n {
            // BFS by mask layers.
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut dist = 0usize;
            loop {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v];
                }
                let fresh = next & !seen;
                if fresh == 0 {
                    break;
                }
                dist += 1;
                seen |= fresh;
                frontier = fresh;
            }
            best = best.max(dist);
        }
        Diameter::Finite(best)
    }

    /// True iff no three mutually adjacent vertices exist.
    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            let mut bits = self.adj[u];
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if v > u && self.adj[u] & self.adj[v] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Breadth-first 2-colouring. Each component's first-visited vertex (the
    /// smallest unvisited index) goes to `side_a`. On failure the witness is
    /// an odd closed walk assembled from the two conflicting search paths.
    pub fn bipartition(&self) -> Result<Bipartition, OddClosedWalk> {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut side_a = VertexSet::EMPTY;
        let mut side_b = VertexSet::EMPTY;
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            side_a = side_a.with(root);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u).iter() {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        if color[v] == 0 {
                            side_a = side_a.with(v);
                        } else {
                            side_b = side_b.with(v);
                        }
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return Err(odd_closed_walk(&parent, u, v));
                    }
                }
            }
        }
        Ok(Bipartition { side_a, side_b })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// The subgraph induced by `s`, relabelled to `0..s.len()` in ascending
    /// vertex order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        debug_assert!(s.is_subset_of(self.vertices()));
        let verts: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(verts.len()).expect("induced subgraph within cap");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// The relabelled copy in which vertex `v` becomes `perm[v]`.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Joins the BFS-tree paths of the conflict edge `{u, v}` into an odd closed
/// walk `u → … → root → … → v → u`.
fn odd_closed_walk(parent: &[usize], u: usize, v: usize) -> OddClosedWalk {
    let chain = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let up_u = chain(u);
    let mut up_v = chain(v);
    up_v.reverse();
    let mut walk = up_u;
    walk.extend_from_slice(&up_v[1..]);
    walk.push(u);
    OddClosedWalk(walk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0, 2, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.to_string(), "{0,2,5}");
        assert_eq!(s.without(2).iter().collect::<Vec<_>>(), vec![0, 5]);
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            Graph::empty(65).unwrap_err(),
            GraphError::TooManyVertices { n: 65 }
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(GraphError::SelfLoop { v: 0 })
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::from_adjacency(vec![0b010, 0b000, 0b000]),
            Err(GraphError::NotSymmetric { u: 0, v: 1 })
        ));
    }

    #[test]
    fn degrees_and_connectivity() {
        let k23 = families::complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.max_degree(), 3);
        assert!(k23.is_connected());

        let edgeless = Graph::empty(3).unwrap();
        assert_eq!(edgeless.max_degree(), 0);
        assert!(!edgeless.is_connected());

        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.max_degree(), 0);
        assert!(k1.is_connected());

        let g0 = Graph::empty(0).unwrap();
        assert!(g0.is_connected());
        assert_eq!(g0.diameter(), Diameter::Finite(0));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(families::cycle(4).unwrap().diameter(), Diameter::Finite(2));
        assert_eq!(families::path(4).unwrap().diameter(), Diameter::Finite(3));
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.diameter(), Diameter::Infinite);
    }

    #[test]
    fn triangle_detection() {
        assert!(!families::complete(3).unwrap().is_triangle_free());
        assert!(families::cycle(4).unwrap().is_triangle_free());
        assert!(families::complete_bipartite(2, 3).unwrap().is_triangle_free());
    }

    #[test]
    fn bipartition_of_c4() {
        let b = families::cycle(4).unwrap().bipartition().unwrap();
        assert_eq!(b.side_a, [0, 2].into_iter().collect());
        assert_eq!(b.side_b, [1, 3].into_iter().collect());
    }

    #[test]
    fn bipartition_of_empty_graph() {
        let b = Graph::empty(0).unwrap().bipartition().unwrap();
        assert!(b.side_a.is_empty());
        assert!(b.side_b.is_empty());
    }

    #[test]
    fn odd_walk_witness_is_closed_odd_and_real() {
        for g in [
            families::complete(3).unwrap(),
            families::cycle(5).unwrap(),
            families::complete(5).unwrap(),
        ] {
            let OddClosedWalk(walk) = g.bipartition().unwrap_err();
            assert_eq!(walk.first(), walk.last());
            assert_eq!((walk.len() - 1) % 2, 1, "walk length must be odd");
            for w in walk.windows(2) {
                assert!(g.has_edge(w[0], w[1]), "walk uses a non-edge");
            }
        }
    }

    #[test]
    fn induced_subgraph_relabels_compactly() {
        let c4 = families::cycle(4).unwrap();
        let sub = c4.induced([1, 2, 3].into_iter().collect());
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
    }
}
