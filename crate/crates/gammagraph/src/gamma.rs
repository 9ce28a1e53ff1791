//! Reconfiguration graphs of minimum dominating sets.
//!
//! Vertices are the γ-sets of a base graph in report order; two γ-sets are
//! adjacent in the jump model when they differ by a single vertex, and in
//! the slide model when additionally the two differing vertices are
//! adjacent in the base graph.

use crate::domination::enumerate_gamma_sets;
use crate::graph::{Diameter, Graph, VertexSet};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Adjacency model for γ-graphs.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Model {
    /// Replaced vertices must be adjacent in the base graph.
    #[default]
    Slide,
    /// Any single-vertex replacement.
    Jump,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Slide => f.write_str("slide"),
            Model::Jump => f.write_str("jump"),
        }
    }
}

impl FromStr for Model {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "slide" => Ok(Model::Slide),
            "jump" => Ok(Model::Jump),
            other => Err(format!("unknown model {other:?}; expected slide or jump")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GammaGraphError {
    #[error("gamma-graph on {order} vertices exceeds the {cap}-vertex graph cap")]
    TooManyGammaSets { order: usize, cap: usize },
}

/// True iff the γ-sets differ by exactly one element on each side; the
/// replaced vertices need not be adjacent.
pub fn jump_adjacent(_g: &Graph, d1: VertexSet, d2: VertexSet) -> bool {
    d1.minus(d2).len() == 1 && d2.minus(d1).len() == 1
}

/// Jump adjacency plus the requirement that the unique swapped pair is an
/// edge of the base graph.
pub fn slide_adjacent(g: &Graph, d1: VertexSet, d2: VertexSet) -> bool {
    if !jump_adjacent(g, d1, d2) {
        return false;
    }
    let x = d1.minus(d2).first().expect("one vertex leaves");
    let y = d2.minus(d1).first().expect("one vertex enters");
    g.has_edge(x, y)
}

/// The γ-graph of a base graph under a model. The vertex list matches
/// `enumerate_gamma_sets` exactly; edges pair indices `i < j`.
#[derive(Clone, Debug)]
pub struct GammaGraph {
    model: Model,
    base: Graph,
    vertices: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// Builds the γ-graph by testing every γ-set pair against the model
/// predicate; pair counts stay small at the supported orders.
pub fn build_gamma_graph(g: &Graph, model: Model) -> GammaGraph {
    let report = enumerate_gamma_sets(g);
    let vertices = report.gamma_sets;
    let k = vertices.len();
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); k];
    for i in 0..k {
        for j in (i + 1)..k {
            let adjacent = match model {
                Model::Slide => slide_adjacent(g, vertices[i], vertices[j]),
                Model::Jump => jump_adjacent(g, vertices[i], vertices[j]),
            };
            if adjacent {
                edges.push((i, j));
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    GammaGraph {
        model,
        base: g.clone(),
        vertices,
        edges,
        adjacency,
    }
}

impl GammaGraph {
    pub fn model(&self) -> Model {
        self.model
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Number of γ-sets.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// The γ-sets in vertex order.
    pub fn gamma_sets(&self) -> &[VertexSet] {
        &self.vertices
    }

    /// Edges as index pairs `(i, j)`, `i < j`, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let k = self.order();
        if k <= 1 {
            return true;
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(v) = stack.pop() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == k
    }

    pub fn is_bipartite(&self) -> bool {
        let k = self.order();
        let mut color = vec![u8::MAX; k];
        for root in 0..k {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adjacency[v] {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn has_triangle(&self) -> bool {
        for &(i, j) in &self.edges {
            for &w in &self.adjacency[i] {
                if w != j && self.adjacency[j].contains(&w) {
                    return true;
                }
            }
        }
        false
    }

    /// Diameter over the γ-set indices; `Infinite` when disconnected.
    pub fn diameter(&self) -> Diameter {
        let k = self.order();
        if k <= 1 {
            return Diameter::Finite(0);
        }
        if !self.is_connected() {
            return Diameter::Infinite;
        }
        let mut best = 0usize;
        for s in 0..k {
            let mut dist = vec![usize::MAX; k];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adjacency[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        best = best.max(dist[u]);
                        queue.push_back(u);
                    }
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Converts to a plain [`Graph`] on the γ-set indices. γ-graphs above
    /// the vertex cap are reported, never truncated.
    pub fn as_graph(&self) -> Result<Graph, GammaGraphError> {
        let k = self.order();
        if k > crate::graph::MAX_VERTICES {
            return Err(GammaGraphError::TooManyGammaSets {
                order: k,
                cap: crate::graph::MAX_VERTICES,
            });
        }
        Ok(Graph::from_edges(k, &self.edges).expect("index pairs are valid edges"))
    }

    /// DOT rendering with γ-sets as vertex labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph gamma {\n");
        for (i, d) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{d}\"];\n"));
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!("  v{i} -- v{j};\n"));
        }
        out.push_str("}\n");
        out
    }
}
