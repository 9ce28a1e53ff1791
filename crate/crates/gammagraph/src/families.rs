//! Named graph families: paths, cycles, complete and complete bipartite
//! graphs, addressable from the CLI and tests as `p4`, `c5`, `k6`, `k2,3`.

use crate::graph::{Graph, GraphError};

/// Path `P_n` on vertices `0-1-…-(n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut g = path(n)?;
    g.add_edge(n - 1, 0);
    Ok(g)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Complete bipartite graph `K_{m,n}` with sides `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(m + n)?;
    for u in 0..m {
        for v in m..(m + n) {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Parses a family name: `p<n>`, `c<n>`, `k<n>`, or `k<m>,<n>`
/// (case-insensitive). Returns `None` when the string is not a family name
/// or the parameters are out of range.
pub fn parse_named(name: &str) -> Option<Graph> {
    let name = name.trim().to_ascii_lowercase();
    let rest = name.strip_prefix(['p', 'c', 'k'])?;
    let kind = name.as_bytes()[0];
    if let Some((a, b)) = rest.split_once(',') {
        if kind != b'k' {
            return None;
        }
        let m: usize = a.parse().ok()?;
        let n: usize = b.parse().ok()?;
        if m == 0 || n == 0 {
            return None;
        }
        return complete_bipartite(m, n).ok();
    }
    let n: usize = rest.parse().ok()?;
    match kind {
        b'p' if n >= 1 => path(n).ok(),
        b'c' if n >= 3 => cycle(n).ok(),
        b'k' if n >= 1 => complete(n).ok(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders_and_sizes() {
        for n in 1..=8 {
            assert_eq!(path(n).unwrap().edge_count(), n - 1);
        }
        for n in 3..=8 {
            assert_eq!(cycle(n).unwrap().edge_count(), n);
        }
        for n in 1..=8 {
            assert_eq!(complete(n).unwrap().edge_count(), n * (n - 1) / 2);
        }
        for m in 1..=4 {
            for n in 1..=4 {
                let g = complete_bipartite(m, n).unwrap();
                assert_eq!(g.n(), m + n);
                assert_eq!(g.edge_count(), m * n);
            }
        }
    }

    #[test]
    fn named_parser() {
        assert_eq!(parse_named("p4").unwrap(), path(4).unwrap());
        assert_eq!(parse_named("C5").unwrap(), cycle(5).unwrap());
        assert_eq!(parse_named("k6").unwrap(), complete(6).unwrap());
        assert_eq!(
            parse_named("k2,3").unwrap(),
            complete_bipartite(2, 3).unwrap()
        );
        assert!(parse_named("c2").is_none());
        assert!(parse_named("q4").is_none());
        assert!(parse_named("k0,3").is_none());
        assert!(parse_named("p").is_none());
        assert!(parse_named("p4,2").is_none());
    }
}
