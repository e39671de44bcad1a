//! Brute-force reference implementations used to cross-check the detectors.
//!
//! Nothing here shares code with the `patterns` module beyond the pattern
//! edge lists; everything is plain enumeration and only usable on tiny hosts.

use crate::coloring::{Color, EdgeColoring};
use crate::patterns::PatternSpec;

/// Adjacency matrix of one color class.
pub fn class_matrix(c: &EdgeColoring, color: Color) -> Vec<Vec<bool>> {
    let n = c.n_vertices();
    let mut m = vec![vec![false; n]; n];
    for (u, v, col) in c.edges() {
        if col == color {
            m[u][v] = true;
            m[v][u] = true;
        }
    }
    m
}

/// Number of vertices of a longest path, found by extending every simple vertex sequence.
pub fn longest_path(adj: &[Vec<bool>]) -> usize {
    fn extend(adj: &[Vec<bool>], seq: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(seq.len());
        let last = *seq.last().unwrap();
        for w in 0..adj.len() {
            if adj[last][w] && !seq.contains(&w) {
                seq.push(w);
                extend(adj, seq, best);
                seq.pop();
            }
        }
    }
    let mut best = 0;
    for s in 0..adj.len() {
        extend(adj, &mut vec![s], &mut best);
    }
    best
}

/// Whether some injective vertex map sends every pattern edge onto a host edge.
pub fn contains_graph(adj: &[Vec<bool>], order: usize, edges: &[(usize, usize)]) -> bool {
    fn place(i: usize, order: usize, edges: &[(usize, usize)], adj: &[Vec<bool>], map: &mut Vec<usize>) -> bool {
        if i == order {
            return true;
        }
        for h in 0..adj.len() {
            if map.contains(&h) {
                continue;
            }
            map.push(h);
            // Only edges whose endpoints are both placed can be checked yet.
            let ok = edges.iter().all(|&(a, b)| a.max(b) > i || adj[map[a]][map[b]]);
            if ok && place(i + 1, order, edges, adj, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    order <= adj.len() && place(0, order, edges, adj, &mut Vec::new())
}

fn forest_edges(orders: &[usize]) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    let mut base = 0;
    for &len in orders {
        for i in 1..len {
            edges.push((base + i - 1, base + i));
        }
        base += len;
    }
    (base, edges)
}

/// Whether `adj` contains `pattern`; families are expanded into all concrete members
/// that fit the host.
pub fn contains(adj: &[Vec<bool>], pattern: &PatternSpec) -> bool {
    match pattern {
        PatternSpec::LinearForestMinEdges { min_edges, min_order } => {
            // Every multiset of path orders >= min_order with at least min_edges edges.
            let n = adj.len();
            let mut found = false;
            fn rec(left: usize, lo: usize, cur: &mut Vec<usize>, need: usize, adj: &[Vec<bool>], found: &mut bool) {
                if *found {
                    return;
                }
                let edges: usize = cur.iter().map(|l| l - 1).sum();
                if edges >= need && !cur.is_empty() {
                    let (order, e) = forest_edges(cur);
                    if contains_graph(adj, order, &e) {
                        *found = true;
                    }
                    return;
                }
                for len in lo..=left {
                    cur.push(len);
                    rec(left - len, len, cur, need, adj, found);
                    cur.pop();
                }
            }
            rec(n, *min_order, &mut Vec::new(), *min_edges, adj, &mut found);
            found
        }
        other => match other.edge_list() {
            Some(e) => contains_graph(adj, other.order(), &e),
            None => false,
        },
    }
}

/// Naive counterpart of `has_mono_pattern(...).is_some()`.
pub fn has_mono(c: &EdgeColoring, color: Color, pattern: &PatternSpec) -> bool {
    contains(&class_matrix(c, color), pattern)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let c = EdgeColoring::from_fn(5, 2, |u, v| if v == u + 1 { 1 } else { 2 }).unwrap();
        assert_eq!(longest_path(&class_matrix(&c, 1)), 5);
        assert!(has_mono(&c, 1, &PatternSpec::LinearForestExact(vec![2, 2])));
        assert!(!has_mono(&c, 1, &PatternSpec::Star(3)));
        assert!(has_mono(&c, 1, &PatternSpec::LinearForestMinEdges { min_edges: 4, min_order: 3 }));
        assert!(!has_mono(&c, 1, &PatternSpec::LinearForestMinEdges { min_edges: 5, min_order: 2 }));
    }
}
