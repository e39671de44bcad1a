//! Longest paths in small graphs.
//!
//! Existence queries use a subset DP per component: `ends[S]` is the set of
//! vertices at which some path covering exactly `S` ends. Witnesses are then
//! recovered by a lexicographic DFS that is guaranteed to succeed, so the
//! reported path is the lexicographically smallest vertex sequence of the
//! requested order.

use crate::coloring::{bits, BitGraph};

/// Components up to this size use the subset DP; larger ones fall back to DFS.
const DP_LIMIT: usize = 22;

fn dp_table(g: &BitGraph) -> Vec<u32> {
    let n = g.n();
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..ends.len() {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in bits(e) {
            for w in bits(g.neighbors(v) & !(mask as u32)) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    ends
}

/// Whether `g` (a connected component, relabelled) has a path on at least `target` vertices.
fn component_has_path(g: &BitGraph, target: usize) -> bool {
    let n = g.n();
    if n < target {
        return false;
    }
    if target <= 1 {
        return true;
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return true;
    }
    if n > DP_LIMIT {
        return dfs_longest(g, target) >= target;
    }
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..ends.len() {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        if mask.count_ones() as usize + 1 >= target {
            // Any extension reaches the target.
            if bits(e).any(|v| g.neighbors(v) & !(mask as u32) != 0) {
                return true;
            }
            if mask.count_ones() as usize >= target {
                return true;
            }
            continue;
        }
        for v in bits(e) {
            for w in bits(g.neighbors(v) & !(mask as u32)) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    false
}

/// Longest path order by exhaustive DFS, stopping early once `stop_at` is reached.
fn dfs_longest(g: &BitGraph, stop_at: usize) -> usize {
    fn go(g: &BitGraph, v: usize, seen: u32, len: usize, best: &mut usize, stop_at: usize) {
        if len > *best {
            *best = len;
        }
        if *best >= stop_at {
            return;
        }
        let free = g.vertex_mask() & !seen;
        if len + (g.reach(v, free | 1 << v).count_ones() as usize - 1) <= *best {
            return;
        }
        for w in bits(g.neighbors(v) & free) {
            go(g, w, seen | 1 << w, len + 1, best, stop_at);
            if *best >= stop_at {
                return;
            }
        }
    }
    let mut best = if g.n() > 0 { 1 } else { 0 };
    for v in 0..g.n() {
        go(g, v, 1 << v, 1, &mut best, stop_at);
        if best >= stop_at {
            break;
        }
    }
    best
}

fn component_longest(g: &BitGraph) -> usize {
    let n = g.n();
    if n <= 1 || g.edge_count() == n * (n - 1) / 2 {
        return n;
    }
    if n > DP_LIMIT {
        return dfs_longest(g, n);
    }
    let ends = dp_table(g);
    let mut best = 1;
    for (mask, &e) in ends.iter().enumerate() {
        if e != 0 {
            best = best.max(mask.count_ones() as usize);
            if best == n {
                break;
            }
        }
    }
    best
}

/// Whether `g` contains a path on at least `target` vertices.
pub fn has_path(g: &BitGraph, target: usize) -> bool {
    if target <= 1 {
        return g.n() >= target;
    }
    g.components()
        .into_iter()
        .filter(|c| c.count_ones() as usize >= target)
        .any(|c| component_has_path(&g.induced(c).0, target))
}

/// Order of a longest path in `g` (0 only for the empty vertex set).
pub fn longest_path_order(g: &BitGraph) -> usize {
    let mut best = usize::from(g.n() > 0);
    for c in g.components() {
        if (c.count_ones() as usize) > best {
            best = best.max(component_longest(&g.induced(c).0));
        }
    }
    best
}

/// Lexicographically smallest vertex sequence forming a path on exactly `order` vertices.
pub fn find_path(g: &BitGraph, order: usize) -> Option<Vec<usize>> {
    if order == 0 || order > g.n() || !has_path(g, order) {
        return None;
    }
    fn go(g: &BitGraph, path: &mut Vec<usize>, seen: u32, order: usize) -> bool {
        if path.len() == order {
            return true;
        }
        let v = *path.last().unwrap();
        let free = g.vertex_mask() & !seen;
        if path.len() + g.reach(v, free | 1 << v).count_ones() as usize - 1 < order {
            return false;
        }
        for w in bits(g.neighbors(v) & free) {
            path.push(w);
            if go(g, path, seen | 1 << w, order) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = Vec::with_capacity(order);
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        if go(g, &mut path, 1 << s, order) {
            return Some(path);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> BitGraph {
        BitGraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    #[test]
    fn basics() {
        assert_eq!(longest_path_order(&BitGraph::complete(6)), 6);
        assert_eq!(longest_path_order(&BitGraph::empty(4)), 1);
        assert_eq!(longest_path_order(&path_graph(7)), 7);
        let star = BitGraph::from_edges(5, (1..5).map(|i| (0, i)));
        assert_eq!(longest_path_order(&star), 3);
        assert!(has_path(&star, 3));
        assert!(!has_path(&star, 4));
        assert_eq!(find_path(&star, 3), Some(vec![1, 0, 2]));
    }

    #[test]
    fn lex_smallest_witness() {
        let g = path_graph(5);
        assert_eq!(find_path(&g, 5), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(find_path(&g, 2), Some(vec![0, 1]));
        let c = BitGraph::complete(4);
        assert_eq!(find_path(&c, 4), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn dfs_matches_dp() {
        let g = BitGraph::from_edges(9, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (6, 7), (1, 8)]);
        let dp = longest_path_order(&g);
        assert_eq!(dp, dfs_longest(&g, usize::MAX));
        assert_eq!(dp, 7);
        for t in 1..=9 {
            assert_eq!(has_path(&g, t), t <= 7);
        }
    }
}
