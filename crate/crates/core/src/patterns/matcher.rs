//! Backtracking embedding of small pattern graphs.
//!
//! Pattern vertices are assigned in index order and host candidates are tried
//! in increasing order, so the first embedding found is the lexicographically
//! smallest vertex map.

use crate::coloring::{bits, BitGraph, Color};

/// Lexicographically smallest injective map of `pattern` into `host` that sends edges to edges.
pub fn find_subgraph(pattern: &BitGraph, host: &BitGraph) -> Option<Vec<usize>> {
    let p = pattern.n();
    if p > host.n() {
        return None;
    }
    if p == 0 {
        return Some(Vec::new());
    }
    let need: Vec<usize> = (0..p).map(|i| pattern.degree(i)).collect();
    let back: Vec<u32> = (0..p).map(|i| pattern.neighbors(i) & ((1u32 << i) - 1)).collect();
    let mut map = vec![0usize; p];
    fn go(i: usize, used: u32, map: &mut Vec<usize>, host: &BitGraph, need: &[usize], back: &[u32]) -> bool {
        if i == map.len() {
            return true;
        }
        let mut cand = host.vertex_mask() & !used;
        for j in bits(back[i]) {
            cand &= host.neighbors(map[j]);
        }
        for v in bits(cand) {
            if host.degree(v) < need[i] {
                continue;
            }
            map[i] = v;
            if go(i + 1, used | 1 << v, map, host, need, back) {
                return true;
            }
        }
        false
    }
    go(0, 0, &mut map, host, &need, &back).then_some(map)
}

/// A symmetric color lookup with `0` meaning "not yet colored".
pub trait ColorLookup {
    fn n(&self) -> usize;
    fn get(&self, u: usize, v: usize) -> Color;
}

impl ColorLookup for crate::coloring::EdgeColoring {
    fn n(&self) -> usize {
        self.n_vertices()
    }
    fn get(&self, u: usize, v: usize) -> Color {
        self.color(u, v)
    }
}

fn rainbow_search<L: ColorLookup>(
    pattern: &BitGraph,
    host: &L,
    map: &mut [usize],
    fixed: usize,
    used_vertices: u32,
    used_colors: &mut Vec<Color>,
) -> bool {
    let p = pattern.n();
    fn go<L: ColorLookup>(
        i: usize,
        used: u32,
        map: &mut [usize],
        pattern: &BitGraph,
        host: &L,
        colors: &mut Vec<Color>,
    ) -> bool {
        if i == map.len() {
            return true;
        }
        'cand: for v in 0..host.n() {
            if used >> v & 1 == 1 {
                continue;
            }
            let mark = colors.len();
            for j in bits(pattern.neighbors(i) & ((1u32 << i) - 1)) {
                let c = host.get(map[j], v);
                if c == 0 || colors.contains(&c) {
                    colors.truncate(mark);
                    continue 'cand;
                }
                colors.push(c);
            }
            map[i] = v;
            if go(i + 1, used | 1 << v, map, pattern, host, colors) {
                return true;
            }
            colors.truncate(mark);
        }
        false
    }
    debug_assert!(fixed <= p);
    go(fixed, used_vertices, map, pattern, host, used_colors)
}

/// Lexicographically smallest map of `pattern` whose edges receive pairwise distinct
/// (decided) colors.
pub fn find_rainbow<L: ColorLookup>(pattern: &BitGraph, host: &L) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    let mut map = vec![0; pattern.n()];
    let mut colors = Vec::new();
    rainbow_search(pattern, host, &mut map, 0, 0, &mut colors).then_some(map)
}

/// Whether some rainbow copy of `pattern` uses the host edge `{u, v}`.
///
/// Used by incremental searches: after coloring `{u, v}` only copies through it are new.
pub fn rainbow_through<L: ColorLookup>(pattern: &BitGraph, host: &L, u: usize, v: usize) -> bool {
    if pattern.n() > host.n() || host.get(u, v) == 0 {
        return false;
    }
    let p = pattern.n();
    let mut map = vec![0; p];
    for (a, b) in pattern.edges() {
        for (x, y) in [(u, v), (v, u)] {
            // Relabel so that a, b come first.
            let mut order: Vec<usize> = vec![a, b];
            order.extend((0..p).filter(|&i| i != a && i != b));
            let relabelled = relabel(pattern, &order);
            map[0] = x;
            map[1] = y;
            let mut colors = vec![host.get(x, y)];
            if rainbow_search(&relabelled, host, &mut map, 2, 1 << x | 1 << y, &mut colors) {
                return true;
            }
        }
    }
    false
}

/// Pattern with vertex `order[i]` renamed to `i`.
pub(crate) fn relabel(pattern: &BitGraph, order: &[usize]) -> BitGraph {
    let mut pos = vec![0; pattern.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    BitGraph::from_edges(pattern.n(), pattern.edges().map(|(a, b)| (pos[a], pos[b])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::EdgeColoring;

    #[test]
    fn triangle_in_k4() {
        let tri = BitGraph::complete(3);
        assert_eq!(find_subgraph(&tri, &BitGraph::complete(4)), Some(vec![0, 1, 2]));
        let c4 = BitGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(find_subgraph(&tri, &c4), None);
    }

    #[test]
    fn rainbow_star() {
        let c = EdgeColoring::from_fn(4, 4, |u, v| if u == 0 { v as Color + 1 } else { 1 }).unwrap();
        let star = BitGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(find_rainbow(&star, &c), Some(vec![0, 1, 2, 3]));
        assert!(rainbow_through(&star, &c, 0, 3));
        assert!(!rainbow_through(&star, &c, 1, 2));
        let mono = EdgeColoring::monochromatic(5, 3, 2).unwrap();
        assert_eq!(find_rainbow(&star, &mono), None);
    }
}
