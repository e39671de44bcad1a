//! Maximum linear forests by branch and bound.
//!
//! Edges are decided in lexicographic order, inclusion first. A partial
//! forest keeps, for every path endpoint, the opposite endpoint and the
//! path's vertex count, which makes the acyclicity test and the merge O(1).
//! With a minimum component order of 3, every two-vertex component is
//! discounted from the value: dropping its edge always leaves a valid forest.

use crate::coloring::BitGraph;

/// A linear forest inside one color class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestWitness {
    /// Vertex sequences, one per component, each starting at its smaller endpoint; sorted.
    pub components: Vec<Vec<usize>>,
}

impl ForestWitness {
    /// `|L|`, the number of vertices covered.
    pub fn total_order(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// `mu_L`, the number of components.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn edge_count(&self) -> usize {
        self.total_order() - self.component_count()
    }

    fn from_edges(n: usize, edges: &[(usize, usize)], min_order: usize) -> Self {
        let g = BitGraph::from_edges(n, edges.iter().copied());
        let mut components = Vec::new();
        let mut seen = 0u32;
        for v in 0..n {
            if seen >> v & 1 == 1 || g.degree(v) != 1 {
                continue;
            }
            let mut seq = vec![v];
            let (mut prev, mut cur) = (usize::MAX, v);
            loop {
                let next = crate::coloring::bits(g.neighbors(cur)).find(|&w| w != prev);
                match next {
                    Some(w) => {
                        seq.push(w);
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
            for &w in &seq {
                seen |= 1 << w;
            }
            if seq.len() >= min_order {
                components.push(seq);
            }
        }
        components.sort();
        ForestWitness { components }
    }
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    /// `rem[i][v]`: edges at index >= i incident to `v`.
    rem: Vec<Vec<u8>>,
    deg: Vec<u8>,
    other: Vec<usize>,
    size: Vec<usize>,
    chosen: Vec<(usize, usize)>,
    small_components: usize,
    min_order: usize,
    best_value: usize,
    best: Vec<(usize, usize)>,
    stop_at: usize,
}

impl Search<'_> {
    fn value(&self) -> usize {
        self.chosen.len() - if self.min_order == 3 { self.small_components } else { 0 }
    }

    fn bound(&self, i: usize) -> usize {
        let slack: usize = self.deg.iter().zip(&self.rem[i]).map(|(&d, &r)| (2 - d as usize).min(r as usize)).sum();
        self.chosen.len() + (self.edges.len() - i).min(slack / 2)
    }

    fn run(&mut self, i: usize) {
        let value = self.value();
        if value > self.best_value {
            self.best_value = value;
            self.best = self.chosen.clone();
        }
        if self.best_value >= self.stop_at || i == self.edges.len() || self.bound(i) <= self.best_value {
            return;
        }
        let (u, v) = self.edges[i];
        if self.deg[u] < 2 && self.deg[v] < 2 && self.other[u] != v {
            let (a, b) = (self.other[u], self.other[v]);
            let (su, sv) = (self.size[u], self.size[v]);
            let saved = (self.other[a], self.other[b], self.size[a], self.size[b], self.small_components);
            let merged = su + sv;
            self.small_components =
                self.small_components + usize::from(merged == 2) - usize::from(su == 2) - usize::from(sv == 2);
            self.other[a] = b;
            self.other[b] = a;
            self.size[a] = merged;
            self.size[b] = merged;
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen.push((u, v));
            self.run(i + 1);
            self.chosen.pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
            self.other[a] = saved.0;
            self.other[b] = saved.1;
            self.size[a] = saved.2;
            self.size[b] = saved.3;
            self.small_components = saved.4;
            if self.best_value >= self.stop_at {
                return;
            }
        }
        self.run(i + 1);
    }
}

/// Maximum number of edges of a linear forest in `g` whose components all have
/// at least `min_order` vertices, stopping as soon as `stop_at` edges are reached.
pub fn max_linear_forest_bounded(g: &BitGraph, min_order: usize, stop_at: usize) -> (usize, ForestWitness) {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut rem = vec![vec![0u8; n]; edges.len() + 1];
    for i in (0..edges.len()).rev() {
        rem[i] = rem[i + 1].clone();
        rem[i][edges[i].0] += 1;
        rem[i][edges[i].1] += 1;
    }
    let cap = n.saturating_sub(1);
    let mut s = Search {
        edges: &edges,
        rem,
        deg: vec![0; n],
        other: (0..n).collect(),
        size: vec![1; n],
        chosen: Vec::new(),
        small_components: 0,
        min_order,
        best_value: 0,
        best: Vec::new(),
        stop_at: stop_at.min(cap),
    };
    s.run(0);
    let witness = ForestWitness::from_edges(n, &s.best, min_order);
    (witness.edge_count(), witness)
}

pub fn max_linear_forest(g: &BitGraph, min_order: usize) -> (usize, ForestWitness) {
    max_linear_forest_bounded(g, min_order, usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_itself() {
        let g = BitGraph::from_edges(7, (1..7).map(|i| (i - 1, i)));
        let (e, w) = max_linear_forest(&g, 3);
        assert_eq!(e, 6);
        assert_eq!(w.components, vec![vec![0, 1, 2, 3, 4, 5, 6]]);
    }

    #[test]
    fn star_gives_p3() {
        let g = BitGraph::from_edges(4, (1..4).map(|i| (0, i)));
        let (e, w) = max_linear_forest(&g, 2);
        assert_eq!(e, 2);
        assert_eq!(w.components, vec![vec![1, 0, 2]]);
    }

    #[test]
    fn min_order_three_drops_matchings() {
        let g = BitGraph::from_edges(6, [(0, 1), (2, 3), (4, 5)]);
        assert_eq!(max_linear_forest(&g, 2).0, 3);
        let (e, w) = max_linear_forest(&g, 3);
        assert_eq!(e, 0);
        assert!(w.components.is_empty());
    }

    #[test]
    fn complete_graph_hamiltonian() {
        let (e, w) = max_linear_forest(&BitGraph::complete(12), 3);
        assert_eq!(e, 11);
        assert_eq!(w.component_count(), 1);
    }

    #[test]
    fn triangle_plus_pendant() {
        let g = BitGraph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]);
        assert_eq!(max_linear_forest(&g, 2).0, 4);
    }
}
