//! Edge colorings of complete graphs.
//!
//! Vertices are `0..n`, colors are `1..=k`. Colors are kept in a flat
//! triangular array whose index order is the lexicographic order of pairs
//! `(u, v)`, `u < v`, so iterating the storage visits edges exactly in the
//! order the ecg writer emits them.

mod ecg;
mod graph;

use std::collections::BTreeSet;

pub use ecg::{read_coloring, write_coloring};
pub(crate) use graph::bits;
pub use graph::BitGraph;

use crate::error::{domain, Error, Result};
use crate::patterns::PatternSpec;

/// Hard vertex limit: vertex subsets must fit in a `u32`.
pub const MAX_VERTICES: usize = 32;

pub type Color = u8;

/// Lexicographic rank of the pair `{u, v}` among all pairs of `0..n`.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A k-edge-coloring of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    k: Color,
    exact: bool,
    colors: Vec<Color>,
}

impl EdgeColoring {
    /// Builds a coloring from per-pair colors in lexicographic pair order.
    ///
    /// The exact flag is validated: it may only be set when every color in
    /// `1..=k` occurs.
    pub fn from_lex_colors(n: usize, k: Color, exact: bool, colors: Vec<Color>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return domain(format!("vertex count {n} outside 1..={MAX_VERTICES}"));
        }
        if k == 0 {
            return domain("a coloring needs at least one color");
        }
        if colors.len() != pair_count(n) {
            return domain(format!("expected {} edge colors for K_{n}, got {}", pair_count(n), colors.len()));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return domain(format!("color {c} outside 1..={k}"));
        }
        let ec = EdgeColoring { n, k, exact: false, colors };
        ec.with_exact_flag(exact)
    }

    /// Builds a coloring from a color function on pairs `u < v`.
    /// The exact flag is set iff the coloring is surjective onto `1..=k`.
    pub fn from_fn(n: usize, k: Color, mut f: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        let mut colors = Vec::with_capacity(pair_count(n));
        for u in 0..n {
            for v in u + 1..n {
                colors.push(f(u, v));
            }
        }
        let mut ec = Self::from_lex_colors(n, k, false, colors)?;
        ec.exact = ec.is_surjective();
        Ok(ec)
    }

    pub fn monochromatic(n: usize, k: Color, c: Color) -> Result<Self> {
        Self::from_fn(n, k, |_, _| c)
    }

    /// Sets or clears the exact flag; setting it on a non-surjective coloring fails.
    pub fn with_exact_flag(mut self, exact: bool) -> Result<Self> {
        if exact {
            if let Some(missing) = (1..=self.k).find(|c| !self.colors.contains(c)) {
                return domain(format!("exact flag set but color {missing} is unused"));
            }
        }
        self.exact = exact;
        Ok(self)
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn n_colors(&self) -> Color {
        self.k
    }

    #[inline]
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        assert!(u != v, "no color on the diagonal");
        self.colors[pair_index(self.n, u, v)]
    }

    /// Colors in lexicographic pair order.
    pub fn lex_colors(&self) -> &[Color] {
        &self.colors
    }

    /// `(u, v, color)` for every pair, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .zip(self.colors.iter().copied())
            .map(|((u, v), c)| (u, v, c))
    }

    pub fn colors_used(&self) -> BTreeSet<Color> {
        self.colors.iter().copied().collect()
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.k as usize + 1];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        seen[1..].iter().all(|&s| s)
    }

    pub fn color_class(&self, c: Color) -> Result<ColorClass<'_>> {
        if c == 0 || c > self.k {
            return domain(format!("color {c} outside 1..={}", self.k));
        }
        Ok(ColorClass { host: self, color: c, graph: self.class_graph(c) })
    }

    /// Graph of the `c`-colored edges (empty if `c` is not a color of this coloring).
    pub fn class_graph(&self, c: Color) -> BitGraph {
        BitGraph::from_edges(self.n, self.edges().filter(|e| e.2 == c).map(|(u, v, _)| (u, v)))
    }

    /// Vertices touched by an edge of color `c` (the set written `V_c` in structure arguments).
    pub fn support(&self, c: Color) -> u32 {
        self.edges().filter(|e| e.2 == c).fold(0, |m, (u, v, _)| m | 1 << u | 1 << v)
    }

    /// Applies a color renumbering `map[old] = new` and a new palette size.
    pub fn recolor(&self, k: Color, map: &[Color]) -> Result<Self> {
        let colors = self.colors.iter().map(|&c| map[c as usize]).collect();
        let mut ec = Self::from_lex_colors(self.n, k, false, colors)?;
        ec.exact = ec.is_surjective();
        Ok(ec)
    }

    /// Restriction to the vertices of `keep`, relabelled in increasing order.
    pub fn induced(&self, keep: &[usize]) -> Result<Self> {
        let colors = (0..keep.len())
            .flat_map(|i| (i + 1..keep.len()).map(move |j| (i, j)))
            .map(|(i, j)| self.color(keep[i], keep[j]))
            .collect();
        Self::from_lex_colors(keep.len(), self.k, false, colors)
    }
}

/// The simple graph formed by one color of a coloring.
#[derive(Clone, Debug)]
pub struct ColorClass<'a> {
    pub host: &'a EdgeColoring,
    pub color: Color,
    pub graph: BitGraph,
}

impl ColorClass<'_> {
    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

/// A witness that a pattern occurs in a coloring.
///
/// `vertex_map[i]` is the host vertex of pattern vertex `i`. For pattern
/// families (linear forests with a minimum size) `pattern` is the concrete
/// member that was found. `color` is set for monochromatic occurrences and
/// absent for rainbow ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub pattern: PatternSpec,
    pub vertex_map: Vec<usize>,
    pub color: Option<Color>,
}

impl Embedding {
    pub fn is_injective(&self) -> bool {
        let mut seen = 0u64;
        self.vertex_map.iter().all(|&v| {
            let fresh = seen >> v & 1 == 0;
            seen |= 1 << v;
            fresh
        })
    }
}

impl std::fmt::Display for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&write_coloring(self))
    }
}

impl std::str::FromStr for EdgeColoring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        read_coloring(s.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g3(n: usize) -> EdgeColoring {
        EdgeColoring::from_fn(n, 4, |u, v| match (u, v) {
            (0, 1) => 2,
            (1, 2) => 3,
            (0, 2) => 4,
            _ => 1,
        })
        .unwrap()
    }

    #[test]
    fn pair_index_is_lexicographic() {
        let n = 7;
        let mut expect = 0;
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(pair_index(n, u, v), expect);
                assert_eq!(pair_index(n, v, u), expect);
                expect += 1;
            }
        }
        assert_eq!(expect, pair_count(n));
    }

    #[test]
    fn color_class_of_monochromatic() {
        let red = EdgeColoring::monochromatic(4, 2, 1).unwrap();
        assert_eq!(red.color_class(1).unwrap().graph, BitGraph::complete(4));
        let blue = red.color_class(2).unwrap();
        assert_eq!(blue.graph, BitGraph::empty(4));
        assert!(!red.is_exact());
        assert!(matches!(red.color_class(3), Err(Error::Domain(_))));
        assert!(matches!(red.color_class(0), Err(Error::Domain(_))));
    }

    #[test]
    fn g3_color_two_is_single_edge() {
        let c = g3(5);
        let class = c.color_class(2).unwrap();
        assert_eq!(class.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn colors_used_examples() {
        let red = EdgeColoring::monochromatic(4, 3, 1).unwrap();
        assert_eq!(red.colors_used(), BTreeSet::from([1]));
        let k2 = EdgeColoring::from_lex_colors(2, 5, false, vec![5]).unwrap();
        assert_eq!(k2.colors_used(), BTreeSet::from([5]));
        assert!(k2.clone().with_exact_flag(true).is_err());
        assert_eq!(g3(6).colors_used(), BTreeSet::from([1, 2, 3, 4]));
        assert!(g3(6).is_exact());
    }

    #[test]
    fn partition_property() {
        let c = g3(8);
        let total: usize = (1..=4).map(|col| c.color_class(col).unwrap().edge_count()).sum();
        assert_eq!(total, pair_count(8));
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(EdgeColoring::monochromatic(33, 1, 1).is_err());
        assert!(EdgeColoring::monochromatic(0, 1, 1).is_err());
        assert!(EdgeColoring::from_lex_colors(3, 2, false, vec![1, 2]).is_err());
        assert!(EdgeColoring::from_lex_colors(3, 2, false, vec![1, 2, 3]).is_err());
    }
}
