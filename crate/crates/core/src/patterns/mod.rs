//! Monochromatic and rainbow pattern detection.
//!
//! Each pattern kind is served by a [`Detector`] strategy; [`resolve`] picks
//! the first registered detector that supports a pattern on a given host
//! size, falling back to the generic subgraph matcher for small explicit
//! graphs. No detector ever answers for a pattern it does not support.

mod forest;
mod matcher;
mod path;
mod spec;
mod validate;

pub use forest::{max_linear_forest as max_linear_forest_graph, max_linear_forest_bounded, ForestWitness};
pub use matcher::{find_rainbow, find_subgraph, rainbow_through, ColorLookup};
pub use path::{find_path, has_path, longest_path_order};
pub use spec::{PatternSpec, MAX_EXPLICIT_ORDER};
pub use validate::{validate_embedding, validate_forest};

use crate::coloring::{bits, BitGraph, Color, EdgeColoring, Embedding};
use crate::error::{domain, Error, Result};

/// Largest host for the exponential linear forest search.
pub const MAX_FOREST_HOST: usize = 20;
/// Largest pattern accepted by the rainbow matcher.
pub const MAX_RAINBOW_ORDER: usize = 8;

/// A strategy deciding presence of one pattern kind inside a single color class.
pub trait Detector: Sync {
    fn name(&self) -> &'static str;
    fn supports(&self, pattern: &PatternSpec, host_order: usize) -> bool;
    fn contains(&self, g: &BitGraph, pattern: &PatternSpec) -> bool {
        self.find(g, pattern).is_some()
    }
    /// The concrete pattern found (differs from `pattern` only for families) and its vertex map.
    fn find(&self, g: &BitGraph, pattern: &PatternSpec) -> Option<(PatternSpec, Vec<usize>)>;
}

pub struct PathDp;
pub struct StarDegree;
pub struct KipasCenter;
pub struct CliqueSearch;
pub struct LinearForestBnb;
pub struct SubgraphBacktrack;

impl Detector for PathDp {
    fn name(&self) -> &'static str {
        "path-dp"
    }
    fn supports(&self, p: &PatternSpec, _: usize) -> bool {
        matches!(p, PatternSpec::Path(_))
    }
    fn contains(&self, g: &BitGraph, p: &PatternSpec) -> bool {
        let PatternSpec::Path(n) = p else { return false };
        has_path(g, *n)
    }
    fn find(&self, g: &BitGraph, p: &PatternSpec) -> Option<(PatternSpec, Vec<usize>)> {
        let PatternSpec::Path(n) = p else { return None };
        find_path(g, *n).map(|m| (p.clone(), m))
    }
}

impl Detector for StarDegree {
    fn name(&self) -> &'static str {
        "star-degree"
    }
    fn supports(&self, p: &PatternSpec, _: usize) -> bool {
        matches!(p, PatternSpec::Star(_))
    }
    fn find(&self, g: &BitGraph, p: &PatternSpec) -> Option<(PatternSpec, Vec<usize>)> {
        let PatternSpec::Star(leaves) = p else { return None };
        (0..g.n()).find(|&v| g.degree(v) >= *leaves).map(|v| {
            let mut map = vec![v];
            map.extend(bits(g.neighbors(v)).take(*leaves));
            (p.clone(), map)
        })
    }
}

impl Detector for KipasCenter {
    fn name(&self) -> &'static str {
        "kipas-center"
    }
    fn supports(&self, p: &PatternSpec, _: usize) -> bool {
        matches!(p, PatternSpec::Kipas(_))
    }
    fn contains(&self, g: &BitGraph, p: &PatternSpec) -> bool {
        let PatternSpec::Kipas(n) = p else { return false };
        (0..g.n()).filter(|&v| g.degree(v) >= *n).any(|v| has_path(&g.induced(g.neighbors(v)).0, *n))
    }
    fn find(&self, g: &BitGraph, p: &PatternSpec) -> Option<(PatternSpec, Vec<usize>)> {
        let PatternSpec::Kipas(n) = p else { return None };
        for v in (0..g.n()).filter(|&v| g.degree(v) >= *n) {
            let (sub, labels) = g.induced(g.neighbors(v));
            if let Some(path) = find_path(&sub, *n) {
                let mut map = vec![v];
                map.extend(path.into_iter().map(|i| labels[i]));
                return Some((p.clone(), map));
            }
        }
        None
    }
}

impl Detector for CliqueSearch {
    fn name(&self) -> &'static str {
        "clique"
    }
    fn supports(&self, p: &PatternSpec, _: usize) -> bool {
        matches!(p, PatternSpec::Complete(_))
    }
    fn find(&self, g: &BitGraph, p: &PatternSpec) -> Option<(PatternSpec, Vec<usize>)> {
        let PatternSpec::Complete(size) = p else { return None };
        fn grow(g: &BitGraph, clique: &mut Vec<usize>, cand: u32, size: usize) -> bool {
            if clique.len() == size {
                return true;
            }
            if clique.len() + (cand.count_ones() as usize) < size {
                return false;
            }
            for v in bits(cand) {
                clique.push(v);
                let later = cand & g.neighbors(v) & !((2u64 << v) - 1) as u32;
                if grow(g, clique, later, size) {
                    return true;
                }
                clique.pop();
            }
            false
        }
        let mut clique = Vec::with_capacity(*size);
        grow(g, &mut clique, g.vertex_mask(), *size).then(|| (p.clone(), clique))
    }
}

impl Detector for LinearForestBnb {
    fn name(&self) -> &'static str {
        "linear-forest-bnb"
    }
    fn supports(&self, p: &PatternSpec, host_order: usize) -> bool {
        matches!(p, PatternSpec::LinearForestMinEdges { .. }) && host_order <= MAX_FOREST_HOST
    }
    fn contains(&self, g: &BitGraph, p: &PatternSpec) -> bool {
        let PatternSpec::LinearForestMinEdges { min_edges, min_order } = p else { return false };
        *min_edges < g.n() && max_linear_forest_bounded(g, *min_order, *min_edges).0 >= *min_edges
    }
    fn find(&self, g: &BitGraph, p: &PatternSpec) -> Option<(PatternSpec, Vec<usize>)> {
        let PatternSpec::LinearForestMinEdges { min_edges, min_order } = p else { return None };
        let (edges, w) = max_linear_forest_bounded(g, *min_order, *min_edges);
        if edges < *min_edges {
            return None;
        }
        let mut comps = w.components;
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let concrete = PatternSpec::LinearForestExact(comps.iter().map(Vec::len).collect());
        Some((concrete, comps.concat()))
    }
}

impl Detector for SubgraphBacktrack {
    fn name(&self) -> &'static str {
        "subgraph-backtrack"
    }
    fn supports(&self, p: &PatternSpec, _: usize) -> bool {
        p.is_concrete() && p.order() <= 2 * MAX_EXPLICIT_ORDER
    }
    fn find(&self, g: &BitGraph, p: &PatternSpec) -> Option<(PatternSpec, Vec<usize>)> {
        find_subgraph(&p.graph()?, g).map(|m| (p.clone(), m))
    }
}

static DETECTORS: &[&dyn Detector] =
    &[&PathDp, &StarDegree, &KipasCenter, &CliqueSearch, &LinearForestBnb, &SubgraphBacktrack];

/// All registered detectors, in resolution order.
pub fn detectors() -> &'static [&'static dyn Detector] {
    DETECTORS
}

pub fn detector_by_name(name: &str) -> Option<&'static dyn Detector> {
    DETECTORS.iter().copied().find(|d| d.name() == name)
}

/// The detector used for `pattern` on hosts with `host_order` vertices.
pub fn resolve(pattern: &PatternSpec, host_order: usize) -> Result<&'static dyn Detector> {
    pattern.validate()?;
    DETECTORS
        .iter()
        .copied()
        .find(|d| d.supports(pattern, host_order))
        .ok_or_else(|| Error::Capability(format!("no detector supports {pattern} on {host_order} vertices")))
}

fn check_color(c: &EdgeColoring, color: Color) -> Result<()> {
    if color == 0 || color > c.n_colors() {
        return domain(format!("color {color} outside 1..={}", c.n_colors()));
    }
    Ok(())
}

/// Order of a longest path of color `color`, with the lexicographically smallest witness.
pub fn longest_mono_path(c: &EdgeColoring, color: Color) -> Result<(usize, Embedding)> {
    check_color(c, color)?;
    let g = c.class_graph(color);
    let order = longest_path_order(&g);
    let map = find_path(&g, order).ok_or_else(|| Error::Internal("path witness lost".into()))?;
    Ok((order, Embedding { pattern: PatternSpec::Path(order), vertex_map: map, color: Some(color) }))
}

/// An embedding of `pattern` into color class `color`, if one exists.
///
/// Patterns with more vertices than the host are reported absent.
pub fn has_mono_pattern(c: &EdgeColoring, color: Color, pattern: &PatternSpec) -> Result<Option<Embedding>> {
    check_color(c, color)?;
    let det = resolve(pattern, c.n_vertices())?;
    if pattern.order() > c.n_vertices() {
        return Ok(None);
    }
    let g = c.class_graph(color);
    Ok(det.find(&g, pattern).map(|(p, m)| Embedding { pattern: p, vertex_map: m, color: Some(color) }))
}

/// The first color (ascending) containing `pattern`, with its embedding.
pub fn has_any_mono(c: &EdgeColoring, pattern: &PatternSpec) -> Result<Option<Embedding>> {
    for color in 1..=c.n_colors() {
        if let Some(e) = has_mono_pattern(c, color, pattern)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Maximum linear forest in color `color` whose components have at least `min_order` vertices.
pub fn max_linear_forest(c: &EdgeColoring, color: Color, min_order: usize) -> Result<(usize, ForestWitness)> {
    check_color(c, color)?;
    if !(2..=3).contains(&min_order) {
        return domain(format!("minimum component order must be 2 or 3, got {min_order}"));
    }
    if c.n_vertices() > MAX_FOREST_HOST {
        return Err(Error::Capability(format!(
            "linear forest search supports at most {MAX_FOREST_HOST} vertices, got {}",
            c.n_vertices()
        )));
    }
    Ok(max_linear_forest_graph(&c.class_graph(color), min_order))
}

/// An embedding of `pattern` whose edges carry pairwise distinct colors.
pub fn has_rainbow(c: &EdgeColoring, pattern: &PatternSpec) -> Result<Option<Embedding>> {
    pattern.validate()?;
    let Some(g) = pattern.graph() else {
        return Err(Error::Capability(format!("rainbow search needs a concrete pattern, got {pattern}")));
    };
    if pattern.order() > MAX_RAINBOW_ORDER {
        return Err(Error::Capability(format!(
            "rainbow search supports patterns on at most {MAX_RAINBOW_ORDER} vertices"
        )));
    }
    Ok(find_rainbow(&g, c).map(|m| Embedding { pattern: pattern.clone(), vertex_map: m, color: None }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma1() -> EdgeColoring {
        EdgeColoring::from_fn(4, 3, |u, v| match (u, v) {
            (0, 1) => 2,
            (2, 3) => 3,
            _ => 1,
        })
        .unwrap()
    }

    #[test]
    fn clique_contains_kipas() {
        let red = EdgeColoring::monochromatic(5, 2, 1).unwrap();
        let e = has_mono_pattern(&red, 1, &PatternSpec::Kipas(4)).unwrap().unwrap();
        assert_eq!(e.vertex_map, vec![0, 1, 2, 3, 4]);
        validate_embedding(&red, &e).unwrap();
    }

    #[test]
    fn gamma1_has_no_kipas2() {
        let g = gamma1();
        for c in 1..=3 {
            assert!(has_mono_pattern(&g, c, &PatternSpec::Kipas(2)).unwrap().is_none());
        }
    }

    #[test]
    fn longest_path_examples() {
        let red = EdgeColoring::monochromatic(4, 2, 1).unwrap();
        assert_eq!(longest_mono_path(&red, 1).unwrap().0, 4);
        let (order, w) = longest_mono_path(&red, 2).unwrap();
        assert_eq!(order, 1);
        assert_eq!(w.vertex_map, vec![0]);
    }

    #[test]
    fn forest_family_yields_concrete_member() {
        let c = EdgeColoring::from_fn(6, 2, |u, v| if v == u + 1 { 2 } else { 1 }).unwrap();
        let p: PatternSpec = "lf:minedges=3,minorder=3".parse().unwrap();
        let e = has_mono_pattern(&c, 2, &p).unwrap().unwrap();
        assert!(e.pattern.is_concrete());
        validate_embedding(&c, &e).unwrap();
    }

    #[test]
    fn pattern_larger_than_host_is_absent() {
        let red = EdgeColoring::monochromatic(3, 1, 1).unwrap();
        assert!(has_mono_pattern(&red, 1, &PatternSpec::Path(4)).unwrap().is_none());
    }

    #[test]
    fn rainbow_examples() {
        let c = EdgeColoring::from_fn(4, 4, |u, v| if u == 0 { v as Color + 1 } else { 1 }).unwrap();
        let e = has_rainbow(&c, &PatternSpec::Star(3)).unwrap().unwrap();
        validate_embedding(&c, &e).unwrap();
        let mono = EdgeColoring::monochromatic(6, 4, 3).unwrap();
        for p in [PatternSpec::Complete(3), PatternSpec::Star(3), PatternSpec::Path(5), PatternSpec::p4_plus()] {
            assert!(has_rainbow(&mono, &p).unwrap().is_none());
        }
    }

    #[test]
    fn registry_resolution() {
        assert_eq!(resolve(&PatternSpec::Path(3), 5).unwrap().name(), "path-dp");
        assert_eq!(resolve(&PatternSpec::p4_plus(), 5).unwrap().name(), "subgraph-backtrack");
        let lf: PatternSpec = "lf:minedges=2".parse().unwrap();
        assert_eq!(resolve(&lf, 20).unwrap().name(), "linear-forest-bnb");
        assert!(matches!(resolve(&lf, 21), Err(Error::Capability(_))));
        assert!(detector_by_name("kipas-center").is_some());
    }
}
