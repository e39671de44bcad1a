//! Independent re-validation of witnesses against the host coloring.
//!
//! Deliberately shares no code with the detectors beyond the pattern's own
//! edge list.

use super::{ForestWitness, PatternSpec};
use crate::coloring::{Color, EdgeColoring, Embedding};
use crate::error::{Error, Result};

fn bad<T>(msg: String) -> Result<T> {
    Err(Error::Internal(msg))
}

/// Checks injectivity, size and edge colors of an embedding.
pub fn validate_embedding(host: &EdgeColoring, e: &Embedding) -> Result<()> {
    let Some(edges) = e.pattern.edge_list() else {
        return bad(format!("witness pattern {} is not concrete", e.pattern));
    };
    if e.vertex_map.len() != e.pattern.order() {
        return bad(format!("witness maps {} vertices, pattern has {}", e.vertex_map.len(), e.pattern.order()));
    }
    if e.vertex_map.iter().any(|&v| v >= host.n_vertices()) {
        return bad("witness vertex outside host".into());
    }
    for (i, a) in e.vertex_map.iter().enumerate() {
        if e.vertex_map[i + 1..].contains(a) {
            return bad(format!("witness map is not injective at host vertex {a}"));
        }
    }
    let colors: Vec<Color> = edges.iter().map(|&(a, b)| host.color(e.vertex_map[a], e.vertex_map[b])).collect();
    match e.color {
        Some(c) => {
            if let Some(pos) = colors.iter().position(|&x| x != c) {
                let (a, b) = edges[pos];
                return bad(format!("pattern edge {a}-{b} maps to host edge of color {}, expected {c}", colors[pos]));
            }
        }
        None => {
            let mut sorted = colors.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return bad("rainbow witness repeats a color".into());
            }
        }
    }
    Ok(())
}

/// Checks that every component is a path of color `color` with at least `min_order`
/// vertices and that components are vertex-disjoint.
pub fn validate_forest(host: &EdgeColoring, color: Color, w: &ForestWitness, min_order: usize) -> Result<()> {
    let mut seen = vec![false; host.n_vertices()];
    for comp in &w.components {
        if comp.len() < min_order.max(2) {
            return bad(format!("component of order {} below minimum {min_order}", comp.len()));
        }
        for &v in comp {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return bad(format!("vertex {v} repeated or out of range in forest witness"));
            }
        }
        for pair in comp.windows(2) {
            if host.color(pair[0], pair[1]) != color {
                return bad(format!("forest edge {}-{} is not color {color}", pair[0], pair[1]));
            }
        }
    }
    let concrete = PatternSpec::LinearForestExact(w.components.iter().map(Vec::len).collect());
    debug_assert_eq!(concrete.edge_count(), w.edge_count());
    Ok(())
}
