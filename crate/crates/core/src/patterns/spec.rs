use std::fmt;
use std::str::FromStr;

use crate::coloring::BitGraph;
use crate::error::{Error, Result};

/// Largest explicit pattern graph.
pub const MAX_EXPLICIT_ORDER: usize = 8;

/// A target subgraph, or a family of them.
///
/// Vertex numbering of the concrete pattern graph (see [`PatternSpec::graph`]):
/// paths run `0-1-...`, stars and kipas have their center at `0`, a kipas
/// path runs `1-2-...-n`, and exact linear forests list their components
/// consecutively in the stored (non-increasing) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    Path(usize),
    Star(usize),
    Kipas(usize),
    LinearForestMinEdges { min_edges: usize, min_order: usize },
    LinearForestExact(Vec<usize>),
    Complete(usize),
    Explicit { order: usize, edges: Vec<(usize, usize)> },
}

fn syntax<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax(msg.into()))
}

impl PatternSpec {
    /// `P_4` with one extra edge at an inner vertex.
    pub fn p4_plus() -> Self {
        PatternSpec::Explicit { order: 5, edges: vec![(0, 1), (1, 2), (1, 4), (2, 3)] }
    }

    /// Builds and validates an explicit simple graph; edges are normalized and sorted.
    pub fn explicit(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 || order > MAX_EXPLICIT_ORDER {
            return syntax(format!("explicit graphs need 1..={MAX_EXPLICIT_ORDER} vertices, got {order}"));
        }
        let mut norm = Vec::new();
        for (u, v) in edges {
            if u == v {
                return syntax(format!("loop at vertex {u}"));
            }
            if u >= order || v >= order {
                return syntax(format!("edge {u}-{v} outside 0..{order}"));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return syntax("repeated edge in explicit graph");
        }
        Ok(PatternSpec::Explicit { order, edges: norm })
    }

    pub fn validate(&self) -> Result<()> {
        use PatternSpec::*;
        match self {
            Path(n) | Star(n) | Kipas(n) | Complete(n) if *n == 0 => {
                syntax(format!("pattern parameter must be at least 1 in {self}"))
            }
            LinearForestMinEdges { min_edges, min_order } => {
                if *min_edges == 0 {
                    return syntax("lf needs minedges >= 1");
                }
                if !(2..=3).contains(min_order) {
                    return syntax(format!("lf minorder must be 2 or 3, got {min_order}"));
                }
                Ok(())
            }
            LinearForestExact(parts) => {
                if parts.is_empty() || parts.iter().any(|&p| p < 2) {
                    return syntax("lfx components need at least 2 vertices each");
                }
                if self.order() > MAX_EXPLICIT_ORDER * 2 {
                    return syntax("lfx pattern too large");
                }
                Ok(())
            }
            Explicit { order, edges } => Self::explicit(*order, edges.iter().copied()).map(|_| ()),
            _ => Ok(()),
        }
    }

    /// Number of vertices; for the min-edges forest family this is the smallest member's order.
    pub fn order(&self) -> usize {
        use PatternSpec::*;
        match self {
            Path(n) | Complete(n) => *n,
            Star(n) | Kipas(n) => n + 1,
            // The smallest member is a single path.
            LinearForestMinEdges { min_edges, .. } => min_edges + 1,
            LinearForestExact(parts) => parts.iter().sum(),
            Explicit { order, .. } => *order,
        }
    }

    /// Edge list of the concrete pattern graph; `None` for pattern families.
    pub fn edge_list(&self) -> Option<Vec<(usize, usize)>> {
        use PatternSpec::*;
        Some(match self {
            Path(n) => (1..*n).map(|i| (i - 1, i)).collect(),
            Star(n) => (1..=*n).map(|i| (0, i)).collect(),
            Kipas(n) => (1..=*n).map(|i| (0, i)).chain((2..=*n).map(|i| (i - 1, i))).collect(),
            Complete(p) => (0..*p).flat_map(|u| (u + 1..*p).map(move |v| (u, v))).collect(),
            LinearForestExact(parts) => {
                let mut out = Vec::new();
                let mut base = 0;
                for &len in parts {
                    out.extend((1..len).map(|i| (base + i - 1, base + i)));
                    base += len;
                }
                out
            }
            Explicit { edges, .. } => edges.clone(),
            LinearForestMinEdges { .. } => return None,
        })
    }

    pub fn graph(&self) -> Option<BitGraph> {
        self.edge_list().map(|e| BitGraph::from_edges(self.order(), e))
    }

    pub fn edge_count(&self) -> usize {
        match self {
            PatternSpec::LinearForestMinEdges { min_edges, .. } => *min_edges,
            other => other.edge_list().map_or(0, |e| e.len()),
        }
    }

    /// Whether the pattern is a single concrete graph (as opposed to a family).
    pub fn is_concrete(&self) -> bool {
        !matches!(self, PatternSpec::LinearForestMinEdges { .. })
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PatternSpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Star(n) => write!(f, "star:{n}"),
            Kipas(n) => write!(f, "kipas:{n}"),
            Complete(p) => write!(f, "k:{p}"),
            LinearForestMinEdges { min_edges, min_order } => {
                write!(f, "lf:minedges={min_edges},minorder={min_order}")
            }
            LinearForestExact(parts) => {
                let mut sorted = parts.clone();
                sorted.sort_unstable();
                let s: Vec<String> = sorted.iter().map(|p| p.to_string()).collect();
                write!(f, "lfx:{}", s.join("+"))
            }
            p @ Explicit { order, edges } => {
                if *p == PatternSpec::p4_plus() {
                    return f.write_str("p4plus");
                }
                let s: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "graph:{order}:{}", s.join(","))
            }
        }
    }
}

fn num(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().or_else(|_| syntax(format!("{what}: expected a non-negative integer, found {s:?}")))
}

impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "p4plus" {
            return Ok(PatternSpec::p4_plus());
        }
        let Some((kind, rest)) = s.split_once(':') else {
            return syntax(format!("unknown pattern {s:?}"));
        };
        let spec = match kind {
            "path" => PatternSpec::Path(num(rest, "path")?),
            "star" => PatternSpec::Star(num(rest, "star")?),
            "kipas" => PatternSpec::Kipas(num(rest, "kipas")?),
            "k" => PatternSpec::Complete(num(rest, "k")?),
            "lf" => {
                let (mut edges, mut order) = (None, 2);
                for kv in rest.split(',') {
                    match kv.split_once('=') {
                        Some(("minedges", v)) => edges = Some(num(v, "minedges")?),
                        Some(("minorder", v)) => order = num(v, "minorder")?,
                        _ => return syntax(format!("unknown lf option {kv:?}")),
                    }
                }
                let Some(min_edges) = edges else {
                    return syntax("lf requires minedges=M");
                };
                PatternSpec::LinearForestMinEdges { min_edges, min_order: order }
            }
            "lfx" => {
                let mut parts = rest.split('+').map(|p| num(p, "lfx")).collect::<Result<Vec<_>>>()?;
                parts.sort_unstable_by(|a, b| b.cmp(a));
                PatternSpec::LinearForestExact(parts)
            }
            "graph" => {
                let (order, edges) = rest.split_once(':').unwrap_or((rest, ""));
                let order = num(order, "graph order")?;
                let mut list = Vec::new();
                for e in edges.split(',').filter(|e| !e.trim().is_empty()) {
                    let Some((u, v)) = e.split_once('-') else {
                        return syntax(format!("graph edge {e:?} is not of the form u-v"));
                    };
                    list.push((num(u, "graph vertex")?, num(v, "graph vertex")?));
                }
                PatternSpec::explicit(order, list)?
            }
            _ => return syntax(format!("unknown pattern kind {kind:?}")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in [
            "path:5",
            "star:3",
            "kipas:4",
            "k:3",
            "lf:minedges=6,minorder=3",
            "lfx:2+2",
            "lfx:2+4",
            "p4plus",
            "graph:4:0-1,2-3",
        ] {
            let p: PatternSpec = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(p.to_string().parse::<PatternSpec>().unwrap(), p);
        }
        let lf: PatternSpec = "lf:minedges=2".parse().unwrap();
        assert_eq!(lf, PatternSpec::LinearForestMinEdges { min_edges: 2, min_order: 2 });
    }

    #[test]
    fn rejects_garbage() {
        for s in [
            "path",
            "path:x",
            "path:0",
            "lfx:1+2",
            "lf:minorder=4,minedges=2",
            "lf:minorder=2",
            "graph:3:0-0",
            "graph:9:",
            "wheel:5",
            "graph:3:0-1,1-0",
        ] {
            assert!(matches!(s.parse::<PatternSpec>(), Err(Error::Syntax(_))), "{s}");
        }
    }

    #[test]
    fn orders_and_graphs() {
        assert_eq!(PatternSpec::Kipas(4).order(), 5);
        assert_eq!(PatternSpec::Kipas(4).edge_count(), 7);
        assert_eq!(PatternSpec::Star(3).order(), 4);
        assert_eq!(PatternSpec::p4_plus().graph().unwrap().degree(1), 3);
        let lfx: PatternSpec = "lfx:2+4".parse().unwrap();
        assert_eq!(lfx.edge_list().unwrap(), vec![(0, 1), (1, 2), (2, 3), (4, 5)]);
        assert_eq!("lf:minedges=6,minorder=3".parse::<PatternSpec>().unwrap().order(), 7);
        assert_eq!("lf:minedges=5,minorder=3".parse::<PatternSpec>().unwrap().order(), 6);
    }
}
