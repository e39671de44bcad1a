//! Structural recognition: family membership, classification of extremal
//! colorings, star forests and multipartite Hamiltonicity.

mod ham;
mod twosat;

pub use ham::{multipartite_ham, validate_ham, HamMode};

use std::fmt;
use std::str::FromStr;

use crate::coloring::{Color, EdgeColoring};
use crate::constructions::{build_family, tri_cross, tri_internal, FamilyDescriptor, FamilyKind};
use crate::error::{Error, Result};
use twosat::TwoSat;

/// Which forbidden rainbow pattern a classification is relative to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureContext {
    P5,
    K13,
    P4Plus,
}

impl fmt::Display for StructureContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureContext::P5 => "p5",
            StructureContext::K13 => "k13",
            StructureContext::P4Plus => "p4plus",
        })
    }
}

impl FromStr for StructureContext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p5" => Ok(StructureContext::P5),
            "k13" => Ok(StructureContext::K13),
            "p4plus" | "p4+" => Ok(StructureContext::P4Plus),
            _ => Err(Error::Syntax(format!("unknown structure context '{s}' (expected p5, k13 or p4plus)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Classified(FamilyDescriptor),
    Unclassified,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Classified(d) => d.family.label(),
            Classification::Unclassified => "unclassified",
        }
    }

    pub fn descriptor(&self) -> Option<&FamilyDescriptor> {
        match self {
            Classification::Classified(d) => Some(d),
            Classification::Unclassified => None,
        }
    }
}

/// Checks that `d` reproduces `c` exactly, clause by clause.
pub fn validate_descriptor(c: &EdgeColoring, d: &FamilyDescriptor) -> Result<()> {
    let built = build_family(d)?;
    if built.n_vertices() != c.n_vertices() || built.n_colors() != c.n_colors() {
        return Err(Error::Descriptor(format!(
            "descriptor has {} vertices and {} colors, coloring has {} and {}",
            built.n_vertices(),
            built.n_colors(),
            c.n_vertices(),
            c.n_colors()
        )));
    }
    if let Some((u, v, col)) = c.edges().find(|&(u, v, col)| built.color(u, v) != col) {
        return Err(Error::Descriptor(format!(
            "descriptor gives edge {u}-{v} color {}, coloring has {col}",
            built.color(u, v)
        )));
    }
    Ok(())
}

fn reproduces(c: &EdgeColoring, d: FamilyDescriptor) -> Option<FamilyDescriptor> {
    validate_descriptor(c, &d).ok().map(|_| d)
}

/// Membership of `c` in `family` with the coloring's own color numbering.
pub fn is_member(c: &EdgeColoring, family: FamilyKind) -> Option<FamilyDescriptor> {
    let n = c.n_vertices();
    let k = c.n_colors();
    match family {
        FamilyKind::Bk | FamilyKind::DominantColor => {
            if family == FamilyKind::Bk && (k < 3 || !c.is_surjective()) {
                return None;
            }
            let mut covered = 0u32;
            let mut parts = Vec::new();
            for j in 2..=k.max(2) {
                let s = if j <= k { c.support(j) } else { 0 };
                if s & covered != 0 {
                    return None;
                }
                covered |= s;
                parts.push(crate::coloring::bits(s).collect::<Vec<_>>());
            }
            let free = (0..n).filter(|&v| covered >> v & 1 == 0);
            parts[0].extend(free);
            parts[0].sort_unstable();
            let nc = if k == 1 { 1 } else { k };
            if k == 1 {
                parts.truncate(1);
            }
            reproduces(c, FamilyDescriptor::with_parts(family, nc, parts, |_, u, v| c.color(u, v)))
        }
        FamilyKind::T | FamilyKind::G1 => {
            if k != 3 {
                return None;
            }
            let parts = tri_partition(c, family == FamilyKind::G1)?;
            reproduces(c, FamilyDescriptor::with_parts(family, 3, parts, |_, u, v| c.color(u, v)))
        }
        FamilyKind::G2 => {
            if k != 4 || n < 3 {
                return None;
            }
            let e2: Vec<_> = c.edges().filter(|e| e.2 == 2).collect();
            if e2.len() != 1 {
                return None;
            }
            let (x, y, _) = e2[0];
            [[x, y], [y, x]].into_iter().find_map(|sp| {
                let mut d = FamilyDescriptor::new(FamilyKind::G2, n, 4);
                d.special = sp.to_vec();
                reproduces(c, d)
            })
        }
        FamilyKind::G3 => {
            if k != 4 {
                return None;
            }
            let single = |col: Color| {
                let es: Vec<_> = c.edges().filter(|e| e.2 == col).collect();
                (es.len() == 1).then(|| (es[0].0, es[0].1))
            };
            let (ab, bc) = (single(2)?, single(3)?);
            let b = [ab.0, ab.1].into_iter().find(|&v| v == bc.0 || v == bc.1)?;
            let a = if ab.0 == b { ab.1 } else { ab.0 };
            let cc = if bc.0 == b { bc.1 } else { bc.0 };
            let mut d = FamilyDescriptor::new(FamilyKind::G3, n, 4);
            d.special = vec![a, b, cc];
            reproduces(c, d)
        }
        FamilyKind::KnMinusVertex => (0..n).find_map(|a| {
            let mut d = FamilyDescriptor::new(family, n, k);
            d.special = vec![a];
            d.exceptions = c.edges().filter(|e| e.2 != 1).collect();
            reproduces(c, d)
        }),
        FamilyKind::ThreeVertex => {
            if k != 4 {
                return None;
            }
            let e2: Vec<_> = c.edges().filter(|e| e.2 == 2).collect();
            let e3: Vec<_> = c.edges().filter(|e| e.2 == 3).collect();
            if e2.len() != 1 || e3.len() != 1 {
                return None;
            }
            let (ab, ac) = ((e2[0].0, e2[0].1), (e3[0].0, e3[0].1));
            let a = [ab.0, ab.1].into_iter().find(|&v| v == ac.0 || v == ac.1)?;
            let b = if ab.0 == a { ab.1 } else { ab.0 };
            let cc = if ac.0 == a { ac.1 } else { ac.0 };
            let mut d = FamilyDescriptor::new(family, n, 4);
            d.special = vec![a, b, cc];
            d.exceptions = c.edges().filter(|e| e.2 != 1).collect();
            reproduces(c, d)
        }
        FamilyKind::FourVertex => {
            if k != 4 {
                return None;
            }
            let partner = |v: usize| (0..n).find(|&w| w != v && c.color(v, w) == 3);
            c.edges().filter(|e| e.2 == 2).flat_map(|(u, v, _)| [(u, v), (v, u)]).find_map(|(a, b)| {
                let (cc, dd) = (partner(a)?, partner(b)?);
                let mut d = FamilyDescriptor::new(family, n, 4);
                d.special = vec![a, b, cc, dd];
                d.exceptions = c.edges().filter(|e| e.2 != 1).collect();
                reproduces(c, d)
            })
        }
        FamilyKind::Sporadic => {
            if n != 5 || k != 4 {
                return None;
            }
            permutations(5).into_iter().find_map(|sp| {
                let mut d = FamilyDescriptor::new(family, 5, 4);
                d.special = sp;
                reproduces(c, d)
            })
        }
    }
}

/// All permutations of `0..m` in lexicographic order.
fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in 0..m {
            if !cur.contains(&x) {
                cur.push(x);
                rec(m, cur, out);
                cur.pop();
            }
        }
    }
    rec(m, &mut cur, &mut out);
    out
}

/// Assigns every vertex to one of three parts so that the coloring fits the
/// `T` pattern. Vertex 0 picks its part `p0`; every other vertex can then only be
/// in `p0` or in the part its edge to 0 points to, which makes the rest 2-SAT.
fn tri_partition(c: &EdgeColoring, allow_empty: bool) -> Option<Vec<Vec<usize>>> {
    let n = c.n_vertices();
    let fits = |pu: usize, pv: usize, col: Color| {
        if pu == pv {
            tri_internal(pu).contains(&col)
        } else {
            tri_cross(pu, pv) == col
        }
    };
    for p0 in 0..3 {
        let others: Vec<usize> = (0..3).filter(|&j| j != p0).collect();
        let mut alt = vec![p0; n];
        let mut ok = true;
        for (v, slot) in alt.iter_mut().enumerate().skip(1) {
            let col = c.color(0, v);
            match others.iter().find(|&&j| tri_cross(p0, j) == col) {
                Some(&j) => *slot = j,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        // Variable v-1 true means vertex v stays in p0.
        let place = |v: usize, stay: bool| if stay { p0 } else { alt[v] };
        let mut base = TwoSat::new(n.saturating_sub(1));
        for u in 1..n {
            for v in u + 1..n {
                let col = c.color(u, v);
                for su in [true, false] {
                    for sv in [true, false] {
                        if !fits(place(u, su), place(v, sv), col) {
                            base.either(u - 1, !su, v - 1, !sv);
                        }
                    }
                }
            }
        }
        let Some(free) = base.solve() else { continue };
        let parts_of = |assign: &[bool]| {
            let mut parts = vec![Vec::new(); 3];
            parts[p0].push(0);
            for v in 1..n {
                parts[place(v, assign[v - 1])].push(v);
            }
            parts
        };
        let empties = |parts: &[Vec<usize>]| parts.iter().filter(|p| p.is_empty()).count();
        let first = parts_of(&free);
        if empties(&first) == 0 || (allow_empty && empties(&first) <= 1) {
            return Some(first);
        }
        let alt = &alt;
        let witnesses = |j: usize| (1..n).filter(move |&v| alt[v] == j);
        let (j1, j2) = (others[0], others[1]);
        for w1 in witnesses(j1) {
            for w2 in witnesses(j2) {
                let mut s = base.clone();
                s.force(w1 - 1, false);
                s.force(w2 - 1, false);
                if let Some(a) = s.solve() {
                    return Some(parts_of(&a));
                }
            }
        }
        if allow_empty {
            for (empty, full) in [(j1, j2), (j2, j1)] {
                for w in witnesses(full) {
                    let mut s = base.clone();
                    s.force(w - 1, false);
                    for v in witnesses(empty) {
                        s.force(v - 1, true);
                    }
                    if let Some(a) = s.solve() {
                        return Some(parts_of(&a));
                    }
                }
            }
        }
    }
    None
}

/// Renumberings that send the colors in `order` to roles `1, 2, ...`, followed
/// by the unused colors in ascending order.
fn renumbering_for(k: Color, order: &[Color]) -> Vec<Color> {
    let mut map = vec![0 as Color; k as usize + 1];
    let mut next = 1;
    for &c in order {
        map[c as usize] = next;
        next += 1;
    }
    for c in 1..=k {
        if map[c as usize] == 0 {
            map[c as usize] = next;
            next += 1;
        }
    }
    map
}

fn try_roles(c: &EdgeColoring, order: &[Color], family: FamilyKind) -> Option<FamilyDescriptor> {
    let map = renumbering_for(c.n_colors(), order);
    let roles = c.recolor(c.n_colors(), &map).ok()?;
    let mut d = is_member(&roles, family)?;
    if map.iter().enumerate().skip(1).any(|(a, &r)| a as Color != r) {
        d.renumbering = map;
    }
    Some(d)
}

fn try_all_orders(c: &EdgeColoring, family: FamilyKind) -> Option<FamilyDescriptor> {
    let used: Vec<Color> = c.colors_used().into_iter().collect();
    permutations(used.len())
        .into_iter()
        .find_map(|p| try_roles(c, &p.iter().map(|&i| used[i]).collect::<Vec<_>>(), family))
}

/// Names the structure of a coloring relative to a forbidden rainbow pattern.
///
/// A dominant color is tried first (each used color in ascending order, the
/// others renumbered ascending), then the context's exceptional shapes.
pub fn classify_structure(c: &EdgeColoring, context: StructureContext) -> Classification {
    let used: Vec<Color> = c.colors_used().into_iter().collect();
    for &d in &used {
        let order: Vec<Color> = std::iter::once(d).chain(used.iter().copied().filter(|&x| x != d)).collect();
        if let Some(desc) = try_roles(c, &order, FamilyKind::DominantColor) {
            return Classification::Classified(desc);
        }
    }
    let four = used.len() == 4 && c.n_colors() == 4;
    let found = match context {
        StructureContext::P5 => used
            .iter()
            .find_map(|&d| {
                let order: Vec<Color> = std::iter::once(d).chain(used.iter().copied().filter(|&x| x != d)).collect();
                try_roles(c, &order, FamilyKind::KnMinusVertex)
            })
            .or_else(|| {
                if !four {
                    return None;
                }
                [FamilyKind::ThreeVertex, FamilyKind::FourVertex, FamilyKind::Sporadic]
                    .into_iter()
                    .find_map(|f| try_all_orders(c, f))
            }),
        StructureContext::K13 => {
            (used.len() == 3 && c.n_colors() == 3).then(|| try_all_orders(c, FamilyKind::G1)).flatten()
        }
        StructureContext::P4Plus => {
            if four {
                try_all_orders(c, FamilyKind::G2).or_else(|| try_all_orders(c, FamilyKind::G3))
            } else {
                None
            }
        }
    };
    found.map_or(Classification::Unclassified, Classification::Classified)
}

/// True when every edge of `color` has an endpoint of degree 1 in that color,
/// i.e. the color class is a star forest.
pub fn star_forest_check(c: &EdgeColoring, color: Color) -> bool {
    let g = c.class_graph(color);
    let ok = g.edges().all(|(u, v)| g.degree(u) == 1 || g.degree(v) == 1);
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{shape_four_vertex, shape_sporadic, shape_three_vertex, witness_t_path};

    #[test]
    fn t_membership() {
        let w = witness_t_path(5).unwrap();
        let d = is_member(&w, FamilyKind::T).unwrap();
        assert_eq!(d.parts, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert!(is_member(&w, FamilyKind::Bk).is_none());
    }

    #[test]
    fn shapes_classify() {
        let c = shape_three_vertex(6, &[4]).unwrap();
        assert_eq!(classify_structure(&c, StructureContext::P5).label(), "iii");
        let c = shape_four_vertex(6, true).unwrap();
        assert_eq!(classify_structure(&c, StructureContext::P5).label(), "iv");
        let c = shape_sporadic().unwrap();
        assert_eq!(classify_structure(&c, StructureContext::P5).label(), "v");
    }

    #[test]
    fn renumbered_dominant() {
        let c = EdgeColoring::from_fn(5, 3, |u, v| {
            if (u, v) == (0, 1) {
                1
            } else if (u, v) == (2, 3) {
                3
            } else {
                2
            }
        })
        .unwrap();
        let cl = classify_structure(&c, StructureContext::K13);
        let d = cl.descriptor().unwrap();
        assert_eq!(d.family, FamilyKind::DominantColor);
        assert_eq!(d.renumbering, vec![0, 2, 1, 3]);
        validate_descriptor(&c, d).unwrap();
    }

    #[test]
    fn star_forests() {
        let c = EdgeColoring::from_fn(4, 2, |u, v| if u == 0 || (u, v) == (2, 3) { 2 } else { 1 }).unwrap();
        assert!(!star_forest_check(&c, 2));
        let c = EdgeColoring::from_fn(4, 2, |u, _| if u == 0 { 2 } else { 1 }).unwrap();
        assert!(star_forest_check(&c, 2));
    }
}
