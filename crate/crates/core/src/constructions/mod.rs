//! Coloring families and lower-bound witness colorings.
//!
//! Parts always occupy consecutive vertex ranges in declaration order, so
//! generated files are reproducible byte for byte.

mod generators;
mod witnesses;

pub use generators::{generator_by_name, generators, GenParams, Generated, Generator, InternalFill, Target};
pub use witnesses::{
    shape_four_vertex, shape_kn_minus_vertex, shape_sporadic, shape_three_vertex, witness_b3_kipas, witness_bk_path,
    witness_kipas_linear, witness_small_kipas, witness_t_path,
};

use std::fmt;

use crate::coloring::{Color, EdgeColoring, MAX_VERTICES};
use crate::error::{Error, Result};

/// The structure a descriptor describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `k-1` parts of size >= 2, cross edges color 1, part `i` internally `{1, i+2}` (0-based).
    Bk,
    /// Three nonempty parts with cross colors 1, 2, 3 and internal colors from the two meeting cross colors.
    T,
    /// Like `T`, but at most one part may be empty.
    G1,
    /// One edge `xy` of color 2, the rest of `x`'s star color 3, of `y`'s star color 4, all else color 1.
    G2,
    /// A rainbow triangle `abc` (ab = 2, bc = 3, ac = 4), all else color 1.
    G3,
    /// Color 1 dominant: the supports of the other colors are pairwise disjoint.
    DominantColor,
    /// `K_n - a` monochromatic.
    KnMinusVertex,
    /// Vertices `a, b, c` with `E2 = {ab}`, `E3 = {ac}`, `bc` in `E4` and `E4` otherwise at `a`.
    ThreeVertex,
    /// Vertices `a, b, c, d` with `E3 = {ac, bd}`, `E4 = {ad, bc}`, `ab` in `E2`, `E2` within `{ab, cd}`.
    FourVertex,
    /// The single exceptional coloring of `K_5`.
    Sporadic,
}

impl FamilyKind {
    /// Case label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            FamilyKind::Bk => "Bk",
            FamilyKind::T => "T",
            FamilyKind::G1 => "G1",
            FamilyKind::G2 => "G2",
            FamilyKind::G3 => "G3",
            FamilyKind::DominantColor => "i",
            FamilyKind::KnMinusVertex => "ii",
            FamilyKind::ThreeVertex => "iii",
            FamilyKind::FourVertex => "iv",
            FamilyKind::Sporadic => "v",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A coloring described structurally.
///
/// Colors inside the descriptor are *role* colors (the numbering used in the
/// family definition). `renumbering[actual] = role` records how the actual
/// coloring's colors map onto roles; an empty vector means identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub family: FamilyKind,
    pub n_vertices: usize,
    pub n_colors: Color,
    /// Vertex parts (Bk, T, G1, DominantColor).
    pub parts: Vec<Vec<usize>>,
    /// Per part, the colors of its internal edges in lexicographic order of the part's sorted vertices.
    pub internal: Vec<Vec<Color>>,
    /// Named special vertices: `[x, y]` for G2, `[a, b, c]` for G3 and (iii), `[a, b, c, d]` for (iv),
    /// `[a]` for (ii), `[a, b, c, d, e]` for (v).
    pub special: Vec<usize>,
    /// Edges whose role color is not 1, for the shape families (ii)-(iv).
    pub exceptions: Vec<(usize, usize, Color)>,
    pub renumbering: Vec<Color>,
}

impl FamilyDescriptor {
    pub fn new(family: FamilyKind, n_vertices: usize, n_colors: Color) -> Self {
        FamilyDescriptor {
            family,
            n_vertices,
            n_colors,
            parts: Vec::new(),
            internal: Vec::new(),
            special: Vec::new(),
            exceptions: Vec::new(),
            renumbering: Vec::new(),
        }
    }

    /// A partition descriptor with internal colors filled by `fill(part_index, u, v)`.
    pub fn with_parts(
        family: FamilyKind,
        n_colors: Color,
        parts: Vec<Vec<usize>>,
        mut fill: impl FnMut(usize, usize, usize) -> Color,
    ) -> Self {
        let n = parts.iter().map(Vec::len).sum();
        let internal = parts
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut sorted = p.clone();
                sorted.sort_unstable();
                let mut out = Vec::new();
                for a in 0..sorted.len() {
                    for b in a + 1..sorted.len() {
                        out.push(fill(i, sorted[a], sorted[b]));
                    }
                }
                out
            })
            .collect();
        FamilyDescriptor { parts, internal, ..Self::new(family, n, n_colors) }
    }

    /// Consecutive parts of the given sizes, starting at vertex 0.
    pub fn consecutive(sizes: &[usize]) -> Vec<Vec<usize>> {
        let mut start = 0;
        sizes
            .iter()
            .map(|&s| {
                let p = (start..start + s).collect();
                start += s;
                p
            })
            .collect()
    }

    /// Maps an actual color to its role.
    pub fn role_of(&self, actual: Color) -> Color {
        if self.renumbering.is_empty() {
            actual
        } else {
            self.renumbering[actual as usize]
        }
    }
}

fn joined<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// Line-oriented text: `family`, `vertices`, then `parts`, `special`,
/// `exceptions` and `renumbering` lines when present.
impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family {}\nvertices {} colors {}", self.family, self.n_vertices, self.n_colors)?;
        if !self.parts.is_empty() {
            let parts: Vec<String> =
                self.parts.iter().map(|p| if p.is_empty() { "-".to_string() } else { joined(p, ",") }).collect();
            write!(f, "\nparts {}", parts.join(" | "))?;
        }
        if !self.special.is_empty() {
            write!(f, "\nspecial {}", joined(&self.special, " "))?;
        }
        if !self.exceptions.is_empty() {
            let e: Vec<String> = self.exceptions.iter().map(|(u, v, c)| format!("{u}-{v}:{c}")).collect();
            write!(f, "\nexceptions {}", e.join(" "))?;
        }
        if !self.renumbering.is_empty() {
            let r: Vec<String> = (1..self.renumbering.len()).map(|a| format!("{a}>{}", self.renumbering[a])).collect();
            write!(f, "\nrenumbering {}", r.join(" "))?;
        }
        Ok(())
    }
}

/// Allowed internal colors of part `i` and the cross color between parts `i` and `j`,
/// for the three-part families.
pub fn tri_internal(i: usize) -> [Color; 2] {
    [[1, 3], [1, 2], [2, 3]][i]
}

pub fn tri_cross(i: usize, j: usize) -> Color {
    match (i.min(j), i.max(j)) {
        (0, 1) => 1,
        (1, 2) => 2,
        (0, 2) => 3,
        _ => unreachable!("no cross color inside a part"),
    }
}

fn clause(family: FamilyKind, msg: impl fmt::Display) -> Error {
    Error::Descriptor(format!("{family}: {msg}"))
}

fn part_index(d: &FamilyDescriptor) -> Result<Vec<usize>> {
    let n = d.n_vertices;
    if n == 0 || n > MAX_VERTICES {
        return Err(clause(d.family, format_args!("vertex count {n} outside 1..={MAX_VERTICES}")));
    }
    let mut owner = vec![usize::MAX; n];
    for (i, p) in d.parts.iter().enumerate() {
        for &v in p {
            if v >= n {
                return Err(clause(d.family, format_args!("part {i} names vertex {v} outside 0..{n}")));
            }
            if owner[v] != usize::MAX {
                return Err(clause(
                    d.family,
                    format_args!("parts are not disjoint: vertex {v} in parts {} and {i}", owner[v]),
                ));
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(clause(d.family, format_args!("parts do not cover vertex {v}")));
    }
    Ok(owner)
}

fn internal_colors(
    d: &FamilyDescriptor,
    allowed: impl Fn(usize) -> Vec<Color>,
) -> Result<Vec<Vec<(usize, usize, Color)>>> {
    if d.internal.len() != d.parts.len() {
        return Err(clause(
            d.family,
            format_args!("{} internal color lists for {} parts", d.internal.len(), d.parts.len()),
        ));
    }
    let mut out = Vec::new();
    for (i, (p, cols)) in d.parts.iter().zip(&d.internal).enumerate() {
        let mut sorted = p.clone();
        sorted.sort_unstable();
        let pairs: Vec<(usize, usize)> = (0..sorted.len())
            .flat_map(|a| (a + 1..sorted.len()).map(move |b| (a, b)))
            .map(|(a, b)| (sorted[a], sorted[b]))
            .collect();
        if pairs.len() != cols.len() {
            return Err(clause(
                d.family,
                format_args!("part {i} has {} internal edges but {} colors", pairs.len(), cols.len()),
            ));
        }
        let ok = allowed(i);
        let mut edges = Vec::new();
        for (&(u, v), &c) in pairs.iter().zip(cols) {
            if !ok.contains(&c) {
                return Err(clause(
                    d.family,
                    format_args!("internal edge {u}-{v} of part {i} has color {c}, allowed {ok:?}"),
                ));
            }
            edges.push((u, v, c));
        }
        out.push(edges);
    }
    Ok(out)
}

fn from_roles(d: &FamilyDescriptor, role: impl Fn(usize, usize) -> Color) -> Result<EdgeColoring> {
    let ec =
        EdgeColoring::from_fn(d.n_vertices, d.n_colors, role).map_err(|e| clause(d.family, format_args!("{e}")))?;
    if d.renumbering.is_empty() {
        return Ok(ec);
    }
    // renumbering maps actual -> role; invert it to recover actual colors.
    let k = d.n_colors as usize;
    if d.renumbering.len() != k + 1 {
        return Err(clause(d.family, "renumbering must list one role per color"));
    }
    let mut inverse = vec![0 as Color; k + 1];
    for actual in 1..=k {
        let r = d.renumbering[actual] as usize;
        if r == 0 || r > k || inverse[r] != 0 {
            return Err(clause(d.family, "renumbering is not a permutation of the colors"));
        }
        inverse[r] = actual as Color;
    }
    ec.recolor(d.n_colors, &inverse)
}

fn edge_map(n: usize, edges: impl IntoIterator<Item = (usize, usize, Color)>) -> Vec<Color> {
    let mut m = vec![1 as Color; n * n];
    for (u, v, c) in edges {
        m[u * n + v] = c;
        m[v * n + u] = c;
    }
    m
}

fn distinct(d: &FamilyDescriptor, count: usize) -> Result<()> {
    if d.special.len() != count {
        return Err(clause(d.family, format_args!("needs {count} special vertices, got {}", d.special.len())));
    }
    for (i, &v) in d.special.iter().enumerate() {
        if v >= d.n_vertices || d.special[..i].contains(&v) {
            return Err(clause(d.family, "special vertices must be distinct and in range"));
        }
    }
    Ok(())
}

/// Builds the coloring a descriptor determines, checking every clause of its family.
pub fn build_family(d: &FamilyDescriptor) -> Result<EdgeColoring> {
    let n = d.n_vertices;
    match d.family {
        FamilyKind::Bk | FamilyKind::DominantColor => {
            let k = d.n_colors as usize;
            if d.family == FamilyKind::Bk {
                if k < 3 {
                    return Err(clause(d.family, "needs k >= 3"));
                }
                if d.parts.len() != k - 1 {
                    return Err(clause(
                        d.family,
                        format_args!("needs exactly k-1 = {} parts, got {}", k - 1, d.parts.len()),
                    ));
                }
                if let Some((i, p)) = d.parts.iter().enumerate().find(|(_, p)| p.len() < 2) {
                    return Err(clause(
                        d.family,
                        format_args!("part {i} has size {} but |V_i| >= 2 is required", p.len()),
                    ));
                }
            } else if d.parts.is_empty() || d.parts.len() > k.max(1) {
                return Err(clause(d.family, format_args!("needs 1..={k} parts, got {}", d.parts.len())));
            }
            let owner = part_index(d)?;
            let inner = internal_colors(d, |i| vec![1, i as Color + 2])?;
            let m = edge_map(n, inner.into_iter().flatten());
            let _ = owner;
            from_roles(d, |u, v| m[u * n + v])
        }
        FamilyKind::T | FamilyKind::G1 => {
            if d.n_colors != 3 {
                return Err(clause(d.family, "is a 3-edge-coloring (k = 3)"));
            }
            if d.parts.len() != 3 {
                return Err(clause(d.family, format_args!("needs exactly 3 parts, got {}", d.parts.len())));
            }
            let empty = d.parts.iter().filter(|p| p.is_empty()).count();
            if d.family == FamilyKind::T && empty > 0 {
                return Err(clause(d.family, "all three parts must be nonempty"));
            }
            if empty > 1 {
                return Err(clause(d.family, "at most one part may be empty"));
            }
            let owner = part_index(d)?;
            let inner = internal_colors(d, |i| tri_internal(i).to_vec())?;
            let m = edge_map(n, inner.into_iter().flatten());
            from_roles(d, |u, v| if owner[u] == owner[v] { m[u * n + v] } else { tri_cross(owner[u], owner[v]) })
        }
        FamilyKind::G2 => {
            if d.n_colors != 4 {
                return Err(clause(d.family, "is a 4-edge-coloring"));
            }
            distinct(d, 2)?;
            let (x, y) = (d.special[0], d.special[1]);
            from_roles(d, |u, v| {
                if (u, v) == (x.min(y), x.max(y)) {
                    2
                } else if u == x || v == x {
                    3
                } else if u == y || v == y {
                    4
                } else {
                    1
                }
            })
        }
        FamilyKind::G3 => {
            if d.n_colors != 4 {
                return Err(clause(d.family, "is a 4-edge-coloring"));
            }
            distinct(d, 3)?;
            let (a, b, c) = (d.special[0], d.special[1], d.special[2]);
            let m = edge_map(n, [(a, b, 2), (b, c, 3), (a, c, 4)]);
            from_roles(d, |u, v| m[u * n + v])
        }
        FamilyKind::KnMinusVertex | FamilyKind::ThreeVertex | FamilyKind::FourVertex | FamilyKind::Sporadic => {
            build_shape(d)
        }
    }
}

fn build_shape(d: &FamilyDescriptor) -> Result<EdgeColoring> {
    let n = d.n_vertices;
    let sp = &d.special;
    let exc = |u: usize, v: usize| {
        d.exceptions.iter().find(|e| (e.0.min(e.1), e.0.max(e.1)) == (u.min(v), u.max(v))).map(|e| e.2)
    };
    match d.family {
        FamilyKind::KnMinusVertex => {
            distinct(d, 1)?;
            let a = sp[0];
            if let Some(e) = d.exceptions.iter().find(|e| e.0 != a && e.1 != a) {
                return Err(clause(d.family, format_args!("edge {}-{} avoids a but is not color 1", e.0, e.1)));
            }
        }
        FamilyKind::ThreeVertex => {
            distinct(d, 3)?;
            if d.n_colors != 4 {
                return Err(clause(d.family, "uses exactly 4 colors"));
            }
            let (a, b, c) = (sp[0], sp[1], sp[2]);
            if exc(a, b) != Some(2) || exc(a, c) != Some(3) || exc(b, c) != Some(4) {
                return Err(clause(d.family, "needs ab = 2, ac = 3, bc = 4"));
            }
            for &(u, v, col) in &d.exceptions {
                let pair = (u.min(v), u.max(v));
                let fixed = [(a, b), (a, c), (b, c)].iter().any(|&(x, y)| (x.min(y), x.max(y)) == pair);
                if !fixed && !(col == 4 && (u == a || v == a)) {
                    return Err(clause(
                        d.family,
                        format_args!("edge {u}-{v} of color {col} is not allowed (E4 beyond bc must touch a)"),
                    ));
                }
            }
        }
        FamilyKind::FourVertex => {
            distinct(d, 4)?;
            if d.n_colors != 4 {
                return Err(clause(d.family, "uses exactly 4 colors"));
            }
            let (a, b, c, dd) = (sp[0], sp[1], sp[2], sp[3]);
            let want = [(a, b, Some(2)), (a, c, Some(3)), (b, dd, Some(3)), (a, dd, Some(4)), (b, c, Some(4))];
            if want.iter().any(|&(u, v, col)| exc(u, v) != col) || !matches!(exc(c, dd), None | Some(2)) {
                return Err(clause(d.family, "needs ab = 2, ac = bd = 3, ad = bc = 4 and cd in {1, 2}"));
            }
            if d.exceptions.len() > 6 || d.exceptions.iter().any(|e| !sp.contains(&e.0) || !sp.contains(&e.1)) {
                return Err(clause(d.family, "every edge outside a, b, c, d has color 1"));
            }
        }
        FamilyKind::Sporadic => {
            distinct(d, 5)?;
            if n != 5 || d.n_colors != 4 {
                return Err(clause(d.family, "exists only on 5 vertices with 4 colors"));
            }
            let (a, b, c, dd, e) = (sp[0], sp[1], sp[2], sp[3], sp[4]);
            let m = edge_map(5, [(b, dd, 2), (b, e, 2), (a, c, 2), (c, dd, 3), (c, e, 3), (a, b, 3), (dd, e, 4)]);
            return from_roles(d, |u, v| m[u * 5 + v]);
        }
        _ => unreachable!(),
    }
    if let Some(e) = d.exceptions.iter().find(|e| e.2 == 0 || e.2 > d.n_colors || e.0 == e.1 || e.0.max(e.1) >= n) {
        return Err(clause(d.family, format_args!("invalid exception edge {}-{} color {}", e.0, e.1, e.2)));
    }
    let m = edge_map(n, d.exceptions.iter().copied());
    from_roles(d, |u, v| m[u * n + v])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bk_all_ones_is_monochromatic() {
        let d = FamilyDescriptor::with_parts(FamilyKind::Bk, 3, FamilyDescriptor::consecutive(&[2, 3]), |_, _, _| 1);
        let c = build_family(&d).unwrap();
        assert_eq!(c, EdgeColoring::monochromatic(5, 3, 1).unwrap());
    }

    #[test]
    fn g2_and_g3() {
        let mut d = FamilyDescriptor::new(FamilyKind::G2, 6, 4);
        d.special = vec![0, 1];
        let c = build_family(&d).unwrap();
        assert_eq!(c.color(0, 1), 2);
        assert!((2..6).all(|v| c.color(0, v) == 3 && c.color(1, v) == 4));
        assert_eq!(c.color(2, 5), 1);
        assert_eq!(c.colors_used().len(), 4);

        let mut d = FamilyDescriptor::new(FamilyKind::G3, 5, 4);
        d.special = vec![0, 1, 2];
        let c = build_family(&d).unwrap();
        assert_eq!((c.color(0, 1), c.color(1, 2), c.color(0, 2)), (2, 3, 4));
        assert_eq!(c.edges().filter(|e| e.2 == 1).count(), 7);
    }

    #[test]
    fn clause_violations() {
        let d = FamilyDescriptor::with_parts(FamilyKind::Bk, 3, FamilyDescriptor::consecutive(&[1, 3]), |_, _, _| 1);
        let err = build_family(&d).unwrap_err().to_string();
        assert!(err.contains("|V_i| >= 2"), "{err}");
        let d = FamilyDescriptor::with_parts(FamilyKind::Bk, 3, FamilyDescriptor::consecutive(&[2, 3]), |_, _, _| 3);
        assert!(build_family(&d).unwrap_err().to_string().contains("allowed"));
        let d = FamilyDescriptor::with_parts(FamilyKind::T, 3, FamilyDescriptor::consecutive(&[2, 0, 2]), |i, _, _| {
            tri_internal(i)[0]
        });
        assert!(build_family(&d).unwrap_err().to_string().contains("nonempty"));
        let d =
            FamilyDescriptor::with_parts(FamilyKind::G1, 3, FamilyDescriptor::consecutive(&[2, 0, 2]), |i, _, _| {
                tri_internal(i)[0]
            });
        assert!(build_family(&d).is_ok());
        let mut overlap = FamilyDescriptor::with_parts(FamilyKind::Bk, 3, vec![vec![0, 1], vec![1, 2]], |_, _, _| 1);
        overlap.n_vertices = 3;
        assert!(build_family(&overlap).unwrap_err().to_string().contains("disjoint"));
    }

    #[test]
    fn t_cross_colors() {
        let d = FamilyDescriptor::with_parts(FamilyKind::T, 3, FamilyDescriptor::consecutive(&[1, 1, 1]), |_, _, _| 1);
        let c = build_family(&d).unwrap();
        assert_eq!((c.color(0, 1), c.color(1, 2), c.color(0, 2)), (1, 2, 3));
    }
}
