use super::{tri_internal, FamilyDescriptor, FamilyKind};
use crate::coloring::{Color, EdgeColoring};
use crate::error::{domain, Result};

/// Red clique on `n` vertices plus `ceil(m/2) - 1` vertices joined by blue edges.
///
/// Color 1 is red, color 2 is blue. Every blue edge meets one of the added
/// vertices, so blue linear forests have at most `m - 1` edges for any `m >= 2`;
/// the matching upper bound needs `m <= n/2`.
pub fn witness_kipas_linear(n: usize, m: usize) -> Result<EdgeColoring> {
    if m < 2 || n == 0 {
        return domain(format!("kipas/linear-forest witness needs n >= 1 and m >= 2, got n={n}, m={m}"));
    }
    let total = n + m.div_ceil(2) - 1;
    EdgeColoring::from_fn(total, 2, |u, v| if v < n && u < n { 1 } else { 2 })
}

/// Descriptor of the `B_k` member without a monochromatic `P_n` on `ceil((3n-3)/2) - 1` vertices.
pub fn bk_path_descriptor(k: usize, n: usize) -> Result<FamilyDescriptor> {
    if k < 3 || n <= 4 * (k - 2) + 1 {
        return domain(format!("b_k(P_n) witness needs k >= 3 and n > 4(k-2)+1, got k={k}, n={n}"));
    }
    if k > 31 {
        return domain("too many colors");
    }
    let m = (3 * n - 3).div_ceil(2) - 1;
    let last = m - 2 * (k - 2);
    // ceil((n - 4(k-1) + 1) / 2), which is 0 when the numerator is -1.
    let h1 = (n + 1).saturating_sub(4 * (k - 1)).div_ceil(2);
    debug_assert_eq!(h1 + n - 1, last);
    let mut sizes = vec![2; k - 2];
    sizes.push(last);
    let parts = FamilyDescriptor::consecutive(&sizes);
    let offset = 2 * (k - 2);
    let d = FamilyDescriptor::with_parts(FamilyKind::Bk, k as Color, parts, |i, u, v| {
        if i + 1 < k - 1 {
            i as Color + 2
        } else {
            let (a, b) = (u - offset, v - offset);
            // H1 occupies the first h1 vertices of the last part, H2 the remaining n-1.
            if (a < h1) == (b < h1) {
                k as Color
            } else {
                1
            }
        }
    });
    Ok(d)
}

pub fn witness_bk_path(k: usize, n: usize) -> Result<EdgeColoring> {
    super::build_family(&bk_path_descriptor(k, n)?)
}

/// Descriptor of the `T` member without a monochromatic `P_n`.
pub fn t_path_descriptor(n: usize) -> Result<FamilyDescriptor> {
    if n < 3 || (n.is_multiple_of(2) && n < 4) {
        return domain(format!("t(P_n) witness needs n >= 3, got n={n}"));
    }
    let sizes = if n.is_multiple_of(2) { [n / 2, n / 2 - 1, n / 2 - 1] } else { [(n - 1) / 2; 3] };
    // Part i is a clique of color i+1, which is one of its two allowed colors.
    let d = FamilyDescriptor::with_parts(FamilyKind::T, 3, FamilyDescriptor::consecutive(&sizes), |i, _, _| {
        debug_assert!(tri_internal(i).contains(&(i as Color + 1)));
        i as Color + 1
    });
    Ok(d)
}

pub fn witness_t_path(n: usize) -> Result<EdgeColoring> {
    super::build_family(&t_path_descriptor(n)?)
}

/// Descriptor of the `B_3` member without a monochromatic kipas on `n + 1` vertices.
///
/// Vertices: `A` first (internally color 3), then `B_1, B_2, B_3` (color 1 inside each,
/// color 2 between them); `A`-`B` edges are color 1. As a `B_3` member, part 0 is `B`
/// (special color 2) and part 1 is `A` (special color 3).
pub fn b3_kipas_descriptor(n: usize) -> Result<FamilyDescriptor> {
    if n < 5 {
        return domain(format!("b_3(kipas_n) witness needs n >= 5, got n={n}"));
    }
    let bs = if n % 2 == 1 { [(n - 1) / 2; 3] } else { [n / 2, n / 2 - 1, n / 2 - 1] };
    let b_start = n;
    let sub = |v: usize| {
        let mut x = v - b_start;
        let mut i = 0;
        while x >= bs[i] {
            x -= bs[i];
            i += 1;
        }
        i
    };
    let b: Vec<usize> = (b_start..b_start + bs.iter().sum::<usize>()).collect();
    let a: Vec<usize> = (0..n).collect();
    let d = FamilyDescriptor::with_parts(FamilyKind::Bk, 3, vec![b, a], |i, u, v| match i {
        0 => {
            if sub(u) == sub(v) {
                1
            } else {
                2
            }
        }
        _ => 3,
    });
    Ok(d)
}

pub fn witness_b3_kipas(n: usize) -> Result<EdgeColoring> {
    super::build_family(&b3_kipas_descriptor(n)?)
}

/// Descriptor of the small `B_3` witnesses: `K_{2,2}` or `K_{3,3}` in color 1 with the two
/// sides colored 2 and 3 internally.
pub fn small_kipas_descriptor(n: usize) -> Result<FamilyDescriptor> {
    if !(2..=3).contains(&n) {
        return domain(format!("small kipas witness exists for n in {{2, 3}}, got n={n}"));
    }
    let parts = FamilyDescriptor::consecutive(&[n, n]);
    Ok(FamilyDescriptor::with_parts(FamilyKind::Bk, 3, parts, |i, _, _| i as Color + 2))
}

pub fn witness_small_kipas(n: usize) -> Result<EdgeColoring> {
    super::build_family(&small_kipas_descriptor(n)?)
}

/// Shape (ii): `K_n - a` in color 1, the edges at `a` colored by `star(v)`.
pub fn shape_kn_minus_vertex(n: usize, k: Color, a: usize, star: impl Fn(usize) -> Color) -> Result<EdgeColoring> {
    let mut d = FamilyDescriptor::new(FamilyKind::KnMinusVertex, n, k);
    d.special = vec![a];
    d.exceptions = (0..n).filter(|&v| v != a).map(|v| (a.min(v), a.max(v), star(v))).filter(|e| e.2 != 1).collect();
    super::build_family(&d)
}

/// Shape (iii) on `a, b, c = 0, 1, 2`; `extra_e4` lists further vertices `v` with `av` in color 4.
pub fn shape_three_vertex(n: usize, extra_e4: &[usize]) -> Result<EdgeColoring> {
    let mut d = FamilyDescriptor::new(FamilyKind::ThreeVertex, n, 4);
    d.special = vec![0, 1, 2];
    d.exceptions = vec![(0, 1, 2), (0, 2, 3), (1, 2, 4)];
    d.exceptions.extend(extra_e4.iter().map(|&v| (0, v, 4)));
    super::build_family(&d)
}

/// Shape (iv) on `a, b, c, d = 0, 1, 2, 3`, with `cd` in color 2 when `cd_in_e2`.
pub fn shape_four_vertex(n: usize, cd_in_e2: bool) -> Result<EdgeColoring> {
    let mut d = FamilyDescriptor::new(FamilyKind::FourVertex, n, 4);
    d.special = vec![0, 1, 2, 3];
    d.exceptions = vec![(0, 1, 2), (0, 2, 3), (1, 3, 3), (0, 3, 4), (1, 2, 4)];
    if cd_in_e2 {
        d.exceptions.push((2, 3, 2));
    }
    super::build_family(&d)
}

/// Shape (v) on `a..e = 0..4`.
pub fn shape_sporadic() -> Result<EdgeColoring> {
    let mut d = FamilyDescriptor::new(FamilyKind::Sporadic, 5, 4);
    d.special = vec![0, 1, 2, 3, 4];
    super::build_family(&d)
}
