//! Hamiltonian cycles and paths in complete multipartite graphs, built by
//! peeling one vertex off every largest part, recursing, and splicing the
//! peeled vertices back in.

use crate::error::{domain, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HamMode {
    Cycle,
    Path,
}

/// Vertices are numbered part by part in the given order.
pub fn multipartite_ham(sizes: &[usize], mode: HamMode) -> Result<Vec<usize>> {
    if sizes.is_empty() {
        return domain("no parts given");
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return domain(format!("part {i} is empty"));
    }
    let total: usize = sizes.iter().sum();
    let max = *sizes.iter().max().unwrap();
    let rest = total - max;
    let mut owner = Vec::with_capacity(total);
    let mut parts = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        parts.push((i, (owner.len()..owner.len() + s).collect::<Vec<_>>()));
        owner.extend(std::iter::repeat_n(i, s));
    }
    match mode {
        HamMode::Cycle => {
            if rest < max {
                return domain(format!(
                    "a Hamiltonian cycle needs the other parts to total at least {max}, got {rest}"
                ));
            }
            if total < 3 {
                return domain(format!("no Hamiltonian cycle on {total} vertices"));
            }
            cycle(&parts, &owner)
        }
        HamMode::Path => {
            if rest + 1 != max {
                return domain(format!("path mode needs the other parts to total exactly {}, got {rest}", max - 1));
            }
            path(&parts, &owner)
        }
    }
}

type Parts = [(usize, Vec<usize>)];

fn cycle(parts: &Parts, owner: &[usize]) -> Result<Vec<usize>> {
    let live: Vec<&(usize, Vec<usize>)> = parts.iter().filter(|p| !p.1.is_empty()).collect();
    let max = live.iter().map(|p| p.1.len()).max().unwrap_or(0);
    if live.len() == 2 {
        let (a, b) = (&live[0].1, &live[1].1);
        debug_assert_eq!(a.len(), b.len());
        return Ok(a.iter().zip(b).flat_map(|(&x, &y)| [x, y]).collect());
    }
    if max == 1 {
        return Ok(live.iter().map(|p| p.1[0]).collect());
    }
    // Sort ascending by size; the largest parts form the tail s..=r.
    let mut sorted = live.clone();
    sorted.sort_by_key(|p| p.1.len());
    let r = sorted.len() - 1;
    let s = sorted.iter().position(|p| p.1.len() == max).unwrap();
    let peeled: Vec<usize> = sorted[s..].iter().map(|p| *p.1.last().unwrap()).collect();
    let reduced: Vec<(usize, Vec<usize>)> = sorted
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut verts = p.1.clone();
            if i >= s {
                verts.pop();
            }
            (p.0, verts)
        })
        .collect();
    let mut c = cycle(&reduced, owner)?;
    let part_r = sorted[r].0;
    let len = c.len();
    if s == r {
        let v_r = peeled[0];
        let i = (0..len)
            .find(|&i| owner[c[i]] != part_r && owner[c[(i + 1) % len]] != part_r)
            .ok_or_else(|| Error::Internal("no edge of C avoids the largest part".into()))?;
        c.insert(i + 1, v_r);
        return Ok(c);
    }
    // Chain v_{r-1}, v_{r-2}, ..., v_s, v_r spliced into an edge xy with x outside
    // V_{r-1} and y outside V_r.
    let part_r1 = sorted[r - 1].0;
    let mut chain: Vec<usize> = peeled[..peeled.len() - 1].iter().rev().copied().collect();
    chain.push(peeled[peeled.len() - 1]);
    for _ in 0..2 {
        if let Some(i) = (0..len).find(|&i| owner[c[i]] != part_r1 && owner[c[(i + 1) % len]] != part_r) {
            let tail = c.split_off(i + 1);
            c.extend(chain);
            c.extend(tail);
            return Ok(c);
        }
        c.reverse();
    }
    Err(Error::Internal("no splice position for the peeled vertices".into()))
}

fn path(parts: &Parts, owner: &[usize]) -> Result<Vec<usize>> {
    let total: usize = parts.iter().map(|p| p.1.len()).sum();
    if total == 1 {
        return Ok(vec![parts.iter().find(|p| !p.1.is_empty()).unwrap().1[0]]);
    }
    let r = parts.iter().max_by_key(|p| p.1.len()).unwrap().0;
    let mut reduced = parts.to_vec();
    let v_r = reduced.iter_mut().find(|p| p.0 == r).unwrap().1.pop().unwrap();
    let c = cycle(&reduced, owner)?;
    let len = c.len();
    let i = (0..len)
        .find(|&i| owner[c[i]] != r)
        .ok_or_else(|| Error::Internal("every cycle vertex lies in the largest part".into()))?;
    let mut out: Vec<usize> = (1..=len).map(|j| c[(i + j) % len]).collect();
    out.push(v_r);
    Ok(out)
}

/// Checks that `seq` visits every vertex once and never stays inside a part.
pub fn validate_ham(sizes: &[usize], seq: &[usize], mode: HamMode) -> bool {
    let owner: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect();
    if seq.len() != owner.len() {
        return false;
    }
    let mut seen = vec![false; owner.len()];
    for &v in seq {
        if v >= owner.len() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    let steps_ok = seq.windows(2).all(|w| owner[w[0]] != owner[w[1]]);
    let close_ok = mode == HamMode::Path || owner[seq[0]] != owner[seq[seq.len() - 1]];
    steps_ok && close_ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = multipartite_ham(&[2, 2, 3], HamMode::Cycle).unwrap();
        assert_eq!(c.len(), 7);
        assert!(validate_ham(&[2, 2, 3], &c, HamMode::Cycle));
        let p = multipartite_ham(&[1, 2], HamMode::Path).unwrap();
        assert!(validate_ham(&[1, 2], &p, HamMode::Path));
        let b = multipartite_ham(&[3, 3], HamMode::Cycle).unwrap();
        assert_eq!(b, vec![0, 3, 1, 4, 2, 5]);
    }

    #[test]
    fn preconditions() {
        assert!(multipartite_ham(&[1, 1], HamMode::Cycle).is_err());
        assert!(multipartite_ham(&[1, 3], HamMode::Cycle).is_err());
        assert!(multipartite_ham(&[2, 0, 2], HamMode::Cycle).is_err());
        assert!(multipartite_ham(&[2, 2], HamMode::Path).is_err());
        assert_eq!(multipartite_ham(&[1], HamMode::Path).unwrap(), vec![0]);
    }

    #[test]
    fn exhaustive_small() {
        let mut sizes = Vec::new();
        fn rec(sizes: &mut Vec<usize>, depth: usize) {
            if !sizes.is_empty() {
                let total: usize = sizes.iter().sum();
                let max = *sizes.iter().max().unwrap();
                for mode in [HamMode::Cycle, HamMode::Path] {
                    let ok = match mode {
                        HamMode::Cycle => total - max >= max && total >= 3,
                        HamMode::Path => total - max + 1 == max,
                    };
                    let got = multipartite_ham(sizes, mode);
                    assert_eq!(got.is_ok(), ok, "{sizes:?} {mode:?}");
                    if let Ok(seq) = got {
                        assert!(validate_ham(sizes, &seq, mode), "{sizes:?} {mode:?} {seq:?}");
                    }
                }
            }
            if depth == 4 {
                return;
            }
            for s in 1..=5 {
                sizes.push(s);
                rec(sizes, depth + 1);
                sizes.pop();
            }
        }
        rec(&mut sizes, 0);
    }
}
