use std::fmt::Write as _;
use std::io::{BufRead, BufReader, Read};

use super::{pair_count, pair_index, Color, EdgeColoring, MAX_VERTICES};
use crate::error::{Error, Result};

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

fn fields<const N: usize>(line_no: usize, text: &str) -> Result<[u64; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != N {
        return parse_err(line_no, format!("expected {N} fields, found {}", parts.len()));
    }
    let mut out = [0u64; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().or_else(|_| parse_err(line_no, format!("not a non-negative integer: {p:?}")))?;
    }
    Ok(out)
}

/// Parses an "ecg v1" document. Edge lines may appear in any order.
pub fn read_coloring(input: impl Read) -> Result<EdgeColoring> {
    let reader = BufReader::new(input);
    let mut lines = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.or_else(|e| parse_err(i + 1, format!("unreadable input: {e}")))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        lines.push((i + 1, trimmed.to_owned()));
    }
    let mut it = lines.into_iter();

    let Some((ln, magic)) = it.next() else {
        return parse_err(1, "malformed header: empty input");
    };
    if magic.split_whitespace().collect::<Vec<_>>() != ["ecg", "1"] {
        return parse_err(ln, format!("malformed header: expected `ecg 1`, found {magic:?}"));
    }
    let Some((ln, dims)) = it.next() else {
        return parse_err(ln + 1, "malformed header: missing `<n> <k> <exact>` line");
    };
    let [n, k, exact] = fields::<3>(ln, &dims).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse { line, message: format!("malformed header: {message}") },
        other => other,
    })?;
    if n == 0 || n > MAX_VERTICES as u64 {
        return parse_err(ln, format!("malformed header: n={n} outside 1..={MAX_VERTICES}"));
    }
    if k == 0 || k > Color::MAX as u64 {
        return parse_err(ln, format!("malformed header: k={k} outside 1..={}", Color::MAX));
    }
    if exact > 1 {
        return parse_err(ln, format!("malformed header: exact flag must be 0 or 1, found {exact}"));
    }
    let (n, k) = (n as usize, k as Color);
    let header_line = ln;

    let mut colors = vec![0 as Color; pair_count(n)];
    let mut last_line = ln;
    for (ln, text) in it {
        last_line = ln;
        let [u, v, c] = fields::<3>(ln, &text)?;
        if u >= v || v >= n as u64 {
            return parse_err(ln, format!("invalid pair ({u}, {v}): need 0 <= u < v < {n}"));
        }
        if c == 0 || c > k as u64 {
            return parse_err(ln, format!("color out of range: {c} not in 1..={k}"));
        }
        let idx = pair_index(n, u as usize, v as usize);
        if colors[idx] != 0 {
            return parse_err(ln, format!("duplicate edge ({u}, {v})"));
        }
        colors[idx] = c as Color;
    }
    if let Some(idx) = colors.iter().position(|&c| c == 0) {
        let (u, v) = unrank(n, idx);
        return parse_err(last_line + 1, format!("missing edge ({u}, {v})"));
    }
    EdgeColoring::from_lex_colors(n, k, exact == 1, colors).or_else(|e| match e {
        Error::Domain(msg) => parse_err(header_line, msg),
        other => Err(other),
    })
}

fn unrank(n: usize, mut idx: usize) -> (usize, usize) {
    for u in 0..n {
        let row = n - u - 1;
        if idx < row {
            return (u, u + 1 + idx);
        }
        idx -= row;
    }
    unreachable!("pair rank out of range")
}

/// Serializes a coloring; edges are written in lexicographic order.
pub fn write_coloring(c: &EdgeColoring) -> String {
    let mut out = String::with_capacity(16 + 10 * c.lex_colors().len());
    out.push_str("ecg 1\n");
    let _ = writeln!(out, "{} {} {}", c.n_vertices(), c.n_colors(), u8::from(c.is_exact()));
    for (u, v, col) in c.edges() {
        let _ = writeln!(out, "{u} {v} {col}");
    }
    out
}
