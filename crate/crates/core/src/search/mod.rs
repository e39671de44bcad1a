//! Exhaustive and family-restricted searches for Ramsey-type quantities.

mod engine;
mod random;

pub use engine::{run, MonoCheck, Outcome, Problem, RunStats, SearchOptions};
pub use random::random_refutation;

use std::fmt;
use std::time::{Duration, Instant};

use crate::coloring::{Color, EdgeColoring};
use crate::constructions::{tri_cross, tri_internal, FamilyKind};
use crate::error::{domain, Error, Result};
use crate::formulas::ValueOrInterval;
use crate::patterns::{has_any_mono, has_mono_pattern, has_rainbow, PatternSpec};
use crate::structure::is_member;

/// Largest host for two-color full enumeration in `brute_force_ramsey`.
pub const MAX_RAMSEY_N: usize = 9;
pub const MAX_BK_N: usize = 14;
pub const MAX_T_N: usize = 12;
pub const MAX_UNIVERSAL_N: usize = 11;
/// Largest `k^C(N,2) / k!` accepted by full-mode Gallai-Ramsey verification.
pub const MAX_FULL_COLORINGS: f64 = (1u64 << 36) as f64;

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub quantity: String,
    pub value: ValueOrInterval,
    /// A target-free coloring on `value - 1` vertices, when the value is exact and such a coloring exists.
    pub extremal_witness: Option<EdgeColoring>,
    pub nodes_explored: u64,
    pub wall_time: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Holds,
    Counterexample(EdgeColoring),
    /// Randomized search found nothing; this is evidence, not proof.
    NotRefuted {
        samples: u64,
    },
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub outcome: CheckOutcome,
    /// Which enumerated case produced the counterexample, if any.
    pub case: Option<String>,
    pub nodes_explored: u64,
    pub wall_time: Duration,
}

impl CheckReport {
    pub fn holds(&self) -> bool {
        !matches!(self.outcome, CheckOutcome::Counterexample(_))
    }
}

fn mono(color: Option<Color>, pattern: &PatternSpec) -> MonoCheck {
    MonoCheck { color, pattern: pattern.clone() }
}

/// Nondecreasing sequences of `parts` integers, each at least `min`, summing to `total`.
pub fn part_multisets(parts: usize, total: usize, min: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut s = lo;
        while s * parts <= left {
            cur.push(s);
            rec(left - s, parts - 1, s, cur, out);
            cur.pop();
            s += 1;
        }
    }
    let mut out = Vec::new();
    rec(total, parts, min.max(1), &mut Vec::new(), &mut out);
    out
}

fn owners(sizes: &[usize]) -> Vec<usize> {
    sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect()
}

/// `B_k` members with the given consecutive part sizes: cross edges color 1,
/// part `i` internally from `{1, i+2}`, every color used.
pub fn bk_problem(k: Color, sizes: &[usize]) -> Problem {
    let own = owners(sizes);
    let mut p = Problem::full(own.len(), k);
    p.require_all_colors = true;
    for u in 0..own.len() {
        for v in u + 1..own.len() {
            let allowed = if own[u] == own[v] { vec![1, own[u] as Color + 2] } else { vec![1] };
            p.set_allowed(u, v, allowed);
        }
    }
    p
}

/// `T` members with the given consecutive part sizes.
pub fn t_problem(sizes: &[usize]) -> Problem {
    let own = owners(sizes);
    let mut p = Problem::full(own.len(), 3);
    for u in 0..own.len() {
        for v in u + 1..own.len() {
            let allowed =
                if own[u] == own[v] { tri_internal(own[u]).to_vec() } else { vec![tri_cross(own[u], own[v])] };
            p.set_allowed(u, v, allowed);
        }
    }
    p
}

fn internal(msg: impl fmt::Display) -> Error {
    Error::Internal(msg.to_string())
}

fn check_avoids(c: &EdgeColoring, checks: &[MonoCheck], rainbow: &[PatternSpec]) -> Result<()> {
    for chk in checks {
        let hit = match chk.color {
            Some(col) => has_mono_pattern(c, col, &chk.pattern)?,
            None => has_any_mono(c, &chk.pattern)?,
        };
        if let Some(e) = hit {
            return Err(internal(format!("search result contains {} in color {:?}", chk.pattern, e.color)));
        }
    }
    for p in rainbow {
        if has_rainbow(c, p)?.is_some() {
            return Err(internal(format!("search result contains a rainbow {p}")));
        }
    }
    Ok(())
}

/// Smallest `N <= max_n` such that every red/blue coloring of `K_N` has a red
/// `red` or a blue `blue` (red is color 1, blue color 2).
pub fn brute_force_ramsey(
    red: &PatternSpec,
    blue: &PatternSpec,
    max_n: usize,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    red.validate()?;
    blue.validate()?;
    if max_n > MAX_RAMSEY_N {
        return Err(Error::Capability(format!("two-color enumeration supports max_n <= {MAX_RAMSEY_N}, got {max_n}")));
    }
    for p in [red, blue] {
        if p.order() > max_n {
            return domain(format!("pattern {p} has {} vertices, more than max_n = {max_n}", p.order()));
        }
    }
    let start = Instant::now();
    let checks = [mono(Some(1), red), mono(Some(2), blue)];
    let mut nodes = 0;
    let mut witness = None;
    let quantity = format!("ramsey({red}, {blue})");
    for n in 1..=max_n {
        let mut p = Problem::full(n, 2);
        p.avoid_mono = checks.to_vec();
        let stats = run(&p, opts, ValueOrInterval::at_least(n as i64))?;
        nodes += stats.nodes;
        match stats.outcome {
            Outcome::Found(c) => {
                check_avoids(&c, &checks, &[])?;
                witness = Some(c);
            }
            Outcome::Exhausted => {
                return Ok(SearchReport {
                    quantity,
                    value: ValueOrInterval::exact(n as i64),
                    extremal_witness: witness,
                    nodes_explored: nodes,
                    wall_time: start.elapsed(),
                });
            }
        }
    }
    Ok(SearchReport {
        quantity,
        value: ValueOrInterval::at_least(max_n as i64 + 1),
        extremal_witness: None,
        nodes_explored: nodes,
        wall_time: start.elapsed(),
    })
}

/// Shared loop of the family-restricted quantities: the first `N` whose every
/// member contains a monochromatic target.
fn family_quantity(
    quantity: String,
    start_n: usize,
    max_n: usize,
    family: FamilyKind,
    target: &PatternSpec,
    members: impl Fn(usize) -> Vec<Problem>,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    let start = Instant::now();
    let check = [mono(None, target)];
    let mut nodes = 0;
    let mut witness = None;
    for n in start_n..=max_n {
        let mut found = None;
        for mut p in members(n) {
            p.avoid_mono = check.to_vec();
            let stats = run(&p, opts, ValueOrInterval::at_least(n as i64))?;
            nodes += stats.nodes;
            if let Outcome::Found(c) = stats.outcome {
                found = Some(c);
                break;
            }
        }
        match found {
            Some(c) => {
                check_avoids(&c, &check, &[])?;
                if is_member(&c, family).is_none() {
                    return Err(internal(format!("search produced a non-member of {family}")));
                }
                witness = Some(c);
            }
            None => {
                return Ok(SearchReport {
                    quantity,
                    value: ValueOrInterval::exact(n as i64),
                    extremal_witness: witness,
                    nodes_explored: nodes,
                    wall_time: start.elapsed(),
                })
            }
        }
    }
    Err(Error::Budget {
        reason: format!("{quantity} not reached within max_n = {max_n}"),
        partial: ValueOrInterval::at_least(max_n.max(start_n.saturating_sub(1)) as i64 + 1),
    })
}

/// Smallest `N >= 2(k-1)` such that every member of `B_k(N)` contains a
/// monochromatic `target`.
pub fn compute_bk(k: usize, target: &PatternSpec, max_n: usize, opts: &SearchOptions) -> Result<SearchReport> {
    target.validate()?;
    if k < 3 {
        return domain(format!("b_k needs k >= 3, got {k}"));
    }
    if max_n > MAX_BK_N {
        return Err(Error::Capability(format!("B_k enumeration supports max_n <= {MAX_BK_N}, got {max_n}")));
    }
    family_quantity(
        format!("bk({k}, {target})"),
        2 * (k - 1),
        max_n,
        FamilyKind::Bk,
        target,
        |n| part_multisets(k - 1, n, 2).iter().map(|s| bk_problem(k as Color, s)).collect(),
        opts,
    )
}

/// Smallest `N >= 3` such that every member of `T(N)` contains a monochromatic `target`.
pub fn compute_t(target: &PatternSpec, max_n: usize, opts: &SearchOptions) -> Result<SearchReport> {
    target.validate()?;
    if max_n > MAX_T_N {
        return Err(Error::Capability(format!("T enumeration supports max_n <= {MAX_T_N}, got {max_n}")));
    }
    family_quantity(
        format!("t({target})"),
        3,
        max_n,
        FamilyKind::T,
        target,
        |n| part_multisets(3, n, 1).iter().map(|s| t_problem(s)).collect(),
        opts,
    )
}

/// Verifies that every 2-coloring of `K_n` avoiding the forbidden patterns
/// contains at least one required pattern.
pub fn universal_check(
    n: usize,
    colors: Color,
    forbidden: &[MonoCheck],
    rainbow: &[PatternSpec],
    required: &[MonoCheck],
    opts: &SearchOptions,
) -> Result<CheckReport> {
    if colors != 2 {
        return domain(format!("universal checks run over 2-colorings, got {colors} colors"));
    }
    if n > MAX_UNIVERSAL_N {
        return Err(Error::Capability(format!("universal checks support N <= {MAX_UNIVERSAL_N}, got {n}")));
    }
    let mut p = Problem::full(n, 2);
    p.avoid_mono = forbidden.iter().chain(required).cloned().collect();
    p.avoid_rainbow = rainbow.to_vec();
    let stats = run(&p, opts, ValueOrInterval::interval(0, 0))?;
    let outcome = match stats.outcome {
        Outcome::Found(c) => {
            check_avoids(&c, &p.avoid_mono, rainbow)?;
            CheckOutcome::Counterexample(c)
        }
        Outcome::Exhausted => CheckOutcome::Holds,
    };
    Ok(CheckReport { outcome, case: None, nodes_explored: stats.nodes, wall_time: stats.elapsed })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrMode {
    Full,
    Structure,
}

impl std::str::FromStr for GrMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(GrMode::Full),
            "structure" => Ok(GrMode::Structure),
            _ => Err(Error::Syntax(format!("unknown mode '{s}' (expected full or structure)"))),
        }
    }
}

/// Number of colorings full mode would visit, up to color symmetry.
fn full_mode_size(k: usize, n: usize) -> f64 {
    let edges = (n * n.saturating_sub(1) / 2) as f64;
    let fact: f64 = (1..=k).map(|i| i as f64).product();
    (k as f64).powf(edges) / fact
}

/// Structure-mode cases: every member of the case list for the rainbow
/// pattern, as problems whose avoiding solutions are counterexamples.
fn structure_cases(k: usize, rainbow: &PatternSpec, n: usize) -> Result<Vec<(String, Problem)>> {
    let kc = k as Color;
    let mut cases: Vec<(String, Problem)> = Vec::new();
    let bk = |cases: &mut Vec<(String, Problem)>| {
        for s in part_multisets(k - 1, n, 2) {
            cases.push((format!("Bk parts {s:?}"), bk_problem(kc, &s)));
        }
    };
    let is_p5 = *rainbow == PatternSpec::Path(5);
    let is_k13 = *rainbow == PatternSpec::Star(3);
    let is_p4plus = *rainbow == PatternSpec::p4_plus();
    if !(is_p5 || is_k13 || is_p4plus) {
        return Err(Error::Capability(format!(
            "structure mode knows the case lists for p5, star:3 and p4plus, not {rainbow}"
        )));
    }
    if k < 3 {
        return domain(format!("structure mode needs k >= 3, got {k}"));
    }
    if is_k13 && k == 3 {
        for s in part_multisets(3, n, 1) {
            let mut p = t_problem(&s);
            p.require_all_colors = true;
            cases.push((format!("T parts {s:?}"), p));
        }
    }
    bk(&mut cases);
    let fixed = |f: &dyn Fn(usize, usize) -> Color| {
        let mut p = Problem::full(n, kc);
        p.require_all_colors = true;
        for u in 0..n {
            for v in u + 1..n {
                p.set_allowed(u, v, vec![f(u, v)]);
            }
        }
        p
    };
    if is_p5 && n >= 2 {
        let a = n - 1;
        let mut p = Problem::full(n, kc);
        p.require_all_colors = true;
        for u in 0..a {
            for v in u + 1..a {
                p.set_allowed(u, v, vec![1]);
            }
        }
        cases.push(("ii".into(), p));
        if k == 4 && n >= 3 {
            let mut p = fixed(&|u, v| match (u, v) {
                (0, 1) => 2,
                (0, 2) => 3,
                (1, 2) => 4,
                _ => 1,
            });
            for v in 3..n {
                p.set_allowed(0, v, vec![1, 4]);
            }
            cases.push(("iii".into(), p));
        }
        if k == 4 && n >= 4 {
            let mut p = fixed(&|u, v| match (u, v) {
                (0, 1) => 2,
                (0, 2) | (1, 3) => 3,
                (0, 3) | (1, 2) => 4,
                _ => 1,
            });
            p.set_allowed(2, 3, vec![1, 2]);
            cases.push(("iv".into(), p));
        }
        if k == 4 && n == 5 {
            let c = crate::constructions::shape_sporadic()?;
            cases.push(("v".into(), fixed(&|u, v| c.color(u, v))));
        }
    }
    if is_p4plus && k == 4 && n >= 3 {
        cases.push((
            "G2".into(),
            fixed(&|u, v| match (u, v) {
                (0, 1) => 2,
                (0, _) => 3,
                (1, _) => 4,
                _ => 1,
            }),
        ));
        cases.push((
            "G3".into(),
            fixed(&|u, v| match (u, v) {
                (0, 1) => 2,
                (1, 2) => 3,
                (0, 2) => 4,
                _ => 1,
            }),
        ));
    }
    Ok(cases)
}

/// Checks that every exact `k`-coloring of `K_n` (or, in structure mode, every
/// coloring on the case list for `rainbow`) has a rainbow `rainbow` or a
/// monochromatic `target`.
pub fn gr_desk_verify(
    k: usize,
    rainbow: &PatternSpec,
    target: &PatternSpec,
    n: usize,
    mode: GrMode,
    opts: &SearchOptions,
) -> Result<CheckReport> {
    rainbow.validate()?;
    target.validate()?;
    if k == 0 || k > 31 {
        return domain(format!("k = {k} outside 1..=31"));
    }
    if n == 0 || n > crate::coloring::MAX_VERTICES {
        return domain(format!("N = {n} outside 1..={}", crate::coloring::MAX_VERTICES));
    }
    let start = Instant::now();
    let cases = match mode {
        GrMode::Full => {
            let size = full_mode_size(k, n);
            if size > MAX_FULL_COLORINGS {
                return Err(Error::Capability(format!(
                    "full enumeration of {k}-colorings of K_{n} (about {size:.3e} up to color symmetry) exceeds the budget of 2^36"
                )));
            }
            let mut p = Problem::full(n, k as Color);
            p.require_all_colors = true;
            vec![("full".to_string(), p)]
        }
        GrMode::Structure => structure_cases(k, rainbow, n)?,
    };
    let mut nodes = 0;
    for (label, mut p) in cases {
        p.avoid_mono = vec![mono(None, target)];
        p.avoid_rainbow = vec![rainbow.clone()];
        let stats = run(&p, opts, ValueOrInterval::interval(0, 0))?;
        nodes += stats.nodes;
        if let Outcome::Found(c) = stats.outcome {
            check_avoids(&c, &p.avoid_mono, &p.avoid_rainbow)?;
            let c = c.with_exact_flag(true).map_err(|e| internal(format!("counterexample is not exact: {e}")))?;
            return Ok(CheckReport {
                outcome: CheckOutcome::Counterexample(c),
                case: Some(label),
                nodes_explored: nodes,
                wall_time: start.elapsed(),
            });
        }
    }
    Ok(CheckReport { outcome: CheckOutcome::Holds, case: None, nodes_explored: nodes, wall_time: start.elapsed() })
}

/// Which lemma `lemma_check` verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    /// `K_{n+1}` without a red kipas on `n+1` vertices has a blue `2P_2` or `P_3`.
    L31i,
    /// `K_{n+2}` without a red kipas has a blue `2P_3`, `P_5` or `P_4 + P_2`.
    L31ii,
    /// `K_{n+a}` without a red kipas has a blue 3-linear forest with at least `2a` edges.
    L32,
}

impl std::str::FromStr for Lemma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3.1i" => Ok(Lemma::L31i),
            "3.1ii" => Ok(Lemma::L31ii),
            "3.2" => Ok(Lemma::L32),
            _ => Err(Error::Syntax(format!("unknown lemma '{s}' (expected 3.1i, 3.1ii or 3.2)"))),
        }
    }
}

/// The host size, forbidden red patterns and required blue patterns of a lemma instance.
pub fn lemma_instance(lemma: Lemma, n: usize, a: Option<usize>) -> Result<(usize, Vec<MonoCheck>, Vec<MonoCheck>)> {
    if n < 4 {
        return domain(format!("the kipas lemmas need n >= 4, got {n}"));
    }
    let red = vec![mono(Some(1), &PatternSpec::Kipas(n))];
    let blue = |ps: Vec<PatternSpec>| ps.iter().map(|p| mono(Some(2), p)).collect::<Vec<_>>();
    Ok(match lemma {
        Lemma::L31i => (n + 1, red, blue(vec![PatternSpec::LinearForestExact(vec![2, 2]), PatternSpec::Path(3)])),
        Lemma::L31ii => {
            if n < 5 {
                return domain(format!("part (ii) needs n >= 5, got {n}"));
            }
            (
                n + 2,
                red,
                blue(vec![
                    PatternSpec::LinearForestExact(vec![3, 3]),
                    PatternSpec::Path(5),
                    PatternSpec::LinearForestExact(vec![4, 2]),
                ]),
            )
        }
        Lemma::L32 => {
            let a = a.ok_or_else(|| Error::Domain("this lemma needs --a".into()))?;
            if a == 0 {
                return domain("a must be positive");
            }
            (n + a, red, blue(vec![PatternSpec::LinearForestMinEdges { min_edges: 2 * a, min_order: 3 }]))
        }
    })
}

/// Registry entry for the `compute` command.
#[derive(Clone, Debug, Default)]
pub struct QuantityArgs {
    pub red: Option<PatternSpec>,
    pub blue: Option<PatternSpec>,
    pub target: Option<PatternSpec>,
    pub k: Option<usize>,
    pub max_n: usize,
}

impl QuantityArgs {
    fn need<'a, T>(v: &'a Option<T>, what: &str, q: &str) -> Result<&'a T> {
        v.as_ref().ok_or_else(|| Error::Domain(format!("quantity {q} needs --{what}")))
    }
}

pub trait QuantityEngine: Sync {
    fn name(&self) -> &'static str;
    fn compute(&self, args: &QuantityArgs, opts: &SearchOptions) -> Result<SearchReport>;
}

struct RamseyEngine;
struct BkEngine;
struct TEngine;

impl QuantityEngine for RamseyEngine {
    fn name(&self) -> &'static str {
        "ramsey"
    }
    fn compute(&self, a: &QuantityArgs, opts: &SearchOptions) -> Result<SearchReport> {
        let red = QuantityArgs::need(&a.red, "red", self.name())?;
        let blue = QuantityArgs::need(&a.blue, "blue", self.name())?;
        brute_force_ramsey(red, blue, a.max_n, opts)
    }
}

impl QuantityEngine for BkEngine {
    fn name(&self) -> &'static str {
        "bk"
    }
    fn compute(&self, a: &QuantityArgs, opts: &SearchOptions) -> Result<SearchReport> {
        let k = QuantityArgs::need(&a.k, "k", self.name())?;
        compute_bk(*k, QuantityArgs::need(&a.target, "target", self.name())?, a.max_n, opts)
    }
}

impl QuantityEngine for TEngine {
    fn name(&self) -> &'static str {
        "t"
    }
    fn compute(&self, a: &QuantityArgs, opts: &SearchOptions) -> Result<SearchReport> {
        compute_t(QuantityArgs::need(&a.target, "target", self.name())?, a.max_n, opts)
    }
}

static ENGINES: &[&dyn QuantityEngine] = &[&RamseyEngine, &BkEngine, &TEngine];

pub fn quantity_engines() -> &'static [&'static dyn QuantityEngine] {
    ENGINES
}

pub fn quantity_engine(name: &str) -> Result<&'static dyn QuantityEngine> {
    ENGINES
        .iter()
        .copied()
        .find(|e| e.name() == name)
        .ok_or_else(|| Error::Syntax(format!("unknown quantity '{name}' (expected ramsey, bk or t)")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn multisets() {
        assert_eq!(part_multisets(2, 6, 2), vec![vec![2, 4], vec![3, 3]]);
        assert_eq!(part_multisets(3, 4, 1), vec![vec![1, 1, 2]]);
        assert!(part_multisets(2, 3, 2).is_empty());
    }

    #[test]
    fn small_ramsey() {
        let r = brute_force_ramsey(&PatternSpec::Path(3), &PatternSpec::Path(3), 6, &opts()).unwrap();
        assert_eq!(r.value, ValueOrInterval::exact(3));
        assert_eq!(r.extremal_witness.unwrap().n_vertices(), 2);
        assert!(brute_force_ramsey(&PatternSpec::Path(7), &PatternSpec::Path(3), 6, &opts()).is_err());
    }

    #[test]
    fn family_values() {
        let r = compute_t(&PatternSpec::Path(3), 6, &opts()).unwrap();
        assert_eq!(r.value, ValueOrInterval::exact(4));
        let r = compute_bk(3, &PatternSpec::Kipas(2), 6, &opts()).unwrap();
        assert_eq!(r.value, ValueOrInterval::exact(5));
    }

    #[test]
    fn budget_is_reported() {
        let o = SearchOptions { node_budget: Some(10), ..opts() };
        let e = brute_force_ramsey(&PatternSpec::Path(5), &PatternSpec::Path(4), 7, &o).unwrap_err();
        assert!(matches!(e, Error::Budget { .. }));
    }
}
