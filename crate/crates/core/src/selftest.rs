//! Built-in acceptance checks, runnable from the CLI and the test suite.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Color, EdgeColoring};
use crate::constructions::{generator_by_name, witness_kipas_linear, GenParams};
use crate::error::{Error, Result};
use crate::formulas::{bk_path, gr_k13_path, r_path_path, t_path, ValueOrInterval};
use crate::naive;
use crate::patterns::{has_mono_pattern, has_rainbow, longest_mono_path, PatternSpec};
use crate::search::{
    brute_force_ramsey, compute_bk, compute_t, gr_desk_verify, lemma_instance, universal_check, CheckOutcome, GrMode,
    Lemma, SearchOptions,
};
use crate::structure::{classify_structure, multipartite_ham, validate_ham, HamMode, StructureContext};

type Check = std::result::Result<String, String>;

pub struct Criterion {
    pub key: &'static str,
    pub title: &'static str,
    run: fn(&SearchOptions) -> Check,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub key: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

fn err(e: Error) -> String {
    e.to_string()
}

fn within(start: Instant, limit: Duration, what: &str) -> std::result::Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("{what} took {:.1}s, limit {}s", t.as_secs_f64(), limit.as_secs()));
    }
    Ok(())
}

fn expect_value(got: ValueOrInterval, want: i64, what: &str) -> std::result::Result<(), String> {
    if got != ValueOrInterval::exact(want) {
        return Err(format!("{what}: got {got}, expected exact {want}"));
    }
    Ok(())
}

fn path_ramsey(opts: &SearchOptions) -> Check {
    let mut notes = Vec::new();
    for (n, m) in [(3, 3), (4, 3), (4, 4), (5, 4)] {
        let start = Instant::now();
        let r = brute_force_ramsey(&PatternSpec::Path(n), &PatternSpec::Path(m), 7, opts).map_err(err)?;
        let formula = r_path_path(n as i64, m as i64).map_err(err)?.value().unwrap();
        expect_value(r.value, formula, &format!("r(P{n},P{m})"))?;
        within(start, Duration::from_secs(10), &format!("r(P{n},P{m})"))?;
        notes.push(format!("r(P{n},P{m})={formula}"));
    }
    Ok(notes.join(", "))
}

fn kipas_linear(opts: &SearchOptions) -> Check {
    let start = Instant::now();
    let lf = PatternSpec::LinearForestMinEdges { min_edges: 2, min_order: 2 };
    let r = brute_force_ramsey(&PatternSpec::Kipas(4), &lf, 6, opts).map_err(err)?;
    expect_value(r.value, 5, "r(kipas4, lf2)")?;
    within(start, Duration::from_secs(10), "r(kipas4, lf2)")?;
    let w = witness_kipas_linear(4, 2).map_err(err)?;
    if has_mono_pattern(&w, 1, &PatternSpec::Kipas(4)).map_err(err)?.is_some()
        || has_mono_pattern(&w, 2, &lf).map_err(err)?.is_some()
    {
        return Err("witness on K_4 contains a target".into());
    }
    Ok("r(kipas4, lf2) = 5; K_4 witness is target-free".into())
}

fn lemma31(opts: &SearchOptions) -> Check {
    let start = Instant::now();
    for (lemma, n) in [(Lemma::L31i, 5), (Lemma::L31ii, 5)] {
        let (big_n, red, blue) = lemma_instance(lemma, n, None).map_err(err)?;
        let rep = universal_check(big_n, 2, &red, &[], &blue, opts).map_err(err)?;
        if let CheckOutcome::Counterexample(c) = rep.outcome {
            return Err(format!("{lemma:?} fails on K_{big_n}:\n{c}"));
        }
    }
    within(start, Duration::from_secs(60), "both parts")?;
    Ok("(i) on K_6 and (ii) on K_7 hold".into())
}

fn t_values(opts: &SearchOptions) -> Check {
    let mut notes = Vec::new();
    for n in [3, 4, 5] {
        let start = Instant::now();
        let r = compute_t(&PatternSpec::Path(n), 9, opts).map_err(err)?;
        let want = t_path(n as i64).map_err(err)?.value().unwrap();
        expect_value(r.value, want, &format!("t(P{n})"))?;
        within(start, Duration::from_secs(60), &format!("t(P{n})"))?;
        notes.push(format!("t(P{n})={want}"));
    }
    Ok(notes.join(", "))
}

fn bk_values(opts: &SearchOptions) -> Check {
    let mut notes = Vec::new();
    for n in [4, 6] {
        let start = Instant::now();
        let r = compute_bk(3, &PatternSpec::Path(n), 10, opts).map_err(err)?;
        let want = bk_path(3, n as i64).map_err(err)?.value().unwrap();
        expect_value(r.value, want, &format!("b_3(P{n})"))?;
        within(start, Duration::from_secs(300), &format!("b_3(P{n})"))?;
        notes.push(format!("b_3(P{n})={want}"));
    }
    Ok(notes.join(", "))
}

fn witnesses(_: &SearchOptions) -> Check {
    let start = Instant::now();
    let p = |n: Option<usize>, k: Option<usize>, m: Option<usize>| GenParams {
        n,
        k,
        m,
        verify: true,
        ..GenParams::default()
    };
    let mut runs: Vec<(&str, GenParams)> = Vec::new();
    for n in [4, 5, 6] {
        runs.push(("t-path-witness", p(Some(n), None, None)));
    }
    for n in [6, 7] {
        runs.push(("bk-path-witness", p(Some(n), Some(3), None)));
    }
    runs.push(("b3-kipas-witness", p(Some(5), None, None)));
    runs.push(("gamma1", p(None, None, None)));
    runs.push(("gamma2", p(None, None, None)));
    for (n, m) in [(4, 2), (6, 3), (8, 4)] {
        runs.push(("kipas-linear-witness", p(Some(n), None, Some(m))));
    }
    for (name, params) in &runs {
        generator_by_name(name).and_then(|g| g.generate(params)).map_err(|e| format!("{name}: {e}"))?;
    }
    within(start, Duration::from_secs(30), "witness suite")?;
    Ok(format!("{} witnesses verified", runs.len()))
}

fn gr_p5(opts: &SearchOptions) -> Check {
    let start = Instant::now();
    let holds =
        gr_desk_verify(4, &PatternSpec::Path(5), &PatternSpec::Path(6), 7, GrMode::Structure, opts).map_err(err)?;
    if let CheckOutcome::Counterexample(c) = holds.outcome {
        return Err(format!("N=7 has a counterexample ({}):\n{c}", holds.case.unwrap_or_default()));
    }
    let below =
        gr_desk_verify(4, &PatternSpec::Path(5), &PatternSpec::Path(6), 6, GrMode::Structure, opts).map_err(err)?;
    let CheckOutcome::Counterexample(_) = below.outcome else {
        return Err("N=6 unexpectedly holds".into());
    };
    within(start, Duration::from_secs(300), "structure verification")?;
    Ok(format!("N=7 holds, N=6 fails in case {}", below.case.unwrap_or_default()))
}

/// Every coloring of `K_n` with colors `1..=k`, in lexicographic order.
fn all_colorings(n: usize, k: Color) -> impl Iterator<Item = EdgeColoring> {
    let m = n * (n - 1) / 2;
    let total = (k as u64).pow(m as u32);
    (0..total).map(move |mut x| {
        let mut cols = vec![1; m];
        for c in cols.iter_mut().rev() {
            *c = (x % k as u64) as Color + 1;
            x /= k as u64;
        }
        EdgeColoring::from_lex_colors(n, k, false, cols).expect("valid by construction")
    })
}

fn k13_completeness(_: &SearchOptions) -> Check {
    let start = Instant::now();
    let (mut checked, mut g1, mut dominant) = (0, 0, 0);
    for c in all_colorings(5, 3) {
        if !c.is_surjective() || has_rainbow(&c, &PatternSpec::Star(3)).map_err(err)?.is_some() {
            continue;
        }
        checked += 1;
        match classify_structure(&c, StructureContext::K13).label() {
            "G1" => g1 += 1,
            "i" => dominant += 1,
            other => return Err(format!("classified as {other}:\n{c}")),
        }
    }
    within(start, Duration::from_secs(60), "classification")?;
    Ok(format!("{checked} colorings: {dominant} dominant, {g1} G1"))
}

fn reductions(_: &SearchOptions) -> Check {
    let mut count = 0;
    for k in 4..=8i64 {
        for n in 2 * (k - 1)..=60 {
            let (a, b) = (gr_k13_path(k, n).map_err(err)?, bk_path(k, n).map_err(err)?);
            if a != b {
                return Err(format!("k={k}, n={n}: gr gives {a}, b_k gives {b}"));
            }
            count += 1;
        }
    }
    for n in 4..=60 {
        let (a, b) = (gr_k13_path(3, n).map_err(err)?, t_path(n).map_err(err)?);
        if a != b {
            return Err(format!("k=3, n={n}: gr gives {a}, t gives {b}"));
        }
        count += 1;
    }
    Ok(format!("{count} parameter pairs agree"))
}

/// Patterns compared against the naive oracle on hosts with `n` vertices.
pub fn oracle_patterns() -> Vec<PatternSpec> {
    use PatternSpec::*;
    let mut v: Vec<PatternSpec> = (2..=6).map(Path).collect();
    v.extend([Star(2), Star(3), Kipas(2), Kipas(3), Complete(3), PatternSpec::p4_plus()]);
    v.extend([LinearForestExact(vec![2, 2]), LinearForestExact(vec![3, 2]), LinearForestExact(vec![3, 3])]);
    for min_order in [2, 3] {
        for min_edges in [2, 3] {
            v.push(LinearForestMinEdges { min_edges, min_order });
        }
    }
    v
}

/// Compares detectors with the naive oracle on one coloring; returns a mismatch description.
pub fn oracle_mismatch(c: &EdgeColoring, patterns: &[PatternSpec]) -> Result<Option<String>> {
    for color in 1..=c.n_colors() {
        let adj = naive::class_matrix(c, color);
        let fast = longest_mono_path(c, color)?.0;
        let slow = naive::longest_path(&adj);
        if fast != slow {
            return Ok(Some(format!("longest path in color {color}: detector {fast}, naive {slow}")));
        }
        for p in patterns {
            let fast = has_mono_pattern(c, color, p)?.is_some();
            let slow = naive::contains(&adj, p);
            if fast != slow {
                return Ok(Some(format!("{p} in color {color}: detector {fast}, naive {slow}")));
            }
        }
    }
    Ok(None)
}

/// A seeded random coloring with `2 <= n <= 7` and `1 <= k <= 4`.
pub fn random_small_coloring(rng: &mut ChaCha8Rng) -> EdgeColoring {
    let n = rng.gen_range(2..=7);
    let k: Color = rng.gen_range(1..=4);
    EdgeColoring::from_fn(n, k, |_, _| rng.gen_range(1..=k)).expect("valid by construction")
}

fn oracle(_: &SearchOptions) -> Check {
    let patterns = oracle_patterns();
    let mut count = 0;
    for c in all_colorings(5, 2) {
        if let Some(m) = oracle_mismatch(&c, &patterns).map_err(err)? {
            return Err(format!("{m}\n{c}"));
        }
        count += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..10_000 {
        let c = random_small_coloring(&mut rng);
        if let Some(m) = oracle_mismatch(&c, &patterns).map_err(err)? {
            return Err(format!("{m}\n{c}"));
        }
        count += 1;
    }
    Ok(format!("{count} colorings agree on {} patterns", patterns.len()))
}

/// A random size vector meeting the precondition of `mode`.
pub fn random_ham_sizes(rng: &mut ChaCha8Rng, mode: HamMode) -> Vec<usize> {
    loop {
        let parts = rng.gen_range(2..=6);
        let mut sizes: Vec<usize> = (0..parts).map(|_| rng.gen_range(1..=6)).collect();
        match mode {
            HamMode::Cycle => {
                let total: usize = sizes.iter().sum();
                let max = *sizes.iter().max().unwrap();
                if total - max >= max && total >= 3 {
                    return sizes;
                }
            }
            HamMode::Path => {
                let rest: usize = sizes.iter().sum();
                sizes.insert(rng.gen_range(0..=sizes.len()), rest + 1);
                return sizes;
            }
        }
    }
}

fn ham(_: &SearchOptions) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for mode in [HamMode::Cycle, HamMode::Path] {
        for _ in 0..1000 {
            let sizes = random_ham_sizes(&mut rng, mode);
            let seq = multipartite_ham(&sizes, mode).map_err(|e| format!("{sizes:?} {mode:?}: {e}"))?;
            if !validate_ham(&sizes, &seq, mode) {
                return Err(format!("{sizes:?} {mode:?}: invalid sequence {seq:?}"));
            }
        }
    }
    Ok("2000 sequences valid".into())
}

static CRITERIA: &[Criterion] = &[
    Criterion { key: "thm2.1", title: "path-path Ramsey numbers by exhaustive search", run: path_ramsey },
    Criterion { key: "thm1.7", title: "kipas versus linear forests at (4, 2)", run: kipas_linear },
    Criterion { key: "lemma3.1", title: "kipas-free 2-colorings of K_6 and K_7", run: lemma31 },
    Criterion { key: "lemma4.2", title: "t(P_n) by T-family enumeration", run: t_values },
    Criterion { key: "lemma4.1", title: "b_3(P_n) by B_3-family enumeration", run: bk_values },
    Criterion { key: "witnesses", title: "witness colorings are members and target-free", run: witnesses },
    Criterion { key: "thm1.8", title: "gr_4(P_5 : P_6) = 7 by structure-guided search", run: gr_p5 },
    Criterion { key: "thm1.5", title: "rainbow-K_{1,3}-free 3-colorings of K_5 are classified", run: k13_completeness },
    Criterion { key: "reductions", title: "Gallai-Ramsey formulas reduce to b_k and t", run: reductions },
    Criterion { key: "oracle", title: "detectors agree with naive enumeration", run: oracle },
    Criterion { key: "lemma2.9", title: "multipartite Hamiltonian sequences are valid", run: ham },
];

pub fn criteria() -> &'static [Criterion] {
    CRITERIA
}

/// Runs every criterion, or only those whose key starts with `only`.
pub fn run_selftest(only: Option<&str>, opts: &SearchOptions) -> Result<Vec<CriterionResult>> {
    let chosen: Vec<&Criterion> = CRITERIA.iter().filter(|c| only.is_none_or(|o| c.key.starts_with(o))).collect();
    if chosen.is_empty() {
        let keys: Vec<_> = CRITERIA.iter().map(|c| c.key).collect();
        return Err(Error::Syntax(format!("no criterion matches {:?}; keys: {}", only.unwrap_or(""), keys.join(", "))));
    }
    Ok(chosen.into_iter().map(|c| run_one(c, opts)).collect())
}

pub fn run_one(c: &Criterion, opts: &SearchOptions) -> CriterionResult {
    let start = Instant::now();
    let outcome = (c.run)(opts);
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult { key: c.key, title: c.title, passed, detail, elapsed }
}

pub fn criterion_by_key(key: &str) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.key == key)
}
