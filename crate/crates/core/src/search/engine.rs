//! Depth-first enumeration of edge colorings that avoid a set of patterns.
//!
//! Edges are decided in lexicographic order. After each assignment only the
//! checks that can newly fire are re-run: monochromatic checks in the new
//! color, and rainbow copies through the new edge. The first avoiding
//! coloring in enumeration order is the result, independent of thread count.
//!
//! When every edge is free, vertices are interchangeable and each row `i` is
//! kept non-decreasing within every class of vertices `j > i` that agree on
//! their colors towards `0..i`. Every coloring has an isomorphic copy of that
//! form, so existence answers are unchanged.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::{pair_count, pair_index, BitGraph, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::formulas::ValueOrInterval;
use crate::patterns::{rainbow_through, resolve, ColorLookup, Detector, PatternSpec};

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Worker threads; 0 picks the rayon default.
    pub threads: usize,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
}

/// One colored-pattern check. `color: None` means "in any color".
#[derive(Clone, Debug)]
pub struct MonoCheck {
    pub color: Option<Color>,
    pub pattern: PatternSpec,
}

/// A family of partial colorings to complete.
#[derive(Clone, Debug)]
pub struct Problem {
    pub n: usize,
    pub k: Color,
    /// Per edge (lexicographic rank): the allowed colors; a single entry fixes the edge.
    pub allowed: Vec<Vec<Color>>,
    pub avoid_mono: Vec<MonoCheck>,
    pub avoid_rainbow: Vec<PatternSpec>,
    pub require_all_colors: bool,
}

impl Problem {
    /// Every edge free over all `k` colors.
    pub fn full(n: usize, k: Color) -> Self {
        Problem {
            n,
            k,
            allowed: vec![(1..=k).collect(); pair_count(n)],
            avoid_mono: Vec::new(),
            avoid_rainbow: Vec::new(),
            require_all_colors: false,
        }
    }

    pub fn set_allowed(&mut self, u: usize, v: usize, colors: Vec<Color>) {
        let (a, b) = (u.min(v), u.max(v));
        self.allowed[pair_index(self.n, a, b)] = colors;
    }

    /// Color permutations map solutions to solutions only when every edge is
    /// free over every color and every pattern is checked in every color.
    fn color_symmetric(&self) -> bool {
        let full = self.allowed.iter().all(|a| a.len() == self.k as usize);
        let checks = self.avoid_mono.iter().all(|c| {
            c.color.is_none()
                || (1..=self.k).all(|col| {
                    self.avoid_mono
                        .iter()
                        .any(|d| d.pattern == c.pattern && (d.color == Some(col) || d.color.is_none()))
                })
        });
        full && checks
    }
}

#[derive(Clone, Debug)]
pub enum Outcome {
    /// The first avoiding coloring in enumeration order.
    Found(EdgeColoring),
    Exhausted,
}

#[derive(Clone, Debug)]
pub struct RunStats {
    pub outcome: Outcome,
    pub nodes: u64,
    pub elapsed: Duration,
}

struct Compiled<'a> {
    problem: &'a Problem,
    pairs: Vec<(usize, usize)>,
    /// Checks applying to each color (index by color), with their detectors.
    mono: Vec<Vec<(&'a PatternSpec, &'static dyn Detector)>>,
    rainbow: Vec<BitGraph>,
    /// suffix[i][c]: number of edges at rank >= i that allow color c.
    suffix: Vec<Vec<u32>>,
    symmetric: bool,
    rows_sorted: bool,
}

#[derive(Clone)]
struct State {
    n: usize,
    colors: Vec<Color>,
    classes: Vec<BitGraph>,
    used: Vec<u32>,
    max_used: Color,
}

impl ColorLookup for State {
    fn n(&self) -> usize {
        self.n
    }
    fn get(&self, u: usize, v: usize) -> Color {
        let (a, b) = (u.min(v), u.max(v));
        self.colors[pair_index(self.n, a, b)]
    }
}

impl State {
    fn set(&mut self, rank: usize, u: usize, v: usize, c: Color) {
        self.colors[rank] = c;
        self.classes[c as usize].add_edge(u, v);
        self.used[c as usize] += 1;
        self.max_used = self.max_used.max(c);
    }

    fn unset(&mut self, rank: usize, u: usize, v: usize, c: Color, prev_max: Color) {
        self.colors[rank] = 0;
        self.classes[c as usize].remove_edge(u, v);
        self.used[c as usize] -= 1;
        self.max_used = prev_max;
    }
}

struct Shared {
    nodes: AtomicU64,
    best: AtomicUsize,
    aborted: AtomicBool,
    budget: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared {
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.is_some_and(|b| n > b) {
            self.aborted.store(true, Ordering::Relaxed);
        }
        if n.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() > d) {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }
}

impl<'a> Compiled<'a> {
    fn new(problem: &'a Problem) -> Result<Self> {
        let n = problem.n;
        let k = problem.k;
        if problem.allowed.len() != pair_count(n) {
            return Err(Error::Internal("allowed list does not match the edge count".into()));
        }
        if let Some(a) = problem.allowed.iter().find(|a| a.is_empty() || a.iter().any(|&c| c == 0 || c > k)) {
            return Err(Error::Domain(format!("invalid allowed color list {a:?}")));
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut mono = vec![Vec::new(); k as usize + 1];
        for check in &problem.avoid_mono {
            let det = resolve(&check.pattern, n)?;
            match check.color {
                Some(c) if c == 0 || c > k => return Err(Error::Domain(format!("check color {c} outside 1..={k}"))),
                Some(c) => mono[c as usize].push((&check.pattern, det)),
                None => (1..=k).for_each(|c| mono[c as usize].push((&check.pattern, det))),
            }
        }
        let rainbow = problem
            .avoid_rainbow
            .iter()
            .map(|p| {
                p.validate()?;
                p.graph().ok_or_else(|| Error::Capability(format!("rainbow check needs a concrete pattern, got {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let m = pairs.len();
        let mut suffix = vec![vec![0u32; k as usize + 1]; m + 1];
        for i in (0..m).rev() {
            suffix[i] = suffix[i + 1].clone();
            for &c in &problem.allowed[i] {
                suffix[i][c as usize] += 1;
            }
        }
        let symmetric = problem.color_symmetric();
        // Color and vertex reductions are each sound alone; combining them is not.
        let full = problem.allowed.iter().all(|a| a.len() == k as usize);
        Ok(Compiled { problem, pairs, mono, rainbow, suffix, symmetric, rows_sorted: full && !symmetric })
    }

    fn empty_state(&self) -> State {
        let n = self.problem.n;
        State {
            n,
            colors: vec![0; self.pairs.len()],
            classes: vec![BitGraph::empty(n); self.problem.k as usize + 1],
            used: vec![0; self.problem.k as usize + 1],
            max_used: 0,
        }
    }

    /// Whether coloring edge `rank` created a forbidden pattern.
    fn violates(&self, st: &State, rank: usize, c: Color) -> bool {
        let (u, v) = self.pairs[rank];
        let g = &st.classes[c as usize];
        if self.mono[c as usize].iter().any(|(p, det)| p.order() <= self.problem.n && det.contains(g, p)) {
            return true;
        }
        self.rainbow.iter().any(|p| rainbow_through(p, st, u, v))
    }

    /// Whether the remaining edges can still supply every missing color.
    fn surjective_possible(&self, st: &State, next: usize) -> bool {
        if !self.problem.require_all_colors {
            return true;
        }
        let mut missing = 0;
        for c in 1..=self.problem.k as usize {
            if st.used[c] == 0 {
                if self.suffix[next][c] == 0 {
                    return false;
                }
                missing += 1;
            }
        }
        missing <= self.pairs.len() - next
    }

    /// Lower bound on the color of edge `(i, j)` from the previous vertex in `j`'s class.
    fn row_floor(&self, st: &State, i: usize, j: usize) -> Color {
        if !self.rows_sorted {
            return 0;
        }
        (i + 1..j).rev().find(|&p| (0..i).all(|u| st.get(u, p) == st.get(u, j))).map_or(0, |p| st.get(i, p))
    }

    fn choices(&self, st: &State, rank: usize) -> impl Iterator<Item = Color> + '_ {
        let cap = if self.symmetric { st.max_used + 1 } else { Color::MAX };
        let (i, j) = self.pairs[rank];
        let floor = self.row_floor(st, i, j);
        self.problem.allowed[rank].iter().copied().filter(move |&c| c <= cap && c >= floor)
    }

    fn to_coloring(&self, st: &State) -> Result<EdgeColoring> {
        EdgeColoring::from_lex_colors(self.problem.n, self.problem.k, false, st.colors.clone())
    }

    /// Depth-first search from `rank`; returns true when `st` holds an avoiding coloring.
    fn dfs(&self, st: &mut State, rank: usize, shared: &Shared, task: usize) -> bool {
        if rank == self.pairs.len() {
            return true;
        }
        let (u, v) = self.pairs[rank];
        let choices: Vec<Color> = self.choices(st, rank).collect();
        for c in choices {
            if !shared.tick() || shared.best.load(Ordering::Relaxed) < task {
                return false;
            }
            let prev = st.max_used;
            st.set(rank, u, v, c);
            if !self.violates(st, rank, c)
                && self.surjective_possible(st, rank + 1)
                && self.dfs(st, rank + 1, shared, task)
            {
                return true;
            }
            st.unset(rank, u, v, c, prev);
        }
        false
    }

    /// Prefix states at `depth`, in DFS order, with pruning applied.
    fn prefixes(&self, depth: usize, shared: &Shared) -> Vec<State> {
        let mut out = Vec::new();
        let mut st = self.empty_state();
        self.collect_prefixes(&mut st, 0, depth, shared, &mut out);
        out
    }

    fn collect_prefixes(&self, st: &mut State, rank: usize, depth: usize, shared: &Shared, out: &mut Vec<State>) {
        if rank == depth {
            out.push(st.clone());
            return;
        }
        let (u, v) = self.pairs[rank];
        let choices: Vec<Color> = self.choices(st, rank).collect();
        for c in choices {
            shared.tick();
            let prev = st.max_used;
            st.set(rank, u, v, c);
            if !self.violates(st, rank, c) && self.surjective_possible(st, rank + 1) {
                self.collect_prefixes(st, rank + 1, depth, shared, out);
            }
            st.unset(rank, u, v, c, prev);
        }
    }
}

fn pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

/// Runs the search. A budget overrun is reported as `Error::Budget` with
/// `partial` as the interval known so far.
pub fn run(problem: &Problem, opts: &SearchOptions, partial: ValueOrInterval) -> Result<RunStats> {
    let start = Instant::now();
    let compiled = Compiled::new(problem)?;
    let shared = Shared {
        nodes: AtomicU64::new(0),
        best: AtomicUsize::new(usize::MAX),
        aborted: AtomicBool::new(false),
        budget: opts.node_budget,
        deadline: opts.time_budget.map(|d| start + d),
    };
    let m = compiled.pairs.len();
    if !compiled.surjective_possible(&compiled.empty_state(), 0) {
        return Ok(RunStats { outcome: Outcome::Exhausted, nodes: 0, elapsed: start.elapsed() });
    }
    // Split deep enough to give every worker several tasks.
    let depth = m.min(if problem.k <= 2 { 8 } else { 5 });
    let tasks = compiled.prefixes(depth, &shared);
    let results: Vec<Option<State>> = pool(opts.threads)?.install(|| {
        tasks
            .into_par_iter()
            .enumerate()
            .map(|(i, mut st)| {
                if shared.best.load(Ordering::Relaxed) < i {
                    return None;
                }
                if compiled.dfs(&mut st, depth, &shared, i) {
                    shared.best.fetch_min(i, Ordering::Relaxed);
                    Some(st)
                } else {
                    None
                }
            })
            .collect()
    });
    let nodes = shared.nodes.load(Ordering::Relaxed);
    let found = results.into_iter().flatten().next();
    // A found task is final only if every earlier task ran to completion.
    if shared.aborted.load(Ordering::Relaxed) {
        return Err(Error::Budget {
            reason: match opts.node_budget {
                Some(b) if nodes > b => format!("node budget of {b} exhausted"),
                _ => "time budget exhausted".to_string(),
            },
            partial,
        });
    }
    let outcome = match found {
        Some(st) => Outcome::Found(compiled.to_coloring(&st)?),
        None => Outcome::Exhausted,
    };
    Ok(RunStats { outcome, nodes, elapsed: start.elapsed() })
}
