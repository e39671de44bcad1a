//! Seeded random refutation for instances beyond exhaustive reach.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{CheckOutcome, CheckReport, MonoCheck, SearchOptions};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::patterns::{has_any_mono, has_mono_pattern};

const CHUNK: u64 = 4096;

fn contains(c: &EdgeColoring, chk: &MonoCheck) -> Result<bool> {
    Ok(match chk.color {
        Some(col) => has_mono_pattern(c, col, &chk.pattern)?.is_some(),
        None => has_any_mono(c, &chk.pattern)?.is_some(),
    })
}

/// Samples `samples` random 2-colorings of `K_n` and returns the first one (in
/// sample order) that avoids every forbidden and every required pattern.
///
/// Each sample draws its own blue density uniformly from `(0, 1)`, so both
/// sparse and dense color classes are explored. Chunk `i` uses stream `i` of a
/// ChaCha8 generator seeded with `seed`, which keeps results independent of the
/// thread count.
pub fn random_refutation(
    n: usize,
    forbidden: &[MonoCheck],
    required: &[MonoCheck],
    samples: u64,
    seed: u64,
    opts: &SearchOptions,
) -> Result<CheckReport> {
    let start = Instant::now();
    let chunks = samples.div_ceil(CHUNK);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let results: Vec<Result<Option<EdgeColoring>>> = pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(chunk);
                let count = CHUNK.min(samples - chunk * CHUNK);
                for _ in 0..count {
                    let p: f64 = rng.gen_range(0.0..1.0);
                    let c = EdgeColoring::from_fn(n, 2, |_, _| if rng.gen_bool(p) { 2 } else { 1 })?;
                    let mut hit = false;
                    for chk in forbidden.iter().chain(required) {
                        if contains(&c, chk)? {
                            hit = true;
                            break;
                        }
                    }
                    if !hit {
                        return Ok(Some(c));
                    }
                }
                Ok(None)
            })
            .collect()
    });
    let mut outcome = CheckOutcome::NotRefuted { samples };
    for r in results {
        if let Some(c) = r? {
            outcome = CheckOutcome::Counterexample(c);
            break;
        }
    }
    Ok(CheckReport { outcome, case: None, nodes_explored: samples, wall_time: start.elapsed() })
}
