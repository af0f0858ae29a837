//! Multi-threaded exhaustive sweeps.
//!
//! `S_n` is cut into contiguous rank ranges, each range is swept on its own
//! and the partial histograms are merged in rank order, so the result does
//! not depend on the thread count.

use rayon::prelude::*;
use sepstat_core::enumerate::{chunk_ranks, sweep_range, EnumError, Histograms};

/// Chunks per worker; more chunks smooth out uneven progress.
const CHUNKS_PER_THREAD: usize = 4;

pub fn build_pool(threads: Option<usize>) -> Result<rayon::ThreadPool, rayon::ThreadPoolBuildError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t.max(1));
    }
    builder.build()
}

pub fn parallel_sweep(pool: &rayon::ThreadPool, n: usize) -> Result<Histograms, EnumError> {
    let chunks = chunk_ranks(n, pool.current_num_threads() * CHUNKS_PER_THREAD)?;
    let partials: Vec<Histograms> = pool.install(|| {
        chunks
            .par_iter()
            .map(|&(start, count)| sweep_range(n, start, count))
            .collect::<Result<_, _>>()
    })?;
    let mut total = Histograms::new(n);
    for part in &partials {
        total.merge(part);
    }
    Ok(total)
}

/// Sweeps of `S_0 ..= S_{n_max}`.
pub fn parallel_sweeps_upto(
    pool: &rayon::ThreadPool,
    n_max: usize,
) -> Result<Vec<Histograms>, EnumError> {
    (0..=n_max).map(|n| parallel_sweep(pool, n)).collect()
}
