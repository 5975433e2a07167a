//! Deterministic chunked map over trial indices.
//!
//! Work is cut into fixed-size chunks of consecutive trial indices and the
//! per-chunk results come back in chunk order, so any reduction performed by
//! the caller sees the same sequence whatever the worker count.

use std::ops::Range;
use thiserror::Error;

/// Trials per work unit.
pub const CHUNK_TRIALS: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Data-parallel over chunks. `threads: None` uses the global pool.
    Parallel {
        threads: Option<usize>,
    },
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel { threads: None }
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExecError {
    #[error("worker count must be positive")]
    ZeroThreads,
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

fn chunk_range(chunk: u64, n_trials: u64) -> Range<u64> {
    let start = chunk * CHUNK_TRIALS;
    start..(start + CHUNK_TRIALS).min(n_trials)
}

/// Apply `f` to every chunk of `0..n_trials` and return the results in
/// chunk order.
pub fn map_chunks<T, F>(exec: Execution, n_trials: u64, f: F) -> Result<Vec<T>, ExecError>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync + Send,
{
    let n_chunks = n_trials.div_ceil(CHUNK_TRIALS);
    match exec {
        Execution::Sequential => Ok((0..n_chunks).map(|c| f(chunk_range(c, n_trials))).collect()),
        Execution::Parallel { threads } => {
            if threads == Some(0) {
                return Err(ExecError::ZeroThreads);
            }
            run_parallel(threads, n_chunks, n_trials, &f)
        }
    }
}

#[cfg(feature = "parallel")]
fn run_parallel<T, F>(
    threads: Option<usize>,
    n_chunks: u64,
    n_trials: u64,
    f: &F,
) -> Result<Vec<T>, ExecError>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync + Send,
{
    use rayon::prelude::*;
    let go = || {
        (0..n_chunks)
            .into_par_iter()
            .map(|c| f(chunk_range(c, n_trials)))
            .collect::<Vec<T>>()
    };
    match threads {
        None => Ok(go()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| ExecError::Pool(e.to_string()))?;
            Ok(pool.install(go))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn run_parallel<T, F>(
    _threads: Option<usize>,
    n_chunks: u64,
    n_trials: u64,
    f: &F,
) -> Result<Vec<T>, ExecError>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync + Send,
{
    Ok((0..n_chunks).map(|c| f(chunk_range(c, n_trials))).collect())
}
