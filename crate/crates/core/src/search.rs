//! Deterministic parallel enumeration over tuple-code ranges.
//!
//! Work is cut into fixed-size chunks independent of the worker count and
//! the per-chunk results come back in chunk order, so every merge downstream
//! sees the same sequence for any number of threads.

use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default cap on the number of tuples an exhaustive run may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker count; `None` uses the machine's available parallelism.
    pub threads: Option<usize>,
    /// Largest search space accepted before `BudgetExceeded`.
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { threads: None, budget: DEFAULT_BUDGET }
    }
}

impl SearchOptions {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn single_threaded() -> Self {
        SearchOptions::default().with_threads(1)
    }

    pub(crate) fn check_budget(&self, needed: u128) -> Result<u64> {
        if needed > self.budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget: self.budget });
        }
        Ok(needed as u64)
    }

    /// Runs `f` inside a pool sized by `threads`.
    pub(crate) fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads.unwrap_or(0))
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        Ok(pool.install(f))
    }

    /// Maps `f` over consecutive chunks of `0..total`; results are in chunk order.
    pub(crate) fn map_chunks<T, F>(&self, total: u64, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(Range<u64>) -> T + Sync + Send,
    {
        let chunks = total.div_ceil(CHUNK);
        self.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|i| f(i * CHUNK..((i + 1) * CHUNK).min(total)))
                .collect()
        })
    }

    /// Order-preserving parallel map over a slice.
    pub(crate) fn map_slice<S, T, F>(&self, items: &[S], f: F) -> Result<Vec<T>>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        self.install(|| items.par_iter().map(&f).collect())
    }
}
