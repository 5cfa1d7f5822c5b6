//! Exhaustive scans over ordered triples of loop elements.
//!
//! The triple space `0..k` × `0..k` × `0..k` is split by first coordinate
//! into contiguous chunks of `k²` triples. Sequential scans walk it in
//! lexicographic order and so report the lexicographically first witness.
//! Parallel scans hand the chunks to a rayon pool and stop every worker
//! through a shared flag once any of them finds a witness, so which witness
//! wins depends on scheduling.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

/// How a scan's witness was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessOrder {
    /// The lexicographically first witness (sequential scan).
    Lexicographic,
    /// Whichever worker got there first (parallel scan).
    Arbitrary,
}

impl WitnessOrder {
    pub fn is_deterministic(self) -> bool {
        self == WitnessOrder::Lexicographic
    }
}

/// Parallelism settings for triple scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ScanOptions {
    /// Number of worker threads. `None` uses rayon's global pool, `Some(1)`
    /// forces a sequential, deterministic scan.
    pub jobs: Option<usize>,
}

impl ScanOptions {
    pub fn sequential() -> Self {
        ScanOptions { jobs: Some(1) }
    }

    pub fn with_jobs(jobs: usize) -> Self {
        ScanOptions {
            jobs: Some(jobs.max(1)),
        }
    }

    pub fn is_sequential(&self) -> bool {
        self.jobs == Some(1)
    }

    fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.jobs {
            Some(n) if n > 1 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            _ => f(),
        }
    }
}

/// Finds a triple for which `f` yields a witness.
///
/// `init` builds per-worker scratch state (caches); `f` gets 0-based indices.
pub(crate) fn find_triple<S, W, I, F>(order: usize, opts: &ScanOptions, init: I, f: F) -> (Option<W>, WitnessOrder)
where
    W: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, usize, usize, usize) -> Option<W> + Sync + Send,
{
    if opts.is_sequential() {
        let mut state = init();
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if let Some(w) = f(&mut state, a, b, c) {
                        return (Some(w), WitnessOrder::Lexicographic);
                    }
                }
            }
        }
        return (None, WitnessOrder::Lexicographic);
    }

    let found = AtomicBool::new(false);
    let witness = opts.run(|| {
        (0..order)
            .into_par_iter()
            .map_init(&init, |state, a| {
                for b in 0..order {
                    if found.load(Ordering::Relaxed) {
                        return None;
                    }
                    for c in 0..order {
                        if let Some(w) = f(state, a, b, c) {
                            found.store(true, Ordering::Relaxed);
                            return Some(w);
                        }
                    }
                }
                None
            })
            .find_map_any(|w| w)
    });
    (witness, WitnessOrder::Arbitrary)
}

/// Collects every witness, in lexicographic triple order regardless of parallelism.
pub(crate) fn collect_triples<S, W, I, F>(order: usize, opts: &ScanOptions, init: I, f: F) -> Vec<W>
where
    W: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, usize, usize, usize) -> Option<W> + Sync + Send,
{
    let row = |state: &mut S, a: usize| {
        let mut out = Vec::new();
        for b in 0..order {
            for c in 0..order {
                if let Some(w) = f(state, a, b, c) {
                    out.push(w);
                }
            }
        }
        out
    };
    if opts.is_sequential() {
        let mut state = init();
        return (0..order).flat_map(|a| row(&mut state, a)).collect();
    }
    let rows: Vec<Vec<W>> = opts.run(|| (0..order).into_par_iter().map_init(&init, row).collect());
    rows.into_iter().flatten().collect()
}
