//! Step budgets and deterministic sharded search.
//!
//! A search space is cut into shards that are ordered canonically. Shards run
//! on a rayon pool; the merged answer is always the first successful shard in
//! canonical order, and budget accounting is replayed in that order, so the
//! result never depends on the number of workers or on scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};

/// A counter of elementary search steps with a hard limit.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn remaining(&self) -> u64 {
        self.limit - self.used
    }

    pub fn exhausted(&self) -> bool {
        self.used >= self.limit
    }

    pub fn tick(&mut self) -> Result<()> {
        self.charge(1)
    }

    pub fn charge(&mut self, steps: u64) -> Result<()> {
        if self.limit - self.used < steps {
            self.used = self.limit;
            return Err(Error::BudgetExceeded {
                limit: self.limit,
                stage: None,
            });
        }
        self.used += steps;
        Ok(())
    }
}

/// Worker-count setting for parallel searches. Zero is treated as one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Workers(pub usize);

impl Default for Workers {
    fn default() -> Self {
        Workers(1)
    }
}

impl Workers {
    pub fn count(self) -> usize {
        self.0.max(1)
    }

    pub(crate) fn run<R: Send>(self, f: impl FnOnce() -> R + Send) -> R {
        if self.count() == 1 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new()
            .num_threads(self.count())
            .build()
        {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

struct ShardRun<T> {
    found: Option<T>,
    steps: u64,
    exhausted: bool,
}

/// Runs `shard(i, budget)` for `i in 0..shards` and returns the first success
/// in index order, charging `budget` as a sequential scan would have.
///
/// A shard returns `Ok(Some(_))` on success, `Ok(None)` when its subtree is
/// empty, and `Err(BudgetExceeded)` when it ran out of steps.
pub(crate) fn first_success<T, F>(
    shards: usize,
    budget: &mut Budget,
    workers: Workers,
    shard: F,
) -> Result<Option<(usize, T)>>
where
    T: Send,
    F: Fn(usize, &mut Budget) -> Result<Option<T>> + Sync,
{
    let cap = budget.remaining();
    let run_one = |i: usize| -> Result<ShardRun<T>> {
        let mut local = Budget::new(cap);
        match shard(i, &mut local) {
            Ok(found) => Ok(ShardRun {
                found,
                steps: local.used(),
                exhausted: false,
            }),
            Err(Error::BudgetExceeded { .. }) => Ok(ShardRun {
                found: None,
                steps: local.used(),
                exhausted: true,
            }),
            Err(e) => Err(e),
        }
    };

    let runs: Vec<Option<Result<ShardRun<T>>>> = if workers.count() == 1 {
        // Sequential: stop as soon as the outcome is decided.
        let mut out = Vec::with_capacity(shards);
        let mut spent = 0u64;
        for i in 0..shards {
            let r = run_one(i);
            let stop = match &r {
                Ok(run) => {
                    spent = spent.saturating_add(run.steps);
                    run.found.is_some() || run.exhausted || spent > cap
                }
                Err(_) => true,
            };
            out.push(Some(r));
            if stop {
                break;
            }
        }
        out
    } else {
        // Monotone bound: once shard `i` has succeeded, shards after it are
        // irrelevant and skipped.
        let best = AtomicUsize::new(usize::MAX);
        workers.run(|| {
            (0..shards)
                .into_par_iter()
                .map(|i| {
                    if i > best.load(Ordering::Relaxed) {
                        return None;
                    }
                    let r = run_one(i);
                    if let Ok(run) = &r {
                        if run.found.is_some() || run.exhausted {
                            best.fetch_min(i, Ordering::Relaxed);
                        }
                    }
                    Some(r)
                })
                .collect()
        })
    };

    // Replay in canonical order.
    for (i, run) in runs.into_iter().enumerate() {
        let Some(run) = run else { break };
        let run = run?;
        if run.steps > budget.remaining() || run.exhausted {
            budget.charge(budget.remaining())?;
            return Err(Error::BudgetExceeded {
                limit: budget.limit(),
                stage: None,
            });
        }
        budget.charge(run.steps)?;
        if let Some(found) = run.found {
            return Ok(Some((i, found)));
        }
    }
    Ok(None)
}
