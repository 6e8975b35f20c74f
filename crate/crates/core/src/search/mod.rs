//! Search engines: witnesses inside one coloring, minimal numbers over all
//! colorings, homogeneous sets for pair colorings, and the claim auditor.
//!
//! Parallel searches split their space into tasks listed in canonical order.
//! Workers run tasks concurrently, but the reported result is always the one
//! from the earliest task that has one, and node counts only include tasks up
//! to that one. Results therefore do not depend on the worker count.

pub mod audit;
pub mod grid;
pub mod numbers;
pub mod ramsey;
pub mod witness;

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use grid::{RationalGrid, VectorGrid};

/// Resource limits for a search. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn nodes(n: u64) -> Budget {
        Budget {
            max_nodes: Some(n),
            max_time: None,
        }
    }

    pub fn millis(ms: u64) -> Budget {
        Budget {
            max_nodes: None,
            max_time: Some(Duration::from_millis(ms)),
        }
    }
}

/// Shared node counter and clock for one search.
#[derive(Debug)]
pub struct Meter {
    budget: Budget,
    started: Instant,
    nodes: AtomicU64,
    tripped: AtomicBool,
}

impl Meter {
    pub fn new(budget: Budget) -> Meter {
        Meter {
            budget,
            started: Instant::now(),
            nodes: AtomicU64::new(0),
            tripped: AtomicBool::new(false),
        }
    }

    /// Counts one node; errors once a limit is passed.
    #[inline]
    pub fn tick(&self) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.tripped.load(Ordering::Relaxed) {
            return Err(self.exceeded());
        }
        if self.budget.max_nodes.is_some_and(|m| n > m) {
            self.tripped.store(true, Ordering::Relaxed);
            return Err(self.exceeded());
        }
        if n.is_multiple_of(4096) && self.budget.max_time.is_some_and(|t| self.started.elapsed() > t) {
            self.tripped.store(true, Ordering::Relaxed);
            return Err(self.exceeded());
        }
        Ok(())
    }

    fn exceeded(&self) -> Error {
        Error::BudgetExceeded(format!(
            "stopped after {} nodes and {} ms",
            self.nodes.load(Ordering::Relaxed),
            self.started.elapsed().as_millis()
        ))
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.started.elapsed().as_millis() as u64
    }
}

/// Outcome of one task in [`first_in_order`].
pub struct TaskResult<R> {
    pub found: Option<R>,
    /// Nodes visited; for the winning task, up to and including the hit.
    pub nodes: u64,
}

/// Runs `tasks` tasks on `workers` threads and returns the result of the
/// lowest-indexed task that found something, together with the total node
/// count of tasks `0..=winner` (or of every task when nothing was found).
///
/// `run(i, abandon)` must scan task `i` in canonical order; it may poll
/// `abandon()` and give up early, which only happens when an earlier task has
/// already succeeded.
pub fn first_in_order<R, F>(tasks: usize, workers: usize, run: F) -> Result<(Option<(usize, R)>, u64)>
where
    R: Send,
    F: Fn(usize, &dyn Fn() -> bool) -> Result<TaskResult<R>> + Sync,
{
    let best = AtomicUsize::new(usize::MAX);
    let body = |i: usize| -> Result<Option<TaskResult<R>>> {
        if i > best.load(Ordering::Relaxed) {
            return Ok(None);
        }
        let abandon = || i > best.load(Ordering::Relaxed);
        let out = run(i, &abandon)?;
        if out.found.is_some() {
            best.fetch_min(i, Ordering::Relaxed);
        }
        Ok(Some(out))
    };
    let results: Vec<Result<Option<TaskResult<R>>>> = if workers <= 1 {
        let mut v = Vec::with_capacity(tasks);
        for i in 0..tasks {
            let r = body(i);
            let stop = matches!(&r, Ok(Some(t)) if t.found.is_some()) || r.is_err();
            v.push(r);
            if stop {
                break;
            }
        }
        v
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        pool.install(|| (0..tasks).into_par_iter().map(body).collect())
    };

    let mut nodes = 0u64;
    for (i, r) in results.into_iter().enumerate() {
        match r? {
            Some(TaskResult { found: Some(x), nodes: n }) => {
                return Ok((Some((i, x)), nodes + n));
            }
            Some(TaskResult { found: None, nodes: n }) => nodes += n,
            None => unreachable!("task {i} skipped without an earlier success"),
        }
    }
    Ok((None, nodes))
}

/// Number of `k`-subsets of an `n`-set, saturating.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_in_order_is_worker_independent() {
        // Tasks 3, 5 and 9 succeed; task 3 must win with the same node count.
        let run = |i: usize, _: &dyn Fn() -> bool| -> Result<TaskResult<usize>> {
            Ok(TaskResult {
                found: [3, 5, 9].contains(&i).then_some(i * 10),
                nodes: i as u64 + 1,
            })
        };
        for workers in [1, 2, 8] {
            let (hit, nodes) = first_in_order(12, workers, run).unwrap();
            assert_eq!(hit, Some((3, 30)));
            assert_eq!(nodes, 1 + 2 + 3 + 4);
        }
        let none = |_: usize, _: &dyn Fn() -> bool| -> Result<TaskResult<()>> {
            Ok(TaskResult { found: None, nodes: 2 })
        };
        assert_eq!(first_in_order(5, 4, none).unwrap(), (None, 10));
    }

    #[test]
    fn meter_trips_on_node_budget() {
        let m = Meter::new(Budget::nodes(3));
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert!(matches!(m.tick(), Err(Error::BudgetExceeded(_))));
        assert!(m.tick().is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }
}
