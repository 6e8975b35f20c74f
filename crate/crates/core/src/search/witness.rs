//! Witness search inside a single coloring.

use std::fmt::Display;

use crate::certificate::{Certificate, Payload, Verdict};
use crate::coloring::{ColorValue, Coloring};
use crate::error::Result;
use crate::search::{binomial, first_in_order, Budget, Meter, TaskResult};
use crate::sumsets::{fs_values, is_monochromatic};

/// Positions `i₀ < … < i_{k-1}` of the lexicographically least `k`-subsequence
/// of `ground` whose finite sums are monochromatic, with the common color.
pub fn least_mono_fs_subsequence<T, A, C>(
    ground: &[T],
    add: A,
    coloring: &C,
    k: usize,
    workers: usize,
    meter: &Meter,
) -> Result<(Option<(Vec<usize>, ColorValue)>, u64)>
where
    T: Clone + Sync,
    A: Fn(&T, &T) -> T + Sync,
    C: Coloring<T> + ?Sized,
{
    assert!(k >= 1, "witness size must be positive");
    let n = ground.len();
    if k > n {
        return Ok((None, 0));
    }
    // One task per leading position.
    let run = |first: usize, abandon: &dyn Fn() -> bool| -> Result<TaskResult<(Vec<usize>, ColorValue)>> {
        let mut nodes = 0u64;
        let mut idx: Vec<usize> = (first..first + k).collect();
        if idx[k - 1] >= n {
            return Ok(TaskResult { found: None, nodes });
        }
        loop {
            if abandon() {
                return Ok(TaskResult { found: None, nodes });
            }
            meter.tick()?;
            nodes += 1;
            let xs: Vec<T> = idx.iter().map(|&i| ground[i].clone()).collect();
            let sums = fs_values(&xs, &add);
            if let Some(c) = is_monochromatic(&sums, coloring)? {
                return Ok(TaskResult {
                    found: Some((idx, c)),
                    nodes,
                });
            }
            // Advance positions 1..k in lexicographic order, position 0 fixed.
            let mut j = k - 1;
            loop {
                if j == 0 {
                    return Ok(TaskResult { found: None, nodes });
                }
                if idx[j] < n - (k - j) {
                    idx[j] += 1;
                    for l in j + 1..k {
                        idx[l] = idx[l - 1] + 1;
                    }
                    break;
                }
                j -= 1;
            }
        }
    };
    let (hit, nodes) = first_in_order(n, workers, run)?;
    Ok((hit.map(|(_, w)| w), nodes))
}

/// Searches `ground` for a `k`-element subsequence with monochromatic finite
/// sums. Verdict `witness` carries the lexicographically least one;
/// `exhausted` means every `k`-subsequence was scanned.
pub fn find_mono_fs_witness<T, A, C>(
    ground: &[T],
    add: A,
    coloring: &C,
    coloring_name: &str,
    k: usize,
    workers: usize,
    budget: Budget,
) -> Result<Certificate>
where
    T: Clone + Sync + Display,
    A: Fn(&T, &T) -> T + Sync,
    C: Coloring<T> + ?Sized,
{
    let meter = Meter::new(budget);
    let base = Certificate::new("fs-witness", Verdict::Exhausted, Payload::None)
        .with_param("coloring", coloring_name)
        .with_param("k", k)
        .with_param("ground_size", ground.len());
    let mut cert = match least_mono_fs_subsequence(ground, add, coloring, k, workers, &meter) {
        Ok((Some((idx, color)), nodes)) => {
            let mut c = base;
            c.verdict = Verdict::Witness;
            c.payload = Payload::Elements {
                elements: idx.iter().map(|&i| ground[i].to_string()).collect(),
                color: Some(color.to_string()),
            };
            c.search_space = nodes;
            c
        }
        Ok((None, _)) => {
            let mut c = base;
            c.search_space = binomial(ground.len() as u64, k as u64);
            c
        }
        Err(crate::Error::BudgetExceeded(msg)) => {
            let mut c = base.with_param("budget", msg);
            c.verdict = Verdict::Inconclusive;
            c
        }
        Err(e) => return Err(e),
    };
    cert.elapsed_ms = meter.elapsed_ms();
    Ok(cert)
}
