//! Greedy choice of `h₀, h₁, …` whose ordered subset sums are pairwise distinct.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::semigroup::Carrier;

/// `d(f) = Σ_{n∈f} h_n` in ascending index order, listed by subset mask:
/// entry `mask - 1` holds `d` of the subset with bit set `mask`.
pub fn subset_sums<C: Carrier>(carrier: &C, h: &[C::Elem]) -> Vec<C::Elem> {
    let mut sums: Vec<C::Elem> = Vec::with_capacity((1usize << h.len()) - 1);
    for (n, hn) in h.iter().enumerate() {
        sums.push(hn.clone());
        for mask in 1..(1usize << n) {
            let s = carrier.add(&sums[mask - 1], hn);
            sums.push(s);
        }
    }
    sums
}

/// Picks `count` elements from `pool`. Each is the first pool element outside
/// `E ∪ D`, where `E` holds the subset sums so far and `D` every `g` with
/// `e + g = f` for `e ∈ E ∪ {0}`, `f ∈ E`. Identity elements and candidates
/// that would make two subset sums coincide are skipped as well.
///
/// Fails with [`Error::PoolExhausted`] when the pool runs out.
pub fn greedy_fs_basis<C, I>(carrier: &C, count: usize, pool: I) -> Result<Vec<C::Elem>>
where
    C: Carrier,
    I: IntoIterator<Item = C::Elem>,
{
    if count == 0 {
        return Err(Error::Precondition("basis size must be positive".into()));
    }
    let mut pool = pool.into_iter();
    let mut h: Vec<C::Elem> = Vec::with_capacity(count);
    let mut sums: Vec<C::Elem> = Vec::new();
    let mut sum_set: BTreeSet<C::Elem> = BTreeSet::new();
    while h.len() < count {
        let mut blocked = carrier.left_divisors(None, &sum_set);
        for e in &sum_set {
            blocked.extend(carrier.left_divisors(Some(e), &sum_set));
        }
        blocked.extend(sum_set.iter().cloned());
        let chosen = loop {
            let Some(g) = pool.next() else {
                return Err(Error::PoolExhausted { chosen: h.len(), wanted: count });
            };
            if blocked.contains(&g) || carrier.is_identity(&g) {
                continue;
            }
            let mut fresh: Vec<C::Elem> = Vec::with_capacity(sums.len() + 1);
            fresh.push(g.clone());
            fresh.extend(sums.iter().map(|s| carrier.add(s, &g)));
            let fresh_set: BTreeSet<&C::Elem> = fresh.iter().collect();
            if fresh_set.len() == fresh.len() && fresh.iter().all(|x| !sum_set.contains(x)) {
                break (g, fresh);
            }
        };
        let (g, fresh) = chosen;
        sum_set.extend(fresh.iter().cloned());
        sums.extend(fresh);
        h.push(g);
    }
    Ok(h)
}

/// Whether the subset-sum map of `h` is injective on nonempty subsets.
pub fn subset_sums_injective<C: Carrier>(carrier: &C, h: &[C::Elem]) -> bool {
    let sums = subset_sums(carrier, h);
    let distinct: BTreeSet<&C::Elem> = sums.iter().collect();
    distinct.len() == sums.len()
}
