//! Minimal finitary finite-sums and finite-unions numbers.
//!
//! Both searches color a finite, ordered list of items (the numbers `1..=n`,
//! or the nonempty subsets of `{0..F-1}` by bitmask rank) left to right with
//! colors `0..t`. A color may first appear only after every smaller color has
//! appeared, which removes the `t!` relabelings. A branch dies as soon as the
//! item just colored completes a monochromatic forbidden configuration.

use std::collections::BTreeMap;

use crate::certificate::{Certificate, Payload, Verdict};
use crate::error::{Error, Result};
use crate::search::{first_in_order, Budget, Meter, TaskResult};

/// Whether the finite-sums number counts sets or multisets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Repetition {
    /// `M` is a set of `k` distinct numbers: the injective-sequence version.
    Distinct,
    /// `M` may repeat a number (`x + x` counts), as in classical Schur numbers.
    Allowed,
}

impl Repetition {
    pub fn as_str(self) -> &'static str {
        match self {
            Repetition::Distinct => "distinct",
            Repetition::Allowed => "allowed",
        }
    }
}

impl std::str::FromStr for Repetition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Repetition> {
        match s {
            "distinct" => Ok(Repetition::Distinct),
            "allowed" | "schur" => Ok(Repetition::Allowed),
            _ => Err(Error::Parse(format!("unknown repetition mode `{s}`"))),
        }
    }
}

/// A family of forbidden configurations over items `0..len`.
pub trait ForbiddenConfigs: Sync {
    /// With `colors[..=pos]` assigned, does item `pos` complete a configuration
    /// all of whose items share `colors[pos]`?
    fn completes_mono(&self, colors: &[u8], pos: usize) -> bool;
}

/// Item `pos` is the number `pos + 1`; configurations are `FS(M)` for
/// `|M| = k` with every sum inside `1..=len`.
#[derive(Clone, Debug)]
pub struct FiniteSumsConfigs {
    pub k: usize,
    pub repetition: Repetition,
}

impl FiniteSumsConfigs {
    fn extend(&self, colors: &[u8], n: usize, c: u8, parts: usize, partial: usize, last: usize, sums: &mut Vec<usize>) -> bool {
        let color_of = |v: usize| if v == n { c } else { colors[v - 1] };
        let left = self.k - parts;
        let rem = n - partial;
        let lo = match (parts, self.repetition) {
            (0, _) => 1,
            (_, Repetition::Allowed) => last,
            (_, Repetition::Distinct) => last + 1,
        };
        let fits = |a: usize| match self.repetition {
            Repetition::Allowed => a * left <= rem,
            Repetition::Distinct => a * left + left * (left - 1) / 2 <= rem,
        };
        let candidates: Box<dyn Iterator<Item = usize>> = if left == 1 {
            Box::new(std::iter::once(rem).filter(|&a| a >= lo))
        } else {
            Box::new((lo..).take_while(|&a| fits(a)))
        };
        for a in candidates {
            let mark = sums.len();
            let mut ok = color_of(a) == c;
            if ok {
                sums.push(a);
                for i in 0..mark {
                    let s = sums[i] + a;
                    if color_of(s) != c {
                        ok = false;
                        break;
                    }
                    sums.push(s);
                }
            }
            if ok && (left == 1 || self.extend(colors, n, c, parts + 1, partial + a, a, sums)) {
                sums.truncate(mark);
                return true;
            }
            sums.truncate(mark);
        }
        false
    }
}

impl ForbiddenConfigs for FiniteSumsConfigs {
    fn completes_mono(&self, colors: &[u8], pos: usize) -> bool {
        let n = pos + 1;
        let mut sums = Vec::with_capacity(1 << self.k.min(16));
        self.extend(colors, n, colors[pos], 0, 0, 0, &mut sums)
    }
}

/// Item `pos` is the nonempty subset with bitmask `pos + 1`; configurations
/// are `FU(B)` for block sequences `B` of length `k`. Every such family is
/// indexed by its full union, which is its largest mask.
#[derive(Clone, Debug)]
pub struct FiniteUnionsConfigs {
    /// For each mask `u`, the other masks of every `k`-block family with union `u`.
    by_union: Vec<Vec<Vec<u32>>>,
}

impl FiniteUnionsConfigs {
    pub fn new(ground: u32, k: usize) -> FiniteUnionsConfigs {
        assert!(ground <= 24, "ground set too large");
        let total = 1usize << ground;
        let mut by_union = vec![Vec::new(); total];
        for (u, slot) in by_union.iter_mut().enumerate().skip(1) {
            let elems: Vec<u32> = (0..ground).filter(|i| u >> i & 1 == 1).collect();
            for blocks in split_into_runs(&elems, k) {
                let masks: Vec<u32> = blocks
                    .iter()
                    .map(|b| b.iter().fold(0u32, |m, &i| m | 1 << i))
                    .collect();
                let full = (1u32 << k) - 1;
                let others: Vec<u32> = (1..full)
                    .map(|sel| {
                        (0..k)
                            .filter(|j| sel >> j & 1 == 1)
                            .fold(0u32, |m, j| m | masks[j])
                    })
                    .collect();
                slot.push(others);
            }
        }
        FiniteUnionsConfigs { by_union }
    }
}

/// All ways to cut a sorted list into `k` consecutive nonempty runs.
fn split_into_runs(elems: &[u32], k: usize) -> Vec<Vec<Vec<u32>>> {
    if k == 0 || elems.len() < k {
        return Vec::new();
    }
    if k == 1 {
        return vec![vec![elems.to_vec()]];
    }
    let mut out = Vec::new();
    for cut in 1..=elems.len() - (k - 1) {
        for mut rest in split_into_runs(&elems[cut..], k - 1) {
            rest.insert(0, elems[..cut].to_vec());
            out.push(rest);
        }
    }
    out
}

impl ForbiddenConfigs for FiniteUnionsConfigs {
    fn completes_mono(&self, colors: &[u8], pos: usize) -> bool {
        let c = colors[pos];
        self.by_union[pos + 1]
            .iter()
            .any(|fam| fam.iter().all(|&m| colors[m as usize - 1] == c))
    }
}

const PREFIX_DEPTH: usize = 6;

/// The lexicographically least first-use-normalized coloring of items
/// `0..len` avoiding every configuration, and the number of nodes visited.
pub fn least_avoiding_coloring<P: ForbiddenConfigs + ?Sized>(
    configs: &P,
    len: usize,
    t: usize,
    workers: usize,
    meter: &Meter,
) -> Result<(Option<Vec<u8>>, u64)> {
    assert!((1..=255).contains(&t), "color count out of range");
    let depth = len.min(PREFIX_DEPTH);
    let mut prefixes = Vec::new();
    let mut prefix_nodes = 0u64;
    let mut colors = Vec::with_capacity(len);
    collect_prefixes(configs, depth, t, &mut colors, 0, &mut prefixes, &mut prefix_nodes, meter)?;

    let run = |i: usize, abandon: &dyn Fn() -> bool| -> Result<TaskResult<Vec<u8>>> {
        let mut colors = prefixes[i].clone();
        let used = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut nodes = 0;
        let found = dfs(configs, len, t, &mut colors, used, &mut nodes, meter, abandon)?;
        Ok(TaskResult {
            found: found.then_some(colors),
            nodes,
        })
    };
    let (hit, nodes) = first_in_order(prefixes.len(), workers, run)?;
    Ok((hit.map(|(_, c)| c), prefix_nodes + nodes))
}

#[allow(clippy::too_many_arguments)]
fn collect_prefixes<P: ForbiddenConfigs + ?Sized>(
    configs: &P,
    depth: usize,
    t: usize,
    colors: &mut Vec<u8>,
    used: usize,
    out: &mut Vec<Vec<u8>>,
    nodes: &mut u64,
    meter: &Meter,
) -> Result<()> {
    if colors.len() == depth {
        out.push(colors.clone());
        return Ok(());
    }
    for c in 0..t.min(used + 1) {
        meter.tick()?;
        *nodes += 1;
        colors.push(c as u8);
        if !configs.completes_mono(colors, colors.len() - 1) {
            collect_prefixes(configs, depth, t, colors, used.max(c + 1), out, nodes, meter)?;
        }
        colors.pop();
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn dfs<P: ForbiddenConfigs + ?Sized>(
    configs: &P,
    len: usize,
    t: usize,
    colors: &mut Vec<u8>,
    used: usize,
    nodes: &mut u64,
    meter: &Meter,
    abandon: &dyn Fn() -> bool,
) -> Result<bool> {
    if colors.len() == len {
        return Ok(true);
    }
    if abandon() {
        return Ok(false);
    }
    for c in 0..t.min(used + 1) {
        meter.tick()?;
        *nodes += 1;
        colors.push(c as u8);
        if !configs.completes_mono(colors, colors.len() - 1)
            && dfs(configs, len, t, colors, used.max(c + 1), nodes, meter, abandon)?
        {
            return Ok(true);
        }
        colors.pop();
    }
    Ok(false)
}

/// A minimal number and a coloring one step below it that avoids the
/// forbidden configurations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalNumber {
    pub value: u64,
    pub extremal: Vec<u8>,
    pub nodes: u64,
}

/// Least `R` such that every `t`-coloring of `{1..R}` has some `M` of size `k`
/// with `FS(M) ⊆ {1..R}` monochromatic.
pub fn fs_number_value(
    k: usize,
    t: usize,
    repetition: Repetition,
    workers: usize,
    meter: &Meter,
) -> Result<MinimalNumber> {
    if k == 0 || t == 0 {
        return Err(Error::Precondition("k and t must be positive".into()));
    }
    let configs = FiniteSumsConfigs { k, repetition };
    let mut extremal = Vec::new();
    let mut total = 0;
    for n in 1.. {
        let (found, nodes) = least_avoiding_coloring(&configs, n, t, workers, meter)?;
        total += nodes;
        match found {
            Some(c) => extremal = c,
            None => {
                return Ok(MinimalNumber {
                    value: n as u64,
                    extremal,
                    nodes: total,
                })
            }
        }
    }
    unreachable!()
}

/// Least `F` such that every `t`-coloring of the nonempty subsets of
/// `{0..F-1}` has a `k`-block sequence with monochromatic finite unions.
pub fn fu_number_value(k: usize, t: usize, workers: usize, meter: &Meter) -> Result<MinimalNumber> {
    if k == 0 || t == 0 {
        return Err(Error::Precondition("k and t must be positive".into()));
    }
    let mut extremal = Vec::new();
    let mut total = 0;
    for f in 1..=24u32 {
        let configs = FiniteUnionsConfigs::new(f, k);
        let (found, nodes) = least_avoiding_coloring(&configs, (1usize << f) - 1, t, workers, meter)?;
        total += nodes;
        match found {
            Some(c) => extremal = c,
            None => {
                return Ok(MinimalNumber {
                    value: f as u64,
                    extremal,
                    nodes: total,
                })
            }
        }
    }
    Err(Error::BudgetExceeded("ground set exceeds 24 elements".into()))
}

fn number_certificate(
    claim: &str,
    params: BTreeMap<&str, String>,
    result: Result<MinimalNumber>,
    meter: &Meter,
) -> Result<Certificate> {
    let mut cert = match result {
        Ok(m) => {
            let mut c = Certificate::new(
                claim,
                Verdict::Exhausted,
                Payload::Extremal {
                    value: m.value,
                    coloring: m.extremal.iter().map(|&x| x as u32).collect(),
                },
            );
            c.search_space = m.nodes;
            c
        }
        Err(Error::BudgetExceeded(msg)) => {
            Certificate::new(claim, Verdict::Inconclusive, Payload::None).with_param("budget", msg)
        }
        Err(e) => return Err(e),
    };
    for (k, v) in params {
        cert = cert.with_param(k, v);
    }
    cert.elapsed_ms = meter.elapsed_ms();
    Ok(cert)
}

/// Certificate form of [`fs_number_value`]. The payload's coloring lists the
/// colors of `1..R-1`.
pub fn fs_number(k: usize, t: usize, repetition: Repetition, workers: usize, budget: Budget) -> Result<Certificate> {
    let meter = Meter::new(budget);
    let result = fs_number_value(k, t, repetition, workers, &meter);
    let params = BTreeMap::from([
        ("k", k.to_string()),
        ("t", t.to_string()),
        ("repetition", repetition.as_str().to_string()),
    ]);
    number_certificate("fs-number", params, result, &meter)
}

/// Certificate form of [`fu_number_value`]. The payload's coloring lists the
/// colors of the subsets of `{0..F-2}` by bitmask rank.
pub fn fu_number(k: usize, t: usize, workers: usize, budget: Budget) -> Result<Certificate> {
    let meter = Meter::new(budget);
    let result = fu_number_value(k, t, workers, &meter);
    let params = BTreeMap::from([("k", k.to_string()), ("t", t.to_string())]);
    number_certificate("fu-number", params, result, &meter)
}

/// Direct check that `coloring` (colors of `1..=len`) has no `M` of size `k`
/// with monochromatic `FS(M) ⊆ {1..len}`. Enumerates candidate sets outright
/// rather than going through the search's pruning.
pub fn fs_coloring_avoids(coloring: &[u32], k: usize, repetition: Repetition) -> bool {
    let len = coloring.len();
    let mut parts = Vec::with_capacity(k);
    fn rec(coloring: &[u32], k: usize, rep: Repetition, parts: &mut Vec<usize>) -> bool {
        let len = coloring.len();
        let sum: usize = parts.iter().sum();
        if parts.len() == k {
            let sums = crate::sumsets::fs_values(parts, |a, b| a + b);
            let c = coloring[sums[0] - 1];
            return !sums.iter().all(|&s| s <= len && coloring[s - 1] == c);
        }
        let lo = match (parts.last(), rep) {
            (None, _) => 1,
            (Some(&l), Repetition::Allowed) => l,
            (Some(&l), Repetition::Distinct) => l + 1,
        };
        (lo..=len.saturating_sub(sum)).all(|a| {
            parts.push(a);
            let ok = rec(coloring, k, rep, parts);
            parts.pop();
            ok
        })
    }
    len == 0 || rec(coloring, k, repetition, &mut parts)
}

/// Direct check that `coloring` (colors of the masks `1..2^ground`) has no
/// `k`-block sequence with monochromatic finite unions.
pub fn fu_coloring_avoids(coloring: &[u32], ground: u32, k: usize) -> bool {
    if coloring.len() + 1 != 1usize << ground {
        return false;
    }
    let masks: Vec<u32> = (1..1u32 << ground).collect();
    let mut chosen: Vec<u32> = Vec::new();
    fn rec(coloring: &[u32], masks: &[u32], k: usize, chosen: &mut Vec<u32>) -> bool {
        if chosen.len() == k {
            let unions = crate::sumsets::fs_values(chosen, |a, b| a | b);
            let c = coloring[unions[0] as usize - 1];
            return !unions.iter().all(|&u| coloring[u as usize - 1] == c);
        }
        let floor = chosen.last().map(|&m| 32 - m.leading_zeros()).unwrap_or(0);
        masks
            .iter()
            .filter(|&&m| m.trailing_zeros() >= floor)
            .all(|&m| {
                chosen.push(m);
                let ok = rec(coloring, masks, k, chosen);
                chosen.pop();
                ok
            })
    }
    rec(coloring, &masks, k, &mut chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meter() -> Meter {
        Meter::new(Budget::unlimited())
    }

    #[test]
    fn trivial_values() {
        assert_eq!(fs_number_value(2, 1, Repetition::Distinct, 1, &meter()).unwrap().value, 3);
        assert_eq!(fs_number_value(2, 1, Repetition::Allowed, 1, &meter()).unwrap().value, 2);
        assert_eq!(fs_number_value(1, 3, Repetition::Distinct, 1, &meter()).unwrap().value, 1);
        assert_eq!(fu_number_value(2, 1, 1, &meter()).unwrap().value, 2);
        assert_eq!(fu_number_value(1, 4, 1, &meter()).unwrap().value, 1);
    }

    #[test]
    fn schur_two_colors() {
        let m = fs_number_value(2, 2, Repetition::Allowed, 1, &meter()).unwrap();
        assert_eq!(m.value, 5);
        assert_eq!(m.extremal, [0, 1, 1, 0]);
        let as_u32: Vec<u32> = m.extremal.iter().map(|&c| c as u32).collect();
        assert!(fs_coloring_avoids(&as_u32, 2, Repetition::Allowed));
    }

    #[test]
    fn runs() {
        assert_eq!(split_into_runs(&[1, 2, 3], 2), vec![vec![vec![1], vec![2, 3]], vec![vec![1, 2], vec![3]]]);
        assert!(split_into_runs(&[1], 2).is_empty());
    }

    #[test]
    fn fu_configs_for_three_elements() {
        let cfg = FiniteUnionsConfigs::new(3, 2);
        // Union {0,1,2} splits as {0}|{1,2} and {0,1}|{2}.
        assert_eq!(cfg.by_union[7], vec![vec![1, 6], vec![3, 4]]);
        assert!(cfg.by_union[4].is_empty());
    }

    #[test]
    fn direct_checkers_detect_mono_sets() {
        assert!(!fs_coloring_avoids(&[0, 0, 0], 2, Repetition::Distinct));
        assert!(fs_coloring_avoids(&[0, 0], 2, Repetition::Distinct));
        assert!(!fs_coloring_avoids(&[0, 0], 2, Repetition::Allowed));
        // Masks 1, 2, 3 all one color: {0},{1} is a monochromatic block pair.
        assert!(!fu_coloring_avoids(&[0, 0, 0], 2, 2));
        assert!(fu_coloring_avoids(&[0, 0, 1], 2, 2));
    }

    #[test]
    fn zero_parameters_rejected() {
        assert!(fs_number_value(0, 2, Repetition::Distinct, 1, &meter()).is_err());
        assert!(fu_number_value(2, 0, 1, &meter()).is_err());
    }

    #[test]
    fn budget_is_inconclusive_not_a_verdict() {
        let c = fs_number(2, 3, Repetition::Distinct, 2, Budget::nodes(100)).unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive);
        assert_eq!(c.payload, Payload::None);
    }
}
