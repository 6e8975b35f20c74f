//! The finite-semigroup pipeline: from an `L`-left cancellative semigroup of
//! size at least `S = max(R+1, 4^F(L+1))` and a coloring, produce `k`
//! distinct elements with monochromatic finite sums.
//!
//! If some `g` generates more than `R` elements, the problem moves to
//! `{g, 2g, …, Rg}` and becomes a finite-sums search on `{1..R}`. Otherwise a
//! greedy basis `h₀..h_{F-1}` with injective subset sums turns the coloring
//! into a coloring of subsets of `{0..F-1}`, and a finite-unions witness there
//! maps back through the subset-sum map.

use std::collections::BTreeMap;

use crate::certificate::{Certificate, Payload, Verdict};
use crate::coloring::{ColorValue, Coloring};
use crate::constructions::greedy::{greedy_fs_basis, subset_sums};
use crate::error::{Error, Result};
use crate::search::numbers::fu_number_value;
use crate::search::{Budget, Meter};
use crate::semigroup::FinSemigroup;
use crate::sumsets::fs_values;

/// Colorings of semigroup elements by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementColoring {
    /// `x mod 2`.
    Parity,
    /// Parity of the number of set bits of `x`.
    Popcount,
    /// `x mod m`.
    Modulo(usize),
    /// Explicit colors, one per element.
    Table(Vec<i64>),
}

impl Coloring<usize> for ElementColoring {
    fn color(&self, x: &usize) -> Result<ColorValue> {
        let c = match self {
            ElementColoring::Parity => (*x % 2) as i64,
            ElementColoring::Popcount => (x.count_ones() % 2) as i64,
            ElementColoring::Modulo(m) => (*x % *m) as i64,
            ElementColoring::Table(t) => *t.get(*x).ok_or(Error::IndexOutOfRange { index: *x, order: t.len() })?,
        };
        Ok(ColorValue::Int(c))
    }
}

impl std::fmt::Display for ElementColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ElementColoring::Parity => f.write_str("parity"),
            ElementColoring::Popcount => f.write_str("popcount"),
            ElementColoring::Modulo(m) => write!(f, "mod:{m}"),
            ElementColoring::Table(t) => write!(f, "table[{}]", t.len()),
        }
    }
}

impl std::str::FromStr for ElementColoring {
    type Err = Error;

    /// `parity`, `popcount`, `mod:M`, or a whitespace-separated color list.
    fn from_str(s: &str) -> Result<ElementColoring> {
        let s = s.trim();
        match s {
            "parity" => return Ok(ElementColoring::Parity),
            "popcount" => return Ok(ElementColoring::Popcount),
            _ => {}
        }
        if let Some(m) = s.strip_prefix("mod:") {
            return match m.parse() {
                Ok(m) if m > 0 => Ok(ElementColoring::Modulo(m)),
                _ => Err(Error::Parse(format!("bad modulus `{m}`"))),
            };
        }
        let colors: Vec<i64> = s
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("unknown element coloring `{s}`"))))
            .collect::<Result<_>>()?;
        if colors.is_empty() {
            return Err(Error::Parse("empty color table".into()));
        }
        Ok(ElementColoring::Table(colors))
    }
}

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub k: usize,
    pub t: usize,
    pub workers: usize,
    /// Budget for computing the finite-unions number.
    pub budget: Budget,
    /// Used when the finite-unions number does not finish within budget. The
    /// certificate is then marked conditional.
    pub assumed_f: Option<u32>,
}

impl PipelineOptions {
    pub fn new(k: usize, t: usize) -> PipelineOptions {
        PipelineOptions { k, t, workers: 1, budget: Budget::unlimited(), assumed_f: None }
    }
}

/// Which branch produced the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineCase {
    /// Multiples `j·g` of a generator with a long orbit.
    LongOrbit { generator: usize, multiples: Vec<u64> },
    /// Subset sums of a greedy basis over a block sequence.
    GreedyBasis { basis: Vec<usize>, blocks: Vec<u64> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineRun {
    pub l: usize,
    pub f: u32,
    pub r: u64,
    pub s: u128,
    pub conditional: bool,
    pub case: PipelineCase,
    pub witness: Option<(Vec<usize>, ColorValue)>,
}

/// `S = max(R + 1, 4^F (L + 1))`, saturating.
pub fn size_threshold(f: u32, l: usize) -> u128 {
    let r = (1u128 << f) - 1;
    let four_f = 1u128.checked_shl(2 * f).unwrap_or(u128::MAX);
    (r + 1).max(four_f.saturating_mul(l as u128 + 1))
}

pub fn fin_fin_pipeline<C: Coloring<usize> + ?Sized>(
    g: &FinSemigroup,
    coloring: &C,
    opts: &PipelineOptions,
) -> Result<PipelineRun> {
    let PipelineOptions { k, t, workers, budget, assumed_f } = opts.clone();
    if k == 0 || t == 0 {
        return Err(Error::Precondition("k and t must be positive".into()));
    }
    let l = g.cancellativity_bound();
    let meter = Meter::new(budget);
    let (f, conditional) = match fu_number_value(k, t, workers, &meter) {
        Ok(m) => (m.value as u32, false),
        Err(Error::BudgetExceeded(msg)) => match assumed_f {
            Some(f) => (f, true),
            None => return Err(Error::BudgetExceeded(msg)),
        },
        Err(e) => return Err(e),
    };
    if f >= 63 {
        return Err(Error::Precondition(format!("F = {f} is too large")));
    }
    let r = (1u64 << f) - 1;
    let s = size_threshold(f, l);
    if (g.order() as u128) < s {
        return Err(Error::Precondition(format!(
            "semigroup has {} elements, need at least S = {s} (F = {f}, L = {l})",
            g.order()
        )));
    }
    let colors: Vec<ColorValue> = (0..g.order()).map(|x| coloring.color(&x)).collect::<Result<_>>()?;

    let long_orbit = (0..g.order()).find(|&x| g.monogenic(x).is_ok_and(|m| m.len() as u64 > r));
    let (case, witness) = match long_orbit {
        Some(gen) => {
            let induced: Vec<ColorValue> = (1..=r).map(|j| colors[g.multiple(gen, j as usize)].clone()).collect();
            let found = bounded_fs_witness(&induced, k);
            let witness = found.as_ref().map(|(js, c)| {
                (js.iter().map(|&j| g.multiple(gen, j as usize)).collect::<Vec<_>>(), c.clone())
            });
            (
                PipelineCase::LongOrbit { generator: gen, multiples: found.map(|(js, _)| js).unwrap_or_default() },
                witness,
            )
        }
        None => {
            let basis = greedy_fs_basis(g, f as usize, 0..g.order())?;
            let sums = subset_sums(g, &basis);
            let induced: Vec<ColorValue> = sums.iter().map(|&x| colors[x].clone()).collect();
            let found = block_fu_witness(&induced, f, k);
            let witness = found
                .as_ref()
                .map(|(bs, c)| (bs.iter().map(|&b| sums[b as usize - 1]).collect::<Vec<_>>(), c.clone()));
            (
                PipelineCase::GreedyBasis { basis, blocks: found.map(|(bs, _)| bs).unwrap_or_default() },
                witness,
            )
        }
    };
    if let Some((xs, c)) = &witness {
        let got = verify_fs_witness(g, coloring, xs)?;
        if &got != c {
            return Err(Error::Verification(format!("witness color {got} differs from search color {c}")));
        }
    }
    Ok(PipelineRun { l, f, r, s, conditional, case, witness })
}

/// Least `k`-subset `{j₀ < … }` of `{1..R}` (in lexicographic order) whose
/// finite sums stay at most `R` and share a color; `colors[j-1]` colors `j`.
pub fn bounded_fs_witness(colors: &[ColorValue], k: usize) -> Option<(Vec<u64>, ColorValue)> {
    fn extend(colors: &[ColorValue], k: usize, chosen: &mut Vec<u64>, sums: &mut Vec<u64>) -> bool {
        if chosen.len() == k {
            return true;
        }
        let r = colors.len() as u64;
        let start = chosen.last().map_or(1, |&j| j + 1);
        let total: u64 = chosen.iter().sum();
        for j in start..=r {
            if total + j > r {
                break;
            }
            let target = chosen.first().map_or(&colors[j as usize - 1], |&j0| &colors[j0 as usize - 1]);
            let fresh: Vec<u64> = std::iter::once(j).chain(sums.iter().map(|s| s + j)).collect();
            if fresh.iter().all(|&s| &colors[s as usize - 1] == target) {
                chosen.push(j);
                let before = sums.len();
                sums.extend(fresh);
                if extend(colors, k, chosen, sums) {
                    return true;
                }
                sums.truncate(before);
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    let mut sums = Vec::new();
    extend(colors, k, &mut chosen, &mut sums).then(|| {
        let c = colors[chosen[0] as usize - 1].clone();
        (chosen, c)
    })
}

/// First block sequence `b₀ < b₁ < …` (every element of `b_i` below every
/// element of `b_{i+1}`) of nonempty subsets of `{0..F-1}` with monochromatic
/// finite unions. Blocks are bitmasks, tried in increasing order at each
/// step; `colors[mask-1]` colors `mask`.
pub fn block_fu_witness(colors: &[ColorValue], f: u32, k: usize) -> Option<(Vec<u64>, ColorValue)> {
    fn extend(colors: &[ColorValue], f: u32, k: usize, blocks: &mut Vec<u64>, unions: &mut Vec<u64>) -> bool {
        if blocks.len() == k {
            return true;
        }
        let low = blocks.last().map_or(0, |&b| 64 - b.leading_zeros());
        if low >= f {
            return false;
        }
        let target = unions.first().map(|&u| colors[u as usize - 1].clone());
        for b in (1u64 << low)..(1u64 << f) {
            if b & ((1u64 << low) - 1) != 0 {
                continue;
            }
            let fresh: Vec<u64> = std::iter::once(b).chain(unions.iter().map(|u| u | b)).collect();
            let c = target.clone().unwrap_or_else(|| colors[b as usize - 1].clone());
            if fresh.iter().all(|&u| colors[u as usize - 1] == c) {
                blocks.push(b);
                let before = unions.len();
                unions.extend(fresh);
                if extend(colors, f, k, blocks, unions) {
                    return true;
                }
                unions.truncate(before);
                blocks.pop();
            }
        }
        false
    }
    let mut blocks = Vec::new();
    let mut unions = Vec::new();
    extend(colors, f, k, &mut blocks, &mut unions).then(|| {
        let c = colors[blocks[0] as usize - 1].clone();
        (blocks, c)
    })
}

/// Checks that the elements are distinct and that all their finite sums
/// (in the given order) share one color, which is returned.
pub fn verify_fs_witness<C: Coloring<usize> + ?Sized>(
    g: &FinSemigroup,
    coloring: &C,
    xs: &[usize],
) -> Result<ColorValue> {
    if xs.is_empty() {
        return Err(Error::Verification("empty witness".into()));
    }
    for (i, x) in xs.iter().enumerate() {
        if *x >= g.order() {
            return Err(Error::IndexOutOfRange { index: *x, order: g.order() });
        }
        if xs[..i].contains(x) {
            return Err(Error::Verification(format!("element {x} repeated")));
        }
    }
    let sums = fs_values(xs, |a, b| g.add(*a, *b));
    let first = coloring.color(&sums[0])?;
    for s in &sums[1..] {
        let c = coloring.color(s)?;
        if c != first {
            return Err(Error::Verification(format!("sum {s} has color {c}, expected {first}")));
        }
    }
    Ok(first)
}

fn masks_text(xs: &[u64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Runs the pipeline and packages the result. Budget exhaustion without an
/// assumed `F` gives an inconclusive certificate.
pub fn pipeline_certificate<C: Coloring<usize> + ?Sized>(
    g: &FinSemigroup,
    coloring: &C,
    coloring_name: &str,
    opts: &PipelineOptions,
) -> Result<Certificate> {
    let meter = Meter::new(Budget::unlimited());
    let base = |verdict, payload| {
        Certificate::new("fin-fin-pipeline", verdict, payload)
            .with_param("order", g.order())
            .with_param("coloring", coloring_name)
            .with_param("k", opts.k)
            .with_param("t", opts.t)
    };
    let run = match fin_fin_pipeline(g, coloring, opts) {
        Ok(run) => run,
        Err(Error::BudgetExceeded(msg)) => {
            let mut c = base(Verdict::Inconclusive, Payload::None).with_param("budget", msg);
            c.elapsed_ms = meter.elapsed_ms();
            return Ok(c);
        }
        Err(e) => return Err(e),
    };
    let mut values = BTreeMap::new();
    values.insert("L".to_string(), run.l.to_string());
    values.insert("F".to_string(), run.f.to_string());
    values.insert("R".to_string(), run.r.to_string());
    values.insert("S".to_string(), run.s.to_string());
    values.insert("conditional".to_string(), run.conditional.to_string());
    match &run.case {
        PipelineCase::LongOrbit { generator, multiples } => {
            values.insert("case".into(), "long-orbit".into());
            values.insert("generator".into(), generator.to_string());
            values.insert("multiples".into(), masks_text(multiples));
        }
        PipelineCase::GreedyBasis { basis, blocks } => {
            values.insert("case".into(), "greedy-basis".into());
            values.insert("basis".into(), basis.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            values.insert("blocks".into(), masks_text(blocks));
        }
    }
    let (verdict, elements) = match &run.witness {
        Some((xs, c)) => {
            values.insert("color".into(), c.to_string());
            (Verdict::Witness, xs.iter().map(|x| x.to_string()).collect())
        }
        None => (Verdict::Inconclusive, Vec::new()),
    };
    let mut cert = base(verdict, Payload::Record { values, elements });
    if run.conditional {
        cert = cert.with_param("conditional_on_f", run.f);
    }
    cert.elapsed_ms = meter.elapsed_ms();
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parity(x: &usize) -> ColorValue {
        ColorValue::Int((*x % 2) as i64)
    }

    fn popcount_parity(x: &usize) -> ColorValue {
        ColorValue::Int((x.count_ones() % 2) as i64)
    }

    #[test]
    fn element_colorings() {
        let c: ElementColoring = "mod:3".parse().unwrap();
        assert_eq!(c.color(&7).unwrap(), ColorValue::Int(1));
        let t: ElementColoring = "0 1 1".parse().unwrap();
        assert_eq!(t.color(&2).unwrap(), ColorValue::Int(1));
        assert!(t.color(&3).is_err());
        assert!("mod:0".parse::<ElementColoring>().is_err());
        assert!("colour".parse::<ElementColoring>().is_err());
    }

    #[test]
    fn threshold() {
        assert_eq!(size_threshold(5, 1), 2048);
        assert_eq!(size_threshold(2, 0), 16);
        assert_eq!(size_threshold(1, 0), 4);
    }

    #[test]
    fn long_orbit_case() {
        let g = FinSemigroup::cyclic(2048);
        let run = fin_fin_pipeline(&g, &parity, &PipelineOptions::new(2, 2)).unwrap();
        assert_eq!((run.f, run.r, run.l), (5, 31, 1));
        assert_eq!(run.case, PipelineCase::LongOrbit { generator: 1, multiples: vec![2, 4] });
        assert_eq!(run.witness, Some((vec![2, 4], ColorValue::Int(0))));
    }

    #[test]
    fn greedy_case() {
        let g = FinSemigroup::boolean_group(11);
        let run = fin_fin_pipeline(&g, &popcount_parity, &PipelineOptions::new(2, 2)).unwrap();
        assert_eq!(
            run.case,
            PipelineCase::GreedyBasis { basis: vec![1, 2, 4, 8, 16], blocks: vec![3, 12] }
        );
        assert_eq!(run.witness, Some((vec![3, 12], ColorValue::Int(0))));
    }

    #[test]
    fn too_small() {
        let g = FinSemigroup::cyclic(100);
        let err = fin_fin_pipeline(&g, &parity, &PipelineOptions::new(2, 2)).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn conditional_f() {
        let g = FinSemigroup::cyclic(64);
        let constant = |_: &usize| ColorValue::Int(0);
        let mut opts = PipelineOptions::new(2, 2);
        opts.budget = Budget::nodes(1);
        opts.assumed_f = Some(2);
        let cert = pipeline_certificate(&g, &constant, "constant", &opts).unwrap();
        assert_eq!(cert.elements(), ["1", "2"]);
        assert_eq!(cert.param("conditional_on_f"), Some("2"));
        assert_eq!(cert.verdict, Verdict::Witness);
        // F = 2 is too small for parity: {1,2} is the only pair in {1..3}.
        let cert = pipeline_certificate(&g, &parity, "parity", &opts).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        opts.assumed_f = None;
        let cert = pipeline_certificate(&g, &constant, "constant", &opts).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn witness_searches() {
        let c = |xs: &[i64]| xs.iter().map(|&x| ColorValue::Int(x)).collect::<Vec<_>>();
        // 1..=6 colored 0,1,0,1,0,1: {2,4} sums to 6, all color 1.
        assert_eq!(bounded_fs_witness(&c(&[0, 1, 0, 1, 0, 1]), 2), Some((vec![2, 4], ColorValue::Int(1))));
        assert_eq!(bounded_fs_witness(&c(&[0, 1, 1, 0]), 2), None);
        // Masks 1..=7 over {0,1,2}; only {0,1},{2} avoids a color change.
        let fu = c(&[0, 0, 1, 1, 1, 1, 1]);
        assert_eq!(block_fu_witness(&fu, 3, 2), Some((vec![3, 4], ColorValue::Int(1))));
    }

    #[test]
    fn verifier_rejects_repeats() {
        let g = FinSemigroup::cyclic(8);
        assert!(verify_fs_witness(&g, &parity, &[2, 2]).is_err());
        assert!(verify_fs_witness(&g, &parity, &[2, 4]).is_ok());
        assert!(verify_fs_witness(&g, &parity, &[2, 3]).is_err());
    }
}
