//! Greedy construction of `X` with `X + X ⊆ N` for an interval set `N`.
//!
//! Translate `N` so that 0 sits inside the open part, pick `δ` with
//! `(0, 2δ)` inside that part, then choose each new point in `(0, δ)` so that
//! its double and its sums with earlier points avoid the excluded points.
//! Translating back by `-c/2` gives the answer.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::certificate::{Certificate, Payload, Verdict};
use crate::constructions::interval::IntervalSet;
use crate::error::{Error, Result};
use crate::exact::Rat;

/// The output points together with the translation data used to find them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaireRun {
    pub shift: Rat,
    pub delta: Rat,
    /// Points chosen in the translated set.
    pub picks: Vec<Rat>,
    /// `picks[i] - shift/2`, the points in the original set.
    pub points: Vec<Rat>,
}

/// Rationals in `(0, bound)` ordered by denominator, then numerator.
fn canonical_rationals(bound: Rat) -> impl Iterator<Item = Rat> {
    (1i64..).flat_map(move |q| {
        let bound = bound.clone();
        (1..).map(move |p| (p, q)).take_while(move |&(p, q)| Rat::new(p, q) < bound)
    })
    .filter(|&(p, q)| p.gcd(&q) == 1)
    .map(|(p, q)| Rat::new(p, q))
}

/// Largest `2^-j ≤ 1` with `2·2^-j ≤ limit`.
fn dyadic_delta(limit: &Rat) -> Rat {
    let mut d = Rat::one();
    while &(&d + &d) > limit {
        d = d.half();
    }
    d
}

pub fn baire_sumset_construct(set: &IntervalSet, n: usize) -> Result<BaireRun> {
    let first = set
        .intervals()
        .iter()
        .find(|i| i.has_interior())
        .ok_or_else(|| Error::Precondition(format!("`{set}` has empty interior")))?;
    let shift = -Rat::midpoint(&first.lo, &first.hi);
    let moved = set.translate(&shift);
    let half_width = (&first.hi - &first.lo).half();
    let delta = dyadic_delta(&half_width);

    let mut picks: Vec<Rat> = Vec::with_capacity(n);
    let mut candidates = canonical_rationals(delta.clone());
    while picks.len() < n {
        let x = candidates
            .next()
            .expect("finitely many excluded points cannot block every candidate");
        let fits = moved.contains(&(&x + &x))
            && picks.iter().all(|p| moved.contains(&(&x + p)))
            && !picks.contains(&x);
        if fits {
            picks.push(x);
        }
    }
    let back = shift.half();
    let points: Vec<Rat> = picks.iter().map(|x| x - &back).collect();
    Ok(BaireRun { shift, delta, picks, points })
}

/// Checks `x + y ∈ N` for every pair (including `x = y`) and that the points
/// are distinct.
pub fn verify_sumset(set: &IntervalSet, points: &[Rat]) -> Result<()> {
    for (i, x) in points.iter().enumerate() {
        if points[..i].contains(x) {
            return Err(Error::Verification(format!("{x} repeated")));
        }
        for y in &points[i..] {
            let s = x + y;
            if !set.contains(&s) {
                return Err(Error::Verification(format!("{x} + {y} = {s} is not in {set}")));
            }
        }
    }
    Ok(())
}

pub fn baire_certificate(set: &IntervalSet, n: usize) -> Result<Certificate> {
    let run = baire_sumset_construct(set, n)?;
    verify_sumset(set, &run.points)?;
    let mut values = std::collections::BTreeMap::new();
    values.insert("shift".to_string(), run.shift.to_string());
    values.insert("delta".to_string(), run.delta.to_string());
    let mut cert = Certificate::new(
        "baire-sumset",
        Verdict::Witness,
        Payload::Record {
            values,
            elements: run.points.iter().map(Rat::to_string).collect(),
        },
    )
    .with_param("set", set)
    .with_param("n", n);
    cert.search_space = run.picks.iter().map(|p| p.denom().clone()).max().map_or(0, |d: BigInt| {
        d.try_into().unwrap_or(u64::MAX)
    });
    Ok(cert)
}

/// Re-checks a `baire-sumset` certificate against its recorded set.
pub fn verify_baire_certificate(cert: &Certificate) -> Result<()> {
    let set: IntervalSet = cert
        .param("set")
        .ok_or_else(|| Error::Verification("missing set".into()))?
        .parse()?;
    let points: Vec<Rat> = cert.elements().iter().map(|s| s.parse()).collect::<Result<_>>()?;
    let n: usize = cert.param("n").and_then(|s| s.parse().ok()).unwrap_or(points.len());
    if points.len() != n {
        return Err(Error::Verification(format!("{} points, expected {n}", points.len())));
    }
    verify_sumset(&set, &points)
}
