//! Mechanical verification of "no monochromatic configuration" claims over
//! finite grids.
//!
//! Each claim names a coloring and a forbidden configuration. The auditor
//! scans every tuple of distinct grid points in canonical order and reports
//! either exhaustion (the claim holds on the grid) or the first violating
//! tuple.

use std::fmt;
use std::str::FromStr;

use crate::certificate::{Certificate, Payload, Verdict};
use crate::coloring::{dyadic_color, dyadic_parity_color, self_inner_color, signed_dyadic_color, ColorValue};
use crate::constructions::support::support_arithmetic_check;
use crate::error::{Error, Result};
use crate::exact::{QVec, Rat};
use crate::search::{binomial, first_in_order, Meter, RationalGrid, TaskResult, VectorGrid};
use crate::sumsets::{fs_values, is_monochromatic};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    /// Distinct same-sign `r, s` with equal dyadic color: `r + s` changes color.
    DyadicSameSign,
    /// The same statement without the sign restriction. Refutable.
    DyadicAllPairs,
    /// Distinct `r, s` with equal signed-dyadic color: `r + s` changes color.
    SignedDyadicAllPairs,
    /// Distinct same-sign `r, s` with equal dyadic color: `r + s` changes parity color.
    ParitySameSign,
    /// No three distinct vectors have `FS` monochromatic under `⟨v|v⟩`.
    InnerProductTriples,
    /// No two distinct vectors have `{2v₀, v₀+v₁, 2v₁}` monochromatic under `⟨v|v⟩`.
    SquareNormPairs,
    /// The support-size arithmetic behind the support-parity coloring, for all
    /// `1 ≤ |R| < N ≤ max_support`.
    SupportArithmetic,
}

impl ClaimKind {
    pub const ALL: [ClaimKind; 7] = [
        ClaimKind::DyadicSameSign,
        ClaimKind::DyadicAllPairs,
        ClaimKind::SignedDyadicAllPairs,
        ClaimKind::ParitySameSign,
        ClaimKind::InnerProductTriples,
        ClaimKind::SquareNormPairs,
        ClaimKind::SupportArithmetic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimKind::DyadicSameSign => "dyadic-same-sign",
            ClaimKind::DyadicAllPairs => "dyadic-all-pairs",
            ClaimKind::SignedDyadicAllPairs => "signed-dyadic-all-pairs",
            ClaimKind::ParitySameSign => "parity-same-sign",
            ClaimKind::InnerProductTriples => "inner-product-triples",
            ClaimKind::SquareNormPairs => "square-norm-pairs",
            ClaimKind::SupportArithmetic => "support-arithmetic",
        }
    }
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<ClaimKind> {
        ClaimKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown claim `{s}`")))
    }
}

/// A claim together with the finite domain it is checked on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    Rational(ClaimKind, RationalGrid),
    Vector(ClaimKind, VectorGrid),
    Support { max_support: usize },
}

impl Claim {
    pub fn kind(&self) -> ClaimKind {
        match self {
            Claim::Rational(k, _) | Claim::Vector(k, _) => *k,
            Claim::Support { .. } => ClaimKind::SupportArithmetic,
        }
    }
}

/// A violating tuple and the shared color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub elements: Vec<String>,
    pub color: ColorValue,
}

/// Checks one pair `(r, s)` of distinct rationals.
pub fn rational_pair_violation(kind: ClaimKind, r: &Rat, s: &Rat) -> Option<Violation> {
    let same_sign = (r * s).is_positive();
    let sum = r + s;
    let (c, holds) = match kind {
        ClaimKind::DyadicSameSign => {
            let c = dyadic_color(r);
            (c.clone(), !same_sign || c != dyadic_color(s) || dyadic_color(&sum) != c)
        }
        ClaimKind::DyadicAllPairs => {
            let c = dyadic_color(r);
            (c.clone(), c != dyadic_color(s) || dyadic_color(&sum) != c)
        }
        ClaimKind::SignedDyadicAllPairs => {
            let c = signed_dyadic_color(r);
            (c.clone(), c != signed_dyadic_color(s) || signed_dyadic_color(&sum) != c)
        }
        ClaimKind::ParitySameSign => {
            let p = dyadic_parity_color(r);
            let holds = !same_sign || dyadic_color(r) != dyadic_color(s) || dyadic_parity_color(&sum) != p;
            (p, holds)
        }
        _ => return None,
    };
    (!holds).then(|| Violation {
        elements: vec![r.to_string(), s.to_string(), sum.to_string()],
        color: c,
    })
}

/// Checks one tuple of distinct vectors (three for triples, two for pairs).
pub fn vector_tuple_violation(kind: ClaimKind, vs: &[&QVec]) -> Option<Violation> {
    let config: Vec<QVec> = match (kind, vs) {
        (ClaimKind::InnerProductTriples, [u, v, w]) => {
            fs_values(&[(*u).clone(), (*v).clone(), (*w).clone()], |a, b| a + b)
        }
        (ClaimKind::SquareNormPairs, [a, b]) => {
            let two = Rat::from_integer(2);
            vec![a.scale(&two), *a + *b, b.scale(&two)]
        }
        _ => return None,
    };
    let c = is_monochromatic(&config, &|v: &QVec| self_inner_color(v)).expect("total coloring")?;
    Some(Violation {
        elements: vs.iter().map(|v| v.to_string()).collect(),
        color: c,
    })
}

fn arity(kind: ClaimKind) -> usize {
    match kind {
        ClaimKind::InnerProductTriples => 3,
        _ => 2,
    }
}

/// Scans tuples `i₀ < i₁ < …` starting at `first`, calling `check` on each.
fn scan_from<T>(
    points: &[T],
    k: usize,
    first: usize,
    meter: &Meter,
    abandon: &dyn Fn() -> bool,
    check: &dyn Fn(&[&T]) -> Option<Violation>,
    all: &mut Option<&mut Vec<Violation>>,
) -> Result<TaskResult<Violation>> {
    let n = points.len();
    let mut nodes = 0;
    if first + k > n {
        return Ok(TaskResult { found: None, nodes });
    }
    let mut idx: Vec<usize> = (first..first + k).collect();
    loop {
        if all.is_none() && abandon() {
            return Ok(TaskResult { found: None, nodes });
        }
        meter.tick()?;
        nodes += 1;
        let tuple: Vec<&T> = idx.iter().map(|&i| &points[i]).collect();
        if let Some(v) = check(&tuple) {
            match all {
                Some(sink) => sink.push(v),
                None => return Ok(TaskResult { found: Some(v), nodes }),
            }
        }
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
}

fn first_violation<T: Sync>(
    points: &[T],
    k: usize,
    workers: usize,
    meter: &Meter,
    check: &(dyn Fn(&[&T]) -> Option<Violation> + Sync),
) -> Result<(Option<Violation>, u64)> {
    let (hit, nodes) = first_in_order(points.len(), workers, |first, abandon| {
        scan_from(points, k, first, meter, abandon, check, &mut None)
    })?;
    Ok((hit.map(|(_, v)| v), nodes))
}

/// Every violation of the claim, in canonical order.
pub fn audit_violations(claim: &Claim) -> Result<Vec<Violation>> {
    let meter = Meter::new(Default::default());
    let mut out = Vec::new();
    let never = || false;
    match claim {
        Claim::Rational(kind, grid) => {
            let pts = grid.points();
            let check = |t: &[&Rat]| rational_pair_violation(*kind, t[0], t[1]);
            for first in 0..pts.len() {
                scan_from(&pts, 2, first, &meter, &never, &check, &mut Some(&mut out))?;
            }
        }
        Claim::Vector(kind, grid) => {
            let pts = grid.points();
            let check = |t: &[&QVec]| vector_tuple_violation(*kind, t);
            for first in 0..pts.len() {
                scan_from(&pts, arity(*kind), first, &meter, &never, &check, &mut Some(&mut out))?;
            }
        }
        Claim::Support { max_support } => {
            for (n, root) in support_cases(*max_support) {
                if let Err(e) = support_arithmetic_check(n, root) {
                    out.push(Violation {
                        elements: vec![n.to_string(), root.to_string()],
                        color: ColorValue::Int(0),
                    });
                    let _ = e;
                }
            }
        }
    }
    Ok(out)
}

fn support_cases(max_support: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max_support).flat_map(|n| (1..n).map(move |r| (n, r)))
}

/// Runs the claim and returns `exhausted` or the first `counterexample`.
pub fn audit_coloring_claim(claim: &Claim, workers: usize, meter: &Meter) -> Result<Certificate> {
    let (found, nodes, space, params): (Option<Violation>, u64, u64, Vec<(&str, String)>) = match claim {
        Claim::Rational(kind, grid) => {
            let pts = grid.points();
            let check = |t: &[&Rat]| rational_pair_violation(*kind, t[0], t[1]);
            let (v, nodes) = first_violation(&pts, 2, workers, meter, &check)?;
            let params = vec![
                ("max_den", grid.max_den.to_string()),
                ("max_val", grid.max_val.to_string()),
                ("grid_size", pts.len().to_string()),
            ];
            (v, nodes, binomial(pts.len() as u64, 2), params)
        }
        Claim::Vector(kind, grid) => {
            let pts = grid.points();
            let k = arity(*kind);
            let check = |t: &[&QVec]| vector_tuple_violation(*kind, t);
            let (v, nodes) = first_violation(&pts, k, workers, meter, &check)?;
            let params = vec![
                ("dim", grid.dim.to_string()),
                ("coef_range", grid.range.to_string()),
                ("grid_size", pts.len().to_string()),
            ];
            (v, nodes, binomial(pts.len() as u64, k as u64), params)
        }
        Claim::Support { max_support } => {
            let mut found = None;
            let mut nodes = 0;
            for (n, root) in support_cases(*max_support) {
                meter.tick()?;
                nodes += 1;
                if let Err(e) = support_arithmetic_check(n, root) {
                    found = Some(Violation {
                        elements: vec![n.to_string(), root.to_string(), e.to_string()],
                        color: ColorValue::Int(0),
                    });
                    break;
                }
            }
            let total = support_cases(*max_support).count() as u64;
            (found, nodes, total, vec![("max_support", max_support.to_string())])
        }
    };
    let mut cert = match found {
        Some(v) => {
            let mut c = Certificate::new(
                claim.kind().as_str(),
                Verdict::Counterexample,
                Payload::Elements {
                    elements: v.elements,
                    color: Some(v.color.to_string()),
                },
            );
            c.search_space = nodes;
            c
        }
        None => {
            let mut c = Certificate::new(claim.kind().as_str(), Verdict::Exhausted, Payload::None);
            c.search_space = space;
            c
        }
    };
    for (k, v) in params {
        cert = cert.with_param(k, v);
    }
    cert.elapsed_ms = meter.elapsed_ms();
    Ok(cert)
}

/// Re-checks a counterexample certificate by direct evaluation.
pub fn verify_counterexample(cert: &Certificate) -> Result<()> {
    let kind: ClaimKind = cert.claim.parse()?;
    let els = cert.elements();
    let fail = |why: &str| Err(Error::Verification(format!("{}: {why}", cert.claim)));
    let found = match kind {
        ClaimKind::SupportArithmetic => {
            let n: usize = els.first().and_then(|s| s.parse().ok()).unwrap_or(0);
            let r: usize = els.get(1).and_then(|s| s.parse().ok()).unwrap_or(0);
            return if support_arithmetic_check(n, r).is_err() { Ok(()) } else { fail("case passes") };
        }
        ClaimKind::InnerProductTriples | ClaimKind::SquareNormPairs => {
            let vs: Vec<QVec> = els.iter().map(|s| s.parse()).collect::<Result<_>>()?;
            let distinct = vs.iter().collect::<std::collections::BTreeSet<_>>().len() == vs.len();
            if !distinct {
                return fail("elements not distinct");
            }
            let refs: Vec<&QVec> = vs.iter().collect();
            vector_tuple_violation(kind, &refs)
        }
        _ => {
            if els.len() != 3 {
                return fail("expected r, s, r+s");
            }
            let r: Rat = els[0].parse()?;
            let s: Rat = els[1].parse()?;
            if r == s {
                return fail("elements not distinct");
            }
            rational_pair_violation(kind, &r, &s)
        }
    };
    match (found, &cert.payload) {
        (Some(v), Payload::Elements { color: Some(c), .. }) if v.color.to_string() == *c => Ok(()),
        (Some(_), _) => fail("color mismatch"),
        (None, _) => fail("tuple does not violate the claim"),
    }
}
