//! Independent re-checking of certificates.
//!
//! Each check re-evaluates the recorded elements directly (colors, sums,
//! patterns, intersections) instead of trusting the search that produced
//! them. Inconclusive certificates carry nothing to check.

use std::collections::BTreeSet;

use crate::certificate::{Certificate, Payload, Verdict};
use crate::coloring::{ColoringSpec, Domain, Point};
use crate::constructions::baire::verify_baire_certificate;
use crate::constructions::greedy::{greedy_fs_basis, subset_sums_injective};
use crate::constructions::owings::verify_owings_certificate;
use crate::constructions::pipeline::{verify_fs_witness, ElementColoring};
use crate::constructions::pullback::verify_pullback;
use crate::constructions::support::support_arithmetic;
use crate::delta::verify_delta_system;
use crate::error::{Error, Result};
use crate::exact::{QVec, Rat};
use crate::search::audit::{audit_coloring_claim, verify_counterexample, Claim, ClaimKind};
use crate::search::numbers::{fs_coloring_avoids, fu_coloring_avoids, Repetition};
use crate::search::{Budget, Meter, RationalGrid, VectorGrid};
use crate::semigroup::{FinSemigroup, Naturals};
use crate::sumsets::{fs_values, is_monochromatic};

fn fail<T>(cert: &Certificate, why: impl std::fmt::Display) -> Result<T> {
    Err(Error::Verification(format!("{}: {why}", cert.claim)))
}

fn param<T: std::str::FromStr>(cert: &Certificate, key: &str) -> Result<T> {
    cert.param(key)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Verification(format!("{}: missing or bad parameter `{key}`", cert.claim)))
}

fn record_value<'a>(cert: &'a Certificate, key: &str) -> Result<&'a str> {
    match &cert.payload {
        Payload::Record { values, .. } => values
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Verification(format!("{}: missing value `{key}`", cert.claim))),
        _ => fail(cert, "expected a record payload"),
    }
}

/// Rebuilds an audit claim from the grid parameters stored in a certificate.
pub fn claim_from_certificate(cert: &Certificate) -> Result<Claim> {
    let kind: ClaimKind = cert.claim.parse()?;
    Ok(match kind {
        ClaimKind::SupportArithmetic => Claim::Support { max_support: param(cert, "max_support")? },
        ClaimKind::InnerProductTriples | ClaimKind::SquareNormPairs => {
            Claim::Vector(kind, VectorGrid::new(param(cert, "dim")?, param(cert, "coef_range")?)?)
        }
        _ => Claim::Rational(kind, RationalGrid::new(param(cert, "max_den")?, param(cert, "max_val")?)?),
    })
}

/// Re-checks a certificate. Returns `Ok(())` when everything it asserts holds.
pub fn reverify(cert: &Certificate) -> Result<()> {
    if cert.verdict == Verdict::Inconclusive {
        return Ok(());
    }
    if cert.claim.parse::<ClaimKind>().is_ok() {
        return match cert.verdict {
            Verdict::Counterexample => verify_counterexample(cert),
            _ => {
                let claim = claim_from_certificate(cert)?;
                let again = audit_coloring_claim(&claim, 1, &Meter::new(Budget::unlimited()))?;
                if again.verdict == cert.verdict && again.payload == cert.payload {
                    Ok(())
                } else {
                    fail(cert, "re-running the audit gives a different result")
                }
            }
        };
    }
    match cert.claim.as_str() {
        "fs-number" | "fu-number" => verify_number(cert),
        "fs-witness" => verify_fs_witness_cert(cert),
        "color-eval" => verify_color_eval(cert),
        "baire-sumset" => verify_baire_certificate(cert),
        "owings-pattern" => verify_owings_certificate(cert),
        "owings-fixture" => Ok(()),
        "support-arithmetic" => {
            let s = support_arithmetic(param(cert, "support_size")?, param(cert, "root_size")?)?;
            if record_value(cert, "support")? != s.support.to_string() {
                return fail(cert, "support size differs");
            }
            Ok(())
        }
        "ramsey-pullback" => verify_pullback_cert(cert),
        "fin-fin-pipeline" => verify_pipeline_cert(cert),
        "delta-system" => verify_delta_cert(cert),
        "greedy-basis" => verify_greedy_cert(cert),
        other => Err(Error::Verification(format!("unknown claim `{other}`"))),
    }
}

fn verify_number(cert: &Certificate) -> Result<()> {
    let Payload::Extremal { value, coloring } = &cert.payload else {
        return fail(cert, "expected an extremal payload");
    };
    let k: usize = param(cert, "k")?;
    let t: u32 = param(cert, "t")?;
    if coloring.iter().any(|&c| c >= t) {
        return fail(cert, format!("extremal coloring uses more than {t} colors"));
    }
    let avoids = if cert.claim == "fs-number" {
        let rep: Repetition = param(cert, "repetition")?;
        coloring.len() as u64 + 1 == *value && fs_coloring_avoids(coloring, k, rep)
    } else {
        *value >= 1 && (*value == 1 || fu_coloring_avoids(coloring, (*value - 1) as u32, k))
    };
    if avoids {
        Ok(())
    } else {
        fail(cert, "extremal coloring does not avoid the configuration")
    }
}

fn spec_param(cert: &Certificate) -> Result<ColoringSpec> {
    param::<ColoringSpec>(cert, "coloring")
}

fn verify_fs_witness_cert(cert: &Certificate) -> Result<()> {
    if cert.verdict != Verdict::Witness {
        return Ok(());
    }
    let spec = spec_param(cert)?;
    let points: Vec<Point> = cert.elements().iter().map(|s| s.parse()).collect::<Result<_>>()?;
    let distinct: BTreeSet<String> = cert.elements().iter().cloned().collect();
    if distinct.len() != points.len() {
        return fail(cert, "elements repeat");
    }
    let color = match spec.domain() {
        Domain::Rational => {
            let xs: Vec<Rat> = points.iter().map(|p| p.as_rat().cloned()).collect::<Result<_>>()?;
            is_monochromatic(&fs_values(&xs, |a, b| a + b), &spec)?
        }
        Domain::Vector => {
            let xs: Vec<QVec> = points.iter().map(|p| p.as_vec().cloned()).collect::<Result<_>>()?;
            is_monochromatic(&fs_values(&xs, |a, b| a + b), &spec)?
        }
    };
    match (color, &cert.payload) {
        (Some(c), Payload::Elements { color: Some(want), .. }) if c.to_string() == *want => Ok(()),
        _ => fail(cert, "finite sums are not monochromatic in the recorded color"),
    }
}

fn verify_color_eval(cert: &Certificate) -> Result<()> {
    let spec = spec_param(cert)?;
    let Payload::Record { values, .. } = &cert.payload else {
        return fail(cert, "expected a record payload");
    };
    for (point, color) in values {
        let got = spec.evaluate(&point.parse()?)?;
        if got.to_string() != *color {
            return fail(cert, format!("{point} has color {got}, recorded {color}"));
        }
    }
    Ok(())
}

fn verify_pullback_cert(cert: &Certificate) -> Result<()> {
    if cert.verdict != Verdict::Witness {
        return Ok(());
    }
    let spec = spec_param(cert)?;
    let [v, w] = cert.elements() else {
        return fail(cert, "expected two vectors");
    };
    let c = verify_pullback(&spec, &v.parse()?, &w.parse()?)?;
    match &cert.payload {
        Payload::Elements { color: Some(want), .. } if c.to_string() == *want => Ok(()),
        _ => fail(cert, "recorded color differs"),
    }
}

fn verify_pipeline_cert(cert: &Certificate) -> Result<()> {
    if cert.verdict != Verdict::Witness {
        return Ok(());
    }
    let g = FinSemigroup::builtin(cert.param("group").unwrap_or_default())?;
    let coloring: ElementColoring = spec_param_str(cert)?.parse()?;
    let xs: Vec<usize> = cert.elements().iter().map(|s| s.parse::<usize>()).collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Verification(e.to_string()))?;
    let k: usize = param(cert, "k")?;
    if xs.len() != k {
        return fail(cert, format!("{} elements, expected {k}", xs.len()));
    }
    let c = verify_fs_witness(&g, &coloring, &xs)?;
    if record_value(cert, "color")? != c.to_string() {
        return fail(cert, "recorded color differs");
    }
    Ok(())
}

fn spec_param_str(cert: &Certificate) -> Result<&str> {
    cert.param("coloring").ok_or_else(|| Error::Verification("missing coloring".into()))
}

fn verify_delta_cert(cert: &Certificate) -> Result<()> {
    if cert.verdict != Verdict::Witness {
        return Ok(());
    }
    let parse_set = |s: &str| -> BTreeSet<String> {
        if s == "∅" {
            BTreeSet::new()
        } else {
            s.split_whitespace().map(str::to_string).collect()
        }
    };
    let root = parse_set(record_value(cert, "root")?);
    let members: Vec<BTreeSet<String>> = cert.elements().iter().map(|s| parse_set(s)).collect();
    let p: usize = param(cert, "p")?;
    if members.len() < p || !verify_delta_system(&members, &root) {
        return fail(cert, "members do not form a Δ-system with the recorded root");
    }
    Ok(())
}

fn verify_greedy_cert(cert: &Certificate) -> Result<()> {
    if cert.verdict != Verdict::Witness {
        return Ok(());
    }
    let count: usize = param(cert, "count")?;
    let carrier = cert.param("carrier").unwrap_or_default();
    let same = if carrier == "naturals" {
        let start: u64 = param(cert, "pool_start")?;
        let h: Vec<u64> = parse_list(cert)?;
        subset_sums_injective(&Naturals, &h) && greedy_fs_basis(&Naturals, count, start..)? == h
    } else {
        let g = FinSemigroup::builtin(carrier)?;
        let h: Vec<usize> = parse_list(cert)?;
        subset_sums_injective(&g, &h) && greedy_fs_basis(&g, count, 0..g.order())? == h
    };
    if same {
        Ok(())
    } else {
        fail(cert, "basis is not the greedy one or has colliding subset sums")
    }
}

fn parse_list<T: std::str::FromStr>(cert: &Certificate) -> Result<Vec<T>> {
    cert.elements()
        .iter()
        .map(|s| s.parse().map_err(|_| Error::Verification(format!("bad element `{s}`"))))
        .collect()
}
