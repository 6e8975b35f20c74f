// Exhaustive audits of "no monochromatic configuration" claims on finite grids.

use hindman::search::audit::{audit_coloring_claim, audit_violations, Claim, ClaimKind};
use hindman::search::{RationalGrid, VectorGrid};
use hindman::{Budget, Meter, Payload, Verdict};

pub fn run_example() -> hindman::Result<()> {
    let meter = Meter::new(Budget::unlimited());

    let same_sign = Claim::Rational(ClaimKind::DyadicSameSign, RationalGrid::new(6, 8)?);
    let cert = audit_coloring_claim(&same_sign, 2, &meter)?;
    println!("{}: {:?} over {} pairs", cert.claim, cert.verdict, cert.search_space);
    assert_eq!(cert.verdict, Verdict::Exhausted);

    // Mixed signs break it: the audit returns the first violating tuple.
    let all_pairs = Claim::Rational(ClaimKind::DyadicAllPairs, RationalGrid::new(5, 4)?);
    let cert = audit_coloring_claim(&all_pairs, 2, &meter)?;
    if let Payload::Elements { elements, color } = &cert.payload {
        println!("{}: counterexample {elements:?} in color {color:?}", cert.claim);
    }
    assert_eq!(cert.verdict, Verdict::Counterexample);
    let every = audit_violations(&all_pairs)?;
    println!("  {} violations in all", every.len());

    let signed = Claim::Rational(ClaimKind::SignedDyadicAllPairs, RationalGrid::new(5, 4)?);
    assert_eq!(audit_coloring_claim(&signed, 2, &meter)?.verdict, Verdict::Exhausted);

    for kind in [ClaimKind::InnerProductTriples, ClaimKind::SquareNormPairs] {
        let claim = Claim::Vector(kind, VectorGrid::new(2, 1)?);
        let cert = audit_coloring_claim(&claim, 2, &meter)?;
        println!("{kind}: {:?}", cert.verdict);
        assert_eq!(cert.verdict, Verdict::Exhausted);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
