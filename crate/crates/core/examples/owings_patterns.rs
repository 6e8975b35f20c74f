// Vectors whose pairwise sums all carry one pattern, so X + X is
// monochromatic for any coloring that sees only patterns.

use hindman::constructions::owings::{owings_certificate, pattern_coloring, pi, verify_patterns};
use hindman::constructions::{owings_fixture_from_coloring, owings_pattern_construct, PatternFixture};
use hindman::sumsets::{is_monochromatic, pairwise_sumset};
use hindman::{Budget, ColorValue, Meter, QVec};

pub fn run_example() -> hindman::Result<()> {
    for i in 0..=2 {
        println!("π_{i} = {}", pi(2, i));
    }
    let fixture = PatternFixture::new(2, 0, 2, 4)?;
    let xs = owings_pattern_construct(&fixture, 4)?;
    for x in &xs {
        println!("  {x}");
    }
    verify_patterns(&fixture, &xs)?;

    // Same color for π_0 and π_2, so every pairwise sum matches.
    let c = pattern_coloring(2, |i| if i == 1 { 1 } else { 0 });
    let sums: Vec<QVec> = pairwise_sumset(&xs, |a, b| a + b).into_iter().collect();
    assert_eq!(is_monochromatic(&sums, &c)?, Some(ColorValue::Int(0)));

    // Starting from a coloring instead of a fixture.
    let least_parity = |v: &QVec| {
        let s = v.support();
        ColorValue::Int(s.first().map_or(0, |i| (i % 2) as i64))
    };
    let meter = Meter::new(Budget::unlimited());
    let found = owings_fixture_from_coloring(1, &least_parity, 6, 2, &meter)?.expect("kappa 6 suffices");
    println!("from coloring: i1={} i2={} basis {:?}", found.i1, found.i2, found.basis);
    let cert = owings_certificate(&found, 2)?;
    println!("{:?} {:?}", cert.verdict, cert.elements());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
