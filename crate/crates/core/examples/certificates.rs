// Certificates: JSON on disk, worker-independent content, independent re-checks.

use hindman::search::audit::{audit_coloring_claim, Claim, ClaimKind};
use hindman::search::numbers::fu_number;
use hindman::search::RationalGrid;
use hindman::verify::reverify;
use hindman::{Budget, Certificate, Meter, Payload};

pub fn run_example() -> hindman::Result<()> {
    let claim = Claim::Rational(ClaimKind::DyadicAllPairs, RationalGrid::new(5, 4)?);
    let one = audit_coloring_claim(&claim, 1, &Meter::new(Budget::unlimited()))?;
    let eight = audit_coloring_claim(&claim, 8, &Meter::new(Budget::unlimited()))?;
    assert_eq!(one.canonical_json(), eight.canonical_json());
    reverify(&one)?;

    let dir = std::env::temp_dir().join(format!("hindman-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("fu.json");
    fu_number(2, 2, 2, Budget::unlimited())?.write_atomic(&path)?;
    let back = Certificate::from_json(&std::fs::read_to_string(&path)?)?;
    reverify(&back)?;
    print!("{}", back.to_json());

    // Tampering is caught.
    let mut bad = back.clone();
    if let Payload::Extremal { coloring, .. } = &mut bad.payload {
        coloring.iter_mut().for_each(|c| *c = 0);
    }
    assert!(reverify(&bad).is_err());
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
