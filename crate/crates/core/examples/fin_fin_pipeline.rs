// k distinct elements with monochromatic finite sums in a large finite
// semigroup: either a long orbit reduces to 1..R, or a greedy basis reduces
// to block unions.

use hindman::constructions::pipeline::{pipeline_certificate, verify_fs_witness, ElementColoring};
use hindman::constructions::{fin_fin_pipeline, PipelineCase, PipelineOptions};
use hindman::FinSemigroup;

pub fn run_example() -> hindman::Result<()> {
    let opts = PipelineOptions::new(2, 2);

    let cyclic = FinSemigroup::builtin("cyclic:2048")?;
    let run = fin_fin_pipeline(&cyclic, &ElementColoring::Parity, &opts)?;
    println!("cyclic:2048  L={} F={} R={} S={}  {:?}", run.l, run.f, run.r, run.s, run.case);
    let (xs, c) = run.witness.clone().expect("witness");
    assert_eq!(verify_fs_witness(&cyclic, &ElementColoring::Parity, &xs)?, c);
    println!("  witness {xs:?} color {c}");

    let boolean = FinSemigroup::builtin("boolean:11")?;
    let run = fin_fin_pipeline(&boolean, &ElementColoring::Popcount, &opts)?;
    assert!(matches!(run.case, PipelineCase::GreedyBasis { .. }));
    println!("boolean:11  {:?}  witness {:?}", run.case, run.witness);

    let cert = pipeline_certificate(&boolean, &ElementColoring::Popcount, "popcount", &opts)?;
    println!("{}", cert.to_json());

    // Too small for the size threshold.
    assert!(fin_fin_pipeline(&FinSemigroup::builtin("cyclic:64")?, &ElementColoring::Parity, &opts).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
