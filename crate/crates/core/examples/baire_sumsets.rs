// Points X with X + X inside a set of rationals with nonempty interior.

use hindman::constructions::baire::{baire_certificate, verify_sumset};
use hindman::constructions::{baire_sumset_construct, IntervalSet};

pub fn run_example() -> hindman::Result<()> {
    for text in ["(0,1)", "(0,1) \\ {1/2}", "(-1,1) \\ {2/5}", "[2,3) U (5,6)"] {
        let set: IntervalSet = text.parse()?;
        let run = baire_sumset_construct(&set, 4)?;
        let pts: Vec<String> = run.points.iter().map(|p| p.to_string()).collect();
        println!("{set}: shift {} δ {} -> {}", run.shift, run.delta, pts.join(", "));
        verify_sumset(&set, &run.points)?;
    }
    let set: IntervalSet = "(0,1)".parse()?;
    let cert = baire_certificate(&set, 50)?;
    println!("n = 50: {} points, {:?}", cert.elements().len(), cert.verdict);

    let empty: IntervalSet = "[1,1]".parse()?;
    assert!(baire_sumset_construct(&empty, 1).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
