// Least R (finite sums in 1..R) and least F (finite unions of blocks) forcing
// a monochromatic configuration, with an extremal coloring one step below.

use hindman::search::numbers::{fs_coloring_avoids, fs_number, fu_number, Repetition};
use hindman::{Budget, Payload};

pub fn run_example() -> hindman::Result<()> {
    for rep in [Repetition::Allowed, Repetition::Distinct] {
        let cert = fs_number(2, 2, rep, 2, Budget::unlimited())?;
        let Payload::Extremal { value, coloring } = &cert.payload else { unreachable!() };
        println!("fs_number(2,2) {} = {value}, extremal {coloring:?}", rep.as_str());
        assert!(fs_coloring_avoids(coloring, 2, rep));
    }

    let cert = fu_number(2, 2, 2, Budget::unlimited())?;
    let Payload::Extremal { value, coloring } = &cert.payload else { unreachable!() };
    println!("fu_number(2,2) = {value}, extremal has {} subsets", coloring.len());
    assert_eq!(*value, 5);

    // A tiny budget leaves the search inconclusive.
    let cut = fs_number(2, 3, Repetition::Allowed, 1, Budget::nodes(10))?;
    println!("with 10 nodes: {:?}", cut.verdict);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
