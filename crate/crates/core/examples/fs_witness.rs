// Least k-subsequence of a grid whose finite sums share one color.

use hindman::coloring::dyadic_color;
use hindman::search::witness::find_mono_fs_witness;
use hindman::search::RationalGrid;
use hindman::{Budget, ColorValue, Rat, Verdict};

pub fn run_example() -> hindman::Result<()> {
    let ground = RationalGrid::new(3, 3)?.points();
    let cert = find_mono_fs_witness(&ground, |a, b| a + b, &dyadic_color, "dyadic", 3, 2, Budget::unlimited())?;
    println!("{:?}: {:?}", cert.verdict, cert.elements());

    // Odd plus odd is even, so parity has no 2-witness among odd numbers.
    let odd: Vec<Rat> = (0..6).map(|i| Rat::from_integer(2 * i + 1)).collect();
    let parity = |r: &Rat| ColorValue::Int(r.to_i64().map_or(-1, |n| n.rem_euclid(2)));
    let cert = find_mono_fs_witness(&odd, |a, b| a + b, &parity, "parity", 2, 1, Budget::unlimited())?;
    println!("odd numbers, parity: {:?}", cert.verdict);
    assert_eq!(cert.verdict, Verdict::Exhausted);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
