// Pulling a vector coloring back to pairs of basis indices: a homogeneous
// triple gives v, w with c(v) = c(w) = c(v + w).

use hindman::constructions::pullback::pullback_certificate;
use hindman::constructions::ramsey_pullback_fs;
use hindman::coloring::self_inner_color;
use hindman::{ColorValue, QVec};

pub fn run_example() -> hindman::Result<()> {
    let wit = ramsey_pullback_fs(6, &self_inner_color)?.expect("constant on differences");
    println!("triple {:?}: v = {}, w = {}, color {}", wit.triple, wit.v, wit.w, wit.color);

    // Color b_j - b_i by whether j - i is odd.
    let odd_gap = |v: &QVec| {
        let s: Vec<usize> = v.support().into_iter().collect();
        ColorValue::Int(((s[1] - s[0]) % 2) as i64)
    };
    let wit = ramsey_pullback_fs(6, &odd_gap)?.expect("even gaps form a triangle");
    println!("odd-gap coloring: triple {:?}, color {}", wit.triple, wit.color);

    let cert = pullback_certificate(6, &odd_gap, "odd-gap")?;
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
