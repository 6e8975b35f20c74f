// Built-in colorings on rationals and vectors, and plain closures as colorings.

use hindman::{ColorValue, Coloring, ColoringSpec, Point, QVec, Rat};

pub fn run_example() -> hindman::Result<()> {
    let dyadic: ColoringSpec = "dyadic".parse()?;
    let signed: ColoringSpec = "signed_dyadic".parse()?;
    for s in ["17/5", "-3/5", "14/5", "1/2", "-5/2"] {
        let p: Point = s.parse()?;
        println!("{s:>5}: dyadic {}  signed {}", dyadic.evaluate(&p)?, signed.evaluate(&p)?);
    }
    // The mixed-sign tuple is monochromatic for the plain coloring only.
    let tuple: Vec<Rat> = ["17/5", "-3/5", "14/5"].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let colors: Vec<ColorValue> = tuple.iter().map(|r| dyadic.evaluate_rat(r)).collect::<Result<_, _>>()?;
    assert!(colors.iter().all(|c| *c == ColorValue::Int(1)));

    let inner: ColoringSpec = "self_inner".parse()?;
    let v: QVec = "{0:1, 1:-2}".parse()?;
    println!("⟨v|v⟩ color of {v}: {}", inner.evaluate_vec(&v)?);

    let parity: ColoringSpec = "support_parity".parse()?;
    println!("support parity of {v}: {}", parity.evaluate_vec(&v)?);
    assert!(parity.evaluate_vec(&QVec::zero()).is_err());

    // Anything Fn(&T) -> ColorValue is a coloring.
    let mod3 = |n: &u64| ColorValue::Int((*n % 3) as i64);
    assert_eq!(mod3.color(&7)?, ColorValue::Int(1));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
