// Exact rationals and sparse rational vectors.

use hindman::{Pattern, QVec, Rat};

pub fn run_example() -> hindman::Result<()> {
    let a: Rat = "17/5".parse()?;
    let b: Rat = "-3/5".parse()?;
    let sum = &a + &b;
    println!("{a} + {b} = {sum}");
    assert_eq!(sum, Rat::new(14, 5));

    // 2^k <= r < 2^(k+1): 2 <= 12/5 < 4.
    let e = Rat::new(12, 5).dyadic_exponent()?;
    println!("dyadic exponent of 12/5 = {e}");
    assert_eq!(e, 1);
    assert_eq!(Rat::new(3, 16).dyadic_exponent()?, -3);
    assert!(Rat::zero().dyadic_exponent().is_err());

    let v: QVec = "{0:1, 3:-1/2}".parse()?;
    let w = QVec::from_ints(&[0, 2, 0, 1]);
    let s = &v + &w;
    println!("v = {v}, w = {w}, v + w = {s}");
    println!("support(v + w) = {:?}", s.support());
    assert_eq!(s.support_size(), 3);
    assert_eq!(v.inner_product(&w), Rat::new(-1, 2));

    // Zero entries vanish, so the pattern skips them.
    assert_eq!(s.pattern(), Pattern(vec![Rat::one(), Rat::from_integer(2), Rat::new(1, 2)]));
    println!("pattern(v + w) = {}", s.pattern());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
