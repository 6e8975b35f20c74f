// Finite semigroups from Cayley tables and built-in names.

use hindman::FinSemigroup;

pub fn run_example() -> hindman::Result<()> {
    let z6 = FinSemigroup::builtin("cyclic:6")?;
    println!("Z6: order {}, identity {:?}", z6.order(), z6.identity());
    println!("orbit of 2: {:?}", z6.monogenic(2)?);
    assert_eq!(z6.cancellativity_bound(), 1);

    // Left-zero bands: a + b = a, so e + g = e has every g as a solution.
    let lz = FinSemigroup::builtin("left-zero:3")?;
    println!("left-zero:3 has L = {}", lz.cancellativity_bound());
    assert_eq!(lz.cancellativity_bound(), 3);

    let product = FinSemigroup::builtin("boolean:2*left-zero:2")?;
    println!("product order {}, L = {}", product.order(), product.cancellativity_bound());

    let rows = vec![vec![0, 1], vec![1, 0]];
    let z2 = FinSemigroup::from_rows(&rows)?;
    assert_eq!(z2.add(1, 1), 0);
    // a + b = 1 - b is not associative.
    assert!(FinSemigroup::from_rows(&[vec![1, 0], vec![1, 0]]).is_err());
    println!("{z2}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
