// Greedy bases whose nonempty subset sums are pairwise distinct.

use hindman::constructions::{greedy_fs_basis, subset_sums, subset_sums_injective};
use hindman::{Error, FinSemigroup, Naturals};

pub fn run_example() -> hindman::Result<()> {
    let h = greedy_fs_basis(&Naturals, 6, 1u64..)?;
    println!("naturals: {h:?}");
    assert_eq!(h, [1, 2, 4, 8, 16, 32]);
    assert!(subset_sums_injective(&Naturals, &h));

    let b5 = FinSemigroup::builtin("boolean:5")?;
    let h = greedy_fs_basis(&b5, 5, 0..b5.order())?;
    let sums = subset_sums(&b5, &h);
    println!("boolean:5 basis {h:?}, {} distinct sums", sums.len());

    // Four elements cannot carry seven distinct subset sums.
    let z4 = FinSemigroup::builtin("cyclic:4")?;
    match greedy_fs_basis(&z4, 3, 0..z4.order()) {
        Err(Error::PoolExhausted { chosen, .. }) => println!("cyclic:4 stops after {chosen} picks"),
        other => panic!("unexpected {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
