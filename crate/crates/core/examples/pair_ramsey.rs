// Homogeneous sets for 2-colorings of pairs.

use hindman::search::ramsey::{pair_ramsey_homogeneous, PairColoring};

pub fn run_example() -> hindman::Result<()> {
    // Edges of a 5-cycle get color 1, chords color 0: no monochromatic triangle.
    let pentagon = PairColoring::from_fn(5, |a, b| {
        let gap = b - a;
        (gap.min(5 - gap) == 1) as u32
    });
    assert_eq!(pair_ramsey_homogeneous(&pentagon, 3), None);
    println!("pentagon: no homogeneous triple");

    let mut worst = vec![0usize; 3];
    for bits in 0..1u64 << 15 {
        let c = PairColoring::from_bits(6, bits);
        let t = pair_ramsey_homogeneous(&c, 3).expect("six vertices always have one");
        assert!(c.is_homogeneous(&t));
        for (w, x) in worst.iter_mut().zip(&t) {
            *w = (*w).max(*x);
        }
    }
    println!("all 2^15 colorings of K6 have a homogeneous triple; largest indices used {worst:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
