// Finite sums, finite unions and pairwise sumsets.

use hindman::sumsets::{fs_enumerate, fs_values, fu_enumerate, pairwise_sumset, BlockSeq};
use hindman::Rat;

pub fn run_example() -> hindman::Result<()> {
    let xs = [1u64, 2, 4];
    let sums = fs_values(&xs, |a, b| a + b);
    println!("FS(1,2,4) = {sums:?}");
    assert_eq!(sums.len(), 7);

    for f in fs_enumerate(&[Rat::new(1, 2), Rat::new(1, 3)], |a, b| a + b) {
        println!("  {:?} -> {}", f.positions, f.sum);
    }

    let blocks = BlockSeq::from_masks(&[0b11, 0b100, 0b11000])?;
    let unions = fu_enumerate(&blocks);
    println!("FU has {} members", unions.len());
    assert_eq!(unions.len(), 7);
    // Overlapping or unordered blocks are not a block sequence.
    assert!(BlockSeq::from_masks(&[0b110, 0b011]).is_err());

    let m = [1i64, 3, 7];
    let ss = pairwise_sumset(&m, |a, b| a + b);
    println!("M+M = {ss:?}");
    assert_eq!(ss.len(), 6);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
