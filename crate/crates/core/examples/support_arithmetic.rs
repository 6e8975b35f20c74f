// Sums of sunflower-supported vectors flip the support-parity color.

use hindman::constructions::support::sunflower_member;
use hindman::constructions::{support_arithmetic, support_arithmetic_check};

pub fn run_example() -> hindman::Result<()> {
    for (n, root) in [(5, 2), (8, 1), (64, 63)] {
        let s = support_arithmetic(n, root)?;
        println!(
            "N={n:>2} |R|={root:>2}: sum {} members -> support {}, color {} -> {}",
            s.members, s.support, s.member_color, s.sum_color
        );
    }
    println!("first member for N=5, |R|=2: {}", sunflower_member(5, 2, 0));
    assert!(support_arithmetic(4, 0).is_err());

    let mut passed = 0;
    for n in 2..=64 {
        for root in 1..n {
            support_arithmetic_check(n, root)?;
            passed += 1;
        }
    }
    println!("{passed} parameter pairs checked");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
