// Driving the command-line interface in-process.

use hindman::cli::main_with_args;

pub fn run_example() -> hindman::Result<()> {
    let runs: [&[&str]; 4] = [
        &["hindman", "color-eval", "--coloring", "dyadic", "17/5", "-3/5", "14/5"],
        &["hindman", "audit", "--claim", "dyadic-all-pairs", "--max-den", "5", "--max-val", "4"],
        &["hindman", "--workers", "2", "fs-number", "--k", "2", "--t", "2"],
        &["hindman", "--max-nodes", "5", "fu-number", "--k", "2", "--t", "3"],
    ];
    for args in runs {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with_args(args.iter().copied(), &mut out, &mut err);
        println!("$ {}  -> exit {code}", args[1..].join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        print!("{}", String::from_utf8_lossy(&err));
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
