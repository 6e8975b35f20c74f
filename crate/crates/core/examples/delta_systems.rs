// Δ-system (sunflower) extraction from a family of sets.

use hindman::delta::{set_text, Token};
use hindman::{extract_delta_system, verify_delta_system, SetFamily};

pub fn run_example() -> hindman::Result<()> {
    let text = "\
# one set per line
a b
a c
a d
b c
x
";
    let family: SetFamily<Token> = SetFamily::parse(text)?;
    let ds = extract_delta_system(&family, 3).expect("a is in three members");
    println!("root {{{}}}", set_text(&ds.root));
    for m in &ds.members {
        println!("  {}", set_text(m));
    }
    assert!(verify_delta_system(&ds.members, &ds.root));

    let ints: SetFamily<i64> = SetFamily::parse("1 2\n2 3\n3 1\n")?;
    assert!(extract_delta_system(&ints, 3).is_none());
    println!("triangle family has no 3-sunflower from this procedure");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
