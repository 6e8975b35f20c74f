// Command-line behaviour: exit codes, certificate files, re-checking.

use std::path::Path;

use hindman::cli::main_with_args;
use hindman::verify::reverify;
use hindman::{Certificate, Verdict};

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["hindman"];
    full.extend_from_slice(args);
    let code = main_with_args(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_to(dir: &Path, name: &str, args: &[&str]) -> (i32, Certificate) {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let mut full = vec!["--out", &p];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}{err}"));
    (code, Certificate::from_json(&text).unwrap())
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["audit", "--claim", "dyadic-same-sign", "--max-den", "3", "--max-val", "3"]).0, 0);
    assert_eq!(run(&["audit", "--claim", "dyadic-all-pairs", "--max-den", "5", "--max-val", "4"]).0, 1);
    assert_eq!(run(&["--max-nodes", "3", "fs-number", "--k", "2", "--t", "3"]).0, 2);
    assert_eq!(run(&["fs-number", "--k", "2"]).0, 64);
    assert_eq!(run(&["audit", "--claim", "no-such-claim"]).0, 64);
    assert_eq!(run(&["--workers", "0", "fu-number", "--k", "2", "--t", "1"]).0, 64);
    assert_eq!(run(&["color-eval", "--coloring", "dyadic", "{0:1}"]).0, 64);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("audit"));
}

#[test]
fn summary_lines() {
    let (code, out, _) = run(&["color-eval", "--coloring", "signed_dyadic", "17/5", "-3/5"]);
    assert_eq!(code, 0);
    assert!(out.contains("17/5       (1,+1)"), "{out}");
    assert!(out.contains("-3/5       (-1,-1)"), "{out}");
    let (_, out, _) = run(&["fs-number", "--k", "2", "--t", "2", "--repetition", "distinct"]);
    assert!(out.contains("value      9"), "{out}");
}

#[test]
fn certificates_written_and_rechecked() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let family = d.join("family.txt");
    std::fs::write(&family, "1 2\n1 3\n1 4\n5 6\n").unwrap();
    let fam = family.to_str().unwrap();
    let runs: Vec<(&str, Vec<&str>, i32)> = vec![
        ("audit.json", vec!["audit", "--claim", "square-norm-pairs", "--dim", "2", "--coef-range", "1"], 0),
        ("cex.json", vec!["audit", "--claim", "dyadic-all-pairs", "--max-den", "5", "--max-val", "4"], 1),
        ("fs.json", vec!["fs-number", "--k", "2", "--t", "2"], 0),
        ("fu.json", vec!["fu-number", "--k", "2", "--t", "2"], 0),
        ("wit.json", vec!["fs-witness", "--coloring", "dyadic", "--k", "2", "--max-den", "2", "--max-val", "2"], 0),
        ("delta.json", vec!["delta", "--input", fam, "--p", "3"], 0),
        ("greedy.json", vec!["greedy-basis", "--count", "6"], 0),
        ("greedy-b.json", vec!["greedy-basis", "--carrier", "boolean:4", "--count", "4"], 0),
        ("pipe.json", vec!["pipeline", "--group", "cyclic:2048", "--coloring", "parity", "--k", "2", "--t", "2"], 0),
        ("pull.json", vec!["pullback", "--kappa", "4", "--coloring", "self_inner"], 0),
        ("owings.json", vec!["owings-construct", "--theta", "2", "--i1", "0", "--i2", "1", "--count", "5"], 0),
        ("baire.json", vec!["baire-construct", "--set", "(0,1) \\ {1/2}", "--n", "10"], 0),
        ("support.json", vec!["audit", "--claim", "support-arithmetic", "--max-support", "16"], 0),
        ("eval.json", vec!["color-eval", "--coloring", "self_inner", "{0:1, 1:-1}"], 0),
    ];
    for (name, args, want) in runs {
        let (code, cert) = run_to(d, name, &args);
        assert_eq!(code, want, "{name}: {cert:?}");
        reverify(&cert).unwrap_or_else(|e| panic!("{name}: {e}"));
        let path = d.join(name);
        let (code, out, err) = run(&["check", path.to_str().unwrap()]);
        assert_eq!(code, 0, "check {name}: {out}{err}");
    }
}

#[test]
fn check_rejects_a_tampered_file() {
    let dir = tempfile::tempdir().unwrap();
    let (_, mut cert) = run_to(dir.path(), "fs.json", &["fs-number", "--k", "2", "--t", "2"]);
    if let hindman::Payload::Extremal { coloring, .. } = &mut cert.payload {
        coloring[0] = 1;
        coloring[1] = 1;
    }
    let bad = dir.path().join("bad.json");
    cert.write_atomic(&bad).unwrap();
    assert_eq!(run(&["check", bad.to_str().unwrap()]).0, 1);
}

#[test]
fn worker_count_does_not_change_certificates() {
    let cases: [&[&str]; 5] = [
        &["audit", "--claim", "dyadic-all-pairs", "--max-den", "5", "--max-val", "4"],
        &["audit", "--claim", "inner-product-triples", "--dim", "2", "--coef-range", "1"],
        &["fs-number", "--k", "2", "--t", "2"],
        &["fu-number", "--k", "2", "--t", "2"],
        &["fs-witness", "--coloring", "dyadic", "--k", "3", "--max-den", "3", "--max-val", "3"],
    ];
    let dir = tempfile::tempdir().unwrap();
    for args in cases {
        let mut seen = Vec::new();
        for w in ["1", "2", "8"] {
            let mut full = vec!["--workers", w];
            full.extend_from_slice(args);
            let (_, cert) = run_to(dir.path(), &format!("w{w}.json"), &full);
            seen.push(cert.canonical_json());
        }
        assert!(seen.windows(2).all(|p| p[0] == p[1]), "{args:?}");
    }
}

#[test]
fn delta_from_symbols_and_inconclusive_extraction() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("tri.txt");
    std::fs::write(&f, "a b\nb c\nc a\n").unwrap();
    let (code, cert) = run_to(dir.path(), "tri.json", &["delta", "--input", f.to_str().unwrap(), "--p", "3"]);
    assert_eq!(code, 2);
    assert_eq!(cert.verdict, Verdict::Inconclusive);
}
