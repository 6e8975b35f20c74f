// The search engine against brute-force enumeration.

mod common;

use common::*;
use hindman::search::numbers::{fs_coloring_avoids, fs_number, fu_coloring_avoids, fu_number, Repetition};
use hindman::{Budget, Payload, Verdict};

fn extremal(cert: &hindman::Certificate) -> (u64, Vec<u32>) {
    assert_eq!(cert.verdict, Verdict::Exhausted, "{cert:?}");
    match &cert.payload {
        Payload::Extremal { value, coloring } => (*value, coloring.clone()),
        p => panic!("unexpected payload {p:?}"),
    }
}

fn oracle_avoids(coloring: &[u32], k: usize, rep: bool) -> bool {
    fs_configs(coloring.len(), k, rep)
        .iter()
        .all(|cfg| cfg.iter().any(|&v| coloring[v - 1] != coloring[cfg[0] - 1]))
}

#[test]
fn fs_numbers_match_enumeration() {
    let cases = [
        (1, 1, true),
        (1, 3, true),
        (2, 1, true),
        (2, 2, true),
        (2, 3, true),
        (3, 1, true),
        (2, 1, false),
        (2, 2, false),
        (3, 1, false),
    ];
    for (k, t, rep) in cases {
        let mode = if rep { Repetition::Allowed } else { Repetition::Distinct };
        let (value, coloring) = extremal(&fs_number(k, t, mode, 1, Budget::unlimited()).unwrap());
        let want = naive_fs_number(k, t, rep);
        assert_eq!(value as usize, want, "k={k} t={t} {mode:?}");
        assert_eq!(coloring.len() + 1, want);
        assert!(coloring.iter().all(|&c| (c as usize) < t));
        assert!(oracle_avoids(&coloring, k, rep));
        assert!(fs_coloring_avoids(&coloring, k, mode));
    }
}

#[test]
fn schur_values() {
    assert_eq!(naive_fs_number(2, 1, true), 2);
    assert_eq!(naive_fs_number(2, 2, true), 5);
    assert_eq!(naive_fs_number(2, 2, false), 9);
}

#[test]
fn fu_numbers_match_enumeration() {
    for (k, t) in [(1, 1), (1, 2), (2, 1), (3, 1), (2, 2)] {
        let (value, coloring) = extremal(&fu_number(k, t, 1, Budget::unlimited()).unwrap());
        let want = naive_fu_number(k, t);
        assert_eq!(value as u32, want, "k={k} t={t}");
        if want > 1 {
            let ground = want - 1;
            assert!(fu_coloring_avoids(&coloring, ground, k));
            let cfgs = fu_configs(ground, k);
            assert!(cfgs
                .iter()
                .all(|cfg| cfg.iter().any(|&m| coloring[m as usize - 1] != coloring[cfg[0] as usize - 1])));
        }
    }
}

#[test]
fn direct_checkers_reject_monochromatic_colorings() {
    assert!(!fs_coloring_avoids(&[0, 0, 0, 0], 2, Repetition::Allowed));
    assert!(!fu_coloring_avoids(&[0; 7], 3, 2));
    assert!(fu_coloring_avoids(&[0], 1, 2));
}
