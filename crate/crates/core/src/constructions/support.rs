//! Support-size arithmetic behind the support-parity coloring.
//!
//! Vectors whose supports form a Δ-system with root `R`, constant root
//! coefficients and `N` elements each have sums of `L` distinct members with
//! support `|R| + L(N − |R|)`. With `2^m ≤ N < 2^(m+1)` and
//! `2^n ≤ N − |R| < 2^(n+1)`, taking `L = 2^(m−n) + 1` lands the support in
//! `[2^(m+1), 2^(m+2))`, flipping the parity of `⌊log₂⌋`.

use std::collections::BTreeMap;

use crate::certificate::{Certificate, Payload, Verdict};
use crate::coloring::support_parity_color;
use crate::error::{Error, Result};
use crate::exact::{QVec, Rat};

fn floor_log2(x: usize) -> u32 {
    usize::BITS - 1 - x.leading_zeros()
}

/// Member `i` of the explicit family: coefficient 1 on the root `0..root`,
/// coefficients `1, 2, …` on its own petal block.
pub fn sunflower_member(n: usize, root: usize, i: usize) -> QVec {
    let petal = n - root;
    let base = root + i * petal;
    let entries = (0..root)
        .map(|j| (j, Rat::one()))
        .chain((0..petal).map(|j| (base + j, Rat::from_integer(j as i64 + 1))));
    QVec::from_entries(entries)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportArithmetic {
    pub m: u32,
    pub n: u32,
    pub members: usize,
    pub support: usize,
    pub member_color: i64,
    pub sum_color: i64,
}

/// Builds the family for support size `n` and root size `root`, sums the
/// required number of members and checks the support formula and the color
/// flip.
pub fn support_arithmetic(n: usize, root: usize) -> Result<SupportArithmetic> {
    if root == 0 || root >= n {
        return Err(Error::Precondition(format!("need 1 ≤ root size < support size, got {root} and {n}")));
    }
    let m = floor_log2(n);
    let nn = floor_log2(n - root);
    let members = (1usize << (m - nn)) + 1;
    let mut sum = QVec::zero();
    for i in 0..members {
        sum = sum + sunflower_member(n, root, i);
    }
    let support = sum.support_size();
    let expected = root + members * (n - root);
    if support != expected {
        return Err(Error::Verification(format!("support {support}, formula gives {expected}")));
    }
    let color = |v: &QVec| -> Result<i64> {
        match support_parity_color(v)? {
            crate::ColorValue::Int(c) => Ok(c),
            other => Err(Error::Verification(format!("unexpected color {other}"))),
        }
    };
    let member_color = color(&sunflower_member(n, root, 0))?;
    let sum_color = color(&sum)?;
    if member_color == sum_color {
        return Err(Error::Verification(format!(
            "N = {n}, |R| = {root}: sum of {members} members keeps color {sum_color}"
        )));
    }
    Ok(SupportArithmetic { m, n: nn, members, support, member_color, sum_color })
}

/// Certificate form of [`support_arithmetic`]; the error cases are returned
/// as errors.
pub fn support_arithmetic_check(n: usize, root: usize) -> Result<Certificate> {
    let s = support_arithmetic(n, root)?;
    let values = BTreeMap::from([
        ("m".to_string(), s.m.to_string()),
        ("n".to_string(), s.n.to_string()),
        ("members".to_string(), s.members.to_string()),
        ("support".to_string(), s.support.to_string()),
        ("member_color".to_string(), s.member_color.to_string()),
        ("sum_color".to_string(), s.sum_color.to_string()),
    ]);
    Ok(Certificate::new("support-arithmetic", Verdict::Witness, Payload::Record { values, elements: vec![] })
        .with_param("support_size", n)
        .with_param("root_size", root))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let s = support_arithmetic(3, 1).unwrap();
        assert_eq!((s.m, s.n, s.members, s.support), (1, 1, 2, 5));
        assert_eq!((s.member_color, s.sum_color), (1, 0));
        let s = support_arithmetic(4, 2).unwrap();
        assert_eq!((s.m, s.n, s.members, s.support), (2, 1, 3, 8));
        assert_eq!((s.member_color, s.sum_color), (0, 1));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(support_arithmetic(1, 0), Err(Error::Precondition(_))));
        assert!(matches!(support_arithmetic(4, 4), Err(Error::Precondition(_))));
    }

    #[test]
    fn family_is_a_sunflower() {
        let root: std::collections::BTreeSet<usize> = (0..2).collect();
        let a = sunflower_member(5, 2, 0).support();
        let b = sunflower_member(5, 2, 3).support();
        assert_eq!(a.intersection(&b).copied().collect::<std::collections::BTreeSet<_>>(), root);
        assert_eq!(a.len(), 5);
    }
}
