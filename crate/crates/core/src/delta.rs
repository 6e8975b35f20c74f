//! Δ-system (sunflower) extraction.
//!
//! The extractor follows the inductive argument: keep the most frequent
//! cardinality class, and if some element lies in at least `p` members,
//! remove it, recurse and put it back into the root. Otherwise collect
//! pairwise disjoint members greedily.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element token from text input: integers compare numerically and sort
/// before all other tokens, which compare as strings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    Int(i64),
    Sym(String),
}

impl FromStr for Token {
    type Err = Error;
    fn from_str(s: &str) -> Result<Token> {
        if s.is_empty() {
            return Err(Error::Parse("empty token".into()));
        }
        Ok(s.parse().map(Token::Int).unwrap_or_else(|_| Token::Sym(s.to_string())))
    }
}

impl Display for Token {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Token::Int(i) => write!(f, "{i}"),
            Token::Sym(s) => f.write_str(s),
        }
    }
}

/// A finite list of pairwise distinct finite sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily<T: Ord> {
    members: Vec<BTreeSet<T>>,
}

impl<T: Ord + Clone> SetFamily<T> {
    pub fn new(members: Vec<BTreeSet<T>>) -> Result<SetFamily<T>> {
        let distinct: BTreeSet<&BTreeSet<T>> = members.iter().collect();
        if distinct.len() != members.len() {
            return Err(Error::Precondition("family members must be pairwise distinct".into()));
        }
        Ok(SetFamily { members })
    }

    /// Builds a family, silently dropping repeated members.
    pub fn dedup(members: impl IntoIterator<Item = BTreeSet<T>>) -> SetFamily<T> {
        let mut seen = BTreeSet::new();
        let members = members.into_iter().filter(|m| seen.insert(m.clone())).collect();
        SetFamily { members }
    }

    pub fn members(&self) -> &[BTreeSet<T>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl<T: Ord + Clone + FromStr> SetFamily<T> {
    /// One member per non-blank line, elements separated by whitespace.
    /// A line holding only `{}` or `∅` is the empty set.
    pub fn parse(text: &str) -> Result<SetFamily<T>> {
        let mut members = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut set = BTreeSet::new();
            if line != "{}" && line != "∅" {
                for tok in line.split_whitespace() {
                    let x = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("line {}: bad element `{tok}`", lineno + 1)))?;
                    set.insert(x);
                }
            }
            members.push(set);
        }
        SetFamily::new(members)
    }
}

impl<T: Ord + Display> SetFamily<T> {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for m in &self.members {
            out.push_str(&set_text(m));
            out.push('\n');
        }
        out
    }
}

/// `1 2 3`, or `∅` for the empty set.
pub fn set_text<T: Display>(set: &BTreeSet<T>) -> String {
    if set.is_empty() {
        return "∅".into();
    }
    set.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// A root and the members sharing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSystem<T: Ord> {
    pub root: BTreeSet<T>,
    pub members: Vec<BTreeSet<T>>,
}

/// Runs the extraction procedure. Returns `None` if it produces fewer than
/// `p` members.
pub fn extract_delta_system<T: Ord + Clone>(family: &SetFamily<T>, p: usize) -> Option<DeltaSystem<T>> {
    assert!(p >= 1, "target size must be positive");
    let class = largest_cardinality_class(&family.members);
    if p == 1 {
        return class.first().map(|m| DeltaSystem {
            root: BTreeSet::new(),
            members: vec![(*m).clone()],
        });
    }
    let owned: Vec<BTreeSet<T>> = class.into_iter().cloned().collect();
    let found = extract_uniform(&owned, p)?;
    (found.members.len() >= p).then_some(found)
}

fn largest_cardinality_class<T: Ord>(members: &[BTreeSet<T>]) -> Vec<&BTreeSet<T>> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for m in members {
        *counts.entry(m.len()).or_default() += 1;
    }
    // Ascending iteration plus strict comparison keeps the smaller size on ties.
    let mut best: Option<(usize, usize)> = None;
    for (&size, &count) in &counts {
        if best.is_none_or(|(_, c)| count > c) {
            best = Some((size, count));
        }
    }
    match best {
        Some((size, _)) => members.iter().filter(|m| m.len() == size).collect(),
        None => Vec::new(),
    }
}

fn extract_uniform<T: Ord + Clone>(members: &[BTreeSet<T>], p: usize) -> Option<DeltaSystem<T>> {
    let mut freq: BTreeMap<&T, usize> = BTreeMap::new();
    for m in members {
        for x in m {
            *freq.entry(x).or_default() += 1;
        }
    }
    let mut best: Option<(&T, usize)> = None;
    for (&x, &f) in &freq {
        if best.is_none_or(|(_, bf)| f > bf) {
            best = Some((x, f));
        }
    }
    if let Some((r, f)) = best {
        if f >= p {
            let r = r.clone();
            let sub: Vec<BTreeSet<T>> = members
                .iter()
                .filter(|m| m.contains(&r))
                .map(|m| {
                    let mut m = m.clone();
                    m.remove(&r);
                    m
                })
                .collect();
            if let Some(mut ds) = extract_uniform(&sub, p) {
                if ds.members.len() >= p {
                    ds.root.insert(r.clone());
                    for m in &mut ds.members {
                        m.insert(r.clone());
                    }
                    return Some(ds);
                }
            }
        }
    }
    let disjoint = greedy_disjoint(members);
    (disjoint.len() >= p).then(|| DeltaSystem {
        root: BTreeSet::new(),
        members: disjoint,
    })
}

/// Pairwise disjoint members, taken in input order.
pub fn greedy_disjoint<T: Ord + Clone>(members: &[BTreeSet<T>]) -> Vec<BTreeSet<T>> {
    let mut used: BTreeSet<&T> = BTreeSet::new();
    let mut out = Vec::new();
    for m in members {
        if m.iter().all(|x| !used.contains(x)) {
            used.extend(m.iter());
            out.push(m.clone());
        }
    }
    out
}

/// True iff every pairwise intersection equals `root`. With a single member
/// the root only has to be contained in it.
pub fn verify_delta_system<T: Ord + Clone>(members: &[BTreeSet<T>], root: &BTreeSet<T>) -> bool {
    match members {
        [] => true,
        [m] => root.is_subset(m),
        _ => members.iter().enumerate().all(|(i, a)| {
            members[i + 1..]
                .iter()
                .all(|b| a.intersection(b).cloned().collect::<BTreeSet<T>>() == *root)
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(sets: &[&[i64]]) -> SetFamily<i64> {
        SetFamily::new(sets.iter().map(|s| s.iter().copied().collect()).collect()).unwrap()
    }

    fn set(xs: &[i64]) -> BTreeSet<i64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn common_element_root() {
        let ds = extract_delta_system(&fam(&[&[1, 2], &[1, 3], &[1, 4]]), 3).unwrap();
        assert_eq!(ds.root, set(&[1]));
        assert_eq!(ds.members.len(), 3);
    }

    #[test]
    fn singletons() {
        let ds = extract_delta_system(&fam(&[&[1], &[2], &[3]]), 3).unwrap();
        assert!(ds.root.is_empty());
        assert_eq!(ds.members, [set(&[1]), set(&[2]), set(&[3])]);
    }

    #[test]
    fn disjoint_branch() {
        let f = fam(&[&[1, 2], &[3, 4], &[5, 6], &[1, 3], &[2, 4]]);
        let ds = extract_delta_system(&f, 3).unwrap();
        assert!(ds.root.is_empty());
        assert_eq!(ds.members, [set(&[1, 2]), set(&[3, 4]), set(&[5, 6])]);
        assert!(extract_delta_system(&f, 4).is_none());
    }

    #[test]
    fn cardinality_class_ties_go_small() {
        let f = fam(&[&[1, 2], &[7], &[3, 4], &[8]]);
        let ds = extract_delta_system(&f, 2).unwrap();
        assert_eq!(ds.members, [set(&[7]), set(&[8])]);
    }

    #[test]
    fn verifier() {
        assert!(verify_delta_system(&[set(&[1, 2]), set(&[1, 3])], &set(&[1])));
        assert!(!verify_delta_system(&[set(&[1, 2]), set(&[2, 3]), set(&[1, 3])], &set(&[])));
        assert!(verify_delta_system(&[set(&[1])], &set(&[1])));
        assert!(verify_delta_system(&[set(&[1])], &set(&[])));
        assert!(!verify_delta_system(&[set(&[1])], &set(&[2])));
    }

    #[test]
    fn token_order() {
        let f: SetFamily<Token> = SetFamily::parse("10 2 b a\n").unwrap();
        assert_eq!(set_text(&f.members()[0]), "2 10 a b");
    }

    #[test]
    fn parse_lines() {
        let f: SetFamily<i64> = SetFamily::parse("1 2\n\n# comment\n3 4\n∅\n").unwrap();
        assert_eq!(f.members(), [set(&[1, 2]), set(&[3, 4]), set(&[])]);
        assert!(SetFamily::<i64>::parse("1 2\n2 1\n").is_err());
        assert!(SetFamily::<i64>::parse("1 x\n").is_err());
    }
}
