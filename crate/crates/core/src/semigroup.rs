//! Finite semigroups given by Cayley tables, plus the positive naturals as an
//! implicit infinite carrier.
//!
//! Elements of a [`FinSemigroup`] are the indices `0..order`. The table is
//! validated for associativity on construction with Light's test: it is enough
//! to check `(x+a)+y = x+(a+y)` for `a` ranging over a generating set, because
//! the set of `a` satisfying that identity for all `x, y` is closed under the
//! operation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FinSemigroup {
    order: usize,
    table: Vec<u32>,
    identity: Option<usize>,
}

impl FinSemigroup {
    /// Validates shape, range and associativity.
    pub fn from_table(order: usize, table: Vec<u32>) -> Result<FinSemigroup> {
        if order == 0 {
            return Err(Error::Precondition("semigroup order must be positive".into()));
        }
        if order > u32::MAX as usize || table.len() != order * order {
            return Err(Error::Parse(format!(
                "expected {} table entries, got {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x as usize >= order) {
            return Err(Error::IndexOutOfRange {
                index: bad as usize,
                order,
            });
        }
        let mut g = FinSemigroup {
            order,
            table,
            identity: None,
        };
        g.check_associative()?;
        g.identity = g.find_identity();
        Ok(g)
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<FinSemigroup> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("Cayley table is not square".into()));
        }
        FinSemigroup::from_table(n, rows.concat())
    }

    /// `Z_n` under addition mod n.
    pub fn cyclic(n: usize) -> FinSemigroup {
        FinSemigroup::from_fn(n, |a, b| (a + b) % n)
    }

    /// `x + y = x`.
    pub fn left_zero(n: usize) -> FinSemigroup {
        FinSemigroup::from_fn(n, |a, _| a)
    }

    /// `(Z_2)^rank` under bitwise xor; element `i` is the bit vector `i`.
    pub fn boolean_group(rank: u32) -> FinSemigroup {
        FinSemigroup::from_fn(1usize << rank, |a, b| a ^ b)
    }

    /// Direct product; the pair `(a, b)` is element `a * |right| + b`.
    pub fn direct_product(left: &FinSemigroup, right: &FinSemigroup) -> FinSemigroup {
        let m = right.order;
        FinSemigroup::from_fn(left.order * m, |x, y| {
            left.add(x / m, y / m) * m + right.add(x % m, y % m)
        })
    }

    /// Named families: `cyclic:N`, `boolean:R`, `left-zero:N`, and products
    /// written `A*B`.
    pub fn builtin(spec: &str) -> Result<FinSemigroup> {
        if let Some((a, b)) = spec.split_once('*') {
            return Ok(FinSemigroup::direct_product(&FinSemigroup::builtin(a)?, &FinSemigroup::builtin(b)?));
        }
        let (name, arg) = spec
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("semigroup `{spec}`: expected name:size")))?;
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("semigroup `{spec}`: bad size `{arg}`")))?;
        match name.trim() {
            "cyclic" if n >= 1 => Ok(FinSemigroup::cyclic(n)),
            "left-zero" if n >= 1 => Ok(FinSemigroup::left_zero(n)),
            "boolean" if n <= 16 => Ok(FinSemigroup::boolean_group(n as u32)),
            other => Err(Error::Parse(format!("unknown semigroup `{other}:{n}`"))),
        }
    }

    fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> FinSemigroup {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(op(a, b) as u32);
            }
        }
        FinSemigroup::from_table(n, table).expect("constructor yields an associative table")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                order: self.order,
            })
        }
    }

    fn find_identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|g| self.add(e, g) == g && self.add(g, e) == g))
    }

    /// Greedy generating set: scan elements in index order, keep each one not
    /// already generated by the earlier picks.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut generated = vec![false; self.order];
        for x in 0..self.order {
            if !generated[x] {
                gens.push(x);
                generated = self.closure(&gens);
            }
        }
        gens
    }

    /// Membership mask of the subsemigroup generated by `gens`. Every word over
    /// the generators is reached by right-multiplying by generators.
    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        let mut stack = Vec::new();
        for &a in gens {
            if !seen[a] {
                seen[a] = true;
                stack.push(a);
            }
        }
        while let Some(w) = stack.pop() {
            for &a in gens {
                let p = self.add(w, a);
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    fn check_associative(&self) -> Result<()> {
        for a in self.generating_set() {
            for x in 0..self.order {
                let xa = self.add(x, a);
                for y in 0..self.order {
                    if self.add(xa, y) != self.add(x, self.add(a, y)) {
                        return Err(Error::NotAssociative { a: x, b: a, c: y });
                    }
                }
            }
        }
        Ok(())
    }

    /// `|{g : e + g = f}|`.
    pub fn left_solution_count(&self, e: usize, f: usize) -> Result<usize> {
        self.check_index(e)?;
        self.check_index(f)?;
        Ok(self.row(e).iter().filter(|&&x| x as usize == f).count())
    }

    /// Smallest `L` such that every `e + g = f` has at most `L` solutions.
    pub fn cancellativity_bound(&self) -> usize {
        let mut counts = vec![0usize; self.order];
        let mut best = 0;
        for e in 0..self.order {
            counts.iter_mut().for_each(|c| *c = 0);
            for &x in self.row(e) {
                counts[x as usize] += 1;
            }
            best = best.max(*counts.iter().max().unwrap());
        }
        best
    }

    /// Finite carriers are always weakly left-cancellative.
    pub fn is_weakly_left_cancellative(&self) -> bool {
        true
    }

    /// `g, 2g, 3g, …` until the sequence repeats, in generation order.
    pub fn monogenic(&self, g: usize) -> Result<Vec<usize>> {
        self.check_index(g)?;
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        let mut x = g;
        while !seen[x] {
            seen[x] = true;
            out.push(x);
            x = self.add(x, g);
        }
        Ok(out)
    }

    /// `n·g` for `n ≥ 1`.
    pub fn multiple(&self, g: usize, n: usize) -> usize {
        assert!(n >= 1);
        (1..n).fold(g, |acc, _| self.add(acc, g))
    }
}

impl fmt::Debug for FinSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinSemigroup(order={}, identity={:?})", self.order, self.identity)
    }
}

/// First line `n`, then `n` rows of `n` space-separated indices.
impl fmt::Display for FinSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for a in 0..self.order {
            let row: Vec<String> = self.row(a).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for FinSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<FinSemigroup> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty Cayley table".into()))?
            .parse()
            .map_err(|_| Error::Parse("first line must be the order".into()))?;
        let mut rows = Vec::with_capacity(n);
        for (i, line) in lines.enumerate() {
            let row: Vec<u32> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad entry `{t}` in row {i}"))))
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse(format!("expected {n} rows, got {}", rows.len())));
        }
        FinSemigroup::from_rows(&rows)
    }
}

/// The positive naturals under addition, with a formal zero adjoined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Naturals;

impl Naturals {
    /// Solutions of `e + g = f` in the positive naturals; with the formal zero
    /// adjoined, `f = e` gains the solution `g = 0`.
    pub fn left_solution_count(e: u64, f: u64, identity_adjoined: bool) -> usize {
        match f.cmp(&e) {
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Equal if identity_adjoined => 1,
            _ => 0,
        }
    }

    pub fn is_weakly_left_cancellative(&self) -> bool {
        true
    }
}

/// A carrier the greedy basis construction can run on.
///
/// `left_divisors(e, targets)` returns every carrier element `g` with
/// `e + g ∈ targets`; `e = None` stands for the formal zero, for which the
/// solutions are the targets themselves.
pub trait Carrier {
    type Elem: Clone + Ord + fmt::Debug;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn left_divisors(&self, e: Option<&Self::Elem>, targets: &BTreeSet<Self::Elem>) -> BTreeSet<Self::Elem>;

    fn is_identity(&self, g: &Self::Elem) -> bool;
}

impl Carrier for FinSemigroup {
    type Elem = usize;

    fn add(&self, a: &usize, b: &usize) -> usize {
        FinSemigroup::add(self, *a, *b)
    }

    fn left_divisors(&self, e: Option<&usize>, targets: &BTreeSet<usize>) -> BTreeSet<usize> {
        match e {
            None => targets.clone(),
            Some(&e) => self
                .row(e)
                .iter()
                .enumerate()
                .filter(|(_, &x)| targets.contains(&(x as usize)))
                .map(|(g, _)| g)
                .collect(),
        }
    }

    fn is_identity(&self, g: &usize) -> bool {
        self.identity == Some(*g)
    }
}

impl Carrier for Naturals {
    type Elem = u64;

    fn add(&self, a: &u64, b: &u64) -> u64 {
        a + b
    }

    fn left_divisors(&self, e: Option<&u64>, targets: &BTreeSet<u64>) -> BTreeSet<u64> {
        match e {
            None => targets.clone(),
            Some(&e) => targets.iter().filter(|&&f| f > e).map(|&f| f - e).collect(),
        }
    }

    fn is_identity(&self, _: &u64) -> bool {
        false
    }
}
