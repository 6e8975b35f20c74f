//! Sparse, finitely supported vectors over ℚ with a basis indexed by naturals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Rat;

/// Basis index. Basis vector `b_i` is `QVec::basis(i)`.
pub type BasisIndex = usize;

/// A sparse vector. No entry ever maps to zero, so two vectors are equal
/// exactly when their maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QVec {
    entries: BTreeMap<BasisIndex, Rat>,
}

impl QVec {
    pub fn zero() -> QVec {
        QVec::default()
    }

    pub fn basis(i: BasisIndex) -> QVec {
        QVec::from_entries([(i, Rat::one())])
    }

    /// Builds a vector from `(index, coefficient)` pairs. Repeated indices are
    /// summed; zero results are dropped.
    pub fn from_entries<I>(entries: I) -> QVec
    where
        I: IntoIterator<Item = (BasisIndex, Rat)>,
    {
        let mut v = QVec::zero();
        for (i, q) in entries {
            v.add_term(i, &q);
        }
        v
    }

    /// Dense constructor: coefficient `k` goes on `b_k`.
    pub fn from_coefficients<I>(coefs: I) -> QVec
    where
        I: IntoIterator<Item = Rat>,
    {
        QVec::from_entries(coefs.into_iter().enumerate())
    }

    /// Dense constructor over integers.
    pub fn from_ints(coefs: &[i64]) -> QVec {
        QVec::from_coefficients(coefs.iter().map(|&c| Rat::from_integer(c)))
    }

    fn add_term(&mut self, i: BasisIndex, q: &Rat) {
        if q.is_zero() {
            return;
        }
        let slot = self.entries.entry(i).or_insert_with(Rat::zero);
        *slot += q;
        if slot.is_zero() {
            self.entries.remove(&i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coefficient(&self, i: BasisIndex) -> Rat {
        self.entries.get(&i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (BasisIndex, &Rat)> {
        self.entries.iter().map(|(&i, q)| (i, q))
    }

    pub fn support(&self) -> BTreeSet<BasisIndex> {
        self.entries.keys().copied().collect()
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    /// Distinct nonzero coefficient values.
    pub fn coefficients(&self) -> BTreeSet<Rat> {
        self.entries.values().cloned().collect()
    }

    /// `Σ x_b y_b` over the common support.
    pub fn inner_product(&self, other: &QVec) -> Rat {
        let (small, large) = if self.entries.len() <= other.entries.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .entries
            .iter()
            .filter_map(|(i, x)| large.entries.get(i).map(|y| x * y))
            .sum()
    }

    pub fn norm_squared(&self) -> Rat {
        self.entries.values().map(|q| q * q).sum()
    }

    pub fn scale(&self, s: &Rat) -> QVec {
        if s.is_zero() {
            return QVec::zero();
        }
        QVec {
            entries: self.entries.iter().map(|(&i, q)| (i, q * s)).collect(),
        }
    }

    /// Nonzero coefficients listed by increasing basis index.
    pub fn pattern(&self) -> Pattern {
        Pattern(self.entries.values().cloned().collect())
    }
}

impl Add<&QVec> for &QVec {
    type Output = QVec;
    fn add(self, rhs: &QVec) -> QVec {
        let mut out = self.clone();
        for (&i, q) in &rhs.entries {
            out.add_term(i, q);
        }
        out
    }
}

impl Add for QVec {
    type Output = QVec;
    fn add(self, rhs: QVec) -> QVec {
        &self + &rhs
    }
}

impl Neg for &QVec {
    type Output = QVec;
    fn neg(self) -> QVec {
        QVec {
            entries: self.entries.iter().map(|(&i, q)| (i, -q)).collect(),
        }
    }
}

impl Sub<&QVec> for &QVec {
    type Output = QVec;
    fn sub(self, rhs: &QVec) -> QVec {
        self + &(-rhs)
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (i, q)) in self.entries.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}:{q}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QVec {
    type Err = Error;

    /// Parses `{index:num/den, ...}`. Indices must be strictly ascending and
    /// coefficients nonzero, matching what `Display` produces.
    fn from_str(s: &str) -> Result<QVec> {
        let body = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("vector must be braced: `{s}`")))?;
        let mut entries = BTreeMap::new();
        let mut last: Option<BasisIndex> = None;
        for item in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (i, q) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected index:value, got `{item}`")))?;
            let i: BasisIndex = i
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad basis index `{i}`")))?;
            if last.is_some_and(|l| l >= i) {
                return Err(Error::Parse(format!("indices not ascending at `{item}`")));
            }
            let q: Rat = q.parse()?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero coefficient at index {i}")));
            }
            entries.insert(i, q);
            last = Some(i);
        }
        Ok(QVec { entries })
    }
}

impl serde::Serialize for QVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The nonzero coefficients of a vector in increasing basis-index order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Pattern(pub Vec<Rat>);

impl Pattern {
    pub fn from_ints(coefs: &[i64]) -> Pattern {
        Pattern(coefs.iter().map(|&c| Rat::from_integer(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.0
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (n, q) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
