//! Finite unions of rational intervals minus finitely many points.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub lo_closed: bool,
    pub hi: Rat,
    pub hi_closed: bool,
}

impl Interval {
    pub fn open(lo: Rat, hi: Rat) -> Interval {
        Interval { lo, lo_closed: false, hi, hi_closed: false }
    }

    pub fn closed(lo: Rat, hi: Rat) -> Interval {
        Interval { lo, lo_closed: true, hi, hi_closed: true }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn has_interior(&self) -> bool {
        self.lo < self.hi
    }

    pub fn contains(&self, x: &Rat) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }

    fn translate(&self, c: &Rat) -> Interval {
        Interval {
            lo: &self.lo + c,
            lo_closed: self.lo_closed,
            hi: &self.hi + c,
            hi_closed: self.hi_closed,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            return write!(f, "{{{}}}", self.lo);
        }
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{},{}{r}", self.lo, self.hi)
    }
}

/// A union of intervals with a finite set of points removed.
///
/// Normal form: intervals sorted and pairwise separated by a gap of positive
/// length, excluded points inside the union. Two intervals meeting at a point
/// neither contains, such as `(0,1) ∪ (1,2)`, become `(0,2) ∖ {1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
    excluded: BTreeSet<Rat>,
}

impl IntervalSet {
    pub fn new(intervals: Vec<Interval>, excluded: impl IntoIterator<Item = Rat>) -> IntervalSet {
        let mut ivs: Vec<Interval> = intervals.into_iter().filter(|i| !i.is_empty()).collect();
        ivs.sort_by(|a, b| a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
        let mut excluded: BTreeSet<Rat> = excluded.into_iter().collect();
        let mut merged: Vec<Interval> = Vec::new();
        for iv in ivs {
            if let Some(last) = merged.last_mut() {
                if iv.lo < last.hi || (iv.lo == last.hi && (iv.lo_closed || last.hi_closed)) {
                    if iv.hi > last.hi || (iv.hi == last.hi && iv.hi_closed) {
                        last.hi = iv.hi;
                        last.hi_closed = iv.hi_closed;
                    }
                    continue;
                }
                if iv.lo == last.hi {
                    // Touching at a point both leave out.
                    excluded.insert(iv.lo.clone());
                    last.hi = iv.hi;
                    last.hi_closed = iv.hi_closed;
                    continue;
                }
            }
            merged.push(iv);
        }
        let mut set = IntervalSet { intervals: merged, excluded: BTreeSet::new() };
        set.excluded = excluded.into_iter().filter(|p| set.in_union(p)).collect();
        set
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn excluded(&self) -> &BTreeSet<Rat> {
        &self.excluded
    }

    fn in_union(&self, x: &Rat) -> bool {
        self.intervals.iter().any(|i| i.contains(x))
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.in_union(x) && !self.excluded.contains(x)
    }

    pub fn has_interior(&self) -> bool {
        self.intervals.iter().any(Interval::has_interior)
    }

    /// `c + N`.
    pub fn translate(&self, c: &Rat) -> IntervalSet {
        IntervalSet {
            intervals: self.intervals.iter().map(|i| i.translate(c)).collect(),
            excluded: self.excluded.iter().map(|p| p + c).collect(),
        }
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.intervals.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(" ∪ "))?;
        if !self.excluded.is_empty() {
            let pts: Vec<String> = self.excluded.iter().map(|p| p.to_string()).collect();
            write!(f, " ∖ {{{}}}", pts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for IntervalSet {
    type Err = Error;

    /// Accepts `(a,b) ∪ [c,d) ∖ {p,q}`. ASCII `U` and `\` work as well.
    fn from_str(s: &str) -> Result<IntervalSet> {
        let bad = |why: &str| Error::Parse(format!("interval set `{s}`: {why}"));
        let (union_part, excl_part) = match s.find(['∖', '\\']) {
            Some(at) => {
                let sep_len = s[at..].chars().next().map_or(1, char::len_utf8);
                (&s[..at], Some(&s[at + sep_len..]))
            }
            None => (s, None),
        };
        let mut intervals = Vec::new();
        let union_part = union_part.trim();
        if union_part != "∅" {
            for piece in union_part.split(['∪', 'U']) {
                let piece = piece.trim();
                if let Some(inner) = piece.strip_prefix('{').and_then(|p| p.strip_suffix('}')) {
                    let x: Rat = inner.trim().parse()?;
                    intervals.push(Interval::closed(x.clone(), x));
                    continue;
                }
                let lo_closed = match piece.chars().next() {
                    Some('[') => true,
                    Some('(') => false,
                    _ => return Err(bad("interval must start with `(` or `[`")),
                };
                let hi_closed = match piece.chars().last() {
                    Some(']') => true,
                    Some(')') => false,
                    _ => return Err(bad("interval must end with `)` or `]`")),
                };
                let body = &piece[1..piece.len() - 1];
                let (a, b) = body.split_once(',').ok_or_else(|| bad("missing `,`"))?;
                intervals.push(Interval {
                    lo: a.trim().parse()?,
                    lo_closed,
                    hi: b.trim().parse()?,
                    hi_closed,
                });
            }
        }
        let mut excluded = Vec::new();
        if let Some(e) = excl_part {
            let e = e.trim();
            let inner = e
                .strip_prefix('{')
                .and_then(|x| x.strip_suffix('}'))
                .ok_or_else(|| bad("excluded points must be written `{p,q}`"))?;
            for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                excluded.push(tok.parse()?);
            }
        }
        Ok(IntervalSet::new(intervals, excluded))
    }
}
