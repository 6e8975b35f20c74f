//! Sequences whose pairwise sums all carry one of two coefficient patterns.
//!
//! For `θ` colors let `π_i = (2,…,2,1,…,1)` with `i` twos and `2(θ−i)` ones.
//! Given `i₁ < i₂ ≤ θ`, each `x_n` has coefficient 1 on `i₁` shared head
//! positions, 1 on one position in each of `i₂ − i₁` blocks (position `n`
//! inside the block) and `1/2` on `2(θ − i₂)` shared tail positions. Then
//! `x_a + x_b` has pattern `π_{i₁}` for `a ≠ b` and `2x_a` has pattern
//! `π_{i₂}`, so any coloring that only looks at patterns and gives both the
//! same color makes `X + X` monochromatic.

use std::collections::BTreeMap;

use crate::certificate::{Certificate, Payload, Verdict};
use crate::coloring::{ColorValue, Coloring};
use crate::error::{Error, Result};
use crate::exact::{Pattern, QVec, Rat};
use crate::search::Meter;

/// `π_i` for `θ` colors.
pub fn pi(theta: usize, i: usize) -> Pattern {
    assert!(i <= theta, "pattern index above θ");
    let mut v = vec![Rat::from_integer(2); i];
    v.extend(std::iter::repeat_n(Rat::one(), 2 * (theta - i)));
    Pattern(v)
}

/// `π_i` padded on the left with zeros to length `2θ`.
pub fn padded_pi(theta: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); i];
    v.extend(pi(theta, i).0);
    v
}

/// Which two patterns to use, the block width, and where the formal basis
/// positions land.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternFixture {
    pub theta: usize,
    pub i1: usize,
    pub i2: usize,
    /// The common color of the two patterns, when known.
    pub color: Option<ColorValue>,
    /// Positions per block; must be at least the number of vectors built.
    pub width: usize,
    /// Increasing basis indices that formal position `j` maps to. `None`
    /// means position `j` is basis index `j`.
    pub basis: Option<Vec<usize>>,
}

impl PatternFixture {
    pub fn new(theta: usize, i1: usize, i2: usize, width: usize) -> Result<PatternFixture> {
        let f = PatternFixture { theta, i1, i2, color: None, width, basis: None };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        if self.theta == 0 || self.i1 >= self.i2 || self.i2 > self.theta {
            return Err(Error::Precondition(format!(
                "need 0 ≤ i₁ < i₂ ≤ θ with θ ≥ 1, got θ = {}, i₁ = {}, i₂ = {}",
                self.theta, self.i1, self.i2
            )));
        }
        if self.width == 0 {
            return Err(Error::Precondition("block width must be positive".into()));
        }
        if let Some(b) = &self.basis {
            if b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Precondition("basis indices must increase".into()));
            }
            if b.len() < self.positions() {
                return Err(Error::Precondition(format!(
                    "basis has {} indices, layout needs {}",
                    b.len(),
                    self.positions()
                )));
            }
        }
        Ok(())
    }

    /// Number of zero-coefficient positions in front, `max(2θ − |π_{i₁}|, 2θ − |π_{i₂}|)`.
    pub fn reserved(&self) -> usize {
        self.i2
    }

    /// Formal positions used by the layout.
    pub fn positions(&self) -> usize {
        self.reserved() + self.i1 + (self.i2 - self.i1) * self.width + 2 * (self.theta - self.i2)
    }

    fn index(&self, formal: usize) -> usize {
        match &self.basis {
            Some(b) => b[formal],
            None => formal,
        }
    }

    /// `x_n`.
    pub fn vector(&self, n: usize) -> QVec {
        let head = self.reserved();
        let blocks = head + self.i1;
        let tail = blocks + (self.i2 - self.i1) * self.width;
        let mut entries = Vec::new();
        for r in 0..self.i1 {
            entries.push((self.index(head + r), Rat::one()));
        }
        for r in 0..self.i2 - self.i1 {
            entries.push((self.index(blocks + r * self.width + n), Rat::one()));
        }
        for r in 0..2 * (self.theta - self.i2) {
            entries.push((self.index(tail + r), Rat::new(1, 2)));
        }
        QVec::from_entries(entries)
    }

    pub fn to_values(&self) -> BTreeMap<String, String> {
        let mut v = BTreeMap::from([
            ("theta".to_string(), self.theta.to_string()),
            ("i1".to_string(), self.i1.to_string()),
            ("i2".to_string(), self.i2.to_string()),
            ("width".to_string(), self.width.to_string()),
            ("pi_i1".to_string(), pi(self.theta, self.i1).to_string()),
            ("pi_i2".to_string(), pi(self.theta, self.i2).to_string()),
        ]);
        if let Some(c) = &self.color {
            v.insert("color".into(), c.to_string());
        }
        if let Some(b) = &self.basis {
            v.insert("basis".into(), b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        }
        v
    }
}

/// Builds `x₀..x_{count-1}` and checks every pairwise sum's pattern.
pub fn owings_pattern_construct(fixture: &PatternFixture, count: usize) -> Result<Vec<QVec>> {
    fixture.validate()?;
    if count < 2 {
        return Err(Error::Precondition("need at least two vectors".into()));
    }
    if fixture.width < count {
        return Err(Error::Precondition(format!(
            "block width {} is below the vector count {count}",
            fixture.width
        )));
    }
    let xs: Vec<QVec> = (0..count).map(|n| fixture.vector(n)).collect();
    verify_patterns(fixture, &xs)?;
    Ok(xs)
}

/// `pattern(x_a + x_b)` is `π_{i₁}` for `a ≠ b` and `π_{i₂}` for `a = b`.
pub fn verify_patterns(fixture: &PatternFixture, xs: &[QVec]) -> Result<()> {
    let mixed = pi(fixture.theta, fixture.i1);
    let double = pi(fixture.theta, fixture.i2);
    for (a, x) in xs.iter().enumerate() {
        for (b, y) in xs.iter().enumerate().skip(a) {
            let got = (x + y).pattern();
            let want = if a == b { &double } else { &mixed };
            if &got != want {
                return Err(Error::Verification(format!("x_{a} + x_{b} has pattern {got}, expected {want}")));
            }
        }
    }
    Ok(())
}

/// The coloring that gives vectors with pattern `π_i` the color `assign(i)`
/// and every other vector the color `-1`.
pub fn pattern_coloring(theta: usize, assign: impl Fn(usize) -> i64 + Sync) -> impl Fn(&QVec) -> ColorValue + Sync {
    let patterns: Vec<Pattern> = (0..=theta).map(|i| pi(theta, i)).collect();
    move |v: &QVec| {
        let p = v.pattern();
        match patterns.iter().position(|q| *q == p) {
            Some(i) => ColorValue::Int(assign(i)),
            None => ColorValue::Int(-1),
        }
    }
}

/// `θ + 1` colors of the `L`-set `js` (ascending), one per padded pattern.
fn d_value<C: Coloring<QVec> + ?Sized>(theta: usize, coloring: &C, js: &[usize]) -> Result<Vec<ColorValue>> {
    (0..=theta)
        .map(|i| {
            let v = QVec::from_entries(
                padded_pi(theta, i).into_iter().zip(js).filter(|(c, _)| !c.is_zero()).map(|(c, &j)| (j, c)),
            );
            coloring.color(&v)
        })
        .collect()
}

/// Smallest homogeneous-set size that fits the layout for `count` vectors,
/// whichever pair `i₁ < i₂` the pigeonhole produces.
pub fn required_size(theta: usize, count: usize) -> usize {
    let mut best = 0;
    for i2 in 1..=theta {
        for i1 in 0..i2 {
            best = best.max(i2 + i1 + (i2 - i1) * count + 2 * (theta - i2));
        }
    }
    best.max(2 * theta)
}

/// Looks for the lexicographically least `size`-subset `N` of `{0..kappa-1}`
/// on which every `2θ`-subset gets the same tuple of pattern colors, then
/// pigeonholes two equal entries. `Ok(None)` means no such `N` exists.
pub fn owings_fixture_from_coloring<C: Coloring<QVec> + ?Sized>(
    theta: usize,
    coloring: &C,
    kappa: usize,
    count: usize,
    meter: &Meter,
) -> Result<Option<PatternFixture>> {
    if theta == 0 {
        return Err(Error::Precondition("θ must be positive".into()));
    }
    let l = 2 * theta;
    let size = required_size(theta, count);
    let mut chosen: Vec<usize> = Vec::new();
    let mut target: Option<Vec<ColorValue>> = None;
    if !homogeneous(theta, coloring, kappa, size, l, &mut chosen, &mut target, meter)? {
        return Ok(None);
    }
    let tuple = target.expect("homogeneous set of size ≥ 2θ fixes the tuple");
    let pair = (1..=theta).flat_map(|i2| (0..i2).map(move |i1| (i1, i2))).find(|&(i1, i2)| tuple[i1] == tuple[i2]);
    let Some((i1, i2)) = pair else {
        return Err(Error::Precondition(format!("coloring uses more than {theta} colors on the patterns")));
    };
    let fixture = PatternFixture {
        theta,
        i1,
        i2,
        color: Some(tuple[i1].clone()),
        width: count,
        basis: Some(chosen),
    };
    fixture.validate()?;
    Ok(Some(fixture))
}

#[allow(clippy::too_many_arguments)]
fn homogeneous<C: Coloring<QVec> + ?Sized>(
    theta: usize,
    coloring: &C,
    kappa: usize,
    size: usize,
    l: usize,
    chosen: &mut Vec<usize>,
    target: &mut Option<Vec<ColorValue>>,
    meter: &Meter,
) -> Result<bool> {
    if chosen.len() == size {
        return Ok(true);
    }
    let start = chosen.last().map_or(0, |&v| v + 1);
    let left = size - chosen.len();
    if start + left > kappa {
        return Ok(false);
    }
    for v in start..=kappa - left {
        meter.tick()?;
        let set_target = target.is_none();
        if fits(theta, coloring, chosen, v, l, target)? {
            chosen.push(v);
            if homogeneous(theta, coloring, kappa, size, l, chosen, target, meter)? {
                return Ok(true);
            }
            chosen.pop();
        }
        if set_target {
            *target = None;
        }
    }
    Ok(false)
}

/// Whether every `l`-subset of `chosen ∪ {v}` that contains `v` matches the target.
fn fits<C: Coloring<QVec> + ?Sized>(
    theta: usize,
    coloring: &C,
    chosen: &[usize],
    v: usize,
    l: usize,
    target: &mut Option<Vec<ColorValue>>,
) -> Result<bool> {
    if chosen.len() + 1 < l {
        return Ok(true);
    }
    let mut idx: Vec<usize> = (0..l - 1).collect();
    loop {
        let mut js: Vec<usize> = idx.iter().map(|&i| chosen[i]).collect();
        js.push(v);
        let d = d_value(theta, coloring, &js)?;
        match target {
            Some(t) if *t != d => return Ok(false),
            Some(_) => {}
            None => *target = Some(d),
        }
        // Next (l-1)-subset of chosen.
        let n = chosen.len();
        let k = l - 1;
        if k == 0 {
            return Ok(true);
        }
        let mut j = k;
        loop {
            if j == 0 {
                return Ok(true);
            }
            j -= 1;
            if idx[j] < n - (k - j) {
                idx[j] += 1;
                for t in j + 1..k {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn owings_certificate(fixture: &PatternFixture, count: usize) -> Result<Certificate> {
    let xs = owings_pattern_construct(fixture, count)?;
    let cert = Certificate::new(
        "owings-pattern",
        Verdict::Witness,
        Payload::Record { values: fixture.to_values(), elements: xs.iter().map(|x| x.to_string()).collect() },
    )
    .with_param("theta", fixture.theta)
    .with_param("count", count);
    Ok(cert)
}

/// Re-checks an `owings-pattern` certificate from its recorded vectors.
pub fn verify_owings_certificate(cert: &Certificate) -> Result<()> {
    let Payload::Record { values, elements } = &cert.payload else {
        return Err(Error::Verification("expected a record payload".into()));
    };
    let get = |k: &str| -> Result<usize> {
        values
            .get(k)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Verification(format!("missing `{k}`")))
    };
    let fixture = PatternFixture::new(get("theta")?, get("i1")?, get("i2")?, get("width")?)?;
    let xs: Vec<QVec> = elements.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    if xs.len() < 2 {
        return Err(Error::Verification("fewer than two vectors".into()));
    }
    verify_patterns(&fixture, &xs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::Budget;

    #[test]
    fn patterns() {
        assert_eq!(pi(2, 0).to_string(), "(1,1,1,1)");
        assert_eq!(pi(2, 1).to_string(), "(2,1,1)");
        assert_eq!(pi(2, 2).to_string(), "(2,2)");
        assert_eq!(padded_pi(2, 1).len(), 4);
    }

    #[test]
    fn one_color() {
        let f = PatternFixture::new(1, 0, 1, 4).unwrap();
        let xs = owings_pattern_construct(&f, 4).unwrap();
        assert_eq!(xs[0].to_string(), "{1:1}");
        assert_eq!(xs[3].to_string(), "{4:1}");
    }

    #[test]
    fn two_colors() {
        for (i1, i2) in [(0, 1), (1, 2), (0, 2)] {
            let f = PatternFixture::new(2, i1, i2, 4).unwrap();
            let xs = owings_pattern_construct(&f, 4).unwrap();
            assert_eq!((&xs[0] + &xs[1]).pattern(), pi(2, i1));
            assert_eq!((&xs[2] + &xs[2]).pattern(), pi(2, i2));
        }
    }

    #[test]
    fn bad_fixtures() {
        assert!(PatternFixture::new(2, 1, 1, 3).is_err());
        assert!(PatternFixture::new(2, 0, 3, 3).is_err());
        let f = PatternFixture::new(2, 0, 1, 3).unwrap();
        assert!(owings_pattern_construct(&f, 4).is_err());
        assert!(owings_pattern_construct(&f, 1).is_err());
    }

    #[test]
    fn fixture_from_constant_coloring() {
        let c = |_: &QVec| ColorValue::Int(0);
        let meter = Meter::new(Budget::unlimited());
        let f = owings_fixture_from_coloring(2, &c, 20, 3, &meter).unwrap().unwrap();
        assert_eq!((f.i1, f.i2), (0, 1));
        assert_eq!(f.color, Some(ColorValue::Int(0)));
        let n = required_size(2, 3);
        assert_eq!(f.basis, Some((0..n).collect()));
        owings_pattern_construct(&f, 3).unwrap();
    }

    #[test]
    fn fixture_from_pattern_index_coloring() {
        // π₀ and π₂ share color 0, π₁ alone has color 1.
        let c = pattern_coloring(2, |i| (i == 1) as i64);
        let meter = Meter::new(Budget::unlimited());
        let f = owings_fixture_from_coloring(2, &c, 20, 3, &meter).unwrap().unwrap();
        assert_eq!((f.i1, f.i2), (0, 2));
        let xs = owings_pattern_construct(&f, 3).unwrap();
        for x in &xs {
            for y in &xs {
                assert_eq!(c(&(x + y)), ColorValue::Int(0));
            }
        }
    }

    #[test]
    fn adversarial_coloring_small_kappa() {
        // Color by the parity of the least support index.
        let c = |v: &QVec| ColorValue::Int(v.support().first().map_or(0, |&j| j as i64 % 2));
        let meter = Meter::new(Budget::unlimited());
        assert_eq!(owings_fixture_from_coloring(1, &c, 4, 2, &meter).unwrap(), None);
        let f = owings_fixture_from_coloring(1, &c, 6, 2, &meter).unwrap().unwrap();
        assert_eq!(f.basis, Some(vec![0, 2, 4]));
    }
}
