//! Named colorings with tagged codomains.
//!
//! Every coloring is a pure function. [`ColoringSpec`] is the uniform handle
//! used by the auditor, the searches and the command line; the free functions
//! are the colorings themselves.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{QVec, Rat};

/// A color. The tag is fixed per coloring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ColorValue {
    Int(i64),
    Q(Rat),
    /// Dyadic exponent paired with a sign in {-1, 0, +1}.
    Pair(i64, i8),
}

impl fmt::Display for ColorValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorValue::Int(k) => write!(f, "{k}"),
            ColorValue::Q(q) => write!(f, "{q}"),
            ColorValue::Pair(k, s) => write!(f, "({k},{s:+})"),
        }
    }
}

impl serde::Serialize for ColorValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Three-branch coloring of ℚ: `k` on `[2^k, 2^(k+1))`, `0` at
/// zero, `-k` on `(-2^(k+1), -2^k]`.
pub fn dyadic_color(r: &Rat) -> ColorValue {
    if r.is_zero() {
        return ColorValue::Int(0);
    }
    let k = r.abs().dyadic_exponent().expect("nonzero magnitude");
    ColorValue::Int(if r.is_positive() { k } else { -k })
}

/// The dyadic exponent of `|r|` together with the sign of `r`.
pub fn signed_dyadic_color(r: &Rat) -> ColorValue {
    if r.is_zero() {
        return ColorValue::Pair(0, 0);
    }
    let k = r.abs().dyadic_exponent().expect("nonzero magnitude");
    ColorValue::Pair(k, r.signum())
}

/// Parity of the dyadic exponent of `|r|`, with `0 ↦ 0`. Negative exponents
/// use the nonnegative residue.
pub fn dyadic_parity_color(r: &Rat) -> ColorValue {
    if r.is_zero() {
        return ColorValue::Int(0);
    }
    let k = r.abs().dyadic_exponent().expect("nonzero magnitude");
    ColorValue::Int(k.rem_euclid(2))
}

/// Parity of `⌊log₂ |supp v|⌋`. The zero vector has no color.
pub fn support_parity_color(v: &QVec) -> Result<ColorValue> {
    let n = v.support_size();
    if n == 0 {
        return Err(Error::Domain(
            "support parity is undefined on the zero vector".into(),
        ));
    }
    let floor_log2 = (usize::BITS - 1 - n.leading_zeros()) as i64;
    Ok(ColorValue::Int(floor_log2.rem_euclid(2)))
}

/// `⟨v|v⟩`, the sum of squared coefficients.
pub fn self_inner_color(v: &QVec) -> ColorValue {
    ColorValue::Q(v.norm_squared())
}

/// Which coloring a [`ColoringSpec`] names.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ColoringName {
    Dyadic,
    SignedDyadic,
    DyadicParity,
    SupportParity,
    SelfInner,
}

/// What a coloring accepts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Domain {
    Rational,
    Vector,
}

impl ColoringName {
    pub const ALL: [ColoringName; 5] = [
        ColoringName::Dyadic,
        ColoringName::SignedDyadic,
        ColoringName::DyadicParity,
        ColoringName::SupportParity,
        ColoringName::SelfInner,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ColoringName::Dyadic => "dyadic",
            ColoringName::SignedDyadic => "signed_dyadic",
            ColoringName::DyadicParity => "dyadic_parity",
            ColoringName::SupportParity => "support_parity",
            ColoringName::SelfInner => "self_inner",
        }
    }

    pub fn domain(self) -> Domain {
        match self {
            ColoringName::Dyadic | ColoringName::SignedDyadic | ColoringName::DyadicParity => {
                Domain::Rational
            }
            ColoringName::SupportParity | ColoringName::SelfInner => Domain::Vector,
        }
    }
}

impl FromStr for ColoringName {
    type Err = Error;

    fn from_str(s: &str) -> Result<ColoringName> {
        ColoringName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown coloring `{s}`")))
    }
}

/// A point in one of the two carriers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Point {
    Rat(Rat),
    Vec(QVec),
}

impl Point {
    pub fn as_rat(&self) -> Result<&Rat> {
        match self {
            Point::Rat(r) => Ok(r),
            Point::Vec(v) => Err(Error::Domain(format!("expected a rational, got {v}"))),
        }
    }

    pub fn as_vec(&self) -> Result<&QVec> {
        match self {
            Point::Vec(v) => Ok(v),
            Point::Rat(r) => Err(Error::Domain(format!("expected a vector, got {r}"))),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Rat(r) => write!(f, "{r}"),
            Point::Vec(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Point> {
        if s.trim_start().starts_with('{') {
            s.parse().map(Point::Vec)
        } else {
            s.parse().map(Point::Rat)
        }
    }
}

/// A named coloring plus its parameters, written `name(key=value,...)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoringSpec {
    pub name: ColoringName,
    pub params: BTreeMap<String, String>,
}

impl ColoringSpec {
    pub fn new(name: ColoringName) -> ColoringSpec {
        ColoringSpec {
            name,
            params: BTreeMap::new(),
        }
    }

    pub fn domain(&self) -> Domain {
        self.name.domain()
    }

    pub fn evaluate(&self, point: &Point) -> Result<ColorValue> {
        match (self.name, point) {
            (ColoringName::Dyadic, Point::Rat(r)) => Ok(dyadic_color(r)),
            (ColoringName::SignedDyadic, Point::Rat(r)) => Ok(signed_dyadic_color(r)),
            (ColoringName::DyadicParity, Point::Rat(r)) => Ok(dyadic_parity_color(r)),
            (ColoringName::SupportParity, Point::Vec(v)) => support_parity_color(v),
            (ColoringName::SelfInner, Point::Vec(v)) => Ok(self_inner_color(v)),
            (name, p) => Err(Error::Domain(format!(
                "coloring `{}` cannot color `{p}`",
                name.as_str()
            ))),
        }
    }

    pub fn evaluate_rat(&self, r: &Rat) -> Result<ColorValue> {
        match self.name {
            ColoringName::Dyadic => Ok(dyadic_color(r)),
            ColoringName::SignedDyadic => Ok(signed_dyadic_color(r)),
            ColoringName::DyadicParity => Ok(dyadic_parity_color(r)),
            other => Err(Error::Domain(format!(
                "coloring `{}` is defined on vectors, not rationals",
                other.as_str()
            ))),
        }
    }

    pub fn evaluate_vec(&self, v: &QVec) -> Result<ColorValue> {
        match self.name {
            ColoringName::SupportParity => support_parity_color(v),
            ColoringName::SelfInner => Ok(self_inner_color(v)),
            other => Err(Error::Domain(format!(
                "coloring `{}` is defined on rationals, not vectors",
                other.as_str()
            ))),
        }
    }
}

impl fmt::Display for ColoringSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name.as_str())?;
        for (n, (k, v)) in self.params.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for ColoringSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<ColoringSpec> {
        let s = s.trim();
        let (name, rest) = match s.split_once('(') {
            Some((name, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unclosed parameter list in `{s}`")))?;
                (name, inner)
            }
            None => (s, ""),
        };
        let mut spec = ColoringSpec::new(name.trim().parse()?);
        for kv in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{kv}`")))?;
            spec.params.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(spec)
    }
}

impl serde::Serialize for ColoringSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Anything that colors elements of `T`. Named specs and plain closures both
/// qualify, so searches can run against ad hoc colorings in tests.
pub trait Coloring<T>: Sync {
    fn color(&self, x: &T) -> Result<ColorValue>;
}

impl Coloring<Rat> for ColoringSpec {
    fn color(&self, x: &Rat) -> Result<ColorValue> {
        self.evaluate_rat(x)
    }
}

impl Coloring<QVec> for ColoringSpec {
    fn color(&self, x: &QVec) -> Result<ColorValue> {
        self.evaluate_vec(x)
    }
}

impl Coloring<Point> for ColoringSpec {
    fn color(&self, x: &Point) -> Result<ColorValue> {
        self.evaluate(x)
    }
}

impl<T, F> Coloring<T> for F
where
    F: Fn(&T) -> ColorValue + Sync,
{
    fn color(&self, x: &T) -> Result<ColorValue> {
        Ok(self(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn dyadic_examples() {
        assert_eq!(dyadic_color(&r("0")), ColorValue::Int(0));
        assert_eq!(dyadic_color(&r("17/5")), ColorValue::Int(1));
        assert_eq!(dyadic_color(&r("-3")), ColorValue::Int(-1));
        // -3/5 has |·| in [1/2, 1), so k = -1 and the color is -k = 1.
        assert_eq!(dyadic_color(&r("-3/5")), ColorValue::Int(1));
    }

    #[test]
    fn signed_dyadic_examples() {
        assert_eq!(signed_dyadic_color(&r("17/5")), ColorValue::Pair(1, 1));
        assert_eq!(signed_dyadic_color(&r("-3/5")), ColorValue::Pair(-1, -1));
        assert_eq!(signed_dyadic_color(&r("0")), ColorValue::Pair(0, 0));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(dyadic_parity_color(&r("0")), ColorValue::Int(0));
        assert_eq!(dyadic_parity_color(&r("3")), ColorValue::Int(1));
        assert_eq!(dyadic_parity_color(&r("1/2")), ColorValue::Int(1));
        assert_eq!(dyadic_parity_color(&r("-1/4")), ColorValue::Int(0));
    }

    #[test]
    fn support_parity_examples() {
        let with_support = |n: usize| QVec::from_ints(&vec![1; n]);
        assert_eq!(support_parity_color(&with_support(1)).unwrap(), ColorValue::Int(0));
        assert_eq!(support_parity_color(&with_support(5)).unwrap(), ColorValue::Int(0));
        assert_eq!(support_parity_color(&with_support(2)).unwrap(), ColorValue::Int(1));
        assert_eq!(support_parity_color(&with_support(8)).unwrap(), ColorValue::Int(1));
        assert!(support_parity_color(&QVec::zero()).is_err());
    }

    #[test]
    fn self_inner_examples() {
        assert_eq!(self_inner_color(&QVec::from_ints(&[1, 1])), ColorValue::Q(r("2")));
        let half_b3 = QVec::basis(3).scale(&r("1/2"));
        assert_eq!(self_inner_color(&half_b3), ColorValue::Q(r("1/4")));
        assert_eq!(self_inner_color(&QVec::zero()), ColorValue::Q(r("0")));
    }

    #[test]
    fn evaluate_dispatch() {
        let dyadic: ColoringSpec = "dyadic".parse().unwrap();
        assert_eq!(dyadic.evaluate(&Point::Rat(r("0"))).unwrap(), ColorValue::Int(0));
        let inner: ColoringSpec = "self_inner()".parse().unwrap();
        assert_eq!(
            inner.evaluate(&Point::Vec(QVec::basis(0))).unwrap(),
            ColorValue::Q(r("1"))
        );
        let sp: ColoringSpec = "support_parity".parse().unwrap();
        assert!(matches!(
            sp.evaluate(&Point::Vec(QVec::zero())),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            sp.evaluate(&Point::Rat(r("1"))),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn spec_text_form() {
        let spec: ColoringSpec = "dyadic_parity(b=2, a=1)".parse().unwrap();
        assert_eq!(spec.to_string(), "dyadic_parity(a=1,b=2)");
        assert_eq!(spec.domain(), Domain::Rational);
        assert!("rainbow()".parse::<ColoringSpec>().is_err());
        assert!("dyadic(a=1".parse::<ColoringSpec>().is_err());
    }
}
