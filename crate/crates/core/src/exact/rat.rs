//! Arbitrary-precision rationals.
//!
//! [`Rat`] wraps [`num_rational::BigRational`], which keeps every value in
//! lowest terms with a positive denominator. Zero is `0/1`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Rat {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(n: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Rat> {
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// `2^exp` for either sign of `exp`.
    pub fn pow2(exp: i64) -> Rat {
        let mag = BigInt::one() << exp.unsigned_abs();
        if exp >= 0 {
            Rat(BigRational::from_integer(mag))
        } else {
            Rat(BigRational::new(BigInt::one(), mag))
        }
    }

    /// The unique `k` with `2^k <= r < 2^(k+1)`.
    ///
    /// The estimate from bit lengths is off by at most one; the final answer is
    /// settled by exact comparisons against powers of two.
    pub fn dyadic_exponent(&self) -> Result<i64> {
        if !self.is_positive() {
            return Err(Error::Domain(format!(
                "dyadic exponent needs a positive rational, got {self}"
            )));
        }
        let mut k = self.numer().bits() as i64 - self.denom().bits() as i64;
        while Rat::pow2(k) > *self {
            k -= 1;
        }
        while Rat::pow2(k + 1) <= *self {
            k += 1;
        }
        Ok(k)
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    /// Half of this value.
    pub fn half(&self) -> Rat {
        Rat(&self.0 / BigInt::from(2))
    }

    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Midpoint of two rationals.
    pub fn midpoint(a: &Rat, b: &Rat) -> Rat {
        (a + b).half()
    }

    /// Whether the denominator is one.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Denominator positive and coprime to the numerator.
    pub fn is_canonical(&self) -> bool {
        self.denom().is_positive() && self.numer().gcd(self.denom()).is_one()
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_integer(n)
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Rat {
        Rat(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rat::from_big(n, d)
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rat(BigRational::from_integer(n)))
            }
        }
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

impl std::ops::Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Order by denominator, then numerator. This is the canonical order used for
/// rational grids and for "least denominator, then least numerator" picks.
pub fn canonical_cmp(a: &Rat, b: &Rat) -> Ordering {
    a.denom()
        .cmp(b.denom())
        .then_with(|| a.numer().cmp(b.numer()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        let x = Rat::new(6, -4);
        assert_eq!(x.to_string(), "-3/2");
        assert!(x.is_canonical());
        assert_eq!(Rat::new(0, 7).to_string(), "0");
        assert_eq!(r("0/5"), Rat::zero());
        assert_eq!(r(" 10/4 "), Rat::new(5, 2));
    }

    #[test]
    fn dyadic_exponent_examples() {
        assert_eq!(r("1").dyadic_exponent().unwrap(), 0);
        assert_eq!(r("17/5").dyadic_exponent().unwrap(), 1);
        assert_eq!(r("3/8").dyadic_exponent().unwrap(), -2);
        assert_eq!(r("1/2").dyadic_exponent().unwrap(), -1);
        assert_eq!(r("1023/1024").dyadic_exponent().unwrap(), -1);
        assert_eq!(r("4").dyadic_exponent().unwrap(), 2);
    }

    #[test]
    fn dyadic_exponent_rejects_nonpositive() {
        assert!(r("0").dyadic_exponent().is_err());
        assert!(r("-3").dyadic_exponent().is_err());
    }

    #[test]
    fn parse_errors() {
        assert!("1/0".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = [r("1/2"), r("-1"), r("1/3"), r("2"), r("-1/2")];
        v.sort_by(canonical_cmp);
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["-1", "2", "-1/2", "1/2", "1/3"]);
    }
}
