//! Exact rational numbers.
//!
//! [`Rat`] wraps an arbitrary-precision rational that is always kept in
//! lowest terms with a positive denominator. Distances and weights use it
//! exclusively; nothing in the distance pipeline touches floating point.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplies by an integer.
    pub fn scale(&self, k: i64) -> Self {
        Rat(&self.0 * BigRational::from_integer(k.into()))
    }

    pub fn recip(&self) -> Self {
        Rat(self.0.recip())
    }

    /// Lossy conversion, for display-only statistics.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub(crate) fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_integer(n)
    }
}

impl From<usize> for Rat {
    fn from(n: usize) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
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

    /// Accepts `p`, `p/q`, with an optional leading sign on `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidRational(s.to_string());
        let t = s.trim();
        let parse_int = |x: &str| -> Result<BigInt, Error> {
            let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse::<BigInt>().map_err(|_| bad())
        };
        match t.split_once('/') {
            None => Ok(Rat(BigRational::from_integer(parse_int(t)?))),
            Some((p, q)) => {
                let num = parse_int(p)?;
                if q.starts_with(['-', '+']) {
                    return Err(bad());
                }
                let den = parse_int(q)?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Rat(BigRational::new(num, den)))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$m(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl std::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rat::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3".parse::<Rat>().unwrap(), Rat::from_integer(3));
        assert_eq!("4/6".parse::<Rat>().unwrap().to_string(), "2/3");
        assert_eq!("-1/2".parse::<Rat>().unwrap(), Rat::new(-1, 2));
        assert_eq!(Rat::new(4, 2).to_string(), "2");
        for bad in ["", "1/0", "a", "1/", "/2", "1.5", "1/-2", "1//2", "+"] {
            assert!(bad.parse::<Rat>().is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = Rat::new(1, 3);
        let b = Rat::new(1, 6);
        assert_eq!(&a + &b, Rat::new(1, 2));
        assert_eq!(&a - &b, Rat::new(1, 6));
        assert_eq!(&a * &b, Rat::new(1, 18));
        assert_eq!(a.scale(3), Rat::one());
        assert!(b < a);
        assert_eq!(std::cmp::min(a.clone(), b.clone()), b);
    }

    #[test]
    fn serde_uses_strings() {
        let v = vec![Rat::new(1, 2), Rat::from_integer(3)];
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1/2","3"]"#);
        let back: Vec<Rat> = serde_json::from_str(r#"["1/2","3"]"#).unwrap();
        assert_eq!(back, v);
    }
}
