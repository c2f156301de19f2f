use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A reduced fraction with positive denominator. Serialized as `"num/den"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// `None` when `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Option<Self> {
        let den = den.into();
        if den.is_zero() {
            None
        } else {
            Some(ExactRational(BigRational::new(num.into(), den)))
        }
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(v.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_inner(&self) -> &BigRational {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Smallest integer strictly greater than `self`.
    pub fn next_integer_above(&self) -> BigInt {
        self.0.floor().to_integer() + BigInt::one()
    }

    /// Decimal rendering rounded half away from zero to `places` digits
    /// after the point. For display only.
    pub fn to_decimal_string(&self, places: usize) -> String {
        let scale = BigInt::from(10).pow(places as u32);
        let num: BigInt = self.numer().abs() * &scale * 2 + self.denom();
        let scaled = num.div_floor(&(self.denom() * 2));
        let (int, frac) = scaled.div_rem(&scale);
        let sign = if self.0.is_negative() && !scaled.is_zero() {
            "-"
        } else {
            ""
        };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{:0>places$}", frac.to_string())
        }
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("malformed rational {0:?}")]
pub struct ParseRationalError(String);

impl FromStr for ExactRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_owned());
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        ExactRational::new(n, d).ok_or_else(bad)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl ExactRational {
    pub fn cmp_integer(&self, v: &BigInt) -> Ordering {
        self.0.cmp(&BigRational::from_integer(v.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let r = ExactRational::new(6, -4).unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r, ExactRational::new(-3, 2).unwrap());
        assert!(ExactRational::new(1, 0).is_none());
    }

    #[test]
    fn display_always_has_denominator() {
        assert_eq!(ExactRational::from_integer(3).to_string(), "3/1");
        assert_eq!("19/9".parse::<ExactRational>().unwrap().to_string(), "19/9");
        assert_eq!("7".parse::<ExactRational>().unwrap().to_string(), "7/1");
        assert!("1/0".parse::<ExactRational>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        let r = ExactRational::new(19, 9).unwrap();
        assert_eq!(r.to_decimal_string(12), "2.111111111111");
        assert_eq!(ExactRational::new(2, 3).unwrap().to_decimal_string(3), "0.667");
        assert_eq!(ExactRational::new(-1, 2).unwrap().to_decimal_string(0), "-1");
        assert_eq!(ExactRational::from_integer(3).to_decimal_string(2), "3.00");
    }

    #[test]
    fn next_integer() {
        assert_eq!(ExactRational::from_integer(7).next_integer_above(), BigInt::from(8));
        assert_eq!(
            ExactRational::new(53, 3).unwrap().next_integer_above(),
            BigInt::from(18)
        );
    }

    #[test]
    fn json_round_trip() {
        let r = ExactRational::new(-106, 4).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, "\"-53/2\"");
        assert_eq!(serde_json::from_str::<ExactRational>(&text).unwrap(), r);
    }
}
