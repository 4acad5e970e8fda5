//! Exact real parameter `λ`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A rational `λ`, so that floors such as `⌊λ²⌋` are exact at boundaries.
///
/// Parsed from `"p/q"`, an integer, or a finite decimal (`"2.5"`, `"-0.5"`).
/// Conversions from `f64` are exact in the binary value of the float.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lambda(BigRational);

impl Lambda {
    pub fn from_integer(v: i64) -> Self {
        Lambda(BigRational::from_integer(v.into()))
    }

    pub fn from_ratio(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::invalid("zero denominator"));
        }
        Ok(Lambda(BigRational::new(p.into(), q.into())))
    }

    pub fn from_f64(x: f64) -> Result<Self> {
        BigRational::from_float(x)
            .map(Lambda)
            .ok_or_else(|| Error::invalid(format!("λ must be finite, got {x}")))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn squared(&self) -> Lambda {
        Lambda(&self.0 * &self.0)
    }

    pub fn cubed(&self) -> Lambda {
        Lambda(&self.0 * &self.0 * &self.0)
    }

    /// `⌊λ²⌋`.
    pub fn floor_sq(&self) -> BigInt {
        self.squared().floor()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn add_integer(&self, v: i64) -> Lambda {
        Lambda(&self.0 + BigRational::from_integer(v.into()))
    }

    pub fn cmp_integer(&self, v: i64) -> std::cmp::Ordering {
        self.0.cmp(&BigRational::from_integer(v.into()))
    }
}

impl FromStr for Lambda {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::parse(format!("cannot parse λ from {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            return Ok(Lambda(BigRational::new(p, q)));
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        let digits_ok = |t: &str| t.chars().all(|c| c.is_ascii_digit());
        if (int_part.is_empty() && frac_part.is_empty())
            || !digits_ok(int_part)
            || !digits_ok(frac_part)
        {
            return Err(bad());
        }
        let numer: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| bad())?;
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        let r = BigRational::new(numer, denom);
        Ok(Lambda(if neg { -r } else { r }))
    }
}

impl From<i64> for Lambda {
    fn from(v: i64) -> Self {
        Lambda::from_integer(v)
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Lambda {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Lambda {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parsing() {
        assert_eq!("3/2".parse::<Lambda>().unwrap(), Lambda::from_ratio(3, 2).unwrap());
        assert_eq!("1.5".parse::<Lambda>().unwrap(), Lambda::from_ratio(3, 2).unwrap());
        assert_eq!("-0.5".parse::<Lambda>().unwrap(), Lambda::from_ratio(-1, 2).unwrap());
        assert_eq!("2".parse::<Lambda>().unwrap(), Lambda::from_integer(2));
        assert_eq!(".25".parse::<Lambda>().unwrap(), Lambda::from_ratio(1, 4).unwrap());
        for bad in ["", "x", "1/0", "1..2", "-", "1e3"] {
            assert!(bad.parse::<Lambda>().is_err(), "{bad}");
        }
    }

    #[test]
    fn exact_floors_at_boundaries() {
        assert_eq!(Lambda::from_integer(2).floor_sq(), BigInt::from(4));
        assert_eq!("1.5".parse::<Lambda>().unwrap().floor_sq(), BigInt::from(2));
        assert_eq!("-1/2".parse::<Lambda>().unwrap().floor(), BigInt::from(-1));
        let sqrt2ish = Lambda::from_f64(std::f64::consts::SQRT_2).unwrap();
        // the float √2 is slightly above √2, so its square is just over 2
        assert_eq!(sqrt2ish.floor_sq(), BigInt::from(2));
    }

    #[test]
    fn display_round_trip() {
        for s in ["3/2", "-7", "0", "5/3"] {
            assert_eq!(s.parse::<Lambda>().unwrap().to_string(), s);
        }
        let json = serde_json::to_string(&Lambda::from_ratio(5, 4).unwrap()).unwrap();
        assert_eq!(json, "\"5/4\"");
        assert_eq!(serde_json::from_str::<Lambda>(&json).unwrap(), Lambda::from_ratio(5, 4).unwrap());
    }

    proptest! {
        #[test]
        fn f64_conversion_is_exact(x in -1e6f64..1e6) {
            let l = Lambda::from_f64(x).unwrap();
            prop_assert_eq!(l.to_f64(), x);
        }
    }
}
