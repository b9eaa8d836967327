//! Exact rational scalars: construction, parsing, formatting, float rounding.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// Integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// n/d with d != 0.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part {0:?}")]
    BadInt(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses "3", "-3", or "num/den". Whitespace around either part is ignored.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |t: &str| -> Result<BigInt, ParseRationalError> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseRationalError::BadInt(t.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let n = parse_int(num)?;
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// "num" for integers, "num/den" otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Best continued-fraction approximation of `x` with denominator at most
/// `max_den`. Returns None for non-finite input.
pub fn approx_rational(x: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let neg = x < 0.0;
    let mut v = x.abs();
    // convergents h/k of the continued fraction of |x|
    let (mut h0, mut k0) = (BigInt::from(1), BigInt::from(0));
    let (mut h1, mut k1) = (BigInt::from(v.floor() as i64), BigInt::from(1));
    v -= v.floor();
    let cap = BigInt::from(max_den);
    for _ in 0..64 {
        if v.abs() < 1e-18 {
            break;
        }
        v = 1.0 / v;
        let a = v.floor();
        if a >= 9.0e18 {
            break;
        }
        v -= a;
        let a = BigInt::from(a as i64);
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2 > cap {
            break;
        }
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
    }
    let mut r = Rational::new(h1, k1);
    if neg {
        r = -r;
    }
    Some(r)
}

/// Serde adapters mapping rationals to "num/den" strings (integers stay bare).
pub mod serde_rational {
    use super::*;
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    struct RatVisitor;
    impl<'de> Visitor<'de> for RatVisitor {
        type Value = Rational;
        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            write!(f, "an integer or a \"num/den\" string")
        }
        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
            Ok(rat(v))
        }
        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
            Ok(Rational::from_integer(BigInt::from(v)))
        }
        fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
            parse_rational(v).map_err(de::Error::custom)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

/// Serde adapters for vectors of rationals.
pub mod serde_rational_vec {
    use super::*;
    use serde::de::{Deserializer, SeqAccess, Visitor};
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(xs: &Vec<Rational>, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&format_rational(x))?;
        }
        seq.end()
    }

    struct VecVisitor;
    impl<'de> Visitor<'de> for VecVisitor {
        type Value = Vec<Rational>;
        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            write!(f, "a sequence of rationals")
        }
        fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
            #[derive(serde::Deserialize)]
            struct One(#[serde(with = "super::serde_rational")] Rational);
            let mut out = Vec::new();
            while let Some(One(x)) = seq.next_element()? {
                out.push(x);
            }
            Ok(out)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        d.deserialize_seq(VecVisitor)
    }
}
