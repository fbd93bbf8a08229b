//! Exact rationals: construction, strict parsing and string serialization.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational used throughout the crate.
pub type Q = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses an exact rational from `"p/q"` or an integer literal.
///
/// Decimal points and exponents are rejected: a value such as `"0.5"` is
/// never silently rounded to `1/2`.
pub fn parse(field: &str, text: &str) -> Result<Q> {
    let s = text.trim();
    let err = |message: &str| Error::Parse {
        field: field.to_string(),
        value: text.to_string(),
        message: message.to_string(),
    };
    if s.is_empty() {
        return Err(err("empty value"));
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(err("floating-point literals are not accepted; write p/q"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| err("bad numerator"))?;
        let d = BigInt::from_str(d.trim()).map_err(|_| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Q::new(n, d))
    } else {
        let n = BigInt::from_str(s).map_err(|_| err("not an integer or p/q"))?;
        Ok(Q::from_integer(n))
    }
}

/// Parses a comma-separated list of rationals.
pub fn parse_list(field: &str, text: &str) -> Result<Vec<Q>> {
    text.split(',').map(|part| parse(field, part)).collect()
}

/// Lowest-terms denominator of `x` (always positive).
pub fn denominator(x: &Q) -> BigInt {
    x.denom().abs()
}

/// Canonical string form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format(x: &Q) -> String {
    x.to_string()
}

/// Serde adapter that writes rationals as canonical strings.
pub mod as_string {
    use super::Q;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let text = String::deserialize(d)?;
        super::parse("rational", &text).map_err(D::Error::custom)
    }
}

/// Serde adapter for `Option<Q>`.
pub mod as_opt_string {
    use super::Q;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(x) => s.serialize_some(&super::format(x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| super::parse("rational", &t).map_err(D::Error::custom))
            .transpose()
    }
}

/// Serde adapter for `Vec<Q>`.
pub mod as_string_vec {
    use super::Q;
    use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&super::format(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| super::parse("rational", t).map_err(D::Error::custom))
            .collect()
    }
}
