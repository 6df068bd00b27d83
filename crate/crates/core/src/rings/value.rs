use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use super::{Poly, RingKind};
use crate::error::{Error, Result};

/// A scalar whose ring is known only at run time.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingValue {
    Int(BigInt),
    Rat(BigRational),
    Poly(Poly),
}

impl RingValue {
    pub fn kind(&self) -> RingKind {
        match self {
            RingValue::Int(_) => RingKind::Int,
            RingValue::Rat(_) => RingKind::Rat,
            RingValue::Poly(_) => RingKind::Poly,
        }
    }

    /// Embeds into a larger ring. Demotion is refused.
    pub fn promote(self, target: RingKind) -> Result<RingValue> {
        let from = self.kind();
        Ok(match (self, target) {
            (v, t) if from == t => v,
            (RingValue::Int(i), RingKind::Rat) => RingValue::Rat(BigRational::from_integer(i)),
            (RingValue::Int(i), RingKind::Poly) => RingValue::Poly(Poly::from(i)),
            (RingValue::Rat(r), RingKind::Poly) => RingValue::Poly(Poly::from(r)),
            _ => return Err(Error::RingMismatch(from, target)),
        })
    }

    pub fn checked_add(&self, other: &RingValue) -> Result<RingValue> {
        Ok(match (self, other) {
            (RingValue::Int(a), RingValue::Int(b)) => RingValue::Int(a + b),
            (RingValue::Rat(a), RingValue::Rat(b)) => RingValue::Rat(a + b),
            (RingValue::Poly(a), RingValue::Poly(b)) => RingValue::Poly(a.clone() + b.clone()),
            (a, b) => return Err(Error::RingMismatch(a.kind(), b.kind())),
        })
    }

    pub fn checked_mul(&self, other: &RingValue) -> Result<RingValue> {
        Ok(match (self, other) {
            (RingValue::Int(a), RingValue::Int(b)) => RingValue::Int(a * b),
            (RingValue::Rat(a), RingValue::Rat(b)) => RingValue::Rat(a * b),
            (RingValue::Poly(a), RingValue::Poly(b)) => RingValue::Poly(a.clone() * b.clone()),
            (a, b) => return Err(Error::RingMismatch(a.kind(), b.kind())),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Int(v) => v.is_zero(),
            RingValue::Rat(v) => v.is_zero(),
            RingValue::Poly(v) => v.is_zero(),
        }
    }

    pub fn zero(kind: RingKind) -> RingValue {
        match kind {
            RingKind::Int => RingValue::Int(BigInt::zero()),
            RingKind::Rat => RingValue::Rat(BigRational::zero()),
            RingKind::Poly => RingValue::Poly(Poly::zero()),
        }
    }

    pub fn one(kind: RingKind) -> RingValue {
        match kind {
            RingKind::Int => RingValue::Int(BigInt::one()),
            RingKind::Rat => RingValue::Rat(BigRational::one()),
            RingKind::Poly => RingValue::Poly(Poly::one()),
        }
    }

    /// JSON form: scalars as decimal strings, polynomials as coefficient arrays.
    pub fn to_json(&self) -> Value {
        match self {
            RingValue::Int(v) => Value::String(v.to_string()),
            RingValue::Rat(v) => Value::String(v.to_string()),
            RingValue::Poly(p) => Value::Array(
                p.coefficients()
                    .iter()
                    .map(|c| Value::String(c.to_string()))
                    .collect(),
            ),
        }
    }

    /// Parses a JSON scalar in the given ring. Poly entries also accept a
    /// bare scalar string as a constant.
    pub fn from_json(value: &Value, kind: RingKind) -> Result<RingValue> {
        match (kind, value) {
            (RingKind::Int, Value::String(s)) => s
                .trim()
                .parse::<BigInt>()
                .map(RingValue::Int)
                .map_err(|e| Error::Parse(format!("integer {s:?}: {e}"))),
            (RingKind::Int, Value::Number(n)) if n.is_i64() => {
                Ok(RingValue::Int(BigInt::from(n.as_i64().unwrap())))
            }
            (RingKind::Rat, Value::String(s)) => parse_rational(s).map(RingValue::Rat),
            (RingKind::Rat, Value::Number(n)) if n.is_i64() => Ok(RingValue::Rat(
                BigRational::from_integer(BigInt::from(n.as_i64().unwrap())),
            )),
            (RingKind::Poly, Value::Array(items)) => items
                .iter()
                .map(|item| match RingValue::from_json(item, RingKind::Rat)? {
                    RingValue::Rat(r) => Ok(r),
                    _ => unreachable!(),
                })
                .collect::<Result<Vec<_>>>()
                .map(|c| RingValue::Poly(Poly::new(c))),
            (RingKind::Poly, scalar) => {
                RingValue::from_json(scalar, RingKind::Rat)?.promote(RingKind::Poly)
            }
            (kind, other) => Err(Error::Parse(format!("bad {kind} scalar: {other}"))),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Int(v) => write!(f, "{v}"),
            RingValue::Rat(v) => write!(f, "{v}"),
            RingValue::Poly(v) => write!(f, "{v}"),
        }
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |e: &dyn fmt::Display| Error::Parse(format!("rational {s:?}: {e}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|e| bad(&e))?;
            let d: BigInt = d.trim().parse().map_err(|e| bad(&e))?;
            if d.is_zero() {
                return Err(bad(&"zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|e| bad(&e)),
    }
}
