//! Exact scalar rings and the linear algebra built on them.
//!
//! Everything downstream is generic over [`Scalar`], which is implemented
//! for arbitrary-precision integers, rationals and [`Poly`]. The tagged
//! [`RingValue`] exists for file formats and the command line, where the
//! ring is only known at run time.

pub mod linalg;
mod matrix;
mod poly;
mod value;

use std::fmt;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;

pub use linalg::{determinant, rank, vandermonde_solve};
pub use matrix::Matrix;
pub use poly::Poly;
pub use value::{parse_rational, RingValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Int,
    Rat,
    Poly,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingKind::Int => "int",
            RingKind::Rat => "rat",
            RingKind::Poly => "poly",
        })
    }
}

impl RingKind {
    /// The smallest ring containing both.
    pub fn join(self, other: RingKind) -> RingKind {
        self.max(other)
    }
}

/// An exact commutative ring usable as a weight scalar.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
    + 'static
{
    const KIND: RingKind;

    /// The quotient `self / divisor` if it exists in the ring.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;

    /// Non-negativity; for polynomials, all coefficients non-negative.
    fn is_nonnegative(&self) -> bool;

    fn from_integer(value: BigInt) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_integer(BigInt::from(value))
    }

    /// Image under the evaluation map `X -> point` (identity on constants).
    fn evaluate_at(&self, point: &BigRational) -> BigRational;

    /// Polynomial degree; constants have degree 0.
    fn degree(&self) -> usize {
        0
    }

    fn pow(&self, k: u32) -> Self {
        num_traits::pow(self.clone(), k as usize)
    }

    fn into_value(self) -> RingValue;

    /// Converts a tagged value, promoting Int into Rat and Rat into Poly.
    fn from_value(value: RingValue) -> Result<Self>;
}

impl Scalar for BigInt {
    const KIND: RingKind = RingKind::Int;

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    fn is_nonnegative(&self) -> bool {
        !self.is_negative()
    }

    fn from_integer(value: BigInt) -> Self {
        value
    }

    fn evaluate_at(&self, _point: &BigRational) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn into_value(self) -> RingValue {
        RingValue::Int(self)
    }

    fn from_value(value: RingValue) -> Result<Self> {
        match value {
            RingValue::Int(v) => Ok(v),
            other => Err(crate::Error::RingMismatch(RingKind::Int, other.kind())),
        }
    }
}

impl Scalar for BigRational {
    const KIND: RingKind = RingKind::Rat;

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }

    fn is_nonnegative(&self) -> bool {
        !self.is_negative()
    }

    fn from_integer(value: BigInt) -> Self {
        BigRational::from_integer(value)
    }

    fn evaluate_at(&self, _point: &BigRational) -> BigRational {
        self.clone()
    }

    fn into_value(self) -> RingValue {
        RingValue::Rat(self)
    }

    fn from_value(value: RingValue) -> Result<Self> {
        match value.promote(RingKind::Rat)? {
            RingValue::Rat(v) => Ok(v),
            _ => unreachable!("promotion to Rat yields Rat"),
        }
    }
}

impl Scalar for Poly {
    const KIND: RingKind = RingKind::Poly;

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    fn is_nonnegative(&self) -> bool {
        self.all_coefficients_nonnegative()
    }

    fn from_integer(value: BigInt) -> Self {
        Poly::from(value)
    }

    fn evaluate_at(&self, point: &BigRational) -> BigRational {
        self.eval(point)
    }

    fn degree(&self) -> usize {
        Poly::degree(self).unwrap_or(0)
    }

    fn into_value(self) -> RingValue {
        RingValue::Poly(self)
    }

    fn from_value(value: RingValue) -> Result<Self> {
        match value.promote(RingKind::Poly)? {
            RingValue::Poly(v) => Ok(v),
            _ => unreachable!("promotion to Poly yields Poly"),
        }
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-5i64..=5, 0..5).prop_map(Poly::from_integers)
    }

    fn small_rat() -> impl Strategy<Value = BigRational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn poly_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            prop_assert_eq!(a.clone() - a.clone(), Poly::zero());
        }

        #[test]
        fn rational_ring_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        }

        #[test]
        fn evaluation_is_multiplicative(a in small_poly(), b in small_poly(), x in small_rat()) {
            prop_assert_eq!((a.clone() * b.clone()).eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn exact_division_inverts_multiplication(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((a.clone() * b.clone()).div_exact(&b), Some(a));
        }
    }

    #[test]
    fn integer_division_is_exact_or_none() {
        assert_eq!(int(12).div_exact(&int(4)), Some(int(3)));
        assert_eq!(int(12).div_exact(&int(5)), None);
        assert_eq!(int(12).div_exact(&int(0)), None);
    }
}
