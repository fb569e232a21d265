//! Exact scalar rings: the prime field F₂ and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Tag naming the scalar ring an algebra is built over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ScalarKind {
    F2,
    Rationals,
}

/// Exact coefficient arithmetic. No floating point anywhere.
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const KIND: ScalarKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inverse(&self) -> Option<Self>;
    /// True when the value lies in the image of ℤ.
    fn is_integral(&self) -> bool;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// An element of F₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F2(pub bool);

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Scalar for F2 {
    const KIND: ScalarKind = ScalarKind::F2;

    fn zero() -> Self {
        F2(false)
    }
    fn one() -> Self {
        F2(true)
    }
    fn from_i64(n: i64) -> Self {
        F2(n.rem_euclid(2) == 1)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn add(&self, other: &Self) -> Self {
        F2(self.0 ^ other.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn mul(&self, other: &Self) -> Self {
        F2(self.0 && other.0)
    }
    fn inverse(&self) -> Option<Self> {
        self.0.then_some(*self)
    }
    fn is_integral(&self) -> bool {
        true
    }
}

/// Exact rational numbers.
pub type Q = BigRational;

impl Scalar for BigRational {
    const KIND: ScalarKind = ScalarKind::Rationals;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// Builds the rational `num / den`.
pub fn rational(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Splits an integral rational into `(quotient, remainder)` by 2 with remainder in {0, 1}.
pub(crate) fn div_rem_two(q: &Q) -> Option<(BigInt, BigInt)> {
    if !q.is_integer() {
        return None;
    }
    let n = q.to_integer();
    let two = BigInt::from(2);
    let mut r = &n % &two;
    if r.is_negative() {
        r += &two;
    }
    let quot = (&n - &r) / &two;
    Some((quot, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_arithmetic() {
        let one = F2::one();
        assert!(one.add(&one).is_zero());
        assert_eq!(F2::from_i64(-3), one);
        assert_eq!(F2::zero().inverse(), None);
    }

    #[test]
    fn rational_integrality() {
        assert!(rational(4, 2).is_integral());
        assert!(!rational(1, 2).is_integral());
    }

    #[test]
    fn halving_with_nonnegative_remainder() {
        let (q, r) = div_rem_two(&rational(-3, 1)).unwrap();
        assert_eq!(q, BigInt::from(-2));
        assert_eq!(r, BigInt::from(1));
        assert!(div_rem_two(&rational(1, 2)).is_none());
    }
}
