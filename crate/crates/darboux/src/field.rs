//! Coefficient fields for polynomial arithmetic.
//!
//! Everything downstream is generic over [`Field`]; the two instances are
//! arbitrary-precision rationals and the eighth cyclotomic field
//! [`Cyc8`](crate::cyclotomic::Cyc8). There is no floating-point
//! representation anywhere: all arithmetic is exact.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, kept in canonical form
/// (gcd-reduced, positive denominator, zero as 0/1).
pub type Rational = BigRational;

/// Exact field used for polynomial coefficients.
///
/// Methods take references so large coefficients are never cloned implicitly.
pub trait Field: Clone + PartialEq + Eq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Canonical embedding of the rationals.
    fn from_rational(value: &Rational) -> Self;

    fn from_integer(value: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(value)))
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Resolves an identifier that names a scalar of this field in textual
    /// input (`z8` for the eighth cyclotomic field). `None` means the
    /// identifier is not a field scalar.
    fn scalar_ident(name: &str) -> Option<Self>;

    /// True when the canonical printed form starts with a minus sign; the
    /// polynomial printer folds it into a binary `-`.
    fn has_leading_minus(&self) -> bool;

    /// True when the printed form is a sum and needs parentheses before
    /// `*monomial`.
    fn needs_parens(&self) -> bool;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn neg(&self) -> Self {
        -self
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn scalar_ident(_name: &str) -> Option<Self> {
        None
    }

    fn has_leading_minus(&self) -> bool {
        self.is_negative()
    }

    fn needs_parens(&self) -> bool {
        false
    }
}
