use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::scalars::Gaussian;

/// Commutative ring element with context-free constants.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// A scalar with (possibly failing) inversion. Fails only for zero or zero divisors.
pub trait Field: Scalar {
    fn inv(&self) -> Result<Self>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * &other.inv()?)
    }
}

/// Scalars containing a copy of Q(i).
pub trait GaussianAlgebra: Scalar {
    fn from_gaussian(g: &Gaussian) -> Self;

    fn imag_unit() -> Self {
        Self::from_gaussian(&Gaussian::i())
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_gaussian(&Gaussian::from_ratio(n, d))
    }
}

/// Integral domains with exact division (`None` when the quotient does not exist).
pub trait ExactDiv: Scalar {
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

/// Implements the owned/borrowed binary operator matrix from `fn(&T, &T) -> T` helpers.
#[macro_export]
#[doc(hidden)]
macro_rules! impl_ops_via_ref {
    ($t:ty, $add:ident, $sub:ident, $mul:ident, $neg:ident) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                $add(&self, &o)
            }
        }
        impl<'a> std::ops::Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, o: &'a $t) -> $t {
                $add(&self, o)
            }
        }
        impl<'a, 'b> std::ops::Add<&'a $t> for &'b $t {
            type Output = $t;
            fn add(self, o: &'a $t) -> $t {
                $add(self, o)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                $sub(&self, &o)
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, o: &'a $t) -> $t {
                $sub(&self, o)
            }
        }
        impl<'a, 'b> std::ops::Sub<&'a $t> for &'b $t {
            type Output = $t;
            fn sub(self, o: &'a $t) -> $t {
                $sub(self, o)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                $mul(&self, &o)
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, o: &'a $t) -> $t {
                $mul(&self, o)
            }
        }
        impl<'a, 'b> std::ops::Mul<&'a $t> for &'b $t {
            type Output = $t;
            fn mul(self, o: &'a $t) -> $t {
                $mul(self, o)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $neg(&self)
            }
        }
        impl<'a> std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                $neg(self)
            }
        }
    };
}
