//! Coefficient-ring abstraction shared by every algebraic container in the crate.
//!
//! All containers (`UPoly`, `SuperPoly`, `SuperMatrix`, ...) are generic over
//! [`Ring`]. Only exact rings are instantiated: floating point never enters a
//! verification path.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rationals.
pub type Q = BigRational;

/// Builds the rational `num/den`.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A (not necessarily commutative) ring with a canonical copy of Q inside it.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(q: &Q) -> Self;

    /// The inverse of `self` when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&qi(n))
    }

    fn scale(&self, q: &Q) -> Self {
        self.clone() * Self::from_rational(q)
    }
}

/// A commutative ring in which every nonzero element is a unit.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            self.unit_inverse()
        }
    }
}

impl Ring for Q {
    fn from_rational(q: &Q) -> Self {
        q.clone()
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for Q {}

/// Sign `(-1)^k` as a rational.
pub fn sign(odd: bool) -> Q {
    if odd {
        -Q::one()
    } else {
        Q::one()
    }
}
