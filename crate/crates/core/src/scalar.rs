//! Scalar abstraction for the algebra layer.
//!
//! The polynomial, rational-function and linear-solver code is generic over
//! the coefficient type. Verification always runs on arbitrary-precision
//! rationals ([`crate::Rat`]); the generic layer keeps the numeric kernel
//! reusable with other field-like scalars (e.g. `f64` for quick experiments).

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Ring-like scalar: enough structure for polynomial arithmetic.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Embeds a small natural number (used for derivative exponents).
    fn from_nat(n: u32) -> Self {
        let mut acc = Self::zero();
        for _ in 0..n {
            acc = acc + Self::one();
        }
        acc
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Field scalar: adds exact division. Gaussian elimination requires this.
pub trait FieldScalar: Scalar + Div<Output = Self> {}

impl<T> FieldScalar for T where T: Scalar + Div<Output = T> {}
