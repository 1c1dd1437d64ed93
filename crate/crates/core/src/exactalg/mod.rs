//! Exact arithmetic kernel.
//!
//! Everything here is exact: rationals and Gaussian rationals over
//! arbitrary-precision integers, dense univariate polynomials over `Q(i)`,
//! the sparse ring `Z[s, s^-1][u]`, and 2x2 matrices over any of these.

mod cyclo;
mod gauss;
mod laurent;
mod mat2;
mod quotient;
mod rational;
mod roots;
mod unipoly;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use cyclo::{CycloSum, RootOfUnity};
pub use gauss::GaussRat;
pub use laurent::LaurentBiPoly;
pub use mat2::Mat2;
pub use quotient::QuotientRing;
pub use rational::{fmt_rat, frac_part, rat, Rat};
pub use roots::{approx_real_roots, count_real_roots, ApproxRoots};
pub use unipoly::{Degree, UniPoly};

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}
