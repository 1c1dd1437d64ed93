use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::fmt_rat_short;
use super::{Rat, Ring};
use crate::error::{Error, Result};

/// Element `re + im*i` of the Gaussian rationals `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(Rat::from_integer(n.into()), Rat::zero())
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat::new(re, Rat::zero())
    }

    pub fn i() -> Self {
        GaussRat::new(Rat::zero(), Rat::one())
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotInvertible("0 in Q(i)".into()));
        }
        Ok(GaussRat::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        GaussRat::new(&self.re * k, &self.im * k)
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        GaussRat::from_int(n)
    }
}

impl From<BigInt> for GaussRat {
    fn from(n: BigInt) -> Self {
        GaussRat::from_rat(Rat::from_integer(n))
    }
}

impl Ring for GaussRat {
    fn zero() -> Self {
        GaussRat::default()
    }
    fn one() -> Self {
        GaussRat::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        match (self.im.is_zero(), o.im.is_zero()) {
            (true, true) => GaussRat::from_rat(&self.re * &o.re),
            (true, false) => GaussRat::new(&self.re * &o.re, &self.re * &o.im),
            (false, true) => GaussRat::new(&self.re * &o.re, &self.im * &o.re),
            (false, false) => GaussRat::new(
                &self.re * &o.re - &self.im * &o.im,
                &self.re * &o.im + &self.im * &o.re,
            ),
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        &self + &o
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        &self - &o
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        &self * &o
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat_short(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rat_short(&self.im)),
            (false, false) => {
                let sign = if self.im < Rat::zero() { '-' } else { '+' };
                let im = if self.im < Rat::zero() { -self.im.clone() } else { self.im.clone() };
                write!(f, "({}{}{}i)", fmt_rat_short(&self.re), sign, fmt_rat_short(&im))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussRat::i();
        assert_eq!(&i * &i, GaussRat::from_int(-1));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let z = GaussRat::new(rat(1, 1), rat(1, 1));
        let w = z.inv().unwrap();
        assert_eq!(w, GaussRat::new(rat(1, 2), rat(-1, 2)));
        assert_eq!(&z * &w, GaussRat::one());
        assert!(GaussRat::zero().inv().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(GaussRat::new(rat(1, 2), rat(-3, 1)).to_string(), "(1/2-3i)");
        assert_eq!(GaussRat::i().to_string(), "1i");
        assert_eq!(GaussRat::from_int(-4).to_string(), "-4");
    }
}
