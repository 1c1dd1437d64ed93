use std::fmt;
use std::ops::{Mul, Neg, Sub};

use super::Ring;
use crate::error::{Error, Result};

/// 2x2 matrix `[[a, b], [c, d]]` over a commutative ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn diag(x: R, y: R) -> Self {
        Mat2::new(x, R::zero(), R::zero(), y)
    }

    pub fn det(&self) -> R {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> R {
        self.a.clone() + self.d.clone()
    }

    pub fn adjugate(&self) -> Self {
        Mat2::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    /// Inverse of an `SL(2)` element, which is its adjugate.
    pub fn inv_sl2(&self) -> Result<Self> {
        if !self.det().is_one() {
            return Err(Error::NotInvertible(format!(
                "determinant {:?} is not 1",
                self.det()
            )));
        }
        Ok(self.adjugate())
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.d.is_one() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|e| e.is_zero())
    }

    pub fn entries(&self) -> [&R; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn map<S, F: Fn(&R) -> S>(&self, f: F) -> Mat2<S> {
        Mat2 {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|e| e.clone() * k.clone())
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Mat2::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl<'a, R: Ring> Mul<&'a Mat2<R>> for &'a Mat2<R> {
    type Output = Mat2<R>;
    fn mul(self, o: &Mat2<R>) -> Mat2<R> {
        Mat2::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        )
    }
}

impl<R: Ring> Mul for Mat2<R> {
    type Output = Mat2<R>;
    fn mul(self, o: Mat2<R>) -> Mat2<R> {
        &self * &o
    }
}

impl<'a, R: Ring> Sub<&'a Mat2<R>> for &'a Mat2<R> {
    type Output = Mat2<R>;
    fn sub(self, o: &Mat2<R>) -> Mat2<R> {
        Mat2::new(
            self.a.clone() - o.a.clone(),
            self.b.clone() - o.b.clone(),
            self.c.clone() - o.c.clone(),
            self.d.clone() - o.d.clone(),
        )
    }
}

impl<R: Ring> Neg for Mat2<R> {
    type Output = Mat2<R>;
    fn neg(self) -> Mat2<R> {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl<R: fmt::Display> fmt::Display for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
