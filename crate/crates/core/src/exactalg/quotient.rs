use super::{Mat2, Ring, UniPoly};
use crate::error::{Error, Result};

/// The residue ring `Q(i)[u] / (f)` for a nonzero modulus `f`.
///
/// Elements are plain [`UniPoly`] values; every operation returns the
/// canonical remainder of degree below `deg f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    modulus: UniPoly,
}

impl QuotientRing {
    pub fn new(modulus: &UniPoly) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuotientRing {
            modulus: modulus.monic(),
        })
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn reduce(&self, p: &UniPoly) -> UniPoly {
        p.rem(&self.modulus).expect("modulus is nonzero")
    }

    pub fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.reduce(&(a * b))
    }

    pub fn inv(&self, a: &UniPoly) -> Result<UniPoly> {
        let a = self.reduce(a);
        if a.is_zero() {
            return Err(Error::NotInvertible("0 in residue ring".into()));
        }
        let (g, s, _) = a.ext_gcd(&self.modulus)?;
        if !g.is_one() {
            return Err(Error::NotInvertible(format!(
                "{a} shares the factor {g} with the modulus {}",
                self.modulus
            )));
        }
        Ok(self.reduce(&s))
    }

    pub fn mat_reduce(&self, m: &Mat2<UniPoly>) -> Mat2<UniPoly> {
        m.map(|e| self.reduce(e))
    }

    pub fn mat_mul(&self, x: &Mat2<UniPoly>, y: &Mat2<UniPoly>) -> Mat2<UniPoly> {
        self.mat_reduce(&(x * y))
    }

    pub fn mat_pow(&self, m: &Mat2<UniPoly>, mut exp: u64) -> Mat2<UniPoly> {
        let mut base = self.mat_reduce(m);
        let mut acc = Mat2::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mat_mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mat_mul(&base, &base);
            }
        }
        acc
    }

    /// Inverse via the adjugate scaled by `det^-1`; fails when the
    /// determinant is a zero divisor mod `f`.
    pub fn mat_inv(&self, m: &Mat2<UniPoly>) -> Result<Mat2<UniPoly>> {
        let det = self.reduce(&m.det());
        let k = self.inv(&det)?;
        Ok(m.adjugate().map(|e| self.mul(e, &k)))
    }

    pub fn mat_is_zero(&self, m: &Mat2<UniPoly>) -> bool {
        m.entries().iter().all(|e| self.reduce(e).is_zero())
    }
}
