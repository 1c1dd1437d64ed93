use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlinalg::IntMat;

/// Knot given by a Seifert matrix `V` of a genus-`g` Seifert surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertKnot {
    name: String,
    v: IntMat,
}

impl SeifertKnot {
    /// Validates that `V` is `2g x 2g` and that `V - V^T` is unimodular with
    /// determinant 1, as the intersection form of a symplectic basis must be.
    pub fn new(name: impl Into<String>, v: IntMat) -> Result<Self> {
        if !v.is_square() {
            return Err(Error::NotSquare {
                rows: v.rows(),
                cols: v.cols(),
            });
        }
        if !v.rows().is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "Seifert matrix must have even dimension, got {}",
                v.rows()
            )));
        }
        let form = &v - &v.transpose();
        let d = form.det()?;
        if !d.is_one() {
            return Err(Error::InvalidInput(format!("det(V - V^T) must be 1, got {d}")));
        }
        Ok(SeifertKnot { name: name.into(), v })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn seifert_matrix(&self) -> &IntMat {
        &self.v
    }

    pub fn genus(&self) -> usize {
        self.v.rows() / 2
    }

    /// `W = V + V^T`, the exponent matrix of the relations on the diagonal
    /// generator images.
    pub fn symmetrized(&self) -> IntMat {
        &self.v + &self.v.transpose()
    }

    pub fn determinant(&self) -> Result<BigInt> {
        let d = self.symmetrized().det()?.abs();
        if d.is_zero() {
            return Err(Error::InvalidInput(format!(
                "{}: det(V + V^T) = 0, not a knot Seifert matrix",
                self.name
            )));
        }
        Ok(d)
    }

    /// Block sum, the Seifert matrix of the connected sum.
    pub fn connected_sum(&self, other: &SeifertKnot, name: impl Into<String>) -> Result<Self> {
        let (a, b) = (self.v.rows(), other.v.rows());
        let mut m = IntMat::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..a {
                m[(i, j)] = self.v[(i, j)].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                m[(a + i, a + j)] = other.v[(i, j)].clone();
            }
        }
        SeifertKnot::new(name, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> SeifertKnot {
        SeifertKnot::new("3_1", IntMat::from_i64(&[&[-1, 1], &[0, -1]]).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_and_figure_eight() {
        assert_eq!(trefoil().determinant().unwrap(), BigInt::from(3));
        let f8 = SeifertKnot::new("4_1", IntMat::from_i64(&[&[1, 1], &[0, -1]]).unwrap()).unwrap();
        assert_eq!(f8.determinant().unwrap(), BigInt::from(5));
        assert_eq!(f8.genus(), 1);
    }

    #[test]
    fn rejects_odd_dimension_and_bad_form() {
        let odd = IntMat::from_i64(&[&[1]]).unwrap();
        assert!(SeifertKnot::new("x", odd).is_err());
        let sym = IntMat::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(SeifertKnot::new("x", sym).is_err());
    }

    #[test]
    fn determinant_is_odd_for_valid_forms() {
        // det(V + V^T) = det(V - V^T) = 1 mod 2, so it can never vanish
        let v = IntMat::from_i64(&[&[0, 1], &[0, 0]]).unwrap();
        let k = SeifertKnot::new("unknot", v).unwrap();
        assert_eq!(k.determinant().unwrap(), BigInt::from(1));
    }

    #[test]
    fn connected_sum_multiplies_determinants() {
        let t = trefoil();
        let granny = t.connected_sum(&t, "3_1#3_1").unwrap();
        assert_eq!(granny.genus(), 2);
        assert_eq!(granny.determinant().unwrap(), BigInt::from(9));
    }
}
