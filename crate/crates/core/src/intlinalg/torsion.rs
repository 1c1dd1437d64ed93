use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{smith_normal_form, IntMat};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rat, frac_part, Rat};

/// Point of `(Q/Z)^n`, each entry the rotation number `theta_j` of an
/// eigenvalue `exp(2*pi*i*theta_j)`. Entries are kept in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RotationVector(Vec<Rat>);

impl RotationVector {
    /// Reduces every entry mod 1.
    pub fn new(thetas: Vec<Rat>) -> Self {
        RotationVector(thetas.iter().map(frac_part).collect())
    }

    pub fn zero(n: usize) -> Self {
        RotationVector(vec![Rat::zero(); n])
    }

    pub fn thetas(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `-theta mod 1`, the rotation vector of the inverse eigenvalues.
    pub fn negate(&self) -> Self {
        RotationVector::new(self.0.iter().map(|t| -t.clone()).collect())
    }

    /// lcm of the denominators.
    pub fn order(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::from(1), |acc, t| num_integer::Integer::lcm(&acc, t.denom()))
    }

    /// `w * theta` as exact rationals (not reduced mod 1).
    pub fn apply(&self, w: &IntMat) -> Vec<Rat> {
        (0..w.rows())
            .map(|i| {
                w.row(i)
                    .iter()
                    .zip(&self.0)
                    .map(|(a, t)| Rat::from_integer(a.clone()) * t)
                    .sum()
            })
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_rat).collect()
    }
}

impl Serialize for RotationVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl fmt::Display for RotationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// All `theta in (Q/Z)^n` with `w * theta = 0 mod 1`, in lexicographic order.
///
/// With `u * w * vt = diag(d)`, the solutions are exactly
/// `vt * psi mod 1` for `psi_i in {0, 1/d_i, ..., (d_i - 1)/d_i}`, so there
/// are `|det w|` of them.
pub fn torsion_solutions(w: &IntMat) -> Result<Vec<RotationVector>> {
    let snf = smith_normal_form(w)?;
    let factors = snf.invariant_factors();
    if factors.iter().any(Zero::is_zero) {
        return Err(Error::SingularMatrix);
    }
    let radices: Vec<u64> = factors
        .iter()
        .map(|d| {
            d.to_u64()
                .ok_or_else(|| Error::InvalidInput(format!("invariant factor {d} too large to enumerate")))
        })
        .collect::<Result<_>>()?;
    let total: u64 = radices.iter().product();
    let n = w.rows();
    let vt = &snf.vt;

    let mut out: Vec<RotationVector> = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let psi: Vec<Rat> = radices
                .iter()
                .map(|&d| {
                    let k = idx % d;
                    idx /= d;
                    Rat::new(BigInt::from(k), BigInt::from(d))
                })
                .collect();
            let theta = (0..n)
                .map(|i| {
                    vt.row(i)
                        .iter()
                        .zip(&psi)
                        .map(|(a, p)| Rat::from_integer(a.clone()) * p)
                        .sum()
                })
                .collect();
            RotationVector::new(theta)
        })
        .collect();
    out.sort();
    let before = out.len();
    out.dedup();
    if out.len() != before {
        return Err(Error::Invariant("torsion enumeration produced duplicates".into()));
    }
    Ok(out)
}
