use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rational::{fmt_rat_short, frac_part};
use super::{Rat, Ring};

/// Root of unity `exp(2*pi*i*theta)` stored by its rotation number
/// `theta in [0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootOfUnity(Rat);

impl RootOfUnity {
    pub fn new(theta: &Rat) -> Self {
        RootOfUnity(frac_part(theta))
    }

    pub fn one() -> Self {
        RootOfUnity(Rat::zero())
    }

    pub fn rotation(&self) -> &Rat {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }

    pub fn mul(&self, o: &RootOfUnity) -> RootOfUnity {
        RootOfUnity::new(&(&self.0 + &o.0))
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(&-self.0.clone())
    }

    pub fn pow(&self, k: &BigInt) -> RootOfUnity {
        RootOfUnity::new(&(&self.0 * Rat::from_integer(k.clone())))
    }

    /// Multiplicative order (the reduced denominator of the rotation number).
    pub fn order(&self) -> BigInt {
        self.0.denom().clone()
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else {
            write!(f, "e(2pi*i*{})", fmt_rat_short(&self.0))
        }
    }
}

/// Integer combination of roots of unity, i.e. an element of the group ring
/// `Z[Q/Z]`. Entries of monomial matrices with root-of-unity entries live
/// here, and products of such matrices never need the cyclotomic relations.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CycloSum {
    terms: BTreeMap<RootOfUnity, BigInt>,
}

impl CycloSum {
    pub fn root(z: RootOfUnity) -> Self {
        CycloSum::from_terms([(z, BigInt::from(1))])
    }

    pub fn int(n: i64) -> Self {
        CycloSum::from_terms([(RootOfUnity::one(), BigInt::from(n))])
    }

    pub fn from_terms<I: IntoIterator<Item = (RootOfUnity, BigInt)>>(it: I) -> Self {
        let mut out = CycloSum::default();
        for (z, c) in it {
            out.add_term(z, c);
        }
        out
    }

    fn add_term(&mut self, z: RootOfUnity, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(z.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&z);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RootOfUnity, &BigInt)> {
        self.terms.iter()
    }

    /// If this is a single `±zeta`, return it.
    pub fn as_signed_root(&self) -> Option<(i64, &RootOfUnity)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (z, c) = self.terms.iter().next()?;
        match c {
            c if *c == BigInt::from(1) => Some((1, z)),
            c if *c == BigInt::from(-1) => Some((-1, z)),
            _ => None,
        }
    }
}

impl Ring for CycloSum {
    fn zero() -> Self {
        CycloSum::default()
    }
    fn one() -> Self {
        CycloSum::int(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for CycloSum {
    type Output = CycloSum;
    fn add(mut self, o: CycloSum) -> CycloSum {
        for (z, c) in o.terms {
            self.add_term(z, c);
        }
        self
    }
}

impl Sub for CycloSum {
    type Output = CycloSum;
    fn sub(self, o: CycloSum) -> CycloSum {
        self + (-o)
    }
}

impl Mul for CycloSum {
    type Output = CycloSum;
    fn mul(self, o: CycloSum) -> CycloSum {
        let mut out = CycloSum::default();
        for (z1, c1) in &self.terms {
            for (z2, c2) in &o.terms {
                out.add_term(z1.mul(z2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for CycloSum {
    type Output = CycloSum;
    fn neg(self) -> CycloSum {
        CycloSum {
            terms: self.terms.into_iter().map(|(z, c)| (z, -c)).collect(),
        }
    }
}

impl fmt::Display for CycloSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (z, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if n > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if mag == BigInt::from(1) {
                write!(f, "{z}")?;
            } else {
                write!(f, "{mag}*{z}")?;
            }
        }
        Ok(())
    }
}
