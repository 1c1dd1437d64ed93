use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{GaussRat, Rat, Ring, UniPoly};

/// Integer polynomial in `(m, l)`, keyed by `(m_exp, l_exp)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntBiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl IntBiPoly {
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigInt)>>(it: I) -> Self {
        let mut out = IntBiPoly::default();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    /// `(m_exp, l_exp, coefficient)` triples.
    pub fn from_i64(terms: &[(u32, u32, i64)]) -> Self {
        IntBiPoly::from_terms(terms.iter().map(|&(m, l, c)| ((m, l), BigInt::from(c))))
    }

    /// Polynomial in `l` alone, from its integer coefficients (low degree first).
    pub fn in_l(coeffs: &[i64]) -> Self {
        IntBiPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| ((0, k as u32), BigInt::from(c))),
        )
    }

    pub fn one() -> Self {
        IntBiPoly::from_i64(&[(0, 0, 1)])
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing `(m, l)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(m, l), c)| (m, l, c))
    }

    pub fn support(&self) -> Vec<(u32, u32)> {
        self.terms.keys().copied().collect()
    }

    pub fn deg_l(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, l)| l).max()
    }

    pub fn deg_m(&self) -> Option<u32> {
        self.terms.keys().map(|&(m, _)| m).max()
    }

    /// `A(m, 1)` as a polynomial in `m` (coefficient map by `m` exponent).
    pub fn eval_l_at_one(&self) -> BTreeMap<u32, BigInt> {
        let mut out: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (&(m, _), c) in &self.terms {
            *out.entry(m).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `A(z, l)` for a Gaussian rational `z`, as a polynomial in `l`.
    pub fn eval_m(&self, z: &GaussRat) -> UniPoly {
        let deg = match self.deg_l() {
            None => return UniPoly::zero(),
            Some(d) => d as usize,
        };
        let mut coeffs = vec![GaussRat::from_int(0); deg + 1];
        for (&(m, l), c) in &self.terms {
            let zm = pow(z, m);
            let term = zm.scale(&Rat::from_integer(c.clone()));
            coeffs[l as usize] = &coeffs[l as usize] + &term;
        }
        UniPoly::new(coeffs)
    }
}

fn pow(z: &GaussRat, e: u32) -> GaussRat {
    (0..e).fold(GaussRat::from_int(1), |acc, _| &acc * z)
}

impl<'a> Add<&'a IntBiPoly> for &'a IntBiPoly {
    type Output = IntBiPoly;
    fn add(self, o: &IntBiPoly) -> IntBiPoly {
        let mut out = self.clone();
        for (&k, c) in &o.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a IntBiPoly> for &'a IntBiPoly {
    type Output = IntBiPoly;
    fn sub(self, o: &IntBiPoly) -> IntBiPoly {
        let mut out = self.clone();
        for (&k, c) in &o.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl<'a> Mul<&'a IntBiPoly> for &'a IntBiPoly {
    type Output = IntBiPoly;
    fn mul(self, o: &IntBiPoly) -> IntBiPoly {
        let mut out = IntBiPoly::default();
        for (&(m1, l1), c1) in &self.terms {
            for (&(m2, l2), c2) in &o.terms {
                out.add_term((m1 + m2, l1 + l2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for IntBiPoly {
    type Output = IntBiPoly;
    fn neg(self) -> IntBiPoly {
        IntBiPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl fmt::Display for IntBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (&(m, l), c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if n > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            let mut parts = Vec::new();
            if !mag.is_one() || (m == 0 && l == 0) {
                parts.push(mag.to_string());
            }
            match m {
                0 => {}
                1 => parts.push("m".into()),
                _ => parts.push(format!("m^{m}")),
            }
            match l {
                0 => {}
                1 => parts.push("l".into()),
                _ => parts.push(format!("l^{l}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}
