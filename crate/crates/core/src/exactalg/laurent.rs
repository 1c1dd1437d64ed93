use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{GaussRat, Rat, Ring, UniPoly};

/// Sparse element of `Z[s, s^-1][u]`, keyed by `(s_exp, u_exp)`.
///
/// Here `s` is a square root of the Riley parameter `t`, so entries of the
/// Riley matrices, which involve `t^(1/2)`, are honest Laurent polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentBiPoly {
    terms: BTreeMap<(i64, u32), BigInt>,
}

impl LaurentBiPoly {
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, u32), BigInt)>,
    {
        let mut out = LaurentBiPoly::default();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// `c * s^s_exp * u^u_exp`.
    pub fn monomial(c: i64, s_exp: i64, u_exp: u32) -> Self {
        LaurentBiPoly::from_terms([((s_exp, u_exp), BigInt::from(c))])
    }

    pub fn s_pow(k: i64) -> Self {
        LaurentBiPoly::monomial(1, k, 0)
    }

    pub fn u() -> Self {
        LaurentBiPoly::monomial(1, 0, 1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentBiPoly::monomial(c, 0, 0)
    }

    fn add_term(&mut self, key: (i64, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &BigInt)> {
        self.terms.iter().map(|(&(s, u), c)| (s, u, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn u_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, u)| u).max()
    }

    /// Coefficient of `u^k`, as a Laurent polynomial in `s` alone.
    pub fn u_coeff(&self, k: u32) -> LaurentBiPoly {
        LaurentBiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, u), _)| u == k)
                .map(|(&(s, _), c)| ((s, 0), c.clone())),
        )
    }

    /// If `self` is `±s^k` (no `u`), returns `(sign, k)`.
    pub fn as_signed_s_monomial(&self) -> Option<(i64, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(s, u), c) = self.terms.iter().next()?;
        if u != 0 || c.abs() != BigInt::one() {
            return None;
        }
        Some((if c.is_positive() { 1 } else { -1 }, s))
    }

    /// True when every stored `s`-exponent is even, i.e. the element lies in
    /// `Z[t, t^-1][u]`.
    pub fn has_even_s_parity(&self) -> bool {
        self.terms.keys().all(|&(s, _)| s % 2 == 0)
    }

    /// Multiply by `s^k`.
    pub fn shift_s(&self, k: i64) -> Self {
        LaurentBiPoly {
            terms: self.terms.iter().map(|(&(s, u), c)| ((s + k, u), c.clone())).collect(),
        }
    }

    /// Substitute `s = i` (so `t = -1`), reducing exponents modulo 4.
    pub fn eval_s_to_i(&self) -> UniPoly {
        let deg = match self.u_degree() {
            None => return UniPoly::zero(),
            Some(d) => d as usize,
        };
        let mut coeffs = vec![GaussRat::zero(); deg + 1];
        for (&(s, u), c) in &self.terms {
            let c = Rat::from_integer(c.clone());
            let z = match s.rem_euclid(4) {
                0 => GaussRat::from_rat(c),
                1 => GaussRat::new(Rat::zero(), c),
                2 => GaussRat::from_rat(-c),
                _ => GaussRat::new(Rat::zero(), -c),
            };
            let slot = &mut coeffs[u as usize];
            *slot = &*slot + &z;
        }
        UniPoly::new(coeffs)
    }
}

impl Ring for LaurentBiPoly {
    fn zero() -> Self {
        LaurentBiPoly::default()
    }
    fn one() -> Self {
        LaurentBiPoly::constant(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<'a> Add<&'a LaurentBiPoly> for &'a LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn add(self, o: &LaurentBiPoly) -> LaurentBiPoly {
        let mut out = self.clone();
        for (&k, c) in &o.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentBiPoly> for &'a LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn sub(self, o: &LaurentBiPoly) -> LaurentBiPoly {
        let mut out = self.clone();
        for (&k, c) in &o.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentBiPoly> for &'a LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn mul(self, o: &LaurentBiPoly) -> LaurentBiPoly {
        let mut out = LaurentBiPoly::default();
        for (&(s1, u1), c1) in &self.terms {
            for (&(s2, u2), c2) in &o.terms {
                out.add_term((s1 + s2, u1 + u2), c1 * c2);
            }
        }
        out
    }
}

impl Add for LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn add(self, o: LaurentBiPoly) -> LaurentBiPoly {
        &self + &o
    }
}

impl Sub for LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn sub(self, o: LaurentBiPoly) -> LaurentBiPoly {
        &self - &o
    }
}

impl Mul for LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn mul(self, o: LaurentBiPoly) -> LaurentBiPoly {
        &self * &o
    }
}

impl Neg for LaurentBiPoly {
    type Output = LaurentBiPoly;
    fn neg(self) -> LaurentBiPoly {
        LaurentBiPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest s first
        for (n, (&(s, u), c)) in self.terms.iter().rev().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if n > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            let mut parts = Vec::new();
            if !mag.is_one() || (s == 0 && u == 0) {
                parts.push(mag.to_string());
            }
            match s {
                0 => {}
                1 => parts.push("s".into()),
                _ => parts.push(format!("s^{s}")),
            }
            match u {
                0 => {}
                1 => parts.push("u".into()),
                _ => parts.push(format!("u^{u}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_product() {
        let p = &LaurentBiPoly::s_pow(1) * &LaurentBiPoly::s_pow(-1);
        assert_eq!(p, LaurentBiPoly::one());
    }

    #[test]
    fn hand_expansion() {
        let a = &LaurentBiPoly::s_pow(2) - &LaurentBiPoly::u();
        let got = &a * &LaurentBiPoly::s_pow(-2);
        let want = &LaurentBiPoly::one() - &LaurentBiPoly::monomial(1, -2, 1);
        assert_eq!(got, want);
        assert_eq!(&a * &LaurentBiPoly::one(), a);
    }

    #[test]
    fn eval_at_i() {
        assert_eq!(LaurentBiPoly::s_pow(2).eval_s_to_i(), UniPoly::from_ints(&[-1]));
        let a = &LaurentBiPoly::s_pow(2) - &LaurentBiPoly::u();
        assert_eq!(a.eval_s_to_i(), UniPoly::from_ints(&[-1, -1]));
        let inv = LaurentBiPoly::s_pow(-1).eval_s_to_i();
        assert_eq!(inv, UniPoly::constant(-GaussRat::i()));
        assert_eq!(LaurentBiPoly::zero().eval_s_to_i(), UniPoly::zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = LaurentBiPoly::monomial(3, -1, 2);
        assert!((&a - &a).is_empty());
    }

    #[test]
    fn parity_and_coefficients() {
        let a = &LaurentBiPoly::monomial(2, 2, 1) + &LaurentBiPoly::monomial(-1, -4, 1);
        assert!(a.has_even_s_parity());
        assert!(!(&a + &LaurentBiPoly::s_pow(1)).has_even_s_parity());
        assert_eq!(a.u_degree(), Some(1));
        assert_eq!(a.u_coeff(1).len(), 2);
        assert_eq!(LaurentBiPoly::monomial(-1, 3, 0).as_signed_s_monomial(), Some((-1, 3)));
        assert_eq!(a.as_signed_s_monomial(), None);
    }

    #[test]
    fn display() {
        let a = &LaurentBiPoly::s_pow(2) - &LaurentBiPoly::u();
        assert_eq!(a.to_string(), "s^2-u");
    }
}
