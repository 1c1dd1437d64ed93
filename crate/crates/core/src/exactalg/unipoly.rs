use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{GaussRat, Rat, Ring};
use crate::error::{Error, Result};

/// Degree of a univariate polynomial. The zero polynomial has degree
/// `NegInfinity`, which sorts below every finite degree and absorbs under
/// addition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, o: Degree) -> Degree {
        match (self, o) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial over `Q(i)`; `coeffs[k]` is the coefficient
/// of `u^k`. The last stored coefficient is always nonzero, so the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<GaussRat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| GaussRat::from_int(c)).collect())
    }

    pub fn constant(c: GaussRat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn monomial(c: GaussRat, k: usize) -> Self {
        let mut coeffs = vec![GaussRat::zero(); k];
        coeffs.push(c);
        UniPoly::new(coeffs)
    }

    /// The indeterminate `u`.
    pub fn var() -> Self {
        UniPoly::monomial(GaussRat::one(), 1)
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussRat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&GaussRat> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True when every coefficient lies in `Q`.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussRat::is_real)
    }

    pub fn eval(&self, x: &GaussRat) -> GaussRat {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussRat::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn scale(&self, k: &GaussRat) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rat::from_integer(k.into())))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division over `Q(i)`: returns `(q, r)` with
    /// `self = q*d + r` and `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?;
        let dl_inv = dl.inv()?;
        let monic = dl.is_one();
        let dn = d.coeffs.len();
        if self.coeffs.len() < dn {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussRat::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let c = if monic {
                rem[k + dn - 1].clone()
            } else {
                &rem[k + dn - 1] * &dl_inv
            };
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if dc.is_zero() {
                    continue;
                }
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dn - 1);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; errors if `d` does not divide `self`.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Invariant(format!("{d} does not divide {self}")));
        }
        Ok(q)
    }

    /// Monic gcd over `Q(i)`.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Extended Euclid: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc_inv = r0.leading().expect("nonzero gcd").inv()?;
        Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), t0.scale(&lc_inv)))
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        let g = self.gcd(&self.derivative())?;
        Ok(g.is_constant())
    }

    /// Multiplicity of `root` as a root of `self` (0 for the zero polynomial).
    pub fn root_multiplicity(&self, root: &GaussRat) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = UniPoly::new(vec![-root.clone(), GaussRat::one()]);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(&lin).expect("linear divisor");
            if !r.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }
}

impl UniPoly {
    /// Renders with the given variable name instead of `u`.
    pub fn display_in(&self, var: &str) -> String {
        struct Named<'a>(&'a [GaussRat], &'a str);
        impl fmt::Display for Named<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt_poly(f, self.0, self.1)
            }
        }
        Named(&self.coeffs, var).to_string()
    }
}

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        UniPoly::constant(GaussRat::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, o: UniPoly) -> UniPoly {
        &self + &o
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, o: UniPoly) -> UniPoly {
        &self - &o
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, o: UniPoly) -> UniPoly {
        &self * &o
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "u")
    }
}

/// Renders coefficients highest degree first, e.g. `u^2+5u+5`.
pub(crate) fn fmt_poly(f: &mut fmt::Formatter<'_>, coeffs: &[GaussRat], var: &str) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = if c.is_real() && c.re.cmp(&Rat::zero()) == Ordering::Less {
            (true, -c.clone())
        } else {
            (false, c.clone())
        };
        if neg {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        first = false;
        let unit = mag == GaussRat::one();
        match k {
            0 => write!(f, "{mag}")?,
            _ => {
                if !unit {
                    write!(f, "{mag}")?;
                }
                if k == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{k}")?;
                }
            }
        }
    }
    Ok(())
}
