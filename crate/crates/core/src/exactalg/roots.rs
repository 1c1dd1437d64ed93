//! Approximate root display for real polynomials via Sturm sequences.
//!
//! Nothing in here feeds back into verification; the values are for
//! human-readable reports only.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rat, Ring, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxRoots {
    /// Distinct real roots, ascending.
    pub real: Vec<f64>,
    /// Number of distinct non-real conjugate pairs.
    pub complex_pairs: usize,
}

fn real_coeffs(p: &UniPoly) -> Result<Vec<Rat>> {
    if !p.is_real() {
        return Err(Error::InvalidInput(format!("{p} has non-real coefficients")));
    }
    Ok(p.coeffs().iter().map(|c| c.re.clone()).collect())
}

fn eval(coeffs: &[Rat], x: &Rat) -> Rat {
    coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

fn squarefree_part(p: &UniPoly) -> Result<UniPoly> {
    let g = p.gcd(&p.derivative())?;
    p.exact_div(&g)
}

struct Sturm(Vec<Vec<Rat>>);

impl Sturm {
    fn new(p: &UniPoly) -> Result<Self> {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        Ok(Sturm(chain.iter().map(real_coeffs).collect::<Result<_>>()?))
    }

    /// Sign changes at `x`, skipping zeros.
    fn variations(&self, x: &Rat) -> usize {
        let mut last = 0i8;
        let mut n = 0;
        for q in &self.0 {
            let v = eval(q, x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                continue;
            };
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
        n
    }

    fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.variations(a) - self.variations(b)
    }
}

fn cauchy_bound(coeffs: &[Rat]) -> Rat {
    let lead = coeffs.last().expect("nonzero").abs();
    let m = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rat::zero);
    m + Rat::one()
}

/// Number of distinct real roots of a polynomial with rational coefficients.
pub fn count_real_roots(p: &UniPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::InvalidInput("zero polynomial has no finite root set".into()));
    }
    if p.is_constant() {
        return Ok(0);
    }
    let sf = squarefree_part(p)?;
    let sturm = Sturm::new(&sf)?;
    let b = cauchy_bound(&real_coeffs(&sf)?);
    Ok(sturm.count(&-b.clone(), &b))
}

/// Isolates and refines every distinct real root to relative width about
/// `1e-15`, and counts the remaining complex pairs.
pub fn approx_real_roots(p: &UniPoly) -> Result<ApproxRoots> {
    if p.is_zero() {
        return Err(Error::InvalidInput("zero polynomial has no finite root set".into()));
    }
    let sf = squarefree_part(p)?;
    let degree = sf.degree().finite().unwrap_or(0);
    if degree == 0 {
        return Ok(ApproxRoots { real: vec![], complex_pairs: 0 });
    }
    let coeffs = real_coeffs(&sf)?;
    let sturm = Sturm::new(&sf)?;
    let bound = cauchy_bound(&coeffs);
    let two = Rat::from_integer(BigInt::from(2));
    let eps = Rat::new(BigInt::one(), BigInt::from(10u64).pow(15));

    let mut stack = vec![(-bound.clone(), bound)];
    let mut isolated = Vec::new();
    while let Some((a, b)) = stack.pop() {
        match sturm.count(&a, &b) {
            0 => {}
            1 => isolated.push((a, b)),
            _ => {
                let mid = (&a + &b) / &two;
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }

    let mut real: Vec<f64> = isolated
        .into_iter()
        .map(|(mut a, mut b)| {
            // root lies in (a, b]
            loop {
                if eval(&coeffs, &b).is_zero() {
                    return b.to_f64().unwrap_or(f64::NAN);
                }
                let scale = if b.abs() > Rat::one() { b.abs() } else { Rat::one() };
                if &b - &a < &eps * scale {
                    return ((&a + &b) / &two).to_f64().unwrap_or(f64::NAN);
                }
                let mid = (&a + &b) / &two;
                if sturm.count(&a, &mid) == 1 {
                    b = mid;
                } else {
                    a = mid;
                }
            }
        })
        .collect();
    real.sort_by(|x, y| x.partial_cmp(y).expect("finite roots"));
    let complex_pairs = (degree - real.len()) / 2;
    Ok(ApproxRoots { real, complex_pairs })
}
