use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Two-bridge knot `S(p, q)` in Schubert's normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoBridge {
    name: String,
    p: i64,
    q: i64,
}

impl TwoBridge {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        Self::named(format!("S({p},{q})"), p, q)
    }

    pub fn named(name: impl Into<String>, p: i64, q: i64) -> Result<Self> {
        if p % 2 == 0 {
            return Err(Error::InvalidInput(format!("p must be odd, got {p}")));
        }
        if p < 3 {
            return Err(Error::InvalidInput(format!("p must be at least 3, got {p}")));
        }
        if q % 2 == 0 {
            return Err(Error::InvalidInput(format!("q must be odd, got {q}")));
        }
        if q == 0 || q.abs() >= p {
            return Err(Error::InvalidInput(format!("need p > |q| > 0, got p={p} q={q}")));
        }
        if p.gcd(&q.abs()) != 1 {
            return Err(Error::InvalidInput(format!("p and q must be coprime, got p={p} q={q}")));
        }
        Ok(TwoBridge { name: name.into(), p, q })
    }

    /// Reduces `q` into `(-p, p)` modulo `2p`, which leaves the sign
    /// sequence unchanged, then validates.
    pub fn canonical(p: i64, q: i64) -> Result<Self> {
        if p <= 0 {
            return Err(Error::InvalidInput(format!("p must be positive, got {p}")));
        }
        let mut r = q.rem_euclid(2 * p);
        if r > p {
            r -= 2 * p;
        }
        TwoBridge::new(p, r)
    }

    /// Every `S(p, q)` with `3 <= p <= p_max` odd and `0 < q < p` odd and
    /// coprime to `p`, in `(p, q)` order.
    pub fn all_up_to(p_max: i64) -> Vec<TwoBridge> {
        (3..=p_max)
            .step_by(2)
            .flat_map(|p| {
                (1..p)
                    .step_by(2)
                    .filter(move |q| p.gcd(q) == 1)
                    .map(move |q| TwoBridge::new(p, q).expect("valid by construction"))
            })
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `(p - 1) / 2`
    pub fn half(&self) -> usize {
        ((self.p - 1) / 2) as usize
    }

    /// `e_i = (-1)^floor(i*q/p)` for `i = 1..p-1`, with floor rounding toward
    /// negative infinity for negative `q`.
    pub fn epsilon_sequence(&self) -> Vec<i8> {
        (1..self.p)
            .map(|i| {
                let f = Integer::div_floor(&(i * self.q), &self.p);
                if f.rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    /// Sum of the sign sequence.
    pub fn sigma(&self) -> i64 {
        self.epsilon_sequence().iter().map(|&e| e as i64).sum()
    }

    /// `w = x1^e1 x2^e2 x1^e3 ... x2^e_{p-1}`; the group is `<x1, x2 | w x1 = x2 w>`.
    pub fn relator_word(&self) -> GroupWord {
        GroupWord::new(
            self.epsilon_sequence()
                .into_iter()
                .enumerate()
                .map(|(k, e)| Letter::new(if k % 2 == 0 { 1 } else { 2 }, e))
                .collect(),
        )
    }

    /// `w~ = x1^-e1 x2^-e2 ... x2^-e_{p-1}`.
    pub fn reversed_sign_word(&self) -> GroupWord {
        GroupWord::new(
            self.relator_word()
                .letters()
                .iter()
                .map(|l| Letter::new(l.generator, -l.exponent))
                .collect(),
        )
    }

    /// Longitude `w^-1 * w~ * x1^(2 sigma)`, commuting with the meridian `x1`.
    pub fn longitude_word(&self) -> GroupWord {
        let sigma = self.sigma();
        let tail = GroupWord::power(1, 2 * sigma);
        self.relator_word()
            .inverse()
            .concat(&self.reversed_sign_word())
            .concat(&tail)
    }

    /// Alexander polynomial from the Fox derivative of the relator
    /// `r = w x1 w^-1 x2^-1` with respect to `x1`, abelianized by
    /// `x1, x2 -> t`. Normalized to lowest exponent 0 and positive constant
    /// term; `coeffs[k]` is the coefficient of `t^k`.
    pub fn alexander_polynomial(&self) -> Vec<BigInt> {
        // d(w x1 w^-1 x2^-1)/dx1 = dw + w - w x1 w^-1 dw  ->  (1 - t) D + t^sigma
        let mut fox: BTreeMap<i64, BigInt> = BTreeMap::new();
        let mut prefix = 0i64;
        for l in self.relator_word().letters() {
            if l.generator == 1 {
                if l.exponent > 0 {
                    *fox.entry(prefix).or_default() += 1;
                } else {
                    *fox.entry(prefix - 1).or_default() -= 1;
                }
            }
            prefix += l.exponent as i64;
        }
        let mut delta: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&k, c) in &fox {
            *delta.entry(k).or_default() += c;
            *delta.entry(k + 1).or_default() -= c;
        }
        *delta.entry(prefix).or_default() += 1;
        delta.retain(|_, c| !c.is_zero());

        let lo = *delta.keys().next().expect("Alexander polynomial is nonzero");
        let hi = *delta.keys().next_back().expect("nonempty");
        let mut coeffs: Vec<BigInt> = (lo..=hi)
            .map(|k| delta.get(&k).cloned().unwrap_or_default())
            .collect();
        if coeffs[0].is_negative() {
            coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        coeffs
    }

    /// `|Delta(-1)|`, computed from the Fox calculus Alexander polynomial.
    pub fn determinant(&self) -> BigInt {
        self.alexander_polynomial()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .sum::<BigInt>()
            .abs()
    }
}

/// A generator power `x_generator^exponent`, exponent `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: u8,
    pub exponent: i8,
}

impl Letter {
    pub fn new(generator: u8, exponent: i8) -> Self {
        debug_assert!(exponent == 1 || exponent == -1);
        Letter { generator, exponent }
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.generator, -self.exponent)
    }
}

/// Word in the generators `x1, x2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    /// `x_generator^k` spelled out letter by letter.
    pub fn power(generator: u8, k: i64) -> Self {
        let e = if k < 0 { -1 } else { 1 };
        GroupWord::new(vec![Letter::new(generator, e); k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord::new(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, o: &GroupWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        GroupWord::new(letters)
    }

    /// Total exponent, the image in `H_1 = Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent as i64).sum()
    }

    /// Exponent sum of one generator.
    pub fn exponent_sum_of(&self, generator: u8) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == generator)
            .map(|l| l.exponent as i64)
            .sum()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l.exponent {
                1 => format!("x{}", l.generator),
                _ => format!("x{}^-1", l.generator),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}
