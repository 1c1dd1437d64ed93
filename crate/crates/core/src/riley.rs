//! Riley representations of two-bridge knot groups.
//!
//! With `s^2 = t`, the generators go to
//! `x1 = [[s, s^-1], [0, s^-1]]` and `x2 = [[s, 0], [-s u, s^-1]]`. Writing
//! `rho(w) = (w_ij)`, the assignment is a representation exactly when
//! `phi(t, u) = w11 + (1 - t) w12` vanishes. At `t = -1` the meridian is
//! trace-free and `phi(-1, u)` cuts out the trace-free slice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{
    approx_real_roots, ApproxRoots, GaussRat, LaurentBiPoly, Mat2, QuotientRing, Ring,
    UniPoly,
};
use crate::knotdata::{GroupWord, Letter, TwoBridge};
use crate::metabelian::count_from_determinant;

/// Generator images over `Z[s^±1][u]`, with their inverses cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RileyHolonomy {
    pub x1: Mat2<LaurentBiPoly>,
    pub x2: Mat2<LaurentBiPoly>,
    x1_inv: Mat2<LaurentBiPoly>,
    x2_inv: Mat2<LaurentBiPoly>,
}

impl Default for RileyHolonomy {
    fn default() -> Self {
        Self::new()
    }
}

impl RileyHolonomy {
    pub fn new() -> Self {
        let s = LaurentBiPoly::s_pow(1);
        let s_inv = LaurentBiPoly::s_pow(-1);
        let x1 = Mat2::new(s.clone(), s_inv.clone(), LaurentBiPoly::zero(), s_inv.clone());
        let x2 = Mat2::new(s, LaurentBiPoly::zero(), -LaurentBiPoly::monomial(1, 1, 1), s_inv);
        RileyHolonomy {
            x1_inv: x1.adjugate(),
            x2_inv: x2.adjugate(),
            x1,
            x2,
        }
    }

    fn letter(&self, l: Letter) -> Result<&Mat2<LaurentBiPoly>> {
        match (l.generator, l.exponent > 0) {
            (1, true) => Ok(&self.x1),
            (1, false) => Ok(&self.x1_inv),
            (2, true) => Ok(&self.x2),
            (2, false) => Ok(&self.x2_inv),
            (g, _) => Err(Error::InvalidInput(format!(
                "two-bridge words use generators 1 and 2, got x{g}"
            ))),
        }
    }

    /// Product of the letter images, left to right.
    pub fn word_holonomy(&self, w: &GroupWord) -> Result<Mat2<LaurentBiPoly>> {
        w.letters()
            .iter()
            .try_fold(Mat2::identity(), |acc, &l| Ok(&acc * self.letter(l)?))
    }
}

/// Generator images at `t = -1` (`s = i`), as matrices over `Q(i)[u]`.
fn generators_at_minus_one() -> [Mat2<UniPoly>; 4] {
    let h = RileyHolonomy::new();
    let ev = |m: &Mat2<LaurentBiPoly>| m.map(LaurentBiPoly::eval_s_to_i);
    [ev(&h.x1), ev(&h.x1_inv), ev(&h.x2), ev(&h.x2_inv)]
}

/// Holonomy of `w` at `t = -1`, every partial product reduced in `ring`.
fn holonomy_mod(ring: &QuotientRing, w: &GroupWord) -> Result<Mat2<UniPoly>> {
    let gens = generators_at_minus_one();
    w.letters().iter().try_fold(Mat2::identity(), |acc, l| {
        let idx = match (l.generator, l.exponent > 0) {
            (1, true) => 0,
            (1, false) => 1,
            (2, true) => 2,
            (2, false) => 3,
            (g, _) => {
                return Err(Error::InvalidInput(format!(
                    "two-bridge words use generators 1 and 2, got x{g}"
                )))
            }
        };
        Ok(ring.mat_mul(&acc, &gens[idx]))
    })
}

/// `phi(t, u) = w11 + (1 - s^2) w12` for the relator word of `k`.
pub fn riley_polynomial(k: &TwoBridge) -> Result<LaurentBiPoly> {
    let w = RileyHolonomy::new().word_holonomy(&k.relator_word())?;
    phi_from_holonomy(k, &w)
}

fn phi_from_holonomy(k: &TwoBridge, w: &Mat2<LaurentBiPoly>) -> Result<LaurentBiPoly> {
    if let Some(bad) = w.entries().iter().find(|e| !e.has_even_s_parity()) {
        return Err(Error::Invariant(format!(
            "{}: holonomy entry {bad} has an odd power of s",
            k.name()
        )));
    }
    let phi = &w.a + &(&(LaurentBiPoly::one() - LaurentBiPoly::s_pow(2)) * &w.b);
    if !phi.has_even_s_parity() {
        return Err(Error::Invariant(format!(
            "{}: Riley polynomial {phi} has an odd power of s",
            k.name()
        )));
    }
    Ok(phi)
}

fn ser_upoly<S: Serializer>(p: &UniPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// The trace-free slice of a two-bridge knot's Riley curve.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RileySection {
    pub name: String,
    pub p: i64,
    pub q: i64,
    /// `phi(-1, u)` with content removed and positive leading coefficient.
    #[serde(serialize_with = "ser_upoly")]
    pub phi: UniPoly,
    /// `phi(-1, u) = w11 + 2 w12` before normalization.
    #[serde(serialize_with = "ser_upoly")]
    pub phi_raw: UniPoly,
    #[serde(serialize_with = "ser_upoly")]
    pub w11: UniPoly,
    #[serde(serialize_with = "ser_upoly")]
    pub w12: UniPoly,
    /// Degree of `phi`, i.e. roots counted with multiplicity.
    pub roots_count: usize,
    pub squarefree: bool,
}

fn integer_coeffs(p: &UniPoly, what: &str) -> Result<Vec<BigInt>> {
    p.coeffs()
        .iter()
        .map(|c| {
            if c.is_real() && c.re.is_integer() {
                Ok(c.re.to_integer())
            } else {
                Err(Error::Invariant(format!("{what} = {p} has a non-integer coefficient {c}")))
            }
        })
        .collect()
}

fn normalize(p: &UniPoly) -> Result<UniPoly> {
    let ints = integer_coeffs(p, "phi(-1,u)")?;
    let mut content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() {
        return Err(Error::Invariant("phi(-1,u) vanishes identically".into()));
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        content = -content;
    }
    let inv = GaussRat::from_rat(crate::exactalg::Rat::new(BigInt::one(), content));
    Ok(p.scale(&inv))
}

fn deg(p: &UniPoly) -> Option<usize> {
    p.degree().finite()
}

/// Specializes the Riley data to `t = -1` and checks the degree,
/// squarefreeness and product-form claims.
pub fn section_at_minus_one(k: &TwoBridge) -> Result<RileySection> {
    let h = RileyHolonomy::new();
    let w = h.word_holonomy(&k.relator_word())?;
    let phi_t = phi_from_holonomy(k, &w)?;
    let w11 = w.a.eval_s_to_i();
    let w12 = w.b.eval_s_to_i();
    let phi_raw = phi_t.eval_s_to_i();
    let half = k.half();
    let name = k.name();

    let direct = &w11 + &w12.scale(&GaussRat::from_int(2));
    if direct != phi_raw {
        return Err(Error::Invariant(format!(
            "{name}: phi(-1,u) = {phi_raw} differs from w11 + 2 w12 = {direct}"
        )));
    }
    if deg(&w11) != Some(half) {
        return Err(Error::Invariant(format!(
            "{name}: deg w11(-1,u) is {:?}, expected {half}; w11 = {w11}",
            w11.degree()
        )));
    }
    if deg(&w12) != Some(half - 1) {
        return Err(Error::Invariant(format!(
            "{name}: deg w12(-1,u) is {:?}, expected {}; w12 = {w12}",
            w12.degree(),
            half - 1
        )));
    }
    if deg(&phi_raw) != Some(half) {
        return Err(Error::Invariant(format!(
            "{name}: deg phi(-1,u) is {:?}, expected {half}; phi = {phi_raw}",
            phi_raw.degree()
        )));
    }

    let [x1, _, x2, _] = generators_at_minus_one();
    let power = (&x1 * &x2).pow(half as u64);
    let letters = w.map(LaurentBiPoly::eval_s_to_i);
    if power != letters {
        return Err(Error::Invariant(format!(
            "{name}: letter product {letters} differs from (x1 x2)^{half} = {power}"
        )));
    }

    let phi = normalize(&phi_raw)?;
    let lead = phi.leading().expect("nonzero");
    if !lead.is_one() {
        return Err(Error::Invariant(format!(
            "{name}: phi(-1,u) = {phi} is not monic up to sign"
        )));
    }
    let squarefree = phi.is_squarefree()?;
    if !squarefree {
        let g = phi.gcd(&phi.derivative())?;
        return Err(Error::Invariant(format!(
            "{name}: phi(-1,u) = {phi} has the repeated factor {g}"
        )));
    }
    Ok(RileySection {
        name: name.to_string(),
        p: k.p(),
        q: k.q(),
        roots_count: half,
        phi,
        phi_raw,
        w11,
        w12,
        squarefree,
    })
}

impl RileySection {
    /// Approximate roots of `phi(-1,u)`, for display only.
    pub fn approx_roots(&self) -> Result<ApproxRoots> {
        approx_real_roots(&self.phi)
    }
}

/// Entry of a matrix that failed to reduce to the expected value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryResidue {
    pub entry: String,
    pub residue: String,
}

const ENTRY_NAMES: [&str; 4] = ["11", "12", "21", "22"];

fn nonzero_entries(ring: &QuotientRing, m: &Mat2<UniPoly>) -> Vec<EntryResidue> {
    m.entries()
        .iter()
        .zip(ENTRY_NAMES)
        .filter_map(|(e, n)| {
            let r = ring.reduce(e);
            (!r.is_zero()).then(|| EntryResidue {
                entry: n.to_string(),
                residue: r.to_string(),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorReport {
    pub name: String,
    pub modulus: String,
    pub ok: bool,
    pub failures: Vec<EntryResidue>,
    /// `trace(rho(x1))` at `t = -1`.
    pub meridian_trace: String,
}

/// Checks `rho(w) rho(x1) = rho(x2) rho(w)` in `Q(i)[u] / (phi(-1,u))`.
pub fn verify_relator_mod_phi(k: &TwoBridge) -> Result<RelatorReport> {
    let section = section_at_minus_one(k)?;
    verify_relator_mod(k, &section.phi)
}

/// Same check against an arbitrary modulus.
pub fn verify_relator_mod(k: &TwoBridge, modulus: &UniPoly) -> Result<RelatorReport> {
    let ring = QuotientRing::new(modulus)?;
    let w = holonomy_mod(&ring, &k.relator_word())?;
    let [x1, _, x2, _] = generators_at_minus_one();
    let diff = &ring.mat_mul(&w, &x1) - &ring.mat_mul(&x2, &w);
    let failures = nonzero_entries(&ring, &diff);
    Ok(RelatorReport {
        name: k.name().to_string(),
        modulus: modulus.to_string(),
        ok: failures.is_empty(),
        failures,
        meridian_trace: ring.reduce(&x1.trace()).to_string(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignedIdentity {
    Plus,
    Minus,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LongitudeReport {
    pub name: String,
    pub word_length: usize,
    pub result: SignedIdentity,
    pub ok: bool,
    pub trace: String,
    /// Entries of `rho(lambda) - id` that survive reduction.
    pub failures: Vec<EntryResidue>,
}

/// Evaluates the longitude holonomy at `t = -1` modulo `phi(-1,u)` and
/// reports whether it is `+id`, `-id` or neither.
pub fn verify_longitude_mod_phi(k: &TwoBridge) -> Result<LongitudeReport> {
    let section = section_at_minus_one(k)?;
    verify_longitude_mod(k, &section.phi)
}

pub fn verify_longitude_mod(k: &TwoBridge, modulus: &UniPoly) -> Result<LongitudeReport> {
    let ring = QuotientRing::new(modulus)?;
    let word = k.longitude_word();
    let lam = holonomy_mod(&ring, &word)?;
    let id: Mat2<UniPoly> = Mat2::identity();
    let plus = nonzero_entries(&ring, &(&lam - &id));
    let result = if plus.is_empty() {
        SignedIdentity::Plus
    } else if ring.mat_is_zero(&(&lam - &(-id.clone()))) {
        SignedIdentity::Minus
    } else {
        SignedIdentity::Neither
    };
    Ok(LongitudeReport {
        name: k.name().to_string(),
        word_length: word.len(),
        ok: result == SignedIdentity::Plus,
        result,
        trace: ring.reduce(&lam.trace()).to_string(),
        failures: plus,
    })
}

/// The three independent counts of trace-free metabelian characters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub name: String,
    pub riley_degree: usize,
    pub distinct_roots: usize,
    /// `(|Delta(-1)| - 1) / 2` from the Alexander polynomial.
    pub metabelian_count: String,
    pub half_p_minus_1: usize,
    pub determinant: String,
    pub ok: bool,
}

pub fn cross_check_counts(k: &TwoBridge) -> Result<CountReport> {
    let section = section_at_minus_one(k)?;
    let g = section.phi.gcd(&section.phi.derivative())?;
    let distinct = deg(&section.phi.exact_div(&g)?).unwrap_or(0);
    let det = k.determinant();
    let census = count_from_determinant(&det)?;
    let half = k.half();
    let ok = section.roots_count == distinct
        && BigInt::from(distinct) == census
        && distinct == half
        && det == BigInt::from(k.p());
    Ok(CountReport {
        name: k.name().to_string(),
        riley_degree: section.roots_count,
        distinct_roots: distinct,
        metabelian_count: census.to_string(),
        half_p_minus_1: half,
        determinant: det.to_string(),
        ok,
    })
}

/// Divides `f` by `d` as polynomials in `u` over `Z[s^±1]`. The leading
/// `u`-coefficient of `d` must be a unit `±s^k`.
pub fn div_rem_u(f: &LaurentBiPoly, d: &LaurentBiPoly) -> Result<(LaurentBiPoly, LaurentBiPoly)> {
    let dn = d.u_degree().ok_or(Error::DivisionByZero)?;
    let (sign, sk) = d.u_coeff(dn).as_signed_s_monomial().ok_or_else(|| {
        Error::NotInvertible(format!(
            "leading u-coefficient {} is not a unit in Z[s^±1]",
            d.u_coeff(dn)
        ))
    })?;
    let mut q = LaurentBiPoly::zero();
    let mut r = f.clone();
    while let Some(rn) = r.u_degree() {
        if rn < dn {
            break;
        }
        let lead = r.u_coeff(rn).shift_s(-sk);
        let lead = if sign < 0 { -lead } else { lead };
        let t = &lead * &LaurentBiPoly::monomial(1, 0, rn - dn);
        r = &r - &(&t * d);
        q = &q + &t;
    }
    Ok((q, r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralRelatorReport {
    pub name: String,
    pub ok: bool,
    pub failures: Vec<EntryResidue>,
}

/// Checks `rho(w) rho(x1) - rho(x2) rho(w) = 0` modulo `phi(t, u)` for
/// indeterminate `t`, by exact division in `u`.
pub fn verify_relator_general_t(k: &TwoBridge) -> Result<GeneralRelatorReport> {
    let h = RileyHolonomy::new();
    let phi = riley_polynomial(k)?;
    let w = h.word_holonomy(&k.relator_word())?;
    let diff = &(&w * &h.x1) - &(&h.x2 * &w);
    let mut failures = Vec::new();
    for (e, n) in diff.entries().iter().zip(ENTRY_NAMES) {
        let (_, r) = div_rem_u(e, &phi)?;
        if !r.is_zero() {
            failures.push(EntryResidue {
                entry: n.to_string(),
                residue: r.to_string(),
            });
        }
    }
    Ok(GeneralRelatorReport {
        name: k.name().to_string(),
        ok: failures.is_empty(),
        failures,
    })
}
