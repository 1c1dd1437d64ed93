//! A-polynomial analyzer.
//!
//! A-polynomials are ingested as data (with the abelian factor `l - 1`
//! already removed) and checked against the structural consequences of the
//! trace-free section: the degree bound for two-bridge knots, the shape of
//! `A(sqrt(-1), l)`, and the two existence criteria for irreducible
//! non-metabelian characters.

mod analyze;
mod bipoly;
mod newton;

pub use analyze::{
    analyze, degree_bound_check, eval_at_sqrt_minus_one, factor_profile,
    metabelian_multiplicity_probe, existence_criteria, vertical_edge_check, AnalyzerReport,
    BoundReport, FactorProfile, Finding, Omega, ProbeReport, VerticalEdgeReport,
};
pub use bipoly::IntBiPoly;
pub use newton::{newton_polygon, NewtonPolygon};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// An ingested A-polynomial `A_K(m, l)` with optional knot metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct APoly {
    name: String,
    poly: IntBiPoly,
    two_bridge: Option<(i64, i64)>,
    small: Option<bool>,
    det: Option<BigInt>,
}

impl APoly {
    /// Validates the polynomial (nonzero, only even powers of `m`, not
    /// divisible by `l - 1`) and normalizes the overall sign so that the
    /// term with the smallest `(m, l)` exponent pair is positive.
    pub fn new(name: impl Into<String>, poly: IntBiPoly) -> Result<Self> {
        let name = name.into();
        if poly.is_zero() {
            return Err(Error::InvalidInput(format!("{name}: A-polynomial is zero")));
        }
        if let Some((m, l, _)) = poly.terms().find(|(m, _, _)| m % 2 != 0) {
            return Err(Error::InvalidInput(format!(
                "{name}: odd power of m in term m^{m} l^{l}"
            )));
        }
        if poly.eval_l_at_one().is_empty() {
            return Err(Error::InvalidInput(format!(
                "{name}: divisible by l-1 (abelian factor must be removed)"
            )));
        }
        let negative = poly.terms().next().is_some_and(|(_, _, c)| c.is_negative());
        let poly = if negative { -poly } else { poly };
        Ok(APoly {
            name,
            poly,
            two_bridge: None,
            small: None,
            det: None,
        })
    }

    /// Tags the polynomial as belonging to `S(p, q)`.
    pub fn with_two_bridge(mut self, p: i64, q: i64) -> Result<Self> {
        crate::knotdata::TwoBridge::new(p, q)?;
        self.two_bridge = Some((p, q));
        Ok(self)
    }

    pub fn with_small(mut self, small: bool) -> Self {
        self.small = Some(small);
        self
    }

    pub fn with_det(mut self, det: BigInt) -> Result<Self> {
        if det.is_zero() || (&det % 2u32).is_zero() {
            return Err(Error::InvalidInput(format!(
                "{}: knot determinant must be odd, got {det}",
                self.name
            )));
        }
        self.det = Some(det.abs());
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn poly(&self) -> &IntBiPoly {
        &self.poly
    }

    pub fn two_bridge(&self) -> Option<(i64, i64)> {
        self.two_bridge
    }

    pub fn small(&self) -> Option<bool> {
        self.small
    }

    /// Two-bridge knots are small, so the tag implies the flag.
    pub fn is_small(&self) -> bool {
        self.small.unwrap_or(false) || self.two_bridge.is_some()
    }

    pub fn det(&self) -> Option<&BigInt> {
        self.det.as_ref()
    }
}
