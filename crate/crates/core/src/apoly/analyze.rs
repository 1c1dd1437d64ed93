use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{newton_polygon, APoly};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rat, Degree, GaussRat, Rat, Ring, UniPoly};

/// `A(sqrt(-1), l)`. With only even powers of `m` the coefficients are
/// rational integers.
pub fn eval_at_sqrt_minus_one(a: &APoly) -> UniPoly {
    a.poly().eval_m(&GaussRat::i())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerticalEdgeReport {
    pub has_vertical_edge: bool,
    pub newton_vertices: Vec<(u32, u32)>,
    pub vertical_edges: Vec<((u32, u32), (u32, u32))>,
    pub deg_l: u32,
    pub deg_l_at_i: Option<usize>,
    /// `deg_l A(sqrt(-1), l) == deg_l A(m, l)`; must hold when there is no
    /// vertical edge.
    pub deg_l_preserved: bool,
}

pub fn vertical_edge_check(a: &APoly) -> VerticalEdgeReport {
    let np = newton_polygon(&a.poly().support());
    let deg_l = a.poly().deg_l().unwrap_or(0);
    let deg_l_at_i = eval_at_sqrt_minus_one(a).degree().finite();
    VerticalEdgeReport {
        has_vertical_edge: np.has_vertical_edge(),
        vertical_edges: np.vertical_edges(),
        newton_vertices: np.vertices,
        deg_l,
        deg_l_at_i,
        deg_l_preserved: deg_l_at_i == Some(deg_l as usize),
    }
}

/// `p = l^l_pow * (l-1)^l_minus_1 * (l+1)^l_plus_1 * residual`, where the
/// residual has no root at `0`, `1` or `-1`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorProfile {
    pub l_pow: usize,
    pub l_minus_1: usize,
    pub l_plus_1: usize,
    pub residual: UniPoly,
}

impl FactorProfile {
    pub fn residual_degree(&self) -> usize {
        self.residual.degree().finite().unwrap_or(0)
    }

    pub fn reconstruct(&self) -> UniPoly {
        let l = UniPoly::var();
        let lm1 = UniPoly::from_ints(&[-1, 1]);
        let lp1 = UniPoly::from_ints(&[1, 1]);
        let parts = [
            l.pow(self.l_pow as u64),
            lm1.pow(self.l_minus_1 as u64),
            lp1.pow(self.l_plus_1 as u64),
        ];
        parts.iter().fold(self.residual.clone(), |acc, f| &acc * f)
    }

    /// Is there a factor `l - omega` with `omega` other than `0` and `1`?
    pub fn has_other_factor(&self) -> bool {
        self.l_plus_1 > 0 || self.residual_degree() > 0
    }

    /// Is `p` a unit multiple of `(l - 1)^k`?
    pub fn is_pure_l_minus_1_power(&self) -> bool {
        self.l_pow == 0 && self.l_plus_1 == 0 && self.residual_degree() == 0
    }
}

impl Serialize for FactorProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FactorProfile", 5)?;
        st.serialize_field("l", &self.l_pow)?;
        st.serialize_field("l_minus_1", &self.l_minus_1)?;
        st.serialize_field("l_plus_1", &self.l_plus_1)?;
        st.serialize_field("residual", &self.residual.display_in("l"))?;
        st.serialize_field("residual_degree", &self.residual_degree())?;
        st.end()
    }
}

/// Repeated exact division by `l`, `l - 1` and `l + 1`.
pub fn factor_profile(p: &UniPoly) -> Result<FactorProfile> {
    if p.is_zero() {
        return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
    }
    let mut rest = p.clone();
    let mut strip = |root: i64| {
        let lin = UniPoly::from_ints(&[-root, 1]);
        let mut k = 0;
        loop {
            let (q, r) = rest.div_rem(&lin).expect("linear divisor");
            if !r.is_zero() {
                return k;
            }
            rest = q;
            k += 1;
        }
    };
    let l_pow = strip(0);
    let l_minus_1 = strip(1);
    let l_plus_1 = strip(-1);
    Ok(FactorProfile {
        l_pow,
        l_minus_1,
        l_plus_1,
        residual: rest,
    })
}

/// Exact value `rational + coef * sqrt(radicand)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Surd {
    rational: Rat,
    coef: Rat,
    radicand: BigInt,
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coef.is_zero() {
            return f.write_str(&fmt_rat(&self.rational));
        }
        let sign = if self.coef.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}*sqrt({})",
            fmt_rat(&self.rational),
            sign,
            fmt_rat(&self.coef.abs()),
            self.radicand
        )
    }
}

/// A root `omega` of `A(sqrt(-1), l)` away from `0` and `1`, with
/// `trace(rho(longitude)) = omega + 1/omega`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Omega {
    Exact {
        omega: String,
        trace_longitude: String,
        multiplicity: usize,
    },
    Residual {
        degree: usize,
        factor: String,
    },
}

fn rational_omega(omega: Rat, multiplicity: usize) -> Omega {
    let trace = &omega + omega.recip();
    Omega::Exact {
        omega: fmt_rat(&omega),
        trace_longitude: fmt_rat(&trace),
        multiplicity,
    }
}

fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rat::new(rn, rd))
}

fn omegas(profile: &FactorProfile) -> Vec<Omega> {
    let mut out = Vec::new();
    if profile.l_plus_1 > 0 {
        out.push(rational_omega(-Rat::one(), profile.l_plus_1));
    }
    let r = &profile.residual;
    let deg = profile.residual_degree();
    if deg == 0 {
        return out;
    }
    if !r.is_real() || deg > 2 {
        out.push(Omega::Residual {
            degree: deg,
            factor: r.display_in("l"),
        });
        return out;
    }
    let c: Vec<Rat> = r.coeffs().iter().map(|z| z.re.clone()).collect();
    if deg == 1 {
        out.push(rational_omega(-&c[0] / &c[1], 1));
        return out;
    }
    // a l^2 + b l + c, with c != 0 since l does not divide the residual
    let (a, b, c0) = (&c[2], &c[1], &c[0]);
    let two = Rat::from_integer(2.into());
    let disc = b * b - Rat::from_integer(4.into()) * a * c0;
    match rational_sqrt(&disc) {
        Some(sq) if sq.is_zero() => out.push(rational_omega(-b / (&two * a), 2)),
        Some(sq) => {
            out.push(rational_omega((-b - &sq) / (&two * a), 1));
            out.push(rational_omega((-b + &sq) / (&two * a), 1));
        }
        None => {
            // sqrt(n/d) = sqrt(n*d)/d
            let radicand = disc.numer() * disc.denom();
            let unit = Rat::new(BigInt::one(), disc.denom().clone());
            let inv2a = (&two * a).recip();
            let inv2c = (&two * c0).recip();
            for sign in [-1i64, 1] {
                let sgn = Rat::from_integer(sign.into());
                let omega = Surd {
                    rational: -b * &inv2a,
                    coef: &sgn * &inv2a * &unit,
                    radicand: radicand.clone(),
                };
                // 1/omega is the conjugate root scaled: (-b -/+ sqrt(D)) / 2c
                let trace = Surd {
                    rational: -b * (&inv2a + &inv2c),
                    coef: &sgn * (&inv2a - &inv2c) * &unit,
                    radicand: radicand.clone(),
                };
                out.push(Omega::Exact {
                    omega: omega.to_string(),
                    trace_longitude: trace.to_string(),
                    multiplicity: 1,
                });
            }
        }
    }
    out
}

/// Outcome of the two existence criteria for irreducible non-metabelian
/// characters read off from `A(sqrt(-1), l)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "criterion", rename_all = "snake_case")]
pub enum Finding {
    /// `A(sqrt(-1), l) == 0`, i.e. `m^2 + 1` divides `A`.
    NonMetabelianArcs { message: String },
    /// A factor `l - omega`, `omega != 0, 1`, on a small knot.
    TraceFreeNonMetabelian { message: String, omegas: Vec<Omega> },
    Inconclusive { reason: String },
    NoCriterionFires { message: String },
}

impl Finding {
    pub fn is_arcs(&self) -> bool {
        matches!(self, Finding::NonMetabelianArcs { .. })
    }

    pub fn is_trace_free(&self) -> bool {
        matches!(self, Finding::TraceFreeNonMetabelian { .. })
    }
}

pub fn existence_criteria(a: &APoly, small: bool) -> Result<Vec<Finding>> {
    let at_i = eval_at_sqrt_minus_one(a);
    if at_i.is_zero() {
        return Ok(vec![Finding::NonMetabelianArcs {
            message: "arcs of irreducible non-metabelian characters exist (m^2+1 divides A)".into(),
        }]);
    }
    let profile = factor_profile(&at_i)?;
    if !profile.has_other_factor() {
        return Ok(vec![Finding::NoCriterionFires {
            message: "A(sqrt(-1),l) has no factor other than l and l-1".into(),
        }]);
    }
    if !small {
        return Ok(vec![Finding::Inconclusive {
            reason: "inconclusive: smallness not asserted".into(),
        }]);
    }
    Ok(vec![Finding::TraceFreeNonMetabelian {
        message: "irreducible non-metabelian representation with trace(rho(mu))=0 exists, \
                  trace(rho(lambda))=omega+1/omega"
            .into(),
        omegas: omegas(&profile),
    }])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BoundReport {
    Applies {
        p: i64,
        q: i64,
        /// `(p - 1) / 2`, the number of irreducible metabelian characters.
        bound: usize,
        deg_l: u32,
        /// Multiplicity of `l - 1` in `A(sqrt(-1), l)`.
        k: usize,
        /// Characters lost to discarding 0-dimensional components and
        /// repeated factors.
        slack: i64,
        pure_l_minus_1_power: bool,
        no_vertical_edge: bool,
        deg_l_preserved: bool,
        ok: bool,
    },
    NotApplicable {
        reason: String,
        deg_l: u32,
        metabelian_count: Option<String>,
        exceeds_metabelian_count: Option<bool>,
    },
}

impl BoundReport {
    /// False only when the bound applies and fails.
    pub fn ok(&self) -> bool {
        match self {
            BoundReport::Applies { ok, .. } => *ok,
            BoundReport::NotApplicable { .. } => true,
        }
    }
}

/// Checks `deg_l A <= (p-1)/2` and the chain
/// `k = deg_l A(sqrt(-1), l) = deg_l A(m, l)` for a two-bridge tag.
pub fn degree_bound_check(a: &APoly) -> Result<BoundReport> {
    let deg_l = a.poly().deg_l().unwrap_or(0);
    let Some((p, q)) = a.two_bridge() else {
        let count = a.det().map(|d| (d - 1u32) / 2u32);
        return Ok(BoundReport::NotApplicable {
            reason: "not a two-bridge knot; the metabelian count does not bound deg_l".into(),
            deg_l,
            exceeds_metabelian_count: count.as_ref().map(|c| BigInt::from(deg_l) > *c),
            metabelian_count: count.map(|c| c.to_string()),
        });
    };
    let bound = ((p - 1) / 2) as usize;
    let at_i = eval_at_sqrt_minus_one(a);
    let ve = vertical_edge_check(a);
    let (k, pure) = if at_i.is_zero() {
        (0, false)
    } else {
        let prof = factor_profile(&at_i)?;
        (prof.l_minus_1, prof.is_pure_l_minus_1_power())
    };
    let ok = deg_l as usize <= bound
        && pure
        && !ve.has_vertical_edge
        && ve.deg_l_preserved
        && k == deg_l as usize;
    Ok(BoundReport::Applies {
        p,
        q,
        bound,
        deg_l,
        k,
        slack: bound as i64 - deg_l as i64,
        pure_l_minus_1_power: pure,
        no_vertical_edge: !ve.has_vertical_edge,
        deg_l_preserved: ve.deg_l_preserved,
        ok,
    })
}

/// Compares the multiplicity of `l - 1` in `A(sqrt(-1), l)` with the
/// metabelian count `(det - 1) / 2`. This is an open question for knots that
/// are not two-bridge, so a violation is reported, never raised.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub label: &'static str,
    pub k: usize,
    pub metabelian_count: String,
    pub holds: bool,
    pub note: String,
}

pub fn metabelian_multiplicity_probe(a: &APoly, det: &BigInt) -> Result<ProbeReport> {
    let det = det.abs();
    if (&det % 2u32).is_zero() {
        return Err(Error::InvalidInput(format!("knot determinant must be odd, got {det}")));
    }
    let count = (&det - 1u32) / 2u32;
    let at_i = eval_at_sqrt_minus_one(a);
    let k = if at_i.is_zero() {
        0
    } else {
        factor_profile(&at_i)?.l_minus_1
    };
    let holds = BigInt::from(k) <= count;
    Ok(ProbeReport {
        label: "conjecture probe",
        k,
        metabelian_count: count.to_string(),
        holds,
        note: if holds {
            format!("multiplicity of l-1 is {k} <= {count}")
        } else {
            format!("conjecture counterexample: multiplicity of l-1 is {k} > {count}")
        },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalyzerReport {
    pub name: String,
    pub polynomial: String,
    pub deg_l: u32,
    #[serde(serialize_with = "ser_lpoly")]
    pub eval_at_i: UniPoly,
    /// `A(sqrt(-1), l) == A(-sqrt(-1), l)`.
    pub plus_minus_i_agree: bool,
    pub factor_profile: Option<FactorProfile>,
    pub k: usize,
    pub vertical_edges: VerticalEdgeReport,
    pub bound: BoundReport,
    pub criteria: Vec<Finding>,
    pub probe: Option<ProbeReport>,
    pub warnings: Vec<String>,
}

impl AnalyzerReport {
    pub fn ok(&self) -> bool {
        self.bound.ok()
    }
}

fn ser_lpoly<S: Serializer>(p: &UniPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.display_in("l"))
}

/// Runs every check on one polynomial. `assume_small` adds to the
/// polynomial's own smallness metadata.
pub fn analyze(a: &APoly, assume_small: bool) -> Result<AnalyzerReport> {
    let at_i = eval_at_sqrt_minus_one(a);
    let at_minus_i = a.poly().eval_m(&-GaussRat::i());
    let profile = if at_i.is_zero() {
        None
    } else {
        Some(factor_profile(&at_i)?)
    };
    if let Some(p) = &profile {
        if p.reconstruct() != at_i {
            return Err(Error::Invariant(format!("factor profile of {} does not multiply back", a.name())));
        }
    }
    let mut warnings = Vec::new();
    let generic = a.poly().eval_m(&GaussRat::from_int(3));
    if generic.degree() > Degree::Finite(0) && !generic.is_squarefree()? {
        warnings.push("A(3,l) has a repeated factor in l; the polynomial may not be reduced".into());
    }
    let probe = a
        .det()
        .map(|d| metabelian_multiplicity_probe(a, d))
        .transpose()?;
    Ok(AnalyzerReport {
        name: a.name().to_string(),
        polynomial: a.poly().to_string(),
        deg_l: a.poly().deg_l().unwrap_or(0),
        plus_minus_i_agree: at_i == at_minus_i,
        k: profile.as_ref().map_or(0, |p| p.l_minus_1),
        factor_profile: profile,
        eval_at_i: at_i,
        vertical_edges: vertical_edge_check(a),
        bound: degree_bound_check(a)?,
        criteria: existence_criteria(a, a.is_small() || assume_small)?,
        probe,
        warnings,
    })
}
