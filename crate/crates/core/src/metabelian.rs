//! Irreducible metabelian `SL(2, C)` characters from a Seifert matrix.
//!
//! Up to conjugation such a representation sends the commutator-subgroup
//! generators `x_j` to `diag(lambda_j, lambda_j^-1)` and the meridian to
//! `[[0, 1], [-1, 0]]`. The eigenvalues satisfy
//! `prod_j lambda_j^{w_ij} = 1` with `W = V + V^T`, forcing
//! `|lambda_j| = 1`; writing `lambda_j = exp(2 pi i theta_j)` turns this into
//! `W theta = 0 (mod 1)`, which has `|det W|` solutions. Dropping the trivial
//! one and pairing `theta` with `-theta` leaves `(|det W| - 1) / 2` classes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{fmt_rat, CycloSum, Mat2, Ring, RootOfUnity};
use crate::intlinalg::{torsion_solutions, RotationVector};
use crate::knotdata::{Knot, SeifertKnot};

/// Conjugacy class of an irreducible metabelian representation, stored as
/// the canonical rotation vector: the lexicographically smaller of `theta`
/// and `-theta mod 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MetabelianClass {
    thetas: RotationVector,
    order: BigInt,
}

impl MetabelianClass {
    pub fn new(thetas: RotationVector) -> Result<Self> {
        if thetas.is_zero() {
            return Err(Error::InvalidInput(
                "the zero rotation vector gives the abelian representation".into(),
            ));
        }
        let neg = thetas.negate();
        let thetas = if neg < thetas { neg } else { thetas };
        let order = thetas.order();
        Ok(MetabelianClass { thetas, order })
    }

    pub fn thetas(&self) -> &RotationVector {
        &self.thetas
    }

    /// Common order of the eigenvalues as roots of unity.
    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn eigenvalues(&self) -> Vec<RootOfUnity> {
        self.thetas.thetas().iter().map(RootOfUnity::new).collect()
    }
}

impl Serialize for MetabelianClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MetabelianClass", 2)?;
        st.serialize_field("order", &self.order.to_string())?;
        st.serialize_field("thetas", &self.thetas)?;
        st.end()
    }
}

/// Explicit representative with `b = 1` in the meridian image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabelianRep {
    pub mu_image: Mat2<CycloSum>,
    pub generator_images: Vec<Mat2<CycloSum>>,
}

impl MetabelianRep {
    /// Image of a word given by generator exponents, e.g. a row of `V`.
    pub fn monomial_image(&self, exponents: &[BigInt]) -> Mat2<CycloSum> {
        exponents
            .iter()
            .zip(&self.generator_images)
            .fold(Mat2::identity(), |acc, (e, g)| &acc * &diag_pow(g, e))
    }
}

fn diag_pow(g: &Mat2<CycloSum>, e: &BigInt) -> Mat2<CycloSum> {
    let (_, z) = g.a.as_signed_root().expect("diagonal root-of-unity image");
    let z = z.pow(e);
    Mat2::diag(CycloSum::root(z.clone()), CycloSum::root(z.inv()))
}

/// `(det - 1) / 2`.
pub fn count_from_determinant(det: &BigInt) -> Result<BigInt> {
    if (det % 2u32).is_zero() {
        return Err(Error::InvalidInput(format!(
            "knot determinant must be odd, got {det}"
        )));
    }
    Ok((det - 1u32) / 2u32)
}

/// Number of irreducible metabelian characters.
pub fn count_metabelian(k: &Knot) -> Result<BigInt> {
    count_from_determinant(&k.determinant()?)
}

/// All classes, in lexicographic order of their canonical rotation vectors.
pub fn enumerate_metabelian(k: &SeifertKnot) -> Result<Vec<MetabelianClass>> {
    let w = k.symmetrized();
    let solutions = torsion_solutions(&w)?;
    let classes: BTreeSet<MetabelianClass> = solutions
        .into_iter()
        .filter(|t| !t.is_zero())
        .map(MetabelianClass::new)
        .collect::<Result<_>>()?;
    let classes: Vec<_> = classes.into_iter().collect();
    let expected = count_from_determinant(&k.determinant()?)?;
    if BigInt::from(classes.len()) != expected {
        return Err(Error::Invariant(format!(
            "{}: enumerated {} classes, expected {expected}",
            k.name(),
            classes.len()
        )));
    }
    Ok(classes)
}

pub fn build_representation(c: &MetabelianClass) -> MetabelianRep {
    rep_from_thetas(c.thetas())
}

fn rep_from_thetas(thetas: &RotationVector) -> MetabelianRep {
    let mu_image = Mat2::new(CycloSum::zero(), CycloSum::one(), -CycloSum::one(), CycloSum::zero());
    let generator_images = thetas
        .thetas()
        .iter()
        .map(|t| {
            let z = RootOfUnity::new(t);
            Mat2::diag(CycloSum::root(z.clone()), CycloSum::root(z.inv()))
        })
        .collect();
    MetabelianRep {
        mu_image,
        generator_images,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowFailure {
    pub row: usize,
    /// `(W theta)_row`, which should be an integer.
    pub value: String,
}

/// Result of checking one candidate class against a knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerification {
    pub thetas: RotationVector,
    /// (a) `mu alpha_i mu^-1 = beta_i` for every relation, equivalently
    /// `W theta = 0 mod 1` row by row.
    pub relations_ok: bool,
    pub failing_rows: Vec<RowFailure>,
    /// (b) some generator image has trace different from 2.
    pub irreducible: bool,
    pub witness_generator: Option<usize>,
    /// (c) `trace(rho(mu)) = 0`.
    pub mu_trace_zero: bool,
    pub determinants_ok: bool,
    pub passed: bool,
    pub failure: Option<String>,
}

/// Checks a candidate rotation vector against the relations of `k`.
pub fn verify_class(k: &SeifertKnot, thetas: &RotationVector) -> ClassVerification {
    let v = k.seifert_matrix();
    let n = v.rows();
    let mut report = ClassVerification {
        thetas: thetas.clone(),
        relations_ok: false,
        failing_rows: vec![],
        irreducible: false,
        witness_generator: None,
        mu_trace_zero: false,
        determinants_ok: false,
        passed: false,
        failure: None,
    };
    if thetas.len() != n {
        report.failure = Some(format!(
            "rotation vector has {} entries, knot has {n} generators",
            thetas.len()
        ));
        return report;
    }

    let rep = rep_from_thetas(thetas);
    let mu_inv = rep.mu_image.adjugate();
    let vt = v.transpose();
    let w_theta = thetas.apply(&k.symmetrized());
    for (i, value) in w_theta.iter().enumerate() {
        let alpha = rep.monomial_image(v.row(i));
        let beta = rep.monomial_image(vt.row(i));
        let conj = &(&rep.mu_image * &alpha) * &mu_inv;
        if conj != beta {
            report.failing_rows.push(RowFailure {
                row: i,
                value: fmt_rat(value),
            });
        }
    }
    report.relations_ok = report.failing_rows.is_empty();

    let two = CycloSum::int(2);
    report.witness_generator = rep.generator_images.iter().position(|g| g.trace() != two);
    report.irreducible = report.witness_generator.is_some();
    report.mu_trace_zero = rep.mu_image.trace().is_zero();
    report.determinants_ok = rep.mu_image.det().is_one()
        && rep.generator_images.iter().all(|g| g.det().is_one());

    report.failure = if !report.relations_ok {
        let rows: Vec<String> = report
            .failing_rows
            .iter()
            .map(|r| format!("row {} gives {}", r.row, r.value))
            .collect();
        Some(format!("(a) relation check failed: {}", rows.join(", ")))
    } else if !report.irreducible {
        Some("(b) every generator has trace 2: the representation is abelian".into())
    } else if !report.mu_trace_zero {
        Some("(c) meridian image is not trace-free".into())
    } else if !report.determinants_ok {
        Some("an image is not in SL(2)".into())
    } else {
        None
    };
    report.passed = report.failure.is_none();
    report
}

/// Enumerates and verifies every class, in parallel.
pub fn verify_all(k: &SeifertKnot) -> Result<Vec<ClassVerification>> {
    let classes = enumerate_metabelian(k)?;
    Ok(classes
        .par_iter()
        .map(|c| verify_class(k, c.thetas()))
        .collect())
}
