//! Exact computation of irreducible metabelian `SL(2, C)` characters of knot
//! groups, the trace-free section of the character variety of two-bridge
//! knots, and the degree bound it induces on the A-polynomial.

pub mod apoly;
pub mod error;
pub mod exactalg;
pub mod intlinalg;
pub mod knotdata;
pub mod metabelian;
pub mod riley;

pub use apoly::{analyze, APoly, AnalyzerReport, IntBiPoly};
pub use error::{Error, Result};
pub use intlinalg::{smith_normal_form, torsion_solutions, IntMat, RotationVector, SnfResult};
pub use knotdata::{GroupWord, Knot, Letter, SeifertKnot, TwoBridge};
pub use metabelian::{
    count_metabelian, enumerate_metabelian, verify_class, MetabelianClass, MetabelianRep,
};
pub use riley::{
    cross_check_counts, riley_polynomial, section_at_minus_one, verify_longitude_mod_phi,
    verify_relator_mod_phi, RileyHolonomy, RileySection,
};
