//! Knot input models and file ingestion.

mod io;
mod seifert;
mod twobridge;

pub use io::{apolys_to_json, knots_to_json, load_apolys, load_knots, parse_apolys, parse_knots};
pub use seifert::SeifertKnot;
pub use twobridge::{GroupWord, Letter, TwoBridge};

use num_bigint::BigInt;

use crate::error::Result;

/// Any knot the library can take as input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Knot {
    Seifert(SeifertKnot),
    TwoBridge(TwoBridge),
}

impl Knot {
    pub fn name(&self) -> &str {
        match self {
            Knot::Seifert(k) => k.name(),
            Knot::TwoBridge(k) => k.name(),
        }
    }

    /// `|Delta_K(-1)|`: from `V + V^T` for Seifert input, from the Fox
    /// calculus Alexander polynomial for two-bridge input.
    pub fn determinant(&self) -> Result<BigInt> {
        match self {
            Knot::Seifert(k) => k.determinant(),
            Knot::TwoBridge(k) => Ok(k.determinant()),
        }
    }
}

impl From<SeifertKnot> for Knot {
    fn from(k: SeifertKnot) -> Self {
        Knot::Seifert(k)
    }
}

impl From<TwoBridge> for Knot {
    fn from(k: TwoBridge) -> Self {
        Knot::TwoBridge(k)
    }
}
