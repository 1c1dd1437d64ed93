//! JSON ingestion. A file holds one record object or an array of them:
//!
//! ```json
//! {"type":"seifert","name":"3_1","V":[[-1,1],[0,-1]]}
//! {"type":"twobridge","name":"4_1","p":5,"q":3}
//! {"type":"apoly","name":"3_1","terms":[{"m":6,"l":0,"c":1},{"m":0,"l":1,"c":1}]}
//! ```
//!
//! A-polynomial records may also carry `p`/`q` (two-bridge tag), `small`
//! and `det`.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Knot, SeifertKnot, TwoBridge};
use crate::apoly::{APoly, IntBiPoly};
use crate::error::{Error, Result};
use crate::intlinalg::IntMat;

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum Record {
    Seifert {
        name: String,
        #[serde(rename = "V")]
        v: Vec<Vec<i64>>,
    },
    Twobridge {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        p: i64,
        q: i64,
    },
    Apoly {
        name: String,
        terms: Vec<Term>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        q: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        small: Option<bool>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        det: Option<i64>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Term {
    m: u32,
    l: u32,
    c: i64,
}

fn records(text: &str) -> Result<Vec<(usize, Record)>> {
    let doc: Value = serde_json::from_str(text)?;
    let items = match doc {
        Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .enumerate()
        .map(|(index, v)| {
            serde_json::from_value(v)
                .map(|r| (index, r))
                .map_err(|e| Error::Record {
                    index,
                    message: e.to_string(),
                })
        })
        .collect()
}

fn at(index: usize) -> impl Fn(Error) -> Error {
    move |e| Error::Record {
        index,
        message: match e {
            Error::InvalidInput(m) => m,
            other => other.to_string(),
        },
    }
}

pub fn parse_knots(text: &str) -> Result<Vec<Knot>> {
    records(text)?
        .into_iter()
        .map(|(index, rec)| match rec {
            Record::Seifert { name, v } => {
                let rows: Vec<&[i64]> = v.iter().map(Vec::as_slice).collect();
                let m = IntMat::from_i64(&rows).map_err(at(index))?;
                SeifertKnot::new(name, m).map(Knot::from).map_err(at(index))
            }
            Record::Twobridge { name, p, q } => {
                let k = match name {
                    Some(n) => TwoBridge::named(n, p, q),
                    None => TwoBridge::new(p, q),
                };
                k.map(Knot::from).map_err(at(index))
            }
            Record::Apoly { .. } => Err(Error::Record {
                index,
                message: "expected a knot record, found an A-polynomial".into(),
            }),
        })
        .collect()
}

pub fn parse_apolys(text: &str) -> Result<Vec<APoly>> {
    records(text)?
        .into_iter()
        .map(|(index, rec)| match rec {
            Record::Apoly {
                name,
                terms,
                p,
                q,
                small,
                det,
            } => {
                let poly = IntBiPoly::from_terms(
                    terms.iter().map(|t| ((t.m, t.l), BigInt::from(t.c))),
                );
                if terms.iter().any(|t| t.c == 0) {
                    return Err(Error::Record {
                        index,
                        message: "term coefficients must be nonzero".into(),
                    });
                }
                let mut a = APoly::new(name, poly).map_err(at(index))?;
                match (p, q) {
                    (Some(p), Some(q)) => a = a.with_two_bridge(p, q).map_err(at(index))?,
                    (None, None) => {}
                    _ => {
                        return Err(Error::Record {
                            index,
                            message: "p and q must be given together".into(),
                        })
                    }
                }
                if let Some(s) = small {
                    a = a.with_small(s);
                }
                if let Some(d) = det {
                    a = a.with_det(BigInt::from(d)).map_err(at(index))?;
                }
                Ok(a)
            }
            _ => Err(Error::Record {
                index,
                message: "expected an A-polynomial record".into(),
            }),
        })
        .collect()
}

pub fn load_knots(path: impl AsRef<Path>) -> Result<Vec<Knot>> {
    parse_knots(&fs::read_to_string(path)?)
}

pub fn load_apolys(path: impl AsRef<Path>) -> Result<Vec<APoly>> {
    parse_apolys(&fs::read_to_string(path)?)
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("entry fits in i64")
}

/// Serializes knots back to the input schema.
pub fn knots_to_json(knots: &[Knot]) -> String {
    let recs: Vec<Record> = knots
        .iter()
        .map(|k| match k {
            Knot::Seifert(s) => Record::Seifert {
                name: s.name().to_string(),
                v: s.seifert_matrix()
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(to_i64).collect())
                    .collect(),
            },
            Knot::TwoBridge(t) => Record::Twobridge {
                name: Some(t.name().to_string()),
                p: t.p(),
                q: t.q(),
            },
        })
        .collect();
    serde_json::to_string(&recs).expect("records serialize")
}

/// Serializes A-polynomials back to the input schema.
pub fn apolys_to_json(apolys: &[APoly]) -> String {
    let recs: Vec<Record> = apolys
        .iter()
        .map(|a| Record::Apoly {
            name: a.name().to_string(),
            terms: a
                .poly()
                .terms()
                .map(|(m, l, c)| Term { m, l, c: to_i64(c) })
                .collect(),
            p: a.two_bridge().map(|t| t.0),
            q: a.two_bridge().map(|t| t.1),
            small: a.small(),
            det: a.det().map(to_i64),
        })
        .collect();
    serde_json::to_string(&recs).expect("records serialize")
}
