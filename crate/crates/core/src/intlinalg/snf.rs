use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntMat;
use crate::error::{Error, Result};

/// `u * w * vt == d` with `u`, `vt` unimodular and `d` diagonal, nonnegative,
/// and `d[i] | d[i+1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMat,
    pub d: IntMat,
    pub vt: IntMat,
}

impl SnfResult {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }

    /// Product of the invariant factors, i.e. `|det w|`.
    pub fn abs_det(&self) -> BigInt {
        self.invariant_factors().iter().product()
    }
}

/// Smith normal form by repeated minimum-absolute-value pivoting.
pub fn smith_normal_form(w: &IntMat) -> Result<SnfResult> {
    if !w.is_square() {
        return Err(Error::NotSquare {
            rows: w.rows(),
            cols: w.cols(),
        });
    }
    let n = w.rows();
    let mut a = w.clone();
    let mut u = IntMat::identity(n);
    let mut vt = IntMat::identity(n);

    for t in 0..n {
        loop {
            let Some((pi, pj)) = min_abs_entry(&a, t) else {
                // remaining block is zero
                return Ok(finish(a, u, vt));
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            vt.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..n {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, t)] / &pivot);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(t, j)] / &pivot);
                a.add_col_multiple(j, t, &q);
                vt.add_col_multiple(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let offender = (t + 1..n).find(|&i| {
                (t + 1..n).any(|j| !(&a[(i, j)] % &pivot).is_zero())
            });
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    Ok(finish(a, u, vt))
}

fn finish(d: IntMat, u: IntMat, vt: IntMat) -> SnfResult {
    SnfResult { u, d, vt }
}

fn min_abs_entry(a: &IntMat, t: usize) -> Option<(usize, usize)> {
    let n = a.rows();
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..n {
        for j in t..n {
            let v = a[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| v < *b) {
                best = Some((i, j, v));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
