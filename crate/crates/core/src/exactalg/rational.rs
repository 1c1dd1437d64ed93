use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Representative of `x` modulo 1 in `[0, 1)`.
pub fn frac_part(x: &Rat) -> Rat {
    x - x.floor()
}

/// Canonical `num/den` rendering, also for integers (`3/1`).
pub fn fmt_rat(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub(crate) fn fmt_rat_short(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
