//! The product structure on the unit interval.
//!
//! Every value the solver touches is a [`Scalar`]: an exact rational in
//! `[0, 1]`. On top of it live the product t-norm, the product negation
//! (which only asks whether its argument is zero), the residuated
//! implication of the product and the maximum. The t-norm and the residuum
//! form an adjoint pair:
//!
//! ```text
//! x * y <= z   <=>   y <= residuum(z, x)
//! ```
//!
//! There is no floating point anywhere; equality is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number confined to `[0, 1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// Builds `numer / denom`, failing unless the result lies in `[0, 1]`.
    pub fn from_ratio(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidNumber {
                location: "ratio".into(),
                text: format!("{numer}/{denom}"),
                reason: "zero denominator".into(),
            });
        }
        Self::from_rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_rational(value: BigRational) -> Result<Self> {
        if value.is_negative() || value > BigRational::one() {
            return Err(Error::OutOfRange {
                location: "value".into(),
                text: value.to_string(),
            });
        }
        Ok(Scalar(value))
    }

    /// Parses a decimal string (`"0.3"`, `"1"`) or a fraction (`"3/4"`).
    ///
    /// `location` is echoed back in diagnostics.
    pub fn parse_at(text: &str, location: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidNumber {
            location: location.to_string(),
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let value = if let Some((numer, denom)) = text.split_once('/') {
            let numer =
                parse_digits(numer).ok_or_else(|| invalid("numerator is not a digit string"))?;
            let denom =
                parse_digits(denom).ok_or_else(|| invalid("denominator is not a digit string"))?;
            if denom.is_zero() {
                return Err(invalid("zero denominator"));
            }
            BigRational::new(numer, denom)
        } else {
            let (int_part, frac_part) = match text.split_once('.') {
                Some((i, f)) => (i, f),
                None => (text, ""),
            };
            let int_value = parse_digits(int_part)
                .ok_or_else(|| invalid("expected a decimal string like \"0.3\""))?;
            if text.contains('.') && frac_part.is_empty() {
                return Err(invalid("missing digits after the decimal point"));
            }
            let frac_value = if frac_part.is_empty() {
                BigInt::zero()
            } else {
                parse_digits(frac_part)
                    .ok_or_else(|| invalid("expected a decimal string like \"0.3\""))?
            };
            let scale = num_traits::pow(BigInt::from(10u32), frac_part.len());
            BigRational::new(int_value * &scale + frac_value, scale)
        };
        if value > BigRational::one() {
            return Err(Error::OutOfRange {
                location: location.to_string(),
                text: text.to_string(),
            });
        }
        Ok(Scalar(value))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Halves the value; stays inside `[0, 1]`.
    pub fn halved(&self) -> Scalar {
        Scalar(&self.0 / BigInt::from(2u32))
    }

    /// Whether the value has a finite decimal expansion.
    pub fn is_terminating_decimal(&self) -> bool {
        split_two_five(self.0.denom()).2.is_one()
    }

    /// `true` when `q * self` is an integer, i.e. the value sits on the
    /// grid `{0, 1/q, ..., 1}`.
    pub fn is_on_grid(&self, q: u32) -> bool {
        (&self.0 * BigRational::from_integer(q.into())).is_integer()
    }
}

fn parse_digits(text: &str) -> Option<BigInt> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(text.as_bytes(), 10)
}

/// Splits `d = 2^a * 5^b * rest`.
fn split_two_five(d: &BigInt) -> (usize, usize, BigInt) {
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let mut rest = d.clone();
    let mut twos = 0;
    let mut fives = 0;
    while !rest.is_zero() && rest.is_multiple_of(&two) {
        rest /= &two;
        twos += 1;
    }
    while !rest.is_zero() && rest.is_multiple_of(&five) {
        rest /= &five;
        fives += 1;
    }
    (twos, fives, rest)
}

/// Shortest exact decimal when one exists (`"0.75"`, `"1"`), `"p/q"`
/// otherwise (`"1/3"`).
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numer = self.0.numer();
        let denom = self.0.denom();
        if denom.is_one() {
            return write!(f, "{numer}");
        }
        let (twos, fives, rest) = split_two_five(denom);
        if !rest.is_one() {
            return write!(f, "{numer}/{denom}");
        }
        let digits = twos.max(fives);
        let scaled = numer * num_traits::pow(BigInt::from(10u32), digits) / denom;
        let text = scaled.to_string();
        let (int_part, frac_part) = if text.len() > digits {
            text.split_at(text.len() - digits)
        } else {
            ("0", text.as_str())
        };
        write!(f, "{int_part}.{frac_part:0>digits$}")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scalar::parse_at(s, "input")
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// The product t-norm `x * y`.
pub fn tnorm_product(x: &Scalar, y: &Scalar) -> Scalar {
    Scalar(&x.0 * &y.0)
}

/// The product negation: `1` at zero, `0` everywhere else.
pub fn neg_product(x: &Scalar) -> Scalar {
    if x.is_zero() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// The residuated implication of the product, `z <- x = min(1, z / x)`.
///
/// At `x = 0` this is `1`, the largest `y` with `0 * y <= z`.
pub fn residuum(z: &Scalar, x: &Scalar) -> Scalar {
    if x.0 <= z.0 {
        // covers x = 0 as well as z / x >= 1
        Scalar::one()
    } else {
        Scalar(&z.0 / &x.0)
    }
}

pub fn max<'a>(x: &'a Scalar, y: &'a Scalar) -> &'a Scalar {
    if x >= y {
        x
    } else {
        y
    }
}

pub fn min<'a>(x: &'a Scalar, y: &'a Scalar) -> &'a Scalar {
    if x <= y {
        x
    } else {
        y
    }
}
