//! The base field: exact arbitrary-precision rationals.
//!
//! Every computation in this crate runs over `Scalar`; there is no floating
//! point anywhere. Rationals serialize as `"p/q"` (or `"p"` when the
//! denominator is one).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Integer as a scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced fraction `n/d`; panics on `d = 0` (programmer error, not input).
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::BadScalar(text.to_string()));
    }
    if let Some((num, den)) = trimmed.split_once('/') {
        let d = BigInt::from_str(den.trim()).map_err(|_| Error::BadScalar(text.to_string()))?;
        if d.is_zero() {
            return Err(Error::BadScalar(text.to_string()));
        }
        let n = BigInt::from_str(num.trim()).map_err(|_| Error::BadScalar(text.to_string()))?;
        Ok(BigRational::new(n, d))
    } else {
        BigInt::from_str(trimmed)
            .map(BigRational::from_integer)
            .map_err(|_| Error::BadScalar(text.to_string()))
    }
}

/// `"p"` when the denominator is 1, else `"p/q"`.
pub fn scalar_to_string(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_round_trip() {
        for text in ["0", "-7", "1/2", "-3/4", "22/7"] {
            let x = parse_scalar(text).unwrap();
            assert_eq!(scalar_to_string(&x), text);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_scalar("2/4").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("4/-2").unwrap(), int(-2));
    }

    #[test]
    fn parse_rejects_garbage() {
        for text in ["", "1/0", "x", "1.5", "1/ /2"] {
            assert!(parse_scalar(text).is_err(), "{text:?} should not parse");
        }
    }
}
