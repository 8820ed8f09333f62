//! The ground field: exact rationals of arbitrary precision.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

/// Field scalar. `BigRational` keeps fractions reduced with a positive
/// denominator, which is exactly the canonical form we rely on for
/// deterministic output.
pub type Scalar = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("malformed rational `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"p"` or `"p/q"` with `q != 0`.
pub fn parse_scalar(s: &str) -> Result<Scalar, ScalarParseError> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| ScalarParseError::Malformed(s.to_string()))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| ScalarParseError::Malformed(s.to_string()))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(s.to_string()));
    }
    Ok(BigRational::new(num, den))
}

/// Canonical `"p"` / `"p/q"` form, inverse to [`parse_scalar`].
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Formats `coeff * name` terms the way a human writes them: `y`, `-2*x`,
/// `1/2*a`.
pub fn format_term(coeff: &Scalar, name: &str) -> String {
    if coeff.is_one() {
        name.to_string()
    } else if (-coeff).is_one() {
        format!("-{name}")
    } else {
        format!("{}*{}", format_scalar(coeff), name)
    }
}

pub fn is_negative(x: &Scalar) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "1", "-7", "3/4", "-3/4", "12/8"] {
            let v = parse_scalar(s).unwrap();
            let back = parse_scalar(&format_scalar(&v)).unwrap();
            assert_eq!(v, back);
        }
        // canonicalization
        assert_eq!(format_scalar(&parse_scalar("12/8").unwrap()), "3/2");
        assert_eq!(format_scalar(&parse_scalar("3/-4").unwrap()), "-3/4");
    }

    #[test]
    fn rejects_zero_denominator() {
        assert_eq!(
            parse_scalar("1/0"),
            Err(ScalarParseError::ZeroDenominator("1/0".to_string()))
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(
            parse_scalar("a/b"),
            Err(ScalarParseError::Malformed(_))
        ));
        assert!(matches!(
            parse_scalar("1.5"),
            Err(ScalarParseError::Malformed(_))
        ));
    }
}
