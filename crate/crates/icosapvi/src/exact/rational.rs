//! Arbitrary-precision rationals.
//!
//! The carrier type is [`num_rational::BigRational`], which is always stored
//! reduced with a positive denominator, so equality and hashing are
//! canonical. This module only adds the constructors and the fixed `p/q`
//! textual form used by the seven-tuple cache and the exporters.

use num_bigint::BigInt;
use num_traits::Signed;

use super::ExactError;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Rational from machine integers: `rat(p, q)` = p/q.
///
/// Panics if `q == 0`; intended for constants and tests, not for parsing
/// untrusted input.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a rational.
pub fn rat_i(p: i64) -> Rational {
    Rational::from(BigInt::from(p))
}

/// Canonical `p/q` form, always including the denominator (`3/1`, `-2/5`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `p/q` or a bare integer `p`; the sign may sit on the numerator.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let err = || ExactError::Parse(s.to_string(), "rational");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| err())?;
    let den: BigInt = den.trim().parse().map_err(|_| err())?;
    if den.is_positive() || den.is_negative() {
        Ok(Rational::new(num, den))
    } else {
        Err(err())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_and_reduce() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert!(rat(1, -2).denom().is_positive());
        assert_eq!(rat_i(7), rat(7, 1));
    }

    #[test]
    fn fixed_textual_form() {
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert_eq!(format_rational(&rat_i(3)), "3/1");
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("5").unwrap(), rat_i(5));
        assert_eq!(parse_rational("1/-2").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }
}
