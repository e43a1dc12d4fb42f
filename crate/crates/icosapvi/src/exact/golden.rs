//! The golden field ℚ(√5).
//!
//! Every trace of a binary-icosahedral element lies in ℤ[φ] ⊂ ℚ(√5), so the
//! whole classification can be carried out with scalars of the form
//! a + b√5 with a, b ∈ ℚ. The representation is canonical (both components
//! reduced rationals), hence equality and hashing are exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::rational::{format_rational, parse_rational, rat, Rational};
use super::ExactError;

/// Element a + b√5 of ℚ(√5).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenNum {
    /// Rational part.
    pub a: Rational,
    /// Coefficient of √5.
    pub b: Rational,
}

impl GoldenNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenNum { a, b }
    }

    /// Rational a + 0·√5.
    pub fn from_rational(a: Rational) -> Self {
        GoldenNum { a, b: Rational::zero() }
    }

    /// Small-integer constructor, handy for constants.
    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// √5 itself.
    pub fn sqrt5() -> Self {
        GoldenNum { a: Rational::zero(), b: rat(1, 1) }
    }

    /// The golden ratio φ = (1 + √5)/2 = 2cos(π/5).
    pub fn phi() -> Self {
        GoldenNum { a: rat(1, 2), b: rat(1, 2) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True if the √5 component vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate a − b√5.
    pub fn conj(&self) -> Self {
        GoldenNum { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm a² − 5b² ∈ ℚ (zero only for the zero element, since √5 is
    /// irrational).
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rat(5, 1) * &self.b * &self.b
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm();
        Ok(GoldenNum { a: &self.a / &n, b: -&self.b / n })
    }

    /// Canonical `p/q,r/s` form used by the seven-tuple cache.
    pub fn serialize(&self) -> String {
        format!("{},{}", format_rational(&self.a), format_rational(&self.b))
    }

    /// Parse the `p/q,r/s` form produced by [`GoldenNum::serialize`].
    pub fn parse(s: &str) -> Result<Self, ExactError> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| ExactError::Parse(s.to_string(), "golden number"))?;
        Ok(GoldenNum { a: parse_rational(a)?, b: parse_rational(b)? })
    }

    /// Decimal approximation, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let f = |r: &Rational| {
            let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
            n / d
        };
        f(&self.a) + f(&self.b) * 5f64.sqrt()
    }
}

impl fmt::Display for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}√5", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{}{}√5", self.a, self.b)
        } else {
            write!(f, "{}+{}√5", self.a, self.b)
        }
    }
}

impl fmt::Debug for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: GoldenNum) -> GoldenNum {
        GoldenNum { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl<'a> Add<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: &GoldenNum) -> GoldenNum {
        GoldenNum { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: GoldenNum) -> GoldenNum {
        GoldenNum { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl<'a> Sub<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: &GoldenNum) -> GoldenNum {
        GoldenNum { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: GoldenNum) -> GoldenNum {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: &GoldenNum) -> GoldenNum {
        // (a + b√5)(c + d√5) = ac + 5bd + (ad + bc)√5
        GoldenNum {
            a: &self.a * &rhs.a + rat(5, 1) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum { a: -self.a, b: -self.b }
    }
}

impl<'a> Neg for &'a GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum { a: -&self.a, b: -&self.b }
    }
}

impl Div for GoldenNum {
    type Output = GoldenNum;
    /// Panics on division by zero; use [`GoldenNum::inverse`] to handle the
    /// zero case explicitly.
    fn div(self, rhs: GoldenNum) -> GoldenNum {
        (&self) * &rhs.inverse().expect("GoldenNum division by zero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_satisfies_its_minimal_polynomial() {
        let phi = GoldenNum::phi();
        // φ² = φ + 1
        assert_eq!(&phi * &phi, &phi + &GoldenNum::one());
        // 1/φ = φ − 1
        assert_eq!(phi.inverse().unwrap(), &phi - &GoldenNum::one());
    }

    #[test]
    fn sqrt5_squares_to_five() {
        let r5 = GoldenNum::sqrt5();
        assert_eq!(&r5 * &r5, GoldenNum::from_int(5));
    }

    #[test]
    fn field_axioms_on_samples() {
        let x = GoldenNum::new(rat(2, 3), rat(-1, 7));
        let y = GoldenNum::new(rat(-5, 2), rat(4, 9));
        let z = GoldenNum::new(rat(1, 11), rat(3, 5));
        let lhs = &x * &(&y + &z);
        let rhs = &(&x * &y) + &(&x * &z);
        assert_eq!(lhs, rhs);
        let inv = y.inverse().unwrap();
        assert_eq!(&y * &inv, GoldenNum::one());
        assert_eq!(GoldenNum::zero().inverse(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn norm_is_multiplicative() {
        let x = GoldenNum::new(rat(3, 4), rat(1, 6));
        let y = GoldenNum::new(rat(-2, 5), rat(7, 3));
        assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn serialization_roundtrip() {
        let x = GoldenNum::new(rat(-1, 2), rat(3, 7));
        assert_eq!(x.serialize(), "-1/2,3/7");
        assert_eq!(GoldenNum::parse(&x.serialize()).unwrap(), x);
        assert_eq!(GoldenNum::parse("1/2,1/2").unwrap(), GoldenNum::phi());
        assert!(GoldenNum::parse("1/2").is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GoldenNum::phi().to_string(), "1/2+1/2√5");
        assert_eq!(GoldenNum::from_int(-2).to_string(), "-2");
        assert_eq!((-GoldenNum::sqrt5()).to_string(), "-1√5");
    }
}
