//! Reduced rational functions ℚ(s).
//!
//! A [`RatFunc`] is a fraction of two [`Poly`]s kept in canonical form at all
//! times: numerator and denominator coprime, denominator monic, and zero
//! represented as 0/1. Equality is therefore structural. Addition and
//! multiplication use Henrici's cross-cancellation scheme so that the gcds
//! computed are as small as the inputs allow — on coprime denominators an
//! addition performs no reduction at all, which is the common case inside the
//! Painlevé substitution.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::SymError;
use crate::exact::Rational;

/// Element of ℚ(s) in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Build num/den, reducing to canonical form. Errors when den = 0.
    pub fn new(num: Poly, den: Poly) -> Result<Self, SymError> {
        if den.is_zero() {
            return Err(SymError::DivisionByZero(format!("({num}) / 0")));
        }
        if num.is_zero() {
            return Ok(RatFunc { num: Poly::zero(), den: Poly::one() });
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let lc = den.leading().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    /// The coordinate function s.
    pub fn x() -> Self {
        RatFunc { num: Poly::x(), den: Poly::one() }
    }

    /// Constant function.
    pub fn constant(c: Rational) -> Self {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the function is a constant (denominator 1, degree ≤ 0).
    pub fn is_constant(&self) -> bool {
        self.den.is_one_poly() && self.num.degree().map_or(true, |d| d == 0)
    }

    /// Numerator in lowest terms.
    pub fn num(&self) -> &Poly {
        &self.num
    }

    /// Monic denominator in lowest terms.
    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Evaluate at s = x; None at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Derivative by the quotient rule, reduced.
    pub fn derivative(&self) -> Self {
        if self.den.is_one_poly() {
            return RatFunc { num: self.num.derivative(), den: Poly::one() };
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(num, &self.den * &self.den).expect("denominator square is nonzero")
    }

    /// Multiplicative inverse; errors on zero.
    pub fn recip(&self) -> Result<Self, SymError> {
        if self.is_zero() {
            return Err(SymError::DivisionByZero("1 / 0 in Q(s)".into()));
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Henrici: only the common denominator factor can cancel.
        let g = Poly::gcd(&self.den, &rhs.den);
        if g.degree() == Some(0) {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            // Coprime denominators leave the sum already reduced.
            return if num.is_zero() { RatFunc::zero() } else { RatFunc { num, den } };
        }
        let d1 = self.den.exact_div(&g).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        let g2 = Poly::gcd(&num, &g);
        if g2.degree() == Some(0) {
            RatFunc { num, den: &self.den * &d2 }
        } else {
            let num = num.exact_div(&g2).expect("gcd divides");
            let den = &self.den.exact_div(&g2).expect("gcd divides") * &d2;
            RatFunc { num, den }
        }
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel before multiplying; the factors stay coprime.
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let n1 = if g1.degree() == Some(0) { self.num.clone() } else { self.num.exact_div(&g1).expect("gcd divides") };
        let d2 = if g1.degree() == Some(0) { rhs.den.clone() } else { rhs.den.exact_div(&g1).expect("gcd divides") };
        let n2 = if g2.degree() == Some(0) { rhs.num.clone() } else { rhs.num.exact_div(&g2).expect("gcd divides") };
        let d1 = if g2.degree() == Some(0) { self.den.clone() } else { self.den.exact_div(&g2).expect("gcd divides") };
        let mut num = &n1 * &n2;
        let mut den = &d1 * &d2;
        let lc = den.leading().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::recip`] for a checked path.
    fn div(self, rhs: RatFunc) -> RatFunc {
        &self / &rhs
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &'a RatFunc) -> RatFunc {
        self * &rhs.recip().expect("division by zero in Q(s)")
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<'a> Neg for &'a RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (s^2 - 1)/(s - 1) = s + 1.
        let r = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(r, RatFunc::from(Poly::from_ints(&[1, 1])));
        // Denominator is normalized monic: (2s)/(2s+2) = s/(s+1).
        let r = rf(&[0, 2], &[2, 2]);
        assert_eq!(r.num(), &Poly::from_ints(&[0, 1]));
        assert_eq!(r.den(), &Poly::from_ints(&[1, 1]));
        assert!(RatFunc::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn field_identities() {
        let a = rf(&[1, 3], &[2, 0, 1]);
        let b = rf(&[-1, 1], &[0, 5]);
        let sum = &a + &b;
        assert_eq!(&sum - &b, a);
        let prod = &a * &b;
        assert_eq!(&prod / &b, a);
        assert_eq!(&a * &a.recip().unwrap(), RatFunc::one());
        assert!(RatFunc::zero().recip().is_err());
    }

    #[test]
    fn addition_cancels_common_denominator_factors() {
        // 1/(s(s-1)) + 1/(s(s+1)) = 2/((s-1)(s+1)).
        let a = rf(&[1], &[0, -1, 1]);
        let b = rf(&[1], &[0, 1, 1]);
        assert_eq!(&a + &b, rf(&[2], &[-1, 0, 1]));
    }

    #[test]
    fn derivative_satisfies_quotient_rule() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xd1ff);
        for _ in 0..20 {
            let num = Poly::new((0..4).map(|_| rat_i(rng.gen_range(-5i64..=5))).collect());
            let den = Poly::from_ints(&[rng.gen_range(1i64..=3), 0, 1]);
            let r = RatFunc::new(num.clone(), den.clone()).unwrap();
            // r' * den^2 == num' * den - num * den' as polynomials after clearing.
            let lhs = &r.derivative() * &RatFunc::from(&den * &den);
            let rhs = RatFunc::from(&(&num.derivative() * &den) - &(&num * &den.derivative()));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn evaluation_and_poles() {
        let r = rf(&[1], &[-2, 1]); // 1/(s-2)
        assert_eq!(r.eval(&rat_i(3)), Some(rat_i(1)));
        assert_eq!(r.eval(&rat_i(2)), None);
    }
}
