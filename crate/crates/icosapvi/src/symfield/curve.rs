//! The quadratic function field ℚ(s)[u]/(u² − f).
//!
//! Elements are written a + b·u with a, b ∈ ℚ(s) and u a formal square root
//! of a squarefree modulus f ∈ ℚ[s]. Multiplication rewrites u² to f, and
//! inversion uses the norm: (a + bu)⁻¹ = (a − bu)/(a² − b²f). The derivation
//! d/ds extends from ℚ(s) by differentiating u² = f:
//!
//!   du/ds = f′/(2f) · u,
//!
//! so (a + bu)′ = a′ + (b′ + b·f′/(2f))·u.
//!
//! Purely rational elements (b = 0) carry no modulus and combine freely with
//! elements of any curve; mixing two nonzero u-parts over different moduli is
//! a [`SymError::ModulusMismatch`]. The arithmetic operators panic on that
//! mismatch (it is a programming error within one verification); the checked
//! entry point [`field_arith`] reports it as a value instead.
//!
//! Genus-zero parameterizations are the special case b = 0 throughout, so a
//! single type covers the whole catalog.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::SymError;
use crate::exact::Rational;

/// Element a + b·u of ℚ(s)[u]/(u² − f).
///
/// The modulus is `None` exactly when b = 0 (the element is rational and
/// belongs to every curve), which makes equality structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CurveFieldElem {
    a: RatFunc,
    b: RatFunc,
    f: Option<Poly>,
}

/// Binary operation selector for the checked entry point [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl CurveFieldElem {
    /// A purely rational element (b = 0, no modulus).
    pub fn rational(a: RatFunc) -> Self {
        CurveFieldElem { a, b: RatFunc::zero(), f: None }
    }

    /// Constant element.
    pub fn constant(c: Rational) -> Self {
        Self::rational(RatFunc::constant(c))
    }

    /// The curve parameter s.
    pub fn s() -> Self {
        Self::rational(RatFunc::x())
    }

    /// The square root u itself on the curve u² = f.
    ///
    /// The modulus must be nonconstant and squarefree, otherwise the quotient
    /// ring has zero divisors and is not a field.
    pub fn u(f: Poly) -> Result<Self, SymError> {
        Self::from_parts(RatFunc::zero(), RatFunc::one(), f)
    }

    /// Assemble a + b·u over u² = f (canonicalizing b = 0).
    pub fn from_parts(a: RatFunc, b: RatFunc, f: Poly) -> Result<Self, SymError> {
        match f.degree() {
            None | Some(0) => {
                return Err(SymError::Data(format!(
                    "modulus u^2 = {f} must be nonconstant"
                )))
            }
            _ if !f.is_squarefree() => {
                return Err(SymError::Data(format!(
                    "modulus u^2 = {f} is not squarefree"
                )))
            }
            _ => {}
        }
        if b.is_zero() {
            Ok(Self::rational(a))
        } else {
            Ok(CurveFieldElem { a, b, f: Some(f) })
        }
    }

    /// Rational part a.
    pub fn a(&self) -> &RatFunc {
        &self.a
    }

    /// Coefficient b of u.
    pub fn b(&self) -> &RatFunc {
        &self.b
    }

    /// The modulus f, present exactly when b ≠ 0.
    pub fn modulus(&self) -> Option<&Poly> {
        self.f.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the element lies in ℚ(s) (its u-part vanishes).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate a − b·u (swaps the two embeddings u ↦ ±√f).
    pub fn conj(&self) -> Self {
        CurveFieldElem { a: self.a.clone(), b: -&self.b, f: self.f.clone() }
    }

    /// The modulus both operands agree on; error when two nonzero u-parts
    /// live over different curves.
    fn join_modulus(x: &Self, y: &Self) -> Result<Option<Poly>, SymError> {
        match (&x.f, &y.f) {
            (None, m) | (m, None) => Ok(m.clone()),
            (Some(f1), Some(f2)) if f1 == f2 => Ok(Some(f1.clone())),
            (Some(f1), Some(f2)) => {
                Err(SymError::ModulusMismatch(f1.to_string(), f2.to_string()))
            }
        }
    }

    fn with_modulus(a: RatFunc, b: RatFunc, f: Option<Poly>) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            CurveFieldElem { a, b, f }
        }
    }

    fn checked_add(&self, rhs: &Self) -> Result<Self, SymError> {
        let f = Self::join_modulus(self, rhs)?;
        Ok(Self::with_modulus(&self.a + &rhs.a, &self.b + &rhs.b, f))
    }

    fn checked_sub(&self, rhs: &Self) -> Result<Self, SymError> {
        let f = Self::join_modulus(self, rhs)?;
        Ok(Self::with_modulus(&self.a - &rhs.a, &self.b - &rhs.b, f))
    }

    fn checked_mul(&self, rhs: &Self) -> Result<Self, SymError> {
        let f = Self::join_modulus(self, rhs)?;
        // (a1 + b1 u)(a2 + b2 u) = a1 a2 + b1 b2 f + (a1 b2 + b1 a2) u.
        let mut a = &self.a * &rhs.a;
        if !self.b.is_zero() && !rhs.b.is_zero() {
            let fq = RatFunc::from(f.clone().expect("nonzero u-parts carry a modulus"));
            a = &a + &(&(&self.b * &rhs.b) * &fq);
        }
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Ok(Self::with_modulus(a, b, f))
    }

    /// Multiplicative inverse via the norm a² − b²f; errors on zero (and on
    /// the zero divisors that a non-squarefree modulus would admit).
    pub fn recip(&self) -> Result<Self, SymError> {
        let norm = match &self.f {
            None => &self.a * &self.a,
            Some(f) => {
                &(&self.a * &self.a) - &(&(&self.b * &self.b) * &RatFunc::from(f.clone()))
            }
        };
        if norm.is_zero() {
            return Err(SymError::DivisionByZero(format!("1 / ({self})")));
        }
        let ninv = norm.recip()?;
        Ok(Self::with_modulus(&self.a * &ninv, &(-&self.b) * &ninv, self.f.clone()))
    }

    /// Checked division x/y.
    pub fn try_div(&self, rhs: &Self) -> Result<Self, SymError> {
        Self::join_modulus(self, rhs)?;
        self.checked_mul(&rhs.recip()?)
    }

    /// Derivation d/ds: (a + bu)′ = a′ + (b′ + b·f′/(2f))·u.
    pub fn derive(&self) -> Self {
        let da = self.a.derivative();
        if self.b.is_zero() {
            return Self::rational(da);
        }
        let f = self.f.as_ref().expect("nonzero u-part carries a modulus");
        let fprime = RatFunc::from(f.derivative());
        let two_f = RatFunc::from(f.scale(&Rational::from_integer(2.into())));
        let db = &self.b.derivative() + &(&(&self.b * &fprime) / &two_f);
        Self::with_modulus(da, db, self.f.clone())
    }
}

/// Checked field arithmetic: reports [`SymError::ModulusMismatch`] and
/// [`SymError::DivisionByZero`] as values instead of panicking.
pub fn field_arith(
    op: FieldOp,
    x: &CurveFieldElem,
    y: &CurveFieldElem,
) -> Result<CurveFieldElem, SymError> {
    match op {
        FieldOp::Add => x.checked_add(y),
        FieldOp::Sub => x.checked_sub(y),
        FieldOp::Mul => x.checked_mul(y),
        FieldOp::Div => x.try_div(y),
    }
}

impl fmt::Display for CurveFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "({})*u", self.b);
        }
        write!(f, "{} + ({})*u", self.a, self.b)
    }
}

impl fmt::Debug for CurveFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CurveFieldElem({self})")?;
        if let Some(m) = &self.f {
            write!(f, " where u^2 = {m}")?;
        }
        Ok(())
    }
}

impl Add for CurveFieldElem {
    type Output = CurveFieldElem;
    fn add(self, rhs: CurveFieldElem) -> CurveFieldElem {
        &self + &rhs
    }
}

impl<'a> Add<&'a CurveFieldElem> for &'a CurveFieldElem {
    type Output = CurveFieldElem;
    /// Panics on modulus mismatch; see [`field_arith`] for the checked form.
    fn add(self, rhs: &'a CurveFieldElem) -> CurveFieldElem {
        self.checked_add(rhs).expect("modulus mismatch in +")
    }
}

impl Sub for CurveFieldElem {
    type Output = CurveFieldElem;
    fn sub(self, rhs: CurveFieldElem) -> CurveFieldElem {
        &self - &rhs
    }
}

impl<'a> Sub<&'a CurveFieldElem> for &'a CurveFieldElem {
    type Output = CurveFieldElem;
    /// Panics on modulus mismatch; see [`field_arith`] for the checked form.
    fn sub(self, rhs: &'a CurveFieldElem) -> CurveFieldElem {
        self.checked_sub(rhs).expect("modulus mismatch in -")
    }
}

impl Mul for CurveFieldElem {
    type Output = CurveFieldElem;
    fn mul(self, rhs: CurveFieldElem) -> CurveFieldElem {
        &self * &rhs
    }
}

impl<'a> Mul<&'a CurveFieldElem> for &'a CurveFieldElem {
    type Output = CurveFieldElem;
    /// Panics on modulus mismatch; see [`field_arith`] for the checked form.
    fn mul(self, rhs: &'a CurveFieldElem) -> CurveFieldElem {
        self.checked_mul(rhs).expect("modulus mismatch in *")
    }
}

impl Neg for CurveFieldElem {
    type Output = CurveFieldElem;
    fn neg(self) -> CurveFieldElem {
        CurveFieldElem { a: -self.a, b: -self.b, f: self.f }
    }
}

impl<'a> Neg for &'a CurveFieldElem {
    type Output = CurveFieldElem;
    fn neg(self) -> CurveFieldElem {
        CurveFieldElem { a: -&self.a, b: -&self.b, f: self.f.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_i};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn modulus() -> Poly {
        // f = s^3 - s + 1/2, squarefree.
        Poly::new(vec![rat(1, 2), rat_i(-1), rat_i(0), rat_i(1)])
    }

    fn random_elem(rng: &mut ChaCha8Rng, f: &Poly) -> CurveFieldElem {
        let part = |rng: &mut ChaCha8Rng| {
            let num = Poly::new((0..3).map(|_| rat_i(rng.gen_range(-4i64..=4))).collect());
            let den = Poly::from_ints(&[rng.gen_range(1i64..=3), 1]);
            RatFunc::new(num, den).unwrap()
        };
        let a = part(rng);
        let b = part(rng);
        CurveFieldElem::from_parts(a, b, f.clone()).unwrap()
    }

    #[test]
    fn u_squares_to_the_modulus() {
        let f = modulus();
        let u = CurveFieldElem::u(f.clone()).unwrap();
        let expected = CurveFieldElem::rational(RatFunc::from(f));
        assert_eq!(&u * &u, expected);
    }

    #[test]
    fn norm_kills_the_u_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let f = modulus();
        for _ in 0..10 {
            let x = random_elem(&mut rng, &f);
            let n = &x * &x.conj();
            assert!(n.is_rational(), "(a+bu)(a-bu) must be rational, got {n}");
        }
    }

    #[test]
    fn reciprocal_against_multiplication() {
        let f = modulus();
        let u = CurveFieldElem::u(f.clone()).unwrap();
        let one = CurveFieldElem::constant(rat_i(1));
        assert_eq!(&u * &u.recip().unwrap(), one);
        let zero = CurveFieldElem::rational(RatFunc::zero());
        assert!(zero.recip().is_err());
        assert!(u.try_div(&zero).is_err());
    }

    #[test]
    fn derivation_on_rational_elements() {
        // (s^3)' = 3 s^2.
        let s3 = CurveFieldElem::rational(RatFunc::from(Poly::from_ints(&[0, 0, 0, 1])));
        let expected = CurveFieldElem::rational(RatFunc::from(Poly::from_ints(&[0, 0, 3])));
        assert_eq!(s3.derive(), expected);
    }

    #[test]
    fn derivation_of_u_matches_the_chain_rule() {
        let f = modulus();
        let u = CurveFieldElem::u(f.clone()).unwrap();
        // u' = f'/(2f) · u.
        let coeff = RatFunc::new(f.derivative(), f.scale(&rat_i(2))).unwrap();
        let expected =
            CurveFieldElem::from_parts(RatFunc::zero(), coeff, f.clone()).unwrap();
        assert_eq!(u.derive(), expected);
        // Consistency: (u·u)' = f' must equal u'u + uu'.
        let lhs = (&u * &u).derive();
        let rhs = &(&u.derive() * &u) + &(&u * &u.derive());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivation_is_a_leibniz_rule() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = modulus();
        for _ in 0..8 {
            let x = random_elem(&mut rng, &f);
            let y = random_elem(&mut rng, &f);
            let lhs = (&x * &y).derive();
            let rhs = &(&x.derive() * &y) + &(&x * &y.derive());
            assert_eq!(lhs, rhs, "Leibniz rule failed for {x:?}, {y:?}");
        }
    }

    #[test]
    fn rational_elements_mix_with_any_curve() {
        let f = modulus();
        let u = CurveFieldElem::u(f.clone()).unwrap();
        let s = CurveFieldElem::s();
        let sum = field_arith(FieldOp::Add, &s, &u).unwrap();
        assert_eq!(sum.modulus(), Some(&f));
        // Two genuinely different curves refuse to combine.
        let g = Poly::from_ints(&[-2, 0, 0, 1]);
        let v = CurveFieldElem::u(g).unwrap();
        match field_arith(FieldOp::Mul, &u, &v) {
            Err(SymError::ModulusMismatch(_, _)) => {}
            other => panic!("expected ModulusMismatch, got {other:?}"),
        }
    }

    #[test]
    fn modulus_validation() {
        assert!(CurveFieldElem::u(Poly::from_ints(&[3])).is_err());
        assert!(CurveFieldElem::u(Poly::from_ints(&[1, 2, 1])).is_err());
    }
}
