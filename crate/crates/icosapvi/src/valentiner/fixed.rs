//! Fixed-point real and complex arithmetic at configurable precision.
//!
//! A value is an integer mantissa m with an implicit scale 2^(−bits), i.e.
//! v = m / 2^bits. All operands of a binary operation must carry the same
//! `bits`; results keep it. Sixty significant decimal digits need ~200 bits,
//! and every constructor adds guard bits on top, so the handful of ulps lost
//! to truncation in series summation never reaches the comparison tolerance
//! (10⁻³⁰) used by the recognition step.
//!
//! The only transcendental machinery required is π (Machin's formula),
//! sine/cosine (Taylor after range reduction), and integer square roots —
//! enough to realize ω = e^{2πi/3}, τ = (1+√5)/2, and the unit numbers
//! e^{iπ·(p/q)} exactly to precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Fixed-point real number v = m / 2^bits.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Fx {
    m: BigInt,
    bits: u32,
}

impl Fx {
    pub fn zero(bits: u32) -> Self {
        Fx { m: BigInt::zero(), bits }
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        Fx { m: BigInt::from(n) << bits, bits }
    }

    /// Exact-to-precision rational p/q.
    pub fn from_ratio(p: &BigInt, q: &BigInt, bits: u32) -> Self {
        Fx { m: (p << bits) / q, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn abs(&self) -> Self {
        Fx { m: self.m.abs(), bits: self.bits }
    }

    /// |self| < |rhs| as real numbers.
    pub fn abs_lt(&self, rhs: &Fx) -> bool {
        assert_eq!(self.bits, rhs.bits);
        self.m.abs() < rhs.m.abs()
    }

    pub fn mul(&self, rhs: &Fx) -> Self {
        assert_eq!(self.bits, rhs.bits);
        Fx { m: (&self.m * &rhs.m) >> self.bits, bits: self.bits }
    }

    pub fn div(&self, rhs: &Fx) -> Self {
        assert_eq!(self.bits, rhs.bits);
        assert!(!rhs.m.is_zero(), "fixed-point division by zero");
        Fx { m: (&self.m << self.bits) / &rhs.m, bits: self.bits }
    }

    pub fn div_int(&self, k: i64) -> Self {
        Fx { m: &self.m / BigInt::from(k), bits: self.bits }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Fx { m: &self.m * BigInt::from(k), bits: self.bits }
    }

    pub fn half(&self) -> Self {
        Fx { m: &self.m >> 1, bits: self.bits }
    }

    /// √self for self ≥ 0 (floor at the last bit).
    pub fn sqrt(&self) -> Self {
        assert!(!self.m.is_negative(), "square root of a negative value");
        Fx { m: (&self.m << self.bits).sqrt(), bits: self.bits }
    }

    /// Lossy conversion for display purposes only.
    pub fn to_f64(&self) -> f64 {
        self.m.to_f64().unwrap_or(f64::INFINITY) / 2f64.powi(self.bits as i32)
    }

    /// Approximate decimal rendering "d.dde±xx" for diagnostics.
    pub fn to_decimal(&self) -> String {
        if self.m.is_zero() {
            return "0".to_string();
        }
        let e2 = self.m.bits() as i64 - self.bits as i64;
        let e10 = (e2 as f64 * std::f64::consts::LOG10_2).floor() as i64;
        // Scale so that two fractional digits survive.
        let shift = 2 - e10;
        let scaled = if shift >= 0 {
            (&self.m * BigInt::from(10u32).pow(shift as u32)) >> self.bits
        } else {
            (&self.m >> self.bits) / BigInt::from(10u32).pow((-shift) as u32)
        };
        let mant = scaled.to_i128().unwrap_or(0) as f64 / 100.0;
        format!("{mant:.2}e{e10}")
    }
}

impl fmt::Debug for Fx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fx({} @{} bits)", self.to_decimal(), self.bits)
    }
}

impl<'a> Add<&'a Fx> for &'a Fx {
    type Output = Fx;
    fn add(self, rhs: &'a Fx) -> Fx {
        assert_eq!(self.bits, rhs.bits);
        Fx { m: &self.m + &rhs.m, bits: self.bits }
    }
}

impl<'a> Sub<&'a Fx> for &'a Fx {
    type Output = Fx;
    fn sub(self, rhs: &'a Fx) -> Fx {
        assert_eq!(self.bits, rhs.bits);
        Fx { m: &self.m - &rhs.m, bits: self.bits }
    }
}

impl<'a> Mul<&'a Fx> for &'a Fx {
    type Output = Fx;
    fn mul(self, rhs: &'a Fx) -> Fx {
        Fx::mul(self, rhs)
    }
}

impl<'a> Neg for &'a Fx {
    type Output = Fx;
    fn neg(self) -> Fx {
        Fx { m: -&self.m, bits: self.bits }
    }
}

/// arctan(1/k) by the Gregory series, in fixed point.
fn atan_inv(k: i64, bits: u32) -> Fx {
    let mut p = BigInt::from(1) << bits;
    p /= k;
    let k2 = BigInt::from(k) * BigInt::from(k);
    let mut sum = p.clone();
    let mut n: i64 = 1;
    loop {
        p /= &k2;
        if p.is_zero() {
            break;
        }
        let contrib = &p / BigInt::from(2 * n + 1);
        if n % 2 == 1 {
            sum -= contrib;
        } else {
            sum += contrib;
        }
        n += 1;
    }
    Fx { m: sum, bits }
}

/// π by Machin's formula 16·atan(1/5) − 4·atan(1/239).
pub(crate) fn pi(bits: u32) -> Fx {
    let a = atan_inv(5, bits).mul_int(16);
    let b = atan_inv(239, bits).mul_int(4);
    &a - &b
}

/// Reduce x into (−π, π] by subtracting the nearest multiple of 2π.
fn range_reduce(x: &Fx, pi_val: &Fx) -> Fx {
    let two_pi = pi_val.mul_int(2);
    // Nearest-integer quotient of x / 2π.
    let q = x.div(&two_pi);
    let half = Fx::from_int(1, x.bits()).half();
    let shifted = &q + &half;
    let k = &shifted.m >> shifted.bits;
    // two_pi.m is at scale 2^bits already, so an integer multiple stays there.
    let correction = Fx { m: &two_pi.m * &k, bits: x.bits() };
    x - &correction
}

/// cos(x) by Taylor after range reduction.
pub(crate) fn cos(x: &Fx, pi_val: &Fx) -> Fx {
    let x = range_reduce(x, pi_val);
    let x2 = &x * &x;
    let mut term = Fx::from_int(1, x.bits());
    let mut sum = term.clone();
    let mut n: i64 = 1;
    while !term.is_zero() {
        term = (&term * &x2).div_int((2 * n - 1) * (2 * n));
        term = -&term;
        sum = &sum + &term;
        n += 1;
    }
    sum
}

/// sin(x) by Taylor after range reduction.
pub(crate) fn sin(x: &Fx, pi_val: &Fx) -> Fx {
    let x = range_reduce(x, pi_val);
    let x2 = &x * &x;
    let mut term = x.clone();
    let mut sum = term.clone();
    let mut n: i64 = 1;
    while !term.is_zero() {
        term = (&term * &x2).div_int((2 * n) * (2 * n + 1));
        term = -&term;
        sum = &sum + &term;
        n += 1;
    }
    sum
}

/// Fixed-point complex number.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Cx {
    pub re: Fx,
    pub im: Fx,
}

impl Cx {
    pub fn new(re: Fx, im: Fx) -> Self {
        assert_eq!(re.bits(), im.bits());
        Cx { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        Cx { re: Fx::zero(bits), im: Fx::zero(bits) }
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        Cx { re: Fx::from_int(n, bits), im: Fx::zero(bits) }
    }

    pub fn real(re: Fx) -> Self {
        let bits = re.bits();
        Cx { re, im: Fx::zero(bits) }
    }

    /// The imaginary unit i.
    pub fn i(bits: u32) -> Self {
        Cx { re: Fx::zero(bits), im: Fx::from_int(1, bits) }
    }

    pub fn bits(&self) -> u32 {
        self.re.bits()
    }

    pub fn conj(&self) -> Self {
        Cx { re: self.re.clone(), im: -&self.im }
    }

    pub fn mul(&self, rhs: &Cx) -> Self {
        Cx {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }

    pub fn div(&self, rhs: &Cx) -> Self {
        let den = &(&rhs.re * &rhs.re) + &(&rhs.im * &rhs.im);
        let num = self.mul(&rhs.conj());
        Cx { re: num.re.div(&den), im: num.im.div(&den) }
    }

    /// Scalar multiple by an exact dyadic −1/2 (used by the r₂ prefactor).
    pub fn neg_half(&self) -> Self {
        Cx { re: -&self.re.half(), im: -&self.im.half() }
    }

    /// Scalar multiple by a real factor.
    pub fn mul_real(&self, r: &Fx) -> Self {
        Cx { re: &self.re * r, im: &self.im * r }
    }

    /// max(|re|, |im|) — an ∞-norm magnitude for tolerance checks.
    pub fn magnitude(&self) -> Fx {
        let ra = self.re.abs();
        let ia = self.im.abs();
        if ia.abs_lt(&ra) {
            ra
        } else {
            ia
        }
    }
}

impl fmt::Debug for Cx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re.to_decimal(), self.im.to_decimal())
    }
}

impl<'a> Add<&'a Cx> for &'a Cx {
    type Output = Cx;
    fn add(self, rhs: &'a Cx) -> Cx {
        Cx { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Cx> for &'a Cx {
    type Output = Cx;
    fn sub(self, rhs: &'a Cx) -> Cx {
        Cx { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Cx> for &'a Cx {
    type Output = Cx;
    fn mul(self, rhs: &'a Cx) -> Cx {
        Cx::mul(self, rhs)
    }
}

impl<'a> Neg for &'a Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        Cx { re: -&self.re, im: -&self.im }
    }
}

/// e^{iπ·(p/q)} at the given precision.
pub(crate) fn exp_i_pi_frac(p: &BigInt, q: &BigInt, pi_val: &Fx) -> Cx {
    let bits = pi_val.bits();
    let angle = pi_val.mul(&Fx::from_ratio(p, q, bits));
    Cx { re: cos(&angle, pi_val), im: sin(&angle, pi_val) }
}
