//! Dense univariate polynomials over ℚ.
//!
//! This is the scalar workhorse underneath the function-field arithmetic: a
//! polynomial is a coefficient vector in ascending powers of the curve
//! parameter s, with the invariant that the leading coefficient is nonzero
//! (the zero polynomial is the empty vector). Equality is therefore exact and
//! structural.
//!
//! Two operations dominate the cost of verifying the large catalog entries
//! and get non-textbook implementations:
//!
//! * **Multiplication** clears denominators first and convolves over ℤ, so a
//!   product of degree-n polynomials costs O(n²) integer multiplications plus
//!   one rational reduction per output coefficient, instead of O(n²) rational
//!   reductions.
//! * **GCD** uses a small-prime modular algorithm (Brown's method): compute
//!   the gcd of the primitive integer images modulo a sequence of 62-bit
//!   primes, reassemble the coefficients by CRT with symmetric lifting, and
//!   certify the stabilized candidate by exact trial division. Unlucky primes
//!   are detected by degree and discarded. A single prime already proves
//!   coprimality, which is the common case when reducing fractions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SymError;
use crate::exact::{format_rational, rat_i, Rational};

/// Polynomial in ℚ[s], stored as ascending coefficients without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The constant polynomial c.
    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The variable s itself.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// Convenience constructor from small integers, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the constant polynomial 1 (used to skip reductions).
    pub fn is_one_poly(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of s^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Leading coefficient, or None for the zero polynomial.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Scalar multiple c·p.
    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Monic rescaling p / lc(p); the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative d/ds.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_i(k as i64))
            .collect();
        Poly::new(coeffs)
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divrem(&self, rhs: &Poly) -> Result<(Poly, Poly), SymError> {
        let d = rhs
            .degree()
            .ok_or_else(|| SymError::DivisionByZero(format!("{self} / 0")))?;
        let lc_inv = rhs.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let q = rem.last().unwrap() * &lc_inv;
            if !q.is_zero() {
                for (i, c) in rhs.coeffs.iter().enumerate() {
                    let t = &rem[k + i] - c * &q;
                    rem[k + i] = t;
                }
            }
            rem.pop();
            quot[k] = q;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Division known to be exact; errors if a remainder survives.
    ///
    /// Runs over ℤ after clearing denominators (the quotient of an integer
    /// polynomial by a primitive exact divisor is again integral), which is
    /// far cheaper than rational long division on large operands.
    pub fn exact_div(&self, rhs: &Poly) -> Result<Poly, SymError> {
        if rhs.is_zero() {
            return Err(SymError::DivisionByZero(format!("{self} / 0")));
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let (num, num_den) = self.to_int_scaled();
        let (div, div_den) = rhs.to_int_scaled();
        let (div_prim, content, sign) = int_primitive(div);
        let q_int = int_exact_div(&num, &div_prim).ok_or_else(|| {
            SymError::InexactDivision(self.to_string(), rhs.to_string())
        })?;
        // self / rhs = (num/num_den) · div_den / (sign · content · div_prim).
        let scale = Rational::new(div_den * sign, num_den * content);
        Ok(Poly::new(q_int.into_iter().map(|c| Rational::from(c) * &scale).collect()))
    }

    /// Monic greatest common divisor over ℚ (zero if both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Poly::one();
        }
        let (ai, _) = a.to_int_scaled();
        let (bi, _) = b.to_int_scaled();
        let (ap, _, _) = int_primitive(ai);
        let (bp, _, _) = int_primitive(bi);
        let g = int_gcd_modular(&ap, &bp);
        Poly::new(g.into_iter().map(Rational::from).collect()).monic()
    }

    /// True when gcd(p, p′) is constant, i.e. p has no repeated roots.
    pub fn is_squarefree(&self) -> bool {
        Poly::gcd(self, &self.derivative()).degree() == Some(0)
    }

    /// Clear denominators: returns (integer coefficients, common denominator D)
    /// with self = (Σ cᵢ sⁱ)/D.
    fn to_int_scaled(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.denom().is_one() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}", format_rational(&mag))?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "{}s", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}s^{}", if show_coeff { "*" } else { "" }, k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (a, da) = self.to_int_scaled();
        let (b, db) = rhs.to_int_scaled();
        let mut conv = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    conv[i + j] += ai * bj;
                }
            }
        }
        let den = da * db;
        Poly::new(conv.into_iter().map(|c| Rational::new(c, den.clone())).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<'a> Neg for &'a Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

// ---------------------------------------------------------------------------
// Integer-polynomial kernel for gcd and exact division.
// ---------------------------------------------------------------------------

/// Content/sign split: v = sign · content · primitive, content > 0, primitive
/// with positive leading coefficient. The zero polynomial returns ([], 1, 1).
fn int_primitive(v: Vec<BigInt>) -> (Vec<BigInt>, BigInt, BigInt) {
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return (Vec::new(), BigInt::one(), BigInt::one());
    }
    let sign = if v.last().unwrap().is_negative() {
        BigInt::from(-1)
    } else {
        BigInt::one()
    };
    let scale = &content * &sign;
    (v.iter().map(|c| c / &scale).collect(), content, sign)
}

/// Exact long division of integer polynomials (divisor primitive); None when
/// a quotient step or the final remainder fails to be integral/zero.
fn int_exact_div(num: &[BigInt], div: &[BigInt]) -> Option<Vec<BigInt>> {
    let d = div.len() - 1;
    if num.len() <= d {
        return if num.iter().all(|c| c.is_zero()) { Some(Vec::new()) } else { None };
    }
    let lc = &div[d];
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - d];
    for k in (0..quot.len()).rev() {
        let (q, r) = rem[k + d].div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (i, c) in div.iter().enumerate() {
                let t = &rem[k + i] - c * &q;
                rem[k + i] = t;
            }
        }
        quot[k] = q;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

/// Primitive gcd of two primitive nonzero integer polynomials by Brown's
/// modular method: per-prime gcds over F_p, CRT reassembly with symmetric
/// lifting, certification by trial division.
fn int_gcd_modular(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let glc = a.last().unwrap().gcd(b.last().unwrap());
    let mut primes = PrimeStream::new();
    // CRT state: candidate coefficients mod `modulus`, at degree `deg`.
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut deg = usize::MAX;
    let mut last_lift: Option<Vec<BigInt>> = None;
    for _ in 0..512 {
        let p = primes.next_prime();
        let pb = BigInt::from(p);
        let ap = reduce_mod_p(a, p);
        let bp = reduce_mod_p(b, p);
        // A prime dividing a leading coefficient drops the degree: skip it.
        if ap.len() != a.len() || bp.len() != b.len() {
            continue;
        }
        let mut gp = gcd_mod_p(ap, bp, p);
        if gp.len() == 1 {
            return vec![BigInt::one()];
        }
        let gdeg = gp.len() - 1;
        if gdeg > deg {
            continue; // unlucky prime
        }
        // Normalize so every residue agrees with glc · (monic gcd) mod p.
        let glc_p = bigint_mod_u64(&glc, p);
        for c in gp.iter_mut() {
            *c = mulmod(*c, glc_p, p);
        }
        if gdeg < deg {
            deg = gdeg;
            residues = gp.iter().map(|&c| BigInt::from(c)).collect();
            modulus = pb;
            last_lift = None;
        } else {
            // CRT: x ≡ residues (mod modulus), x ≡ gp (mod p).
            let m_mod_p = bigint_mod_u64(&modulus, p);
            let m_inv = inv_mod(m_mod_p, p);
            for (r, &c) in residues.iter_mut().zip(gp.iter()) {
                let r_mod_p = bigint_mod_u64(r, p);
                let k = mulmod(submod(c, r_mod_p, p), m_inv, p);
                *r += &modulus * BigInt::from(k);
            }
            modulus *= &pb;
        }
        // Symmetric lift and stabilization check.
        let half = &modulus / 2;
        let lift: Vec<BigInt> = residues
            .iter()
            .map(|r| if r > &half { r - &modulus } else { r.clone() })
            .collect();
        if last_lift.as_deref() == Some(&lift) {
            let (cand, _, _) = int_primitive(lift.clone());
            if int_exact_div(a, &cand).is_some() && int_exact_div(b, &cand).is_some() {
                return cand;
            }
        }
        last_lift = Some(lift);
    }
    unreachable!("modular gcd failed to stabilize within 512 primes");
}

/// Image of an integer polynomial in F_p[x] (ascending, trimmed).
fn reduce_mod_p(v: &[BigInt], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = v.iter().map(|c| bigint_mod_u64(c, p)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn bigint_mod_u64(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Monic gcd in F_p[x] by the Euclidean algorithm (ascending dense vectors).
fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let d = b.len() - 1;
        let lc_inv = inv_mod(b[d], p);
        while a.len() > d {
            let k = a.len() - 1 - d;
            let q = mulmod(*a.last().unwrap(), lc_inv, p);
            if q != 0 {
                for i in 0..=d {
                    a[k + i] = submod(a[k + i], mulmod(b[i], q, p), p);
                }
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let lc_inv = inv_mod(*a.last().unwrap(), p);
    for c in a.iter_mut() {
        *c = mulmod(*c, lc_inv, p);
    }
    a
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for u64 (the listed bases certify all n < 2^64).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'outer: for &base in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(base, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Descending stream of 62-bit primes.
struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    fn new() -> Self {
        PrimeStream { next: (1u64 << 62) - 1 }
    }

    fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return c;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    /// Classical Euclidean gcd over ℚ, as an independent reference.
    fn gcd_euclid(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs = (0..=deg)
            .map(|_| Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into()))
            .collect();
        Poly::new(coeffs)
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        let q = Poly::new(vec![rat_i(1), rat_i(0), rat_i(0)]);
        assert_eq!(q.degree(), Some(0));
        assert!(Poly::new(vec![rat_i(0); 3]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn arithmetic_matches_hand_values() {
        let a = p(&[1, 2]); // 1 + 2s
        let b = p(&[-1, 1]); // s - 1
        assert_eq!(&a + &b, p(&[0, 3]));
        assert_eq!(&a - &b, p(&[2, 1]));
        assert_eq!(&a * &b, p(&[-1, -1, 2]));
        assert_eq!(-&a, p(&[-1, -2]));
        assert_eq!(a.eval(&rat_i(3)), rat_i(7));
    }

    #[test]
    fn derivative_and_eval() {
        let q = p(&[5, 0, 0, 1]); // s^3 + 5
        assert_eq!(q.derivative(), p(&[0, 0, 3]));
        assert_eq!(Poly::constant(rat_i(7)).derivative(), Poly::zero());
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[2, -3, 0, 4, 1]);
        let b = p(&[1, 0, 2]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert!(a.divrem(&Poly::zero()).is_err());
    }

    #[test]
    fn exact_div_agrees_with_multiplication() {
        let a = p(&[1, 2, 3]);
        let b = p(&[-4, 0, 0, 5, 6]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(p(&[1, 1]).exact_div(&p(&[0, 0, 1])).is_err());
    }

    #[test]
    fn gcd_of_known_factorizations() {
        // (s-1)(s+1) and (s-1)(s+2) share exactly s-1.
        let a = p(&[-1, 0, 1]);
        let b = p(&[-2, 1, 1]);
        assert_eq!(Poly::gcd(&a, &b), p(&[-1, 1]));
        // s^2 - 1 and s^3 - 1 share s - 1.
        assert_eq!(Poly::gcd(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])), p(&[-1, 1]));
        // Coprime pair.
        assert_eq!(Poly::gcd(&p(&[1, 1]), &p(&[1, 0, 1])), Poly::one());
        // Zero edge cases.
        assert_eq!(Poly::gcd(&Poly::zero(), &p(&[0, 2])), p(&[0, 1]));
        assert!(Poly::gcd(&Poly::zero(), &Poly::zero()).is_zero());
    }

    #[test]
    fn gcd_matches_euclid_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..60 {
            let g = random_poly(&mut rng, 3);
            let a = &random_poly(&mut rng, 4) * &g;
            let b = &random_poly(&mut rng, 4) * &g;
            assert_eq!(Poly::gcd(&a, &b), gcd_euclid(&a, &b));
        }
    }

    #[test]
    fn squarefree_detection() {
        assert!(p(&[-1, 0, 1]).is_squarefree()); // (s-1)(s+1)
        assert!(!p(&[1, 2, 1]).is_squarefree()); // (s+1)^2
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[-1, 0, 2]).to_string(), "2*s^2 - 1");
        assert_eq!(p(&[0, 1]).to_string(), "s");
        assert_eq!(Poly::zero().to_string(), "0");
        let half = Poly::new(vec![Rational::new(1.into(), 2.into()), rat_i(-1)]);
        assert_eq!(half.to_string(), "-s + 1/2");
    }
}
