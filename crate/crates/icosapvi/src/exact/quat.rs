//! Quaternions over ℚ(√5).
//!
//! A unit quaternion w + x𝐢 + y𝐣 + z𝐤 corresponds to the SU(2) matrix
//!
//! ```text
//! ⎛ w + xi   y + zi ⎞
//! ⎝ −y + zi  w − xi ⎠
//! ```
//!
//! so quaternion multiplication is SL₂ matrix multiplication and the matrix
//! trace is 2w. The binary icosahedral group lives inside the unit
//! quaternions with coordinates in ½ℤ[φ], which is why [`GoldenNum`]
//! components suffice.

use std::fmt;
use std::ops::{Mul, Neg};

use super::golden::GoldenNum;
use super::ExactError;

/// Quaternion w + x𝐢 + y𝐣 + z𝐤 with components in ℚ(√5).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quat {
    pub w: GoldenNum,
    pub x: GoldenNum,
    pub y: GoldenNum,
    pub z: GoldenNum,
}

impl Quat {
    pub fn new(w: GoldenNum, x: GoldenNum, y: GoldenNum, z: GoldenNum) -> Self {
        Quat { w, x, y, z }
    }

    pub fn one() -> Self {
        Quat {
            w: GoldenNum::one(),
            x: GoldenNum::zero(),
            y: GoldenNum::zero(),
            z: GoldenNum::zero(),
        }
    }

    /// Conjugate w − x𝐢 − y𝐣 − z𝐤; for unit quaternions this is the inverse.
    pub fn conj(&self) -> Self {
        Quat { w: self.w.clone(), x: -&self.x, y: -&self.y, z: -&self.z }
    }

    /// Reduced norm w² + x² + y² + z² (the determinant of the matrix form).
    pub fn norm(&self) -> GoldenNum {
        &(&(&self.w * &self.w) + &(&self.x * &self.x))
            + &(&(&self.y * &self.y) + &(&self.z * &self.z))
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == GoldenNum::one()
    }

    /// Inverse conj/norm; errors on the zero quaternion.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let n = self.norm().inverse()?;
        let c = self.conj();
        Ok(Quat { w: &c.w * &n, x: &c.x * &n, y: &c.y * &n, z: &c.z * &n })
    }

    /// Trace of the SU(2) matrix form, i.e. 2w.
    pub fn trace(&self) -> GoldenNum {
        &GoldenNum::from_int(2) * &self.w
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, rhs: Quat) -> Quat {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a Quat> for &'a Quat {
    type Output = Quat;
    /// Hamilton product (𝐢𝐣 = 𝐤, 𝐣𝐤 = 𝐢, 𝐤𝐢 = 𝐣); matches matrix
    /// multiplication of the SU(2) forms in the same order.
    fn mul(self, rhs: &Quat) -> Quat {
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        Quat {
            w: &(&(w1 * w2) - &(x1 * x2)) - &(&(y1 * y2) + &(z1 * z2)),
            x: &(&(w1 * x2) + &(x1 * w2)) + &(&(y1 * z2) - &(z1 * y2)),
            y: &(&(w1 * y2) - &(x1 * z2)) + &(&(y1 * w2) + &(z1 * x2)),
            z: &(&(w1 * z2) + &(x1 * y2)) - &(&(y1 * x2) - &(z1 * w2)),
        }
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})i + ({})j + ({})k", self.w, self.x, self.y, self.z)
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn g(a: i64, b: i64, c: i64, d: i64) -> Quat {
        Quat::new(
            GoldenNum::from_int(a),
            GoldenNum::from_int(b),
            GoldenNum::from_int(c),
            GoldenNum::from_int(d),
        )
    }

    #[test]
    fn hamilton_relations() {
        let i = g(0, 1, 0, 0);
        let j = g(0, 0, 1, 0);
        let k = g(0, 0, 0, 1);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, -g(1, 0, 0, 0));
        assert_eq!(&j * &i, -(&i * &j));
    }

    #[test]
    fn norm_is_multiplicative_and_inverse_works() {
        let p = Quat::new(
            GoldenNum::new(rat(1, 2), rat(0, 1)),
            GoldenNum::new(rat(-1, 3), rat(1, 6)),
            GoldenNum::phi(),
            GoldenNum::from_int(2),
        );
        let q = g(3, -1, 4, 1);
        assert_eq!((&p * &q).norm(), &p.norm() * &q.norm());
        let pinv = p.inverse().unwrap();
        assert_eq!(&p * &pinv, Quat::one());
    }

    #[test]
    fn trace_is_twice_real_part() {
        let p = Quat::new(GoldenNum::phi(), GoldenNum::zero(), GoldenNum::one(), GoldenNum::zero());
        assert_eq!(p.trace(), &GoldenNum::from_int(2) * &GoldenNum::phi());
    }
}
