//! The dictionary between SU(2) traces and θ-angles.
//!
//! A finite-order SU(2) element with eigenvalues e^{±πiθ} has trace
//! 2cos(πθ). For elements of the binary icosahedral group the angle θ lies in
//! {0, 1, 1/2, 1/3, 2/3, 1/5, 4/5, 2/5, 3/5} and the trace in the
//! corresponding nine-element subset of ℤ[φ]. Both directions of the lookup
//! are exact.

use std::fmt;
use std::sync::LazyLock;

use super::golden::GoldenNum;
use super::rational::{rat, Rational};
use super::ExactError;

/// The nine (θ, 2cos(πθ)) pairs realised by binary-icosahedral elements,
/// in a fixed order: θ = 0, 1, 1/2, 1/3, 2/3, 1/5, 4/5, 2/5, 3/5.
pub static TRACE_TABLE: LazyLock<[(Rational, GoldenNum); 9]> = LazyLock::new(|| {
    let phi = GoldenNum::phi();
    let phim1 = &phi - &GoldenNum::one(); // φ − 1 = 2cos(2π/5)
    [
        (rat(0, 1), GoldenNum::from_int(2)),
        (rat(1, 1), GoldenNum::from_int(-2)),
        (rat(1, 2), GoldenNum::zero()),
        (rat(1, 3), GoldenNum::one()),
        (rat(2, 3), GoldenNum::from_int(-1)),
        (rat(1, 5), phi.clone()),
        (rat(4, 5), -&phi),
        (rat(2, 5), phim1.clone()),
        (rat(3, 5), -&phim1),
    ]
});

/// θ ∈ [0, 1] with 2cos(πθ) = `trace`, for the nine icosahedral traces.
pub fn trace_to_theta(trace: &GoldenNum) -> Result<Rational, ExactError> {
    TRACE_TABLE
        .iter()
        .find(|(_, t)| t == trace)
        .map(|(theta, _)| theta.clone())
        .ok_or_else(|| ExactError::NotIcosahedralTrace(trace.to_string()))
}

/// 2cos(πθ) for the nine icosahedral angles θ.
pub fn theta_to_trace(theta: &Rational) -> Result<GoldenNum, ExactError> {
    TRACE_TABLE
        .iter()
        .find(|(th, _)| th == theta)
        .map(|(_, t)| t.clone())
        .ok_or_else(|| ExactError::NotIcosahedralTheta(theta.to_string()))
}

/// Conjugacy class of the image of an element in A₅ ≅ Γ/{±1}: rotations by
/// 1/2, 1/3, 1/5 and 2/5 of a turn, plus the identity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum A5Class {
    /// Identity of A₅ (lifts: trace ±2).
    Trivial,
    /// Half-turn (θ = 1/2).
    A,
    /// Third-turn (θ ∈ {1/3, 2/3}).
    B,
    /// Fifth-turn (θ ∈ {1/5, 4/5}).
    C,
    /// Two-fifths-turn (θ ∈ {2/5, 3/5}).
    D,
}

impl A5Class {
    /// Class of the A₅ image of an element with the given trace.
    pub fn from_trace(trace: &GoldenNum) -> Result<Self, ExactError> {
        Ok(Self::from_theta(&trace_to_theta(trace)?))
    }

    /// Class from the angle θ; assumes θ is one of the nine icosahedral
    /// angles (anything else maps to the nearest sensible bucket is *not*
    /// attempted — callers validate via the dictionary first).
    pub fn from_theta(theta: &Rational) -> Self {
        match (
            i64::try_from(theta.numer()).unwrap_or(i64::MAX),
            i64::try_from(theta.denom()).unwrap_or(i64::MAX),
        ) {
            (_, 1) => A5Class::Trivial,
            (_, 2) => A5Class::A,
            (_, 3) => A5Class::B,
            (1, 5) | (4, 5) => A5Class::C,
            _ => A5Class::D,
        }
    }

    /// One-letter label used in the classification table (empty for the
    /// trivial class, which the table suppresses).
    pub fn letter(&self) -> &'static str {
        match self {
            A5Class::Trivial => "",
            A5Class::A => "a",
            A5Class::B => "b",
            A5Class::C => "c",
            A5Class::D => "d",
        }
    }
}

impl fmt::Display for A5Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            A5Class::Trivial => write!(f, "1"),
            _ => write!(f, "{}", self.letter()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dictionary_roundtrip() {
        for (theta, trace) in TRACE_TABLE.iter() {
            assert_eq!(&trace_to_theta(trace).unwrap(), theta);
            assert_eq!(&theta_to_trace(theta).unwrap(), trace);
        }
    }

    #[test]
    fn rejects_foreign_values() {
        let half = GoldenNum::new(rat(1, 2), rat(0, 1));
        assert!(matches!(trace_to_theta(&half), Err(ExactError::NotIcosahedralTrace(_))));
        assert!(matches!(theta_to_trace(&rat(1, 7)), Err(ExactError::NotIcosahedralTheta(_))));
    }

    #[test]
    fn phi_is_a_fifth_turn_trace() {
        assert_eq!(trace_to_theta(&GoldenNum::phi()).unwrap(), rat(1, 5));
        assert_eq!(A5Class::from_trace(&GoldenNum::phi()).unwrap(), A5Class::C);
        assert_eq!(A5Class::from_trace(&-GoldenNum::phi()).unwrap(), A5Class::C);
        assert_eq!(A5Class::from_trace(&GoldenNum::from_int(-2)).unwrap(), A5Class::Trivial);
        assert_eq!(A5Class::from_trace(&GoldenNum::zero()).unwrap(), A5Class::A);
        assert_eq!(A5Class::from_trace(&GoldenNum::one()).unwrap(), A5Class::B);
        let d = &GoldenNum::phi() - &GoldenNum::one();
        assert_eq!(A5Class::from_trace(&d).unwrap(), A5Class::D);
    }
}
