//! Exact scalar arithmetic: rationals, the golden field ℚ(√5), quaternions,
//! and the trace ↔ θ dictionary for finite-order SU(2) elements.
//!
//! Everything downstream (group tables, braid orbits, alcove reduction,
//! symbolic verification) is built on these types; no floating point enters
//! the classification pipeline.

mod golden;
mod quat;
mod rational;
mod theta;

pub use golden::GoldenNum;
pub use quat::Quat;
pub use rational::{format_rational, parse_rational, rat, rat_i, Rational};
pub use theta::{theta_to_trace, trace_to_theta, A5Class, TRACE_TABLE};

use thiserror::Error;

/// Errors from exact scalar arithmetic and the trace dictionary.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    /// Division by the zero scalar.
    #[error("division by zero")]
    DivisionByZero,
    /// A trace value outside the nine traces realised by elements of the
    /// binary icosahedral group.
    #[error("{0} is not the trace of a binary-icosahedral element")]
    NotIcosahedralTrace(String),
    /// A θ value outside the nine angles realised by elements of the binary
    /// icosahedral group.
    #[error("{0} is not a binary-icosahedral angle")]
    NotIcosahedralTheta(String),
    /// Malformed textual representation of a scalar.
    #[error("cannot parse {0:?} as {1}")]
    Parse(String, &'static str),
}
