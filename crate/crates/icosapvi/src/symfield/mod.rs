//! Exact symbolic verification of algebraic solutions y(t).
//!
//! Every solution in the bundled catalog is presented parametrically: a curve
//! parameter s, optionally a square root u with u² = f(s) for a squarefree
//! f ∈ ℚ[s], and the pair (y, t) as elements of the function field
//! ℚ(s)[u]/(u² − f). Verification substitutes the pair into the second-order
//! equation
//!
//!   y″ = ½(1/y + 1/(y−1) + 1/(y−t))(y′)²
//!        − (1/t + 1/(t−1) + 1/(y−t)) y′
//!        + y(y−1)(y−t)/(t²(t−1)²) · [α + β t/y² + γ(t−1)/(y−1)² + δ t(t−1)/(y−t)²]
//!
//! with α = (θ₄−1)²/2, β = −θ₁²/2, γ = θ₃²/2, δ = (1−θ₂²)/2, where
//! derivatives in t become derivations in s by the chain rule y′ = ẏ/ṫ. The
//! residual is computed as an exact field element; a solution is accepted only
//! when it is identically zero, coefficient by coefficient. No floating point
//! is involved anywhere.
//!
//! The pieces:
//!
//! * [`Poly`] — dense polynomials over ℚ with modular gcd.
//! * [`RatFunc`] — reduced rational functions ℚ(s).
//! * [`CurveFieldElem`] — elements a + b·u of the quadratic extension.
//! * [`pvi_residual`], [`check_implicit`], [`leading_coeff`] — the actual
//!   verification predicates.
//! * [`catalog`], [`verify_entry`], [`verify_all`] — the bundled table of
//!   explicit solutions and the batch verifier.

use thiserror::Error;

use crate::exact::ExactError;

mod catalog;
mod curve;
mod poly;
mod pvi;
mod ratfunc;

pub use catalog::{
    catalog, catalog_entry, verify_all, verify_entry, CatalogEntry, CatalogReport, EntryReport,
    LeadingBranch,
};
pub use curve::{field_arith, CurveFieldElem, FieldOp};
pub use poly::Poly;
pub use pvi::{check_implicit, leading_coeff, pvi_residual, BiPoly, PviParams};
pub use ratfunc::RatFunc;

/// Errors from symbolic field arithmetic and solution verification.
#[derive(Debug, Error)]
pub enum SymError {
    /// Division by an exact zero; carries a rendering of the expression.
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    /// Polynomial division that was promised exact left a remainder.
    #[error("inexact polynomial division: ({0}) by ({1})")]
    InexactDivision(String, String),
    /// Two operands live on different curves u² = f.
    #[error("modulus mismatch: u^2 = {0} versus u^2 = {1}")]
    ModulusMismatch(String, String),
    /// dt/ds vanishes identically, so d/dt makes no sense on this curve.
    #[error("degenerate parameterization: dt/ds = 0 for t = {0}")]
    DegenerateParameterization(String),
    /// The requested base point does not lie over (y, t) = (0, 0).
    #[error("s = {0} is not a common zero of y and t: {1}")]
    NotACommonZero(String, String),
    /// The limit y/t fails to exist as a finite rational number.
    #[error("limit undefined: {0}")]
    LimitUndefined(String),
    /// A catalog entry's residual came out nonzero.
    #[error("verification failed for `{id}` at theta = {theta}: residual = {residual}")]
    VerificationFailed {
        /// Catalog identifier of the failing entry.
        id: String,
        /// The parameter tuple at which the residual was evaluated.
        theta: String,
        /// Rendering of the nonzero residual.
        residual: String,
    },
    /// Unknown catalog identifier.
    #[error("no catalog entry named `{0}`")]
    UnknownEntry(String),
    /// Malformed bundled data (should be unreachable with the shipped file).
    #[error("catalog data error: {0}")]
    Data(String),
    /// Rational parse failure bubbled up from the scalar layer.
    #[error(transparent)]
    Exact(#[from] ExactError),
}
