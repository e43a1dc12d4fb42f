//! The Painlevé VI residual operator and its companions.
//!
//! For a parameterized pair (y(s), t(s)) on a curve u² = f(s), derivatives in
//! t are pulled back through the chain rule, y′ = ẏ/ṫ and y″ = (y′)˙/ṫ, and
//! the residual
//!
//!   y″ − ½(1/y + 1/(y−1) + 1/(y−t))(y′)²
//!      + (1/t + 1/(t−1) + 1/(y−t)) y′
//!      − y(y−1)(y−t)/(t²(t−1)²) · [α + β t/y² + γ(t−1)/(y−1)² + δ t(t−1)/(y−t)²]
//!
//! is an exact element of the function field: the pair solves the equation
//! for θ if and only if the element is identically zero.
//!
//! [`check_implicit`] substitutes a parameterization into a bivariate model
//! F(y, t) — a second, derivative-free route to the same algebraic curve.
//! [`leading_coeff`] computes lim y/t at a common zero s₀ by iterated
//! L'Hôpital, certifying the linear leading behavior y = c·t + O(t²) of a
//! regular branch at t = 0; for branches through θ₁ = θ₂ parameters the limit
//! must be exactly 1/2.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::curve::CurveFieldElem;
use super::SymError;
use crate::exact::{format_rational, rat, Rational};

/// PVI parameters: the angle tuple θ and the derived constants of eq. (thal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PviParams {
    theta: [Rational; 4],
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
    delta: Rational,
}

impl PviParams {
    /// Build from the angle tuple (θ₁, θ₂, θ₃, θ₄), attached to the singular
    /// points 0, t, 1, ∞ in that order:
    /// α = (θ₄−1)²/2, β = −θ₁²/2, γ = θ₃²/2, δ = (1−θ₂²)/2.
    pub fn new(theta: [Rational; 4]) -> Self {
        let half = rat(1, 2);
        let one = Rational::one();
        let alpha = {
            let d = &theta[3] - &one;
            &d * &d * &half
        };
        let beta = -(&theta[0] * &theta[0] * &half);
        let gamma = &theta[2] * &theta[2] * &half;
        let delta = (&one - &(&theta[1] * &theta[1])) * &half;
        PviParams { theta, alpha, beta, gamma, delta }
    }

    pub fn theta(&self) -> &[Rational; 4] {
        &self.theta
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    /// Render θ as "(a, b, c, d)" for reports and error messages.
    pub fn theta_string(&self) -> String {
        format!(
            "({}, {}, {}, {})",
            format_rational(&self.theta[0]),
            format_rational(&self.theta[1]),
            format_rational(&self.theta[2]),
            format_rational(&self.theta[3]),
        )
    }
}

/// Exact PVI residual of the parameterized pair (y, t) at parameters θ.
///
/// The result is identically zero precisely when (y(s), t(s)) solves the
/// equation; since the zero element vanishes under both embeddings u ↦ ±√f,
/// one computation covers both signs of the square root.
pub fn pvi_residual(
    y: &CurveFieldElem,
    t: &CurveFieldElem,
    params: &PviParams,
) -> Result<CurveFieldElem, SymError> {
    let one = CurveFieldElem::constant(Rational::one());
    // Also joins the moduli: a genuine mismatch errors here instead of
    // panicking inside an operator.
    let ymt = super::field_arith(super::FieldOp::Sub, y, t)?;

    let tdot = t.derive();
    if tdot.is_zero() {
        return Err(SymError::DegenerateParameterization(t.to_string()));
    }
    let yp = y.derive().try_div(&tdot)?;
    let ypp = yp.derive().try_div(&tdot)?;

    let ym1 = y - &one;
    let tm1 = t - &one;
    let inv_y = one.try_div(y)?;
    let inv_ym1 = one.try_div(&ym1)?;
    let inv_ymt = one.try_div(&ymt)?;
    let inv_t = one.try_div(t)?;
    let inv_tm1 = one.try_div(&tm1)?;

    let half = CurveFieldElem::constant(rat(1, 2));
    let first = &half * &(&(&inv_y + &inv_ym1) + &inv_ymt);
    let second = &(&inv_t + &inv_tm1) + &inv_ymt;

    // Prefactor y(y−1)(y−t)/(t²(t−1)²), assembled from the inverses already
    // computed so no new division can fail.
    let prefactor = &(&(&(y * &ym1) * &ymt) * &(&inv_t * &inv_t)) * &(&inv_tm1 * &inv_tm1);

    let c_alpha = CurveFieldElem::constant(params.alpha.clone());
    let c_beta = CurveFieldElem::constant(params.beta.clone());
    let c_gamma = CurveFieldElem::constant(params.gamma.clone());
    let c_delta = CurveFieldElem::constant(params.delta.clone());
    let bracket = &(&(&c_alpha + &(&c_beta * &(&(t * &inv_y) * &inv_y)))
        + &(&c_gamma * &(&(&tm1 * &inv_ym1) * &inv_ym1)))
        + &(&c_delta * &(&(&(t * &tm1) * &inv_ymt) * &inv_ymt));

    let rhs = &(&(&first * &(&yp * &yp)) - &(&second * &yp)) + &(&prefactor * &bracket);
    Ok(&ypp - &rhs)
}

/// Bivariate polynomial F(y, t) = Σ c·yⁱ·tʲ, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    terms: Vec<(u32, u32, Rational)>,
}

impl BiPoly {
    /// Build from (y-power, t-power, coefficient) terms; zero coefficients
    /// are dropped and duplicate monomials combined.
    pub fn new(mut terms: Vec<(u32, u32, Rational)>) -> Self {
        terms.sort_by_key(|&(i, j, _)| (std::cmp::Reverse(i), j));
        let mut out: Vec<(u32, u32, Rational)> = Vec::with_capacity(terms.len());
        for (i, j, c) in terms {
            match out.last_mut() {
                Some((pi, pj, pc)) if *pi == i && *pj == j => *pc += c,
                _ => out.push((i, j, c)),
            }
        }
        out.retain(|(_, _, c)| !c.is_zero());
        BiPoly { terms: out }
    }

    /// Terms as (y-power, t-power, coefficient), y-degree descending.
    pub fn terms(&self) -> &[(u32, u32, Rational)] {
        &self.terms
    }

    /// Substitute field elements for y and t (Horner in y over a table of
    /// t-powers).
    pub fn eval(
        &self,
        y: &CurveFieldElem,
        t: &CurveFieldElem,
    ) -> Result<CurveFieldElem, SymError> {
        let zero = CurveFieldElem::constant(Rational::zero());
        if self.terms.is_empty() {
            return Ok(zero);
        }
        // Joins the frames up front so the operators below cannot panic.
        super::field_arith(super::FieldOp::Sub, y, t)?;
        let tmax = self.terms.iter().map(|&(_, j, _)| j).max().unwrap() as usize;
        let mut tpow = Vec::with_capacity(tmax + 1);
        tpow.push(CurveFieldElem::constant(Rational::one()));
        for k in 1..=tmax {
            tpow.push(&tpow[k - 1] * t);
        }
        let ymax = self.terms[0].0;
        let mut acc = zero.clone();
        let mut idx = 0;
        for deg in (0..=ymax).rev() {
            if deg != ymax {
                acc = &acc * y;
            }
            let mut cdeg = zero.clone();
            while idx < self.terms.len() && self.terms[idx].0 == deg {
                let (_, j, ref c) = self.terms[idx];
                cdeg = &cdeg + &tpow[j as usize].clone().scale_by(c);
                idx += 1;
            }
            acc = &acc + &cdeg;
        }
        Ok(acc)
    }
}

impl CurveFieldElem {
    /// Scalar multiple c·x (convenience for Horner loops).
    pub fn scale_by(&self, c: &Rational) -> CurveFieldElem {
        &CurveFieldElem::constant(c.clone()) * self
    }
}

/// True iff F(y(s), t(s)) vanishes identically in the function field.
pub fn check_implicit(
    rel: &BiPoly,
    y: &CurveFieldElem,
    t: &CurveFieldElem,
) -> Result<bool, SymError> {
    Ok(rel.eval(y, t)?.is_zero())
}

/// Exact limit of y/t as s → s₀ along the branch u = +√f(s), at a point
/// where both y and t vanish.
///
/// Each L'Hôpital round replaces (y, t) by their s-derivatives; the first
/// round where ṫ(s₀) ≠ 0 yields the limit ẏ(s₀)/ṫ(s₀) of the then-equal
/// vanishing orders. Requires f(s₀) to be the square of a rational so the
/// branch value is exact; everything else reports [`SymError::LimitUndefined`].
pub fn leading_coeff(
    y: &CurveFieldElem,
    t: &CurveFieldElem,
    s0: &Rational,
) -> Result<Rational, SymError> {
    // Joint frame (errors on genuinely different moduli). Derived directly
    // from the operands: y − t could cancel the u-part and hide the modulus.
    let joint = match (y.modulus(), t.modulus()) {
        (Some(f1), Some(f2)) if f1 != f2 => {
            return Err(SymError::ModulusMismatch(f1.to_string(), f2.to_string()))
        }
        (Some(f), _) | (_, Some(f)) => Some(f),
        (None, None) => None,
    };
    let u0 = match joint {
        None => Rational::zero(),
        Some(f) => {
            let w = f.eval(s0);
            sqrt_rational(&w).ok_or_else(|| {
                SymError::LimitUndefined(format!(
                    "u(s0)² = {} is not the square of a rational, so the branch through \
                     s0 = {} is not rational",
                    format_rational(&w),
                    format_rational(s0),
                ))
            })?
        }
    };

    let describe = |name: &str, v: &Option<Rational>| match v {
        None => format!("{name} has a pole"),
        Some(q) => format!("{name} = {}", format_rational(q)),
    };
    let y0 = eval_branch(y, s0, &u0);
    let t0 = eval_branch(t, s0, &u0);
    if y0 != Some(Rational::zero()) || t0 != Some(Rational::zero()) {
        return Err(SymError::NotACommonZero(
            format_rational(s0),
            format!("{}, {}", describe("y", &y0), describe("t", &t0)),
        ));
    }

    let mut yk = y.clone();
    let mut tk = t.clone();
    for _ in 0..24 {
        yk = yk.derive();
        tk = tk.derive();
        let vy = eval_branch(&yk, s0, &u0).ok_or_else(|| {
            SymError::LimitUndefined(format!(
                "a derivative of y has a pole at s0 = {} (ramified branch)",
                format_rational(s0)
            ))
        })?;
        let vt = eval_branch(&tk, s0, &u0).ok_or_else(|| {
            SymError::LimitUndefined(format!(
                "a derivative of t has a pole at s0 = {} (ramified branch)",
                format_rational(s0)
            ))
        })?;
        if !vt.is_zero() {
            return Ok(vy / vt);
        }
        if !vy.is_zero() {
            return Err(SymError::LimitUndefined(format!(
                "t vanishes to higher order than y at s0 = {}; y/t diverges",
                format_rational(s0)
            )));
        }
    }
    Err(SymError::LimitUndefined(format!(
        "vanishing orders at s0 = {} exceed 24",
        format_rational(s0)
    )))
}

/// Value of a + b·u at s = s₀ with u ↦ u₀; None at a pole of a or b.
fn eval_branch(x: &CurveFieldElem, s0: &Rational, u0: &Rational) -> Option<Rational> {
    let va = x.a().eval(s0)?;
    if x.is_rational() {
        return Some(va);
    }
    let vb = x.b().eval(s0)?;
    Some(va + vb * u0)
}

/// Exact square root of a non-negative rational, if it is a perfect square.
fn sqrt_rational(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let sn = exact_sqrt_bigint(q.numer())?;
    let sd = exact_sqrt_bigint(q.denom())?;
    Some(Rational::new(sn, sd))
}

fn exact_sqrt_bigint(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i;
    use crate::symfield::{Poly, RatFunc};

    fn poly_elem(coeffs: &[i64]) -> CurveFieldElem {
        CurveFieldElem::rational(RatFunc::from(Poly::from_ints(coeffs)))
    }

    fn theta(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> PviParams {
        PviParams::new([rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1), rat(d.0, d.1)])
    }

    #[test]
    fn derived_constants() {
        // θ = (1/3, 1/5, 1/5, 2/3): α = (2/3−1)²/2 = 1/18, β = −1/18,
        // γ = 1/50, δ = (1 − 1/25)/2 = 12/25.
        let p = theta((1, 3), (1, 5), (1, 5), (2, 3));
        assert_eq!(p.alpha(), &rat(1, 18));
        assert_eq!(p.beta(), &rat(-1, 18));
        assert_eq!(p.gamma(), &rat(1, 50));
        assert_eq!(p.delta(), &rat(12, 25));
        assert_eq!(p.theta_string(), "(1/3, 1/5, 1/5, 2/3)");
    }

    #[test]
    fn square_root_solution_on_its_parameter_line() {
        // y = s, t = s² is y = √t, a solution exactly when θ₂ = θ₃ and
        // θ₁ + θ₄ = 1.
        let y = poly_elem(&[0, 1]);
        let t = poly_elem(&[0, 0, 1]);
        let good = theta((1, 3), (1, 5), (1, 5), (2, 3));
        let r = pvi_residual(&y, &t, &good).unwrap();
        assert!(r.is_zero(), "expected zero residual, got {r}");
        // Perturbing θ₄ off the line must break it.
        let bad = theta((1, 3), (1, 5), (1, 5), (1, 3));
        let r = pvi_residual(&y, &t, &bad).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn degenerate_and_zero_denominator_cases() {
        let y = poly_elem(&[0, 1]);
        let t_const = poly_elem(&[3]);
        match pvi_residual(&y, &t_const, &theta((1, 2), (1, 2), (1, 2), (1, 2))) {
            Err(SymError::DegenerateParameterization(_)) => {}
            other => panic!("expected DegenerateParameterization, got {other:?}"),
        }
        let y_zero = poly_elem(&[]);
        let t = poly_elem(&[0, 0, 1]);
        match pvi_residual(&y_zero, &t, &theta((1, 2), (1, 2), (1, 2), (1, 2))) {
            Err(SymError::DivisionByZero(_)) => {}
            other => panic!("expected DivisionByZero, got {other:?}"),
        }
    }

    #[test]
    fn implicit_substitution() {
        // F = y − t with y = s, t = s: identically zero.
        let f = BiPoly::new(vec![(1, 0, rat_i(1)), (0, 1, rat_i(-1))]);
        let s = poly_elem(&[0, 1]);
        assert!(check_implicit(&f, &s, &s).unwrap());
        // Same F with t = s²: not a relation.
        let t = poly_elem(&[0, 0, 1]);
        assert!(!check_implicit(&f, &s, &t).unwrap());
        // Duplicate monomials combine: y − y cancels to the zero polynomial.
        let cancels = BiPoly::new(vec![(1, 0, rat_i(1)), (1, 0, rat_i(-1))]);
        assert!(cancels.terms().is_empty());
    }

    #[test]
    fn leading_coefficient_of_a_linear_branch() {
        // y = s, t = 2s through s₀ = 0: y = t/2, so the limit is 1/2.
        let y = poly_elem(&[0, 1]);
        let t = poly_elem(&[0, 2]);
        assert_eq!(leading_coeff(&y, &t, &rat_i(0)).unwrap(), rat(1, 2));
        // Quadratic over linear: limit 0; linear over quadratic: divergent.
        let t2 = poly_elem(&[0, 0, 1]);
        assert_eq!(leading_coeff(&t2, &y, &rat_i(0)).unwrap(), rat_i(0));
        assert!(matches!(
            leading_coeff(&y, &t2, &rat_i(0)),
            Err(SymError::LimitUndefined(_))
        ));
    }

    #[test]
    fn leading_coefficient_rejects_non_common_zeros() {
        let y = poly_elem(&[1, 1]); // y(0) = 1 ≠ 0
        let t = poly_elem(&[0, 2]);
        assert!(matches!(
            leading_coeff(&y, &t, &rat_i(0)),
            Err(SymError::NotACommonZero(_, _))
        ));
        // A pole at s₀ is also not a common zero.
        let pole = CurveFieldElem::rational(
            RatFunc::new(Poly::one(), Poly::x()).unwrap(),
        );
        assert!(matches!(
            leading_coeff(&pole, &t, &rat_i(0)),
            Err(SymError::NotACommonZero(_, _))
        ));
    }

    #[test]
    fn leading_coefficient_on_a_quadratic_branch() {
        // u² = s + 1 has the rational branch value u(0) = 1: with
        // y = u − 1 and t = 2(u − 1), the limit at s₀ = 0 is 1/2.
        let f = Poly::from_ints(&[1, 1]);
        let u = CurveFieldElem::u(f).unwrap();
        let one = CurveFieldElem::constant(rat_i(1));
        let y = &u - &one;
        let t = y.scale_by(&rat_i(2));
        assert_eq!(leading_coeff(&y, &t, &rat_i(0)).unwrap(), rat(1, 2));
        // u² = s + 2 gives u(0) = √2, which is not rational.
        let g = Poly::from_ints(&[2, 1]);
        let v = CurveFieldElem::u(g).unwrap();
        let y2 = &v - &CurveFieldElem::constant(rat_i(1));
        assert!(matches!(
            leading_coeff(&y2, &y2, &rat_i(0)),
            Err(SymError::LimitUndefined(_))
        ));
    }
}
