//! Affine F₄ Weyl group geometry on the θ-parameters.
//!
//! The angles θ = (θ₁, θ₂, θ₃, θ₄) of a seven-tuple live in V = ℝ⁴, on which
//! the affine Weyl group W_a(F₄) acts by the reflections
//!
//!   s_{α,k}(v) = v − ((v,α) − k)·α∨,   α a root, k ∈ ℤ, α∨ = 2α/(α,α),
//!
//! in the 48 roots ±εᵢ, ±εᵢ±εⱼ, (±ε₁±ε₂±ε₃±ε₄)/2. Parameter equivalence of
//! solutions is exactly this action, so orbits are classified by reducing
//! into the closed standard alcove
//!
//!   θ₂ ≥ θ₃ ≥ θ₄ ≥ 0,  θ₁ ≥ θ₂+θ₃+θ₄,  θ₁+θ₂ ≤ 1,
//!
//! every orbit meeting it in exactly one point. Reduction walks the
//! hyperplane arrangement: reflect in the first violated facet (fixed facet
//! order) until all five inequalities hold, recording the word of
//! reflections used. The number of facet equalities at the reduced point is
//! the wall count of the solution. The same machinery checks that the
//! alcove implicit in the parameter changes of the Painlevé transformation
//! theory — cut out by v₂ > v₃ > v₄ > 0, v₁ > v₂+v₃+v₄, v₁+v₂ < 1 in the
//! shifted coordinates v = (θ₃−1, θ₁, θ₂, θ₄−1) — is a genuine alcove of
//! the standard arrangement: all its interior points reduce by one common
//! reflection word.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{rat, rat_i, trace_to_theta, ExactError, Rational};
use crate::icosa::MTuple;

#[derive(Debug, Error)]
pub enum WeylError {
    #[error("point {0} is outside the closed standard alcove")]
    NotReduced(String),
    #[error(
        "interior points of one alcove reduced with different reflection words \
         ({0} and {1})"
    )]
    InconsistentWord(String, String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Parameter vector (θ₁, θ₂, θ₃, θ₄) ∈ ℚ⁴.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThetaVec(pub [Rational; 4]);

impl ThetaVec {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> ThetaVec {
        ThetaVec([a, b, c, d])
    }

    /// Integer coordinates after scaling by n, when exact (the table lists
    /// alcove points ×60).
    pub fn scaled(&self, n: i64) -> Option<[i64; 4]> {
        let mut out = [0i64; 4];
        for (slot, v) in out.iter_mut().zip(self.0.iter()) {
            let s = v * rat_i(n);
            if !s.is_integer() {
                return None;
            }
            *slot = i64::try_from(s.to_integer()).ok()?;
        }
        Some(out)
    }
}

impl fmt::Display for ThetaVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl fmt::Debug for ThetaVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One of the 48 F₄ roots; coordinates are integers or all-half-integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootF4 {
    pub coords: [Rational; 4],
}

impl RootF4 {
    fn from_halves(doubled: [i64; 4]) -> RootF4 {
        RootF4 { coords: doubled.map(|c| rat(c, 2)) }
    }

    /// All 48 roots: ±εᵢ, ±εᵢ±εⱼ (i<j), (±ε₁±ε₂±ε₃±ε₄)/2.
    pub fn all() -> Vec<RootF4> {
        let mut out = Vec::with_capacity(48);
        for i in 0..4 {
            for s in [1i64, -1] {
                let mut d = [0i64; 4];
                d[i] = 2 * s;
                out.push(RootF4::from_halves(d));
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                for si in [1i64, -1] {
                    for sj in [1i64, -1] {
                        let mut d = [0i64; 4];
                        d[i] = 2 * si;
                        d[j] = 2 * sj;
                        out.push(RootF4::from_halves(d));
                    }
                }
            }
        }
        for mask in 0..16u32 {
            let d: [i64; 4] = std::array::from_fn(|i| if mask >> i & 1 == 0 { 1 } else { -1 });
            out.push(RootF4::from_halves(d));
        }
        out
    }

    /// Euclidean pairing (v, α).
    pub fn pairing(&self, v: &ThetaVec) -> Rational {
        self.coords.iter().zip(v.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// (α, α) — 1 for short roots, 2 for long.
    pub fn norm2(&self) -> Rational {
        self.coords.iter().map(|a| a * a).sum()
    }

    /// Coroot α∨ = 2α/(α,α).
    pub fn coroot(&self) -> [Rational; 4] {
        let scale = rat_i(2) / self.norm2();
        std::array::from_fn(|i| &self.coords[i] * &scale)
    }
}

impl fmt::Display for RootF4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let halved = self.coords.iter().any(|c| !c.is_integer());
        let mut body = String::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c2 = if halved { c * rat_i(2) } else { c.clone() };
            if c2.is_negative() {
                body.push('-');
            } else if !body.is_empty() {
                body.push('+');
            }
            let mag = c2.abs();
            if !mag.is_one() {
                body.push_str(&format!("{mag}"));
            }
            body.push_str(&format!("e{}", i + 1));
        }
        if halved {
            write!(f, "({body})/2")
        } else {
            write!(f, "{body}")
        }
    }
}

/// Affine reflection s_{α,k} in the hyperplane (v, α) = k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reflection {
    pub root: RootF4,
    pub level: i64,
}

impl Reflection {
    pub fn apply(&self, v: &ThetaVec) -> ThetaVec {
        let t = self.root.pairing(v) - rat_i(self.level);
        let coroot = self.root.coroot();
        ThetaVec(std::array::from_fn(|i| &v.0[i] - &(&t * &coroot[i])))
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s[{},{}]", self.root, self.level)
    }
}

/// Sequence of affine reflections, applied left to right.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ReflectionWord(pub Vec<Reflection>);

impl ReflectionWord {
    pub fn apply(&self, v: &ThetaVec) -> ThetaVec {
        self.0.iter().fold(v.clone(), |w, s| s.apply(&w))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ReflectionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The five facets of the standard alcove, in the fixed order used by the
/// reduction: the facet value (v,α) − k is ≥ 0 on the alcove for the first
/// four and ≤ 0 for the last.
fn facets() -> [(Reflection, bool); 5] {
    let root = |d: [i64; 4]| RootF4::from_halves(d);
    [
        // θ₂ ≥ θ₃
        (Reflection { root: root([0, 2, -2, 0]), level: 0 }, true),
        // θ₃ ≥ θ₄
        (Reflection { root: root([0, 0, 2, -2]), level: 0 }, true),
        // θ₄ ≥ 0
        (Reflection { root: root([0, 0, 0, 2]), level: 0 }, true),
        // θ₁ ≥ θ₂ + θ₃ + θ₄
        (Reflection { root: root([1, -1, -1, -1]), level: 0 }, true),
        // θ₁ + θ₂ ≤ 1
        (Reflection { root: root([2, 2, 0, 0]), level: 1 }, false),
    ]
}

/// θ-angles of the first four slots of a seven-tuple.
pub fn theta_of(m: &MTuple) -> Result<ThetaVec, ExactError> {
    Ok(ThetaVec([
        trace_to_theta(&m.0[0])?,
        trace_to_theta(&m.0[1])?,
        trace_to_theta(&m.0[2])?,
        trace_to_theta(&m.0[3])?,
    ]))
}

/// Reduce θ into the closed standard alcove by reflecting in the first
/// violated facet until none remains; returns the reduced point and the
/// reflection word realising it.
pub fn reduce_to_alcove(theta: &ThetaVec) -> (ThetaVec, ReflectionWord) {
    let facets = facets();
    let mut v = theta.clone();
    let mut word = ReflectionWord::default();
    'outer: loop {
        for (refl, lower_bound) in &facets {
            let margin = refl.root.pairing(&v) - rat_i(refl.level);
            let violated = if *lower_bound { margin.is_negative() } else { margin.is_positive() };
            if violated {
                v = refl.apply(&v);
                word.0.push(refl.clone());
                assert!(
                    word.len() < 100_000,
                    "alcove reduction failed to terminate at {theta}"
                );
                continue 'outer;
            }
        }
        return (v, word);
    }
}

/// Number of the five facet equalities holding at a reduced point.
pub fn wall_count(theta: &ThetaVec) -> Result<usize, WeylError> {
    let mut walls = 0;
    for (refl, lower_bound) in &facets() {
        let margin = refl.root.pairing(theta) - rat_i(refl.level);
        let outside = if *lower_bound { margin.is_negative() } else { margin.is_positive() };
        if outside {
            return Err(WeylError::NotReduced(theta.to_string()));
        }
        if margin.is_zero() {
            walls += 1;
        }
    }
    Ok(walls)
}

/// Result of [`okamoto_alcove_check`]: the common reflection word and the
/// (input, reduced) pairs that were verified.
pub struct OkamotoReport {
    pub word: ReflectionWord,
    pub points: Vec<(ThetaVec, ThetaVec)>,
}

/// Interior points of the alcove v₂ > v₃ > v₄ > 0, v₁ > v₂+v₃+v₄,
/// v₁+v₂ < 1 in the coordinates v = (θ₃−1, θ₁, θ₂, θ₄−1), mapped back to
/// θ-space: θ = (v₂, v₃, v₁+1, v₄+1).
fn okamoto_interior_points() -> Vec<ThetaVec> {
    let v_points: [[(i64, i64); 4]; 4] = [
        [(43, 60), (11, 60), (7, 60), (1, 60)],
        [(54, 60), (5, 60), (3, 60), (1, 60)],
        [(30, 60), (7, 60), (5, 60), (2, 60)],
        [(700, 1200), (303, 1200), (201, 1200), (100, 1200)],
    ];
    v_points
        .iter()
        .map(|v| {
            let r = |p: (i64, i64)| rat(p.0, p.1);
            ThetaVec([r(v[1]), r(v[2]), r(v[0]) + rat_i(1), r(v[3]) + rat_i(1)])
        })
        .collect()
}

/// Verify that the shifted-coordinate alcove is one single alcove of the
/// standard arrangement: every interior sample point must reduce by the
/// same reflection word, landing interior to the standard alcove.
pub fn okamoto_alcove_check() -> Result<OkamotoReport, WeylError> {
    let mut word: Option<ReflectionWord> = None;
    let mut points = Vec::new();
    for theta in okamoto_interior_points() {
        let (reduced, w) = reduce_to_alcove(&theta);
        if wall_count(&reduced)? != 0 {
            return Err(WeylError::NotReduced(format!(
                "{theta} reduced to the boundary point {reduced}"
            )));
        }
        match &word {
            None => word = Some(w),
            Some(prev) if *prev == w => {}
            Some(prev) => {
                return Err(WeylError::InconsistentWord(prev.to_string(), w.to_string()))
            }
        }
        points.push((theta, reduced));
    }
    Ok(OkamotoReport { word: word.expect("at least one sample point"), points })
}
