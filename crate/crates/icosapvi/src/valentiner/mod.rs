//! From complex reflection triples to SL₂ seven-tuples.
//!
//! The Valentiner group is the order-2160 subgroup of GL₃(ℂ) generated by
//! three order-two complex reflections; its projective image is the
//! alternating group A₆. It has exactly three inequivalent generating
//! triples of reflections (r₁, r₂, r₃), and each triple determines a triple
//! (M₁, M₂, M₃) in SL₂(ℂ) through its trace coordinates:
//!
//! ```text
//! Tr(Mⱼ)   = tⱼ/n₁ + n₁/tⱼ          (j = 1, 2, 3)
//! Tr(MⱼMₖ) = t_{jk} / (tⱼ tₖ)        with t_{jk} = Tr(rⱼrₖ) − 1
//! Tr(M₄)   = Tr(M₃M₂M₁) = n₂/n₃ + n₃/n₂
//! ```
//!
//! where tⱼ is a square root of det(rⱼ) — here every rⱼ has determinant −1,
//! so tⱼ = i — and n₁, n₂, n₃ are square roots of the eigenvalues of the
//! product r₃r₂r₁, *in a chosen order* ([`EigenOrder`]). The resulting
//! seven numbers are computed in high-precision complex arithmetic
//! (configurable, at least 60 significant digits) and then recognized, to
//! within 10⁻³⁰, as exact icosahedral trace values, producing an exact
//! [`MTuple`]. Matching those tuples through the classification pipeline
//! lands the three triples on reference rows 38, 37 and 46 — two siblings
//! of degree 15 and one solution of degree 24, all of genus one.

mod fixed;

use std::fmt::Write as _;

use thiserror::Error;

use crate::classify::{reference_rows, Classification};
use crate::exact::{rat, GoldenNum, Rational, TRACE_TABLE};
use crate::icosa::{MTuple, SSet};
use fixed::{exp_i_pi_frac, pi, Cx, Fx};

/// Failures of the reflection-to-tuple correspondence.
#[derive(Debug, Error)]
pub enum ValentinerError {
    /// A generator fails the order-two reflection identities r² = 1,
    /// det r = −1 at working precision.
    #[error("generator r{index} is not an order-two reflection ({check} off by {defect})")]
    NotAReflection { index: usize, check: &'static str, defect: String },
    /// A declared eigenvalue is not in the spectrum of r₃r₂r₁.
    #[error("e^(2πi·{fraction}) is not an eigenvalue of r3·r2·r1 (characteristic value {defect})")]
    BadEigenOrder { fraction: Rational, defect: String },
    /// A computed trace is not within 10⁻³⁰ of any icosahedral trace value.
    #[error("trace {slot} = {value} is not an icosahedral trace")]
    RecognitionFailed { slot: &'static str, value: String },
    /// A recognized tuple did not land on its expected classification row.
    #[error("{0}")]
    MatchFailed(String),
}

/// Binary digits for the requested significant decimal digits, plus guard
/// bits covering accumulated truncation in series and matrix products.
fn digits_to_bits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 64
}

/// The recognition tolerance 10⁻³⁰ at the given working precision.
fn tolerance(bits: u32) -> Fx {
    Fx::from_ratio(
        &num_bigint::BigInt::from(1),
        &num_bigint::BigInt::from(10u8).pow(30),
        bits,
    )
}

/// 3×3 complex matrix at fixed working precision (≥ 60 significant digits).
///
/// For the generators handled here the entries satisfy the order-two
/// reflection identities r² = 1, det r = −1, Tr r = 1 to working precision;
/// [`sl2_invariants`] re-checks them before using any trace.
#[derive(Clone, Debug)]
pub struct ComplexMat3 {
    e: [[Cx; 3]; 3],
}

impl ComplexMat3 {
    fn from_entries(e: [[Cx; 3]; 3]) -> Self {
        ComplexMat3 { e }
    }

    fn bits(&self) -> u32 {
        self.e[0][0].bits()
    }

    fn identity(bits: u32) -> Self {
        let e = std::array::from_fn(|r| {
            std::array::from_fn(|c| if r == c { Cx::from_int(1, bits) } else { Cx::zero(bits) })
        });
        ComplexMat3 { e }
    }

    fn mul(&self, rhs: &ComplexMat3) -> ComplexMat3 {
        let bits = self.bits();
        let e = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let mut acc = Cx::zero(bits);
                for k in 0..3 {
                    acc = &acc + &self.e[r][k].mul(&rhs.e[k][c]);
                }
                acc
            })
        });
        ComplexMat3 { e }
    }

    fn sub(&self, rhs: &ComplexMat3) -> ComplexMat3 {
        let e = std::array::from_fn(|r| std::array::from_fn(|c| &self.e[r][c] - &rhs.e[r][c]));
        ComplexMat3 { e }
    }

    /// self − z·I.
    fn sub_scalar_diag(&self, z: &Cx) -> ComplexMat3 {
        let mut out = self.clone();
        for j in 0..3 {
            out.e[j][j] = &out.e[j][j] - z;
        }
        out
    }

    fn trace(&self) -> Cx {
        &(&self.e[0][0] + &self.e[1][1]) + &self.e[2][2]
    }

    fn det(&self) -> Cx {
        let e = &self.e;
        let m00 = &e[1][1].mul(&e[2][2]) - &e[1][2].mul(&e[2][1]);
        let m01 = &e[1][0].mul(&e[2][2]) - &e[1][2].mul(&e[2][0]);
        let m02 = &e[1][0].mul(&e[2][1]) - &e[1][1].mul(&e[2][0]);
        &(&e[0][0].mul(&m00) - &e[0][1].mul(&m01)) + &e[0][2].mul(&m02)
    }

    /// Largest entry magnitude (∞-norm over real and imaginary parts).
    fn max_magnitude(&self) -> Fx {
        let mut worst = Fx::zero(self.bits());
        for row in &self.e {
            for entry in row {
                let mag = entry.magnitude();
                if worst.abs_lt(&mag) {
                    worst = mag;
                }
            }
        }
        worst
    }

    /// Lossy snapshot of the entries as (re, im) pairs, for display.
    pub fn to_f64(&self) -> [[(f64, f64); 3]; 3] {
        std::array::from_fn(|r| {
            std::array::from_fn(|c| (self.e[r][c].re.to_f64(), self.e[r][c].im.to_f64()))
        })
    }
}

/// The chosen square roots n₁, n₂, n₃ of the eigenvalues of r₃r₂r₁.
///
/// Every eigenvalue of the product is a root of unity e^{2πi·aⱼ}; the three
/// turn fractions aⱼ are stored exactly, in the order that fixes which
/// eigenvalue is first (the order matters: it changes Tr(Mⱼ) and Tr(M₄)).
/// The unit numbers themselves, nⱼ = e^{πi·aⱼ}, are realized on demand at
/// the working precision of the matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenOrder(pub [Rational; 3]);

impl EigenOrder {
    /// nⱼ = e^{πi·aⱼ} at the precision of `pi_val`.
    fn unit(&self, j: usize, pi_val: &Fx) -> Cx {
        exp_i_pi_frac(self.0[j].numer(), self.0[j].denom(), pi_val)
    }

    /// nⱼ² = e^{2πi·aⱼ}, the eigenvalue itself.
    fn eigenvalue(&self, j: usize, pi_val: &Fx) -> Cx {
        let double = &self.0[j] * rat(2, 1);
        exp_i_pi_frac(double.numer(), double.denom(), pi_val)
    }
}

/// Which first generator a triple uses (r₂ and r₃ are shared by all three).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TripleKind {
    Standard,
    Second,
    Third,
}

/// A generating triple of the Valentiner group, bundled with the eigenvalue
/// order of r₃r₂r₁ that fixes the square roots nⱼ, and the reference row
/// its seven-tuple must land on.
///
/// The three inequivalent triples are built in: [`GeneratorTriple::standard`],
/// [`GeneratorTriple::second`] and [`GeneratorTriple::third`] differ only in
/// r₁. All matrix entries lie in ℚ(ω, τ) with ω = e^{2πi/3} and
/// τ = (1+√5)/2, realized at the requested precision by [`Self::matrices`].
#[derive(Clone, Debug)]
pub struct GeneratorTriple {
    /// Short display name: `standard`, `second` or `third`.
    pub name: &'static str,
    /// Declared eigenvalue order of r₃r₂r₁ as turn fractions.
    pub eigen_order: EigenOrder,
    /// Reference row the triple's orbit must match.
    pub expected_row: u32,
    kind: TripleKind,
}

impl GeneratorTriple {
    /// The standard triple; its product has eigenvalue turn fractions
    /// (5/30, 11/30, 29/30) — the group's exponents over the Coxeter
    /// number — and its tuple lands on reference row 38.
    pub fn standard() -> Self {
        GeneratorTriple {
            name: "standard",
            eigen_order: EigenOrder([rat(5, 30), rat(11, 30), rat(29, 30)]),
            expected_row: 38,
            kind: TripleKind::Standard,
        }
    }

    /// The sibling triple (r₁ swaps the first and third coordinates instead
    /// of the first two); eigenvalue order (5/30, 17/30, 23/30), landing on
    /// reference row 37.
    pub fn second() -> Self {
        GeneratorTriple {
            name: "second",
            eigen_order: EigenOrder([rat(5, 30), rat(17, 30), rat(23, 30)]),
            expected_row: 37,
            kind: TripleKind::Second,
        }
    }

    /// The third triple (real symmetric r₁ with entries in ℚ(τ));
    /// eigenvalue order (2/12, 5/12, 11/12), landing on reference row 46 —
    /// the degree-24 solution.
    pub fn third() -> Self {
        GeneratorTriple {
            name: "third",
            eigen_order: EigenOrder([rat(2, 12), rat(5, 12), rat(11, 12)]),
            expected_row: 46,
            kind: TripleKind::Third,
        }
    }

    /// All three built-in triples, in row order 38, 37, 46.
    pub fn all() -> [GeneratorTriple; 3] {
        [Self::standard(), Self::second(), Self::third()]
    }

    /// Realize (r₁, r₂, r₃) at the requested precision (clamped to at least
    /// 60 significant digits, the guarantee of [`ComplexMat3`]).
    pub fn matrices(&self, digits: u32) -> [ComplexMat3; 3] {
        let bits = digits_to_bits(digits.max(60));
        let one = Fx::from_int(1, bits);
        let zero = || Cx::zero(bits);

        // ω = e^{2πi/3} = −1/2 + (√3/2)i and ω² = conj(ω); τ = (1+√5)/2
        // with 1/τ = τ − 1. Square roots are exact to the last bit, so the
        // entries are accurate to a few ulps.
        let omega = Cx::new(-&one.half(), Fx::from_int(3, bits).sqrt().half());
        let omega2 = omega.conj();
        let tau = (&one + &Fx::from_int(5, bits).sqrt()).half();
        let tau_inv = &tau - &one;

        let r1 = match self.kind {
            TripleKind::Standard => ComplexMat3::from_entries([
                [zero(), -&omega2, zero()],
                [-&omega, zero(), zero()],
                [zero(), zero(), Cx::from_int(1, bits)],
            ]),
            TripleKind::Second => ComplexMat3::from_entries([
                [zero(), zero(), -&omega],
                [zero(), Cx::from_int(1, bits), zero()],
                [-&omega2, zero(), zero()],
            ]),
            TripleKind::Third => {
                // ½ · [[1−τ, τ, 1], [τ, 1, 1−τ], [1, 1−τ, τ]], real symmetric.
                let h = |v: &Fx| Cx::real(v.half());
                let one_minus_tau = -&tau_inv;
                ComplexMat3::from_entries([
                    [h(&one_minus_tau), h(&tau), h(&one)],
                    [h(&tau), h(&one), h(&one_minus_tau)],
                    [h(&one), h(&one_minus_tau), h(&tau)],
                ])
            }
        };

        // r₂ = −½ · [[−1, ωτ, ω²/τ], [τ/ω, 1/τ, ω], [ω/τ, ω², −τ]], using
        // 1/ω = ω² and 1/τ = τ − 1 to avoid divisions.
        let r2_raw = [
            [Cx::from_int(-1, bits), omega.mul_real(&tau), omega2.mul_real(&tau_inv)],
            [omega2.mul_real(&tau), Cx::real(tau_inv.clone()), omega.clone()],
            [omega.mul_real(&tau_inv), omega2.clone(), Cx::real(-&tau)],
        ];
        let r2 = ComplexMat3::from_entries(std::array::from_fn(|r| {
            std::array::from_fn(|c| r2_raw[r][c].neg_half())
        }));

        let r3 = ComplexMat3::from_entries([
            [Cx::from_int(-1, bits), zero(), zero()],
            [zero(), Cx::from_int(1, bits), zero()],
            [zero(), zero(), Cx::from_int(1, bits)],
        ]);

        [r1, r2, r3]
    }
}

/// a + b√5 at fixed precision.
fn golden_fx(g: &GoldenNum, sqrt5: &Fx) -> Fx {
    let bits = sqrt5.bits();
    let a = Fx::from_ratio(g.a.numer(), g.a.denom(), bits);
    let b = Fx::from_ratio(g.b.numer(), g.b.denom(), bits);
    &a + &(&b * sqrt5)
}

/// Match one numeric trace against the nine icosahedral trace values;
/// `worst` keeps the largest accepted defect for reporting.
fn recognize(
    value: &Cx,
    slot: &'static str,
    sqrt5: &Fx,
    tol: &Fx,
    worst: &mut Fx,
) -> Result<GoldenNum, ValentinerError> {
    for (_, exact) in TRACE_TABLE.iter() {
        let target = golden_fx(exact, sqrt5);
        let gap_re = (&value.re - &target).abs();
        let gap_im = value.im.abs();
        let defect = if gap_re.abs_lt(&gap_im) { gap_im } else { gap_re };
        if defect.abs_lt(tol) {
            if worst.abs_lt(&defect) {
                *worst = defect;
            }
            return Ok(exact.clone());
        }
    }
    Err(ValentinerError::RecognitionFailed { slot, value: format!("{value:?}") })
}

/// The seven-tuple of a reflection triple, plus the largest recognition
/// defect encountered (exactly zero only if every series truncated cleanly).
fn invariants_with_defect(
    triple: &[ComplexMat3; 3],
    order: &EigenOrder,
) -> Result<(MTuple, Fx), ValentinerError> {
    let bits = triple[0].bits();
    assert!(
        triple.iter().all(|m| m.bits() == bits),
        "mixed working precisions in one triple"
    );
    let tol = tolerance(bits);
    let pi_val = pi(bits);
    let ident = ComplexMat3::identity(bits);

    // Order-two reflection identities: r² = 1 and det r = −1. These back
    // the choice tⱼ = i made below.
    for (index, r) in triple.iter().enumerate() {
        let square_defect = r.mul(r).sub(&ident).max_magnitude();
        if !square_defect.abs_lt(&tol) {
            return Err(ValentinerError::NotAReflection {
                index: index + 1,
                check: "r^2 = 1",
                defect: square_defect.to_decimal(),
            });
        }
        let det_defect = (&r.det() + &Cx::from_int(1, bits)).magnitude();
        if !det_defect.abs_lt(&tol) {
            return Err(ValentinerError::NotAReflection {
                index: index + 1,
                check: "det r = -1",
                defect: det_defect.to_decimal(),
            });
        }
    }

    // The declared eigenvalues must kill the characteristic polynomial of
    // the product r₃r₂r₁ before their square roots are trusted.
    let product = triple[2].mul(&triple[1]).mul(&triple[0]);
    for j in 0..3 {
        let defect = product.sub_scalar_diag(&order.eigenvalue(j, &pi_val)).det().magnitude();
        if !defect.abs_lt(&tol) {
            return Err(ValentinerError::BadEigenOrder {
                fraction: order.0[j].clone(),
                defect: defect.to_decimal(),
            });
        }
    }

    // tⱼ = i (a square root of det rⱼ = −1, the same choice for all three).
    let i = Cx::i(bits);
    let n1 = order.unit(0, &pi_val);
    let n2 = order.unit(1, &pi_val);
    let n3 = order.unit(2, &pi_val);

    let m_head = |t: &Cx| &t.div(&n1) + &n1.div(t);
    let m1 = m_head(&i);
    let m2 = m_head(&i);
    let m3 = m_head(&i);
    let m4 = &n2.div(&n3) + &n3.div(&n2);

    // t_{jk} = Tr(rⱼrₖ) − 1 and Tr(MⱼMₖ) = t_{jk}/(tⱼtₖ) with tⱼtₖ = i² = −1.
    let pair = |a: &ComplexMat3, b: &ComplexMat3| {
        let t_jk = &a.mul(b).trace() - &Cx::from_int(1, bits);
        t_jk.div(&i.mul(&i))
    };
    let m12 = pair(&triple[0], &triple[1]);
    let m23 = pair(&triple[1], &triple[2]);
    let m13 = pair(&triple[0], &triple[2]);

    let sqrt5 = Fx::from_int(5, bits).sqrt();
    let mut worst = Fx::zero(bits);
    let slots: [(&'static str, &Cx); 7] = [
        ("m1", &m1),
        ("m2", &m2),
        ("m3", &m3),
        ("m4", &m4),
        ("m12", &m12),
        ("m23", &m23),
        ("m13", &m13),
    ];
    let mut exact = Vec::with_capacity(7);
    for (slot, value) in slots {
        exact.push(recognize(value, slot, &sqrt5, &tol, &mut worst)?);
    }
    let tuple = MTuple(exact.try_into().expect("seven slots"));
    Ok((tuple, worst))
}

/// Carry a reflection triple to its exact SL₂ seven-tuple
/// (m₁, m₂, m₃, m₄, m₁₂, m₂₃, m₁₃).
///
/// The numeric traces are computed from the formulas in the module
/// documentation and each is recognized, to within 10⁻³⁰, as one of the
/// nine icosahedral trace values; the exact values form the returned tuple.
/// Errors: [`ValentinerError::NotAReflection`] if a generator fails r² = 1
/// or det r = −1, [`ValentinerError::BadEigenOrder`] if a declared
/// eigenvalue is not in the spectrum of r₃r₂r₁, and
/// [`ValentinerError::RecognitionFailed`] if a trace is not icosahedral.
pub fn sl2_invariants(
    triple: &[ComplexMat3; 3],
    order: &EigenOrder,
) -> Result<MTuple, ValentinerError> {
    invariants_with_defect(triple, order).map(|(tuple, _)| tuple)
}

/// One matched triple in a [`ValentinerReport`].
#[derive(Clone, Debug)]
pub struct TripleMatch {
    /// Triple name (`standard`, `second`, `third`).
    pub name: &'static str,
    /// The exact seven-tuple recognized from the traces.
    pub tuple: MTuple,
    /// Reference row the orbit matched.
    pub row: u32,
    /// Orbit id in the classification.
    pub orbit_id: u32,
    /// Number of branches (orbit size under the pure braid action).
    pub degree: usize,
    /// Genus of the orbit's solution curve.
    pub genus: i64,
    /// Canonical alcove point, scaled by 60.
    pub alcove_x60: [i64; 4],
}

/// Result of matching all three built-in triples against the classification.
#[derive(Clone, Debug)]
pub struct ValentinerReport {
    /// Working precision in significant decimal digits.
    pub digits: u32,
    /// The matches, in built-in order (rows 38, 37, 46).
    pub triples: Vec<TripleMatch>,
    /// Largest |numeric − exact| accepted by recognition, ~10^(−digits).
    pub max_defect: String,
}

impl ValentinerReport {
    /// Plain-text rendering, one line per triple.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "three generating reflection triples at {} significant digits:",
            self.digits
        );
        for m in &self.triples {
            let [a, b, c, d] = m.alcove_x60;
            let _ = writeln!(
                out,
                "  {:<8} m = {} -> row {}: {} branches, genus {}, alcove ({}, {}, {}, {})/60, orbit #{}",
                m.name, m.tuple, m.row, m.degree, m.genus, a, b, c, d, m.orbit_id
            );
        }
        let _ = writeln!(
            out,
            "  distinct orbits: {}; max recognition defect {}",
            self.triples.len(),
            self.max_defect
        );
        out
    }
}

/// Run the full correspondence: realize the three built-in triples at the
/// requested precision, compute and recognize their seven-tuples, locate
/// each tuple in the census, and check the resulting orbits against
/// reference rows 38, 37 and 46 (degrees 15, 15, 24). The three orbits must
/// be pairwise distinct. `digits` is clamped to at least 60.
pub fn run_valentiner(
    sset: &SSet,
    cls: &Classification,
    digits: u32,
) -> Result<ValentinerReport, ValentinerError> {
    let digits = digits.max(60);
    let mut triples = Vec::with_capacity(3);
    let mut worst: Option<Fx> = None;

    for spec in GeneratorTriple::all() {
        let mats = spec.matrices(digits);
        let (tuple, defect) = invariants_with_defect(&mats, &spec.eigen_order)?;
        worst = Some(match worst.take() {
            Some(w) if defect.abs_lt(&w) => w,
            _ => defect,
        });

        let pos = sset.position(&tuple).ok_or_else(|| {
            ValentinerError::MatchFailed(format!(
                "{} triple: seven-tuple {} is not in the census",
                spec.name, tuple
            ))
        })?;
        let orbit_id = cls.orbit_of_position(pos);
        let class = cls.class_of_position(pos);
        let expected = &reference_rows()[(spec.expected_row - 1) as usize];
        if class.alcove_x60 != expected.alcove_x60
            || class.n != expected.n
            || class.genus != expected.genus
        {
            return Err(ValentinerError::MatchFailed(format!(
                "{} triple: orbit has alcove {:?}, size {}, genus {}, but reference row {} \
                 has alcove {:?}, size {}, genus {}",
                spec.name,
                class.alcove_x60,
                class.n,
                class.genus,
                expected.row,
                expected.alcove_x60,
                expected.n,
                expected.genus
            )));
        }
        triples.push(TripleMatch {
            name: spec.name,
            tuple,
            row: expected.row,
            orbit_id,
            degree: class.degree,
            genus: class.genus,
            alcove_x60: class.alcove_x60,
        });
    }

    for a in 0..triples.len() {
        for b in a + 1..triples.len() {
            if triples[a].orbit_id == triples[b].orbit_id {
                return Err(ValentinerError::MatchFailed(format!(
                    "{} and {} triples landed in the same orbit #{}",
                    triples[a].name, triples[b].name, triples[a].orbit_id
                )));
            }
        }
    }

    Ok(ValentinerReport {
        digits,
        triples,
        max_defect: worst.expect("three triples processed").to_decimal(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol60() -> Fx {
        tolerance(digits_to_bits(60))
    }

    #[test]
    fn generators_satisfy_the_reflection_identities() {
        for spec in GeneratorTriple::all() {
            let mats = spec.matrices(60);
            let bits = mats[0].bits();
            let ident = ComplexMat3::identity(bits);
            for (k, r) in mats.iter().enumerate() {
                let square = r.mul(r).sub(&ident).max_magnitude();
                assert!(square.abs_lt(&tol60()), "{} r{}: r^2 != 1", spec.name, k + 1);
                let det = (&r.det() + &Cx::from_int(1, bits)).magnitude();
                assert!(det.abs_lt(&tol60()), "{} r{}: det != -1", spec.name, k + 1);
                let tr = (&r.trace() - &Cx::from_int(1, bits)).magnitude();
                assert!(tr.abs_lt(&tol60()), "{} r{}: trace != 1", spec.name, k + 1);
            }
        }
    }

    #[test]
    fn standard_pair_traces_are_0_0_1() {
        let mats = GeneratorTriple::standard().matrices(60);
        let bits = mats[0].bits();
        let close_to = |value: &Cx, n: i64| {
            (value - &Cx::from_int(n, bits)).magnitude().abs_lt(&tol60())
        };
        assert!(close_to(&mats[0].mul(&mats[1]).trace(), 0), "Tr(r1 r2) != 0");
        assert!(close_to(&mats[1].mul(&mats[2]).trace(), 0), "Tr(r2 r3) != 0");
        assert!(close_to(&mats[0].mul(&mats[2]).trace(), 1), "Tr(r1 r3) != 1");
    }

    #[test]
    fn product_spectrum_matches_the_declared_order() {
        for spec in GeneratorTriple::all() {
            let mats = spec.matrices(60);
            let bits = mats[0].bits();
            let pi_val = pi(bits);
            let product = mats[2].mul(&mats[1]).mul(&mats[0]);
            for j in 0..3 {
                let lambda = spec.eigen_order.eigenvalue(j, &pi_val);
                let defect = product.sub_scalar_diag(&lambda).det().magnitude();
                assert!(
                    defect.abs_lt(&tol60()),
                    "{}: e^(2pi i {}) is not an eigenvalue (defect {})",
                    spec.name,
                    spec.eigen_order.0[j],
                    defect.to_decimal()
                );
            }
        }
    }

    #[test]
    fn standard_invariants_are_the_expected_exact_tuple() {
        let spec = GeneratorTriple::standard();
        let tuple = sl2_invariants(&spec.matrices(60), &spec.eigen_order).unwrap();
        // (1, 1, 1, 2cos(3π/5), 1, 1, 0) with 2cos(3π/5) = (1−√5)/2.
        let one = GoldenNum::from_int(1);
        let m4 = GoldenNum::new(rat(1, 2), rat(-1, 2));
        let expected = MTuple([
            one.clone(),
            one.clone(),
            one.clone(),
            m4,
            one.clone(),
            one,
            GoldenNum::from_int(0),
        ]);
        assert_eq!(tuple, expected);
    }

    #[test]
    fn sibling_triples_have_the_expected_fourth_trace() {
        // Second triple: m₄ = 2cos(π(17−23)/30) = 2cos(π/5) = (1+√5)/2.
        let spec = GeneratorTriple::second();
        let tuple = sl2_invariants(&spec.matrices(60), &spec.eigen_order).unwrap();
        assert_eq!(tuple.0[3], GoldenNum::new(rat(1, 2), rat(1, 2)));
        assert_eq!(tuple.0[0], GoldenNum::from_int(1));

        // Third triple: m₄ = 2cos(π(5−11)/12) = 2cos(π/2) = 0.
        let spec = GeneratorTriple::third();
        let tuple = sl2_invariants(&spec.matrices(60), &spec.eigen_order).unwrap();
        assert_eq!(tuple.0[3], GoldenNum::from_int(0));
        assert_eq!(tuple.0[0], GoldenNum::from_int(1));
    }

    #[test]
    fn permuted_eigenvalue_order_is_rejected() {
        // Swapping n₁ and n₂ makes m₁ = 2sin(11π/30) ≈ 1.827, which is not
        // an icosahedral trace, so recognition must refuse it.
        let mats = GeneratorTriple::standard().matrices(60);
        let swapped = EigenOrder([rat(11, 30), rat(5, 30), rat(29, 30)]);
        match sl2_invariants(&mats, &swapped) {
            Err(ValentinerError::RecognitionFailed { slot, .. }) => assert_eq!(slot, "m1"),
            other => panic!("expected RecognitionFailed, got {other:?}"),
        }
    }

    #[test]
    fn non_eigenvalue_is_rejected() {
        let mats = GeneratorTriple::standard().matrices(60);
        let wrong = EigenOrder([rat(1, 7), rat(11, 30), rat(29, 30)]);
        match sl2_invariants(&mats, &wrong) {
            Err(ValentinerError::BadEigenOrder { fraction, .. }) => {
                assert_eq!(fraction, rat(1, 7));
            }
            other => panic!("expected BadEigenOrder, got {other:?}"),
        }
    }

    #[test]
    fn non_reflection_is_rejected() {
        let mats = GeneratorTriple::standard().matrices(60);
        // r₃r₂ has determinant +1, so it cannot pass the reflection checks.
        let broken = [mats[2].mul(&mats[1]), mats[1].clone(), mats[2].clone()];
        match sl2_invariants(&broken, &GeneratorTriple::standard().eigen_order) {
            Err(ValentinerError::NotAReflection { index: 1, .. }) => {}
            other => panic!("expected NotAReflection for r1, got {other:?}"),
        }
    }
}
