//! Exact-arithmetic engine for the icosahedral solutions of Painlevé VI.
//!
//! The sixth Painlevé equation with parameter vector θ = (θ₁, θ₂, θ₃, θ₄) has
//! a finite-branching solution for every conjugacy class of triples
//! (M₁, M₂, M₃) generating the binary icosahedral group Γ ⊂ SU(2). This crate
//! reproduces that classification from first principles and checks the
//! explicit algebraic solutions symbolically:
//!
//! * [`exact`] — golden-field scalars ℚ(√5), quaternions over them, and the
//!   dictionary between SU(2) traces and θ-angles.
//! * [`icosa`] — the 120-element group Γ as an explicit multiplication table,
//!   and the census of its 1 601 280 generating triples, deduplicated to the
//!   26 688 trace seven-tuples on which everything else acts.
//! * [`braid`] — the braid-group action ω₁, ω₂, ω₃ and the even sign-flip
//!   group Σ on seven-tuples; orbit enumeration (52 orbits) and branch data
//!   (the permutations ρ₀, ρ₁, ρ∞ of the branches of a solution).
//! * [`weyl`] — the affine F₄ Weyl group acting on θ-space, reduction into a
//!   fundamental alcove, and the wall count of a reduced point.
//! * [`permg`] — permutation-group utilities: cycle types, orders via
//!   Schreier–Sims, the Riemann–Hurwitz genus of a three-point cover, and
//!   simultaneous-conjugacy testing of permutation pairs.
//! * [`classify`] — the orchestration layer producing one record per orbit
//!   (degree, genus, walls, A₅ type, alcove point, monodromy group, …),
//!   golden-checked against the embedded reference table, plus JSON/CSV
//!   export and the seven-tuple disk cache.
//! * [`symfield`] — exact function-field arithmetic ℚ(s)[u]/(u² − f(s)) and
//!   the Painlevé VI residual; every explicit solution in the bundled
//!   catalog is verified by substitution, with zero residual as the proof.
//! * [`valentiner`] — the complex-reflection-group side: high-precision
//!   evaluation of the Valentiner reflection triples and recognition of the
//!   resulting linearised monodromy tuples in the classification.
//!
//! The library is the primary interface; `examples/` contains one runnable
//! program per capability, and the `icosapvi` binary exposes the same
//! operations as subcommands.

pub mod braid;
pub mod classify;
pub mod exact;
pub mod icosa;
pub mod permg;
pub mod symfield;
pub mod valentiner;
pub mod weyl;

#[cfg(test)]
pub(crate) mod testutil {
    use std::sync::LazyLock;

    use crate::icosa::{enumerate_s, GroupTable, SSet};

    static CENSUS: LazyLock<(GroupTable, SSet)> = LazyLock::new(|| {
        let t = GroupTable::build().expect("group table");
        let s = enumerate_s(&t);
        (t, s)
    });

    /// Shared group table and census so the full triple scan runs once per
    /// test binary rather than once per test.
    pub(crate) fn census() -> (&'static GroupTable, &'static SSet) {
        let (t, s) = &*CENSUS;
        (t, s)
    }
}
