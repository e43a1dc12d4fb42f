//! Exact leading coefficients of y(t) at branch points through (0, 0).
//!
//! When a solution branch passes through (y, t) = (0, 0) with θ₁ = θ₂, the
//! Laurent expansion y(t) = c·t + O(t²) has leading coefficient exactly
//! c = θ₁/(θ₁+θ₂) = 1/2. Five catalog entries designate such a branch; the
//! limit lim_{s→s₀} y/t is computed exactly in the function field by
//! iterated differentiation (no series expansion, no floating point).
//! Run with:
//!
//! ```text
//! cargo run --release --example leading_terms
//! ```

use std::process::ExitCode;

use icosapvi::exact::format_rational;
use icosapvi::symfield::{catalog, leading_coeff};

fn main() -> ExitCode {
    let mut failures = 0usize;
    for entry in catalog() {
        let Some(branch) = &entry.leading else { continue };
        // The designated branch may live on the opposite embedding
        // u ↦ −√f; conjugation swaps the embeddings.
        let (y, t) = if branch.u_sign < 0 {
            (entry.y.conj(), entry.t.conj())
        } else {
            (entry.y.clone(), entry.t.clone())
        };
        let theta = &entry.thetas[0];
        match leading_coeff(&y, &t, &branch.s0) {
            Ok(limit) => {
                let verdict = if limit == branch.expect { "ok" } else { "MISMATCH" };
                if verdict != "ok" {
                    failures += 1;
                }
                println!(
                    "{:<6} θ₁ = {}, θ₂ = {}: lim y/t at s₀ = {} is {}  [{verdict}]",
                    entry.id,
                    format_rational(&theta[0]),
                    format_rational(&theta[1]),
                    format_rational(&branch.s0),
                    format_rational(&limit),
                );
            }
            Err(e) => {
                failures += 1;
                println!("{:<6} FAILED: {e}", entry.id);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
