//! Riemann–Hurwitz genus of a three-point cover from its monodromy
//! permutations.
//!
//! A degree-k algebraic solution y(t) is a cover of the t-line branched over
//! t = 0, 1, ∞ with monodromy (ρ₀, ρ₁, ρ∞), ρ∞ρ₁ρ₀ = 1; its genus is
//! g = 1 − k + ½·Σₚ (k − #cycles(ρₚ)). The embedded degree-72 pair of the
//! largest solution gives cycle types 2⁴3⁸5⁸ at all three points, genus 7,
//! and monodromy group of order 2³²·3⁴·5·7. Run with:
//!
//! ```text
//! cargo run --release --example genus_count
//! ```

use std::process::ExitCode;

use icosapvi::classify::reference_class52_monodromy;
use icosapvi::permg::{factorize, format_factored, genus_rh, group_label, group_order};

fn main() -> ExitCode {
    let (rho0, rho1) = reference_class52_monodromy().expect("reference pair parses");
    let rho_inf = rho1.compose(&rho0).inverse();
    let degree = rho0.degree();
    let types = [rho0.cycle_type(), rho1.cycle_type(), rho_inf.cycle_type()];
    let genus = genus_rh(degree, &types).expect("integral genus");
    let order = group_order(&[rho0, rho1]);
    let factored = format_factored(&factorize(&order));

    println!("degree {degree}");
    println!(
        "cycle types {} | {} | {}",
        types[0].display_compact(),
        types[1].display_compact(),
        types[2].display_compact()
    );
    println!("genus {genus}");
    match group_label(degree, &order) {
        Some(label) => println!("monodromy group {label} of order {order} = {factored}"),
        None => println!("monodromy group order {order} = {factored}"),
    }

    let ok = degree == 72
        && genus == 7
        && types.iter().all(|t| t.display_compact() == "2^4 3^8 5^8")
        && factored == "2^32·3^4·5·7";
    if ok {
        ExitCode::SUCCESS
    } else {
        println!("MISMATCH against the expected row-52 invariants");
        ExitCode::FAILURE
    }
}
