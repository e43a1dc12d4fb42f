//! Partition the census into geometric orbits under the braid and sign
//! actions, and inspect the branch monodromy of the largest solution.
//!
//! The generators ω₁, ω₂, ω₃ (with the even sign-flip group Σ) act on the
//! 26 688 census seven-tuples; the orbits are the geometric equivalence
//! classes — exactly 52, with sizes matching the reference table. The pure
//! braid squares ρ₀ = ω₁², ρ₁ = ω₂² permute the branches of each solution;
//! for the degree-72 solution (reference row 52) the resulting pair is
//! simultaneously conjugate to the reference pair, giving a genus-7 curve.
//! Run with:
//!
//! ```text
//! cargo run --release --example braid_orbits
//! ```

use std::process::ExitCode;

use icosapvi::braid::BraidAction;
use icosapvi::classify::{reference_class52_monodromy, reference_rows, table2_reps};
use icosapvi::icosa::{enumerate_s, GroupTable};
use icosapvi::permg::pairs_conjugate;

fn main() -> ExitCode {
    let t = GroupTable::build().expect("the group table builds");
    let s = enumerate_s(&t);
    let action = BraidAction::build(&s).expect("census closed under the action");
    let orbits = action.geometric_orbits();

    let mut sizes: Vec<usize> = (0..orbits.count() as u32).map(|id| orbits.size(id)).collect();
    sizes.sort_unstable();
    let mut expected: Vec<usize> = reference_rows().iter().map(|r| r.n).collect();
    expected.sort_unstable();
    println!("geometric orbits   {}", orbits.count());
    println!("total census size  {}", sizes.iter().sum::<usize>());
    println!("size multiset matches reference: {}", sizes == expected);

    // Branch data of the degree-72 solution: start from the reference
    // representative of row 52 and walk its pure-braid orbit.
    let rep = table2_reps().expect("representative table parses").remove(51);
    let tuple = rep.mtuple().expect("representative is icosahedral");
    let pos = s.position(&tuple).expect("representative lies in the census");
    let data = action.branch_data(pos);
    let types = data.cycle_types();
    println!(
        "row 52 branches {}: cycle types {} | {} | {}, genus {}, monodromy order {}",
        data.degree(),
        types[0].display_compact(),
        types[1].display_compact(),
        types[2].display_compact(),
        data.genus().expect("integral genus"),
        data.monodromy_order()
    );

    let (ref0, ref1) = reference_class52_monodromy().expect("reference pair parses");
    let conjugate = pairs_conjugate(&data.rho0, &data.rho1, &ref0, &ref1).is_some();
    println!("computed (ρ₀, ρ₁) simultaneously conjugate to the reference pair: {conjugate}");

    let ok = orbits.count() == 52
        && sizes == expected
        && data.degree() == 72
        && data.genus() == Ok(7)
        && conjugate;
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
