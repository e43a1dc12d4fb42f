//! Reduce θ-vectors into the fundamental alcove of the affine F₄ Weyl
//! group, and verify the shifted-alcove consistency check.
//!
//! Parameter vectors θ = (θ₁, θ₂, θ₃, θ₄) are equivalent when an affine
//! Weyl transformation carries one to the other; every vector reduces to a
//! unique point of the closed fundamental alcove, and the number of alcove
//! walls the point lies on is an invariant of the solution. Run with:
//!
//! ```text
//! cargo run --release --example reduce_theta
//! ```

use std::process::ExitCode;

use icosapvi::exact::rat;
use icosapvi::weyl::{okamoto_alcove_check, reduce_to_alcove, wall_count, ThetaVec};

fn main() -> ExitCode {
    let samples = [
        // Solution row 52's parameters, three walls.
        ThetaVec([rat(1, 2), rat(1, 2), rat(1, 2), rat(2, 3)]),
        // The degree-24 Valentiner row, two walls.
        ThetaVec([rat(1, 3), rat(1, 3), rat(1, 3), rat(1, 2)]),
        // A far-out equivalent of the same point: shifted by even integers
        // and sign flips, it must come back to the identical alcove point.
        ThetaVec([rat(-5, 3), rat(13, 3), rat(7, 3), rat(-7, 2)]),
        // A generic interior point, zero walls.
        ThetaVec([rat(211, 420), rat(13, 140), rat(11, 210), rat(1, 60)]),
    ];
    for theta in &samples {
        let (reduced, word) = reduce_to_alcove(theta);
        let walls = wall_count(&reduced).expect("reduced point lies in the closed alcove");
        println!("{theta}  ->  {reduced}   walls={walls}, reflections={}", word.len());
    }

    // Four interior samples of the shifted alcove must reduce by one common
    // reflection word — the consistency check behind the table's walls
    // column.
    match okamoto_alcove_check() {
        Ok(report) => {
            println!(
                "shifted-alcove check: {} sample points share one word of {} reflections",
                report.points.len(),
                report.word.len()
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("shifted-alcove check FAILED: {e}");
            ExitCode::FAILURE
        }
    }
}
