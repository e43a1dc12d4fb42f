//! Verify every bundled explicit solution by exact symbolic substitution.
//!
//! Each catalog entry provides (y(s), t(s)) on a rational or quadratic chart;
//! the verifier computes the full second-order residual in the function field
//! ℚ(s)[u]/(u² − f) and accepts only an identically zero element — no
//! floating point, no tolerances. Run with:
//!
//! ```text
//! cargo run --release --example verify_catalog
//! ```

use std::process::ExitCode;

fn main() -> ExitCode {
    let report = icosapvi::symfield::verify_all();
    print!("{}", report.render());
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
