//! Produce the full 52-row classification and check it against the embedded
//! reference table.
//!
//! The pipeline enumerates the census, tabulates the braid and sign actions,
//! partitions the 26 688 seven-tuples into geometric orbits, and derives one
//! record per orbit: degree, genus, wall count, A₅ type, canonical alcove
//! point, orbit size, monodromy group, and branch partitions. Every field is
//! compared to the frozen reference row. Run with:
//!
//! ```text
//! cargo run --release --example classify_solutions
//! ```

use std::process::ExitCode;

use icosapvi::classify::build_table;
use icosapvi::icosa::{enumerate_s, GroupTable};

fn main() -> ExitCode {
    let t = GroupTable::build().expect("the group table builds");
    let s = enumerate_s(&t);
    let cls = build_table(&t, &s).expect("classification builds");
    let report = cls.match_reference();
    print!("{}", cls.render_text(&report));
    if report.all_match() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
