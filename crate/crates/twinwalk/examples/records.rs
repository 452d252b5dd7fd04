//! Record increments of the base sequence and what their magnitudes
//! hit: run with an optional scan bound, default 100000.
//!
//!     cargo run --example records -- 100000

use twinwalk::analysis::{find_records, verify_conjecture};
use twinwalk::sequences::SequenceRule;

fn main() {
    let n_max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("scan bound must be a number"))
        .unwrap_or(100_000);

    println!("record increments of ctilde up to n = {n_max}");
    println!("{:>10} {:>8}  twin-greater", "n", "delta");
    for r in find_records(SequenceRule::ctilde(), n_max) {
        println!("{:>10} {:>8}  {}", r.n, r.delta, r.is_twin_greater);
    }

    // Every record above 3 should be the greater member of a twin
    // pair, and from n = 16 on the records should be exactly the main
    // increments; both scans report any counterexample they find.
    for id in [1, 2] {
        let report = verify_conjecture(id, n_max).expect("known conjecture id");
        println!("\n{report}");
    }
}
