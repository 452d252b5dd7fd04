//! Scan-based falsification of the six structural laws of the ctilde
//! increment pattern, plus the placement bounds on the last minor of a
//! segment. Each scan prints one report; any counterexample would show
//! up as a violation line.
//!
//!     cargo run --example observations -- 100000

use twinwalk::analysis::{verify_minor_tail_bounds, verify_observation, OBSERVATION_IDS};

fn main() {
    let n_max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("scan bound must be a number"))
        .unwrap_or(100_000);

    let mut all_clean = true;
    for obs in OBSERVATION_IDS {
        let report = verify_observation(obs, n_max).expect("known observation id");
        all_clean &= report.is_clean();
        println!("{report}\n");
    }
    let tail = verify_minor_tail_bounds(n_max).expect("ctilde scan");
    all_clean &= tail.is_clean();
    println!("{tail}\n");

    println!(
        "overall: {}",
        if all_clean { "clean" } else { "violations found" }
    );
    std::process::exit(i32::from(!all_clean));
}
