//! The accelerated atilde walk: every nontrivial event without
//! stepping through the trivial ones, verified against the naive
//! generator and timed against it.
//!
//!     cargo run --release --example fast_walk -- 1000000

use std::time::Instant;

use twinwalk::fastwalk::{fast_events, verify_fast_equivalence};
use twinwalk::sequences::{generate, SequenceRule};

fn main() {
    let n_max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("scan bound must be a number"))
        .unwrap_or(1_000_000);

    let t_fast = Instant::now();
    let events: Vec<_> = fast_events(n_max).collect();
    let fast_elapsed = t_fast.elapsed();

    println!("nontrivial events up to n = {n_max}: {}", events.len());
    println!("last five:");
    for e in events.iter().rev().take(5).rev() {
        println!("  n = {:>9}  value = {:>9}  delta = {:>8}  {}", e.n, e.value, e.delta, e.class);
    }

    let t_naive = Instant::now();
    let naive_count = generate(SequenceRule::atilde(), n_max)
        .filter(|e| e.delta > 1)
        .count();
    let naive_elapsed = t_naive.elapsed();

    println!(
        "\nwalk: {:?} for {} events; naive: {:?} for {} events",
        fast_elapsed,
        events.len(),
        naive_elapsed,
        naive_count
    );

    let report = verify_fast_equivalence(n_max);
    println!("\n{report}");
    std::process::exit(i32::from(!report.is_clean()));
}
