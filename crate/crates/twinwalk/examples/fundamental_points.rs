//! Fundamental points of the three families that have them, with the
//! twin prime pair each point predicts.
//!
//!     cargo run --example fundamental_points -- 20000

use twinwalk::analysis::find_fundamental_points;
use twinwalk::sequences::SequenceRule;

fn main() {
    let n_max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("scan bound must be a number"))
        .unwrap_or(20_000);

    for rule in [
        SequenceRule::ctilde(),
        SequenceRule::atilde(),
        SequenceRule::f(),
    ] {
        let points = find_fundamental_points(rule, n_max).expect("family has fundamental points");
        println!("fundamental points of {rule} up to n = {n_max}:");
        println!("{:>10}  pair        verified", "m");
        for p in &points {
            println!(
                "{:>10}  ({}, {})  {}",
                p.m, p.twin_candidate.0, p.twin_candidate.1, p.twin_verified
            );
        }
        let verified = points.iter().filter(|p| p.twin_verified).count();
        println!("{} points, {} verified twin pairs\n", points.len(), verified);
    }
}
