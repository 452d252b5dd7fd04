//! ctilde and f grow record increments independently, yet every record
//! above 7 lands on the same magnitude ladder. Prints both ladders and
//! the index-by-index comparison report.
//!
//!     cargo run --example coincidence -- 100000

use twinwalk::analysis::{find_records, records_coincide};
use twinwalk::sequences::SequenceRule;

fn main() {
    let n_max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("scan bound must be a number"))
        .unwrap_or(100_000);

    let a = find_records(SequenceRule::ctilde(), n_max);
    let b = find_records(SequenceRule::f(), n_max);
    println!("records above 7 up to n = {n_max}");
    println!("{:>4} {:>20} {:>20}", "", "ctilde (n, delta)", "f (n, delta)");
    let a7: Vec<_> = a.iter().filter(|r| r.delta > 7).collect();
    let b7: Vec<_> = b.iter().filter(|r| r.delta > 7).collect();
    for k in 0..a7.len().max(b7.len()) {
        let left = a7
            .get(k)
            .map_or("-".to_string(), |r| format!("({}, {})", r.n, r.delta));
        let right = b7
            .get(k)
            .map_or("-".to_string(), |r| format!("({}, {})", r.n, r.delta));
        println!("{:>4} {:>20} {:>20}", k, left, right);
    }

    let report = records_coincide(n_max);
    println!("\n{report}");
    std::process::exit(i32::from(!report.is_clean()));
}
