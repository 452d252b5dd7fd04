//! Minor increment statistics segment by segment: between adjacent
//! fundamental points of ctilde, how many minors fall, what they sum
//! to, and where they sit.
//!
//!     cargo run --example segments -- 10000

use twinwalk::analysis::segment_stats;
use twinwalk::sequences::SequenceRule;

fn main() {
    let n_max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("scan bound must be a number"))
        .unwrap_or(10_000);

    let segs = segment_stats(SequenceRule::ctilde(), n_max).expect("ctilde has fundamental points");
    println!("ctilde segments up to n = {n_max}");
    println!(
        "{:>8} {:>8} {:>6} {:>6} {:>6}  offsets",
        "m_lo", "m_hi", "count", "sum", "sum-h"
    );
    for s in &segs {
        // The sum of minor magnitudes exceeds the minor count by the
        // segment's structural excess; printing both makes the pattern
        // visible at a glance.
        let offsets: Vec<String> = s.offsets.iter().map(u64::to_string).collect();
        println!(
            "{:>8} {:>8} {:>6} {:>6} {:>6}  [{}]",
            s.m_lo,
            s.m_hi,
            s.minor_count,
            s.minor_sum,
            s.minor_sum - s.minor_count,
            offsets.join(", ")
        );
    }
}
