//! The least-prime-divisor walk with its offset generalized: for odd
//! a, hop from even n by p - 1 where p is the least prime divisor of
//! (n - a - 2)(n - a), until that window holds a twin prime pair. The
//! same skeleton that drives atilde (the a = 3 shape), re-aimed.

use twinwalk::fastwalk::generalized_walk;

fn main() {
    let start = 100;
    let max_steps = 10_000;
    for a in [-5, -3, -1, 1, 3, 5, 7] {
        let walk = generalized_walk(a, start, max_steps).expect("valid walk arguments");
        let path: Vec<String> = walk
            .points
            .iter()
            .take(12)
            .map(u64::to_string)
            .collect();
        let tail = if walk.points.len() > 12 { ", ..." } else { "" };
        match walk.pair {
            Some((lo, hi)) => println!(
                "a = {a:>2}: {} steps to twin pair ({lo}, {hi})\n         path [{}{tail}]",
                walk.points.len() - 1,
                path.join(", ")
            ),
            None => println!(
                "a = {a:>2}: no twin pair within {max_steps} steps\n         path [{}{tail}]",
                path.join(", ")
            ),
        }
    }
}
