//! The minor increment laws of atilde, checked twice: against the full
//! classified event stream, and against the accelerated walk's
//! magnitudes. Both scans should come back clean.
//!
//!     cargo run --example atilde_lemmas -- 200000

use twinwalk::analysis::verify_atilde_lemmas;
use twinwalk::fastwalk::verify_lemma_deltas;

fn main() {
    let n_max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("scan bound must be a number"))
        .unwrap_or(200_000);

    let stream_report = verify_atilde_lemmas(n_max);
    println!("{stream_report}\n");

    let walk_report = verify_lemma_deltas(n_max);
    println!("{walk_report}\n");

    let clean = stream_report.is_clean() && walk_report.is_clean();
    println!("overall: {}", if clean { "clean" } else { "violations found" });
    std::process::exit(i32::from(!clean));
}
