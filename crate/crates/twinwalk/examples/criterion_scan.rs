//! The increment-pattern primality criterion against direct testing:
//! (m - 2, m) are both prime exactly when the parameterized run stays
//! trivial through its window. Scans a range and reports any mismatch.
//!
//!     cargo run --example criterion_scan -- 2000

use twinwalk::arith::is_prime;
use twinwalk::twinrule::is_twin_greater_by_criterion;

fn main() {
    let m_max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("scan bound must be a number"))
        .unwrap_or(2000);

    let mut twins = Vec::new();
    let mut mismatches = Vec::new();
    for m in 4..=m_max {
        let by_pattern = is_twin_greater_by_criterion(m).expect("m >= 4");
        let direct = is_prime(m) && is_prime(m - 2);
        if by_pattern != direct {
            mismatches.push(m);
        }
        if by_pattern {
            twins.push(m);
        }
    }

    println!("criterion scan over m = 4..={m_max}");
    println!(
        "twin-greater members found: {} (first few: {:?})",
        twins.len(),
        &twins[..twins.len().min(10)]
    );
    match mismatches.len() {
        0 => println!("mismatches against direct primality: none"),
        k => println!("mismatches against direct primality: {k} at {mismatches:?}"),
    }
    std::process::exit(i32::from(!mismatches.is_empty()));
}
