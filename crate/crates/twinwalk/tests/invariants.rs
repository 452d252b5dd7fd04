//! Structural invariants checked by property tests and exhaustive
//! small-range scans: facts that must hold for every input, not just
//! the frozen reference values.

use proptest::prelude::*;

use twinwalk::analysis::find_records;
use twinwalk::arith::{
    gcd, is_prime, is_twin_greater, is_twin_lesser, least_prime_divisor, twin_pair, LpfSieve,
};
use twinwalk::cli::checkpoint::Checkpoint;
use twinwalk::fastwalk::verify_fast_equivalence;
use twinwalk::postulate::{membership, WitnessSet};
use twinwalk::sequences::{value_at, values, ParamParity, SequenceRule};
use twinwalk::twinrule::twin_from_m_with;

#[test]
fn value_parity_tracks_the_index_to_one_million() {
    // The seed (1, 2) is the lone exception; from n = 2 on, the value
    // and its index always share a parity.
    for (n, v) in values(SequenceRule::ctilde(), 1_000_000) {
        if n == 1 {
            continue;
        }
        assert_eq!((n ^ v) & 1, 0, "parity broke at n = {n}, value {v}");
    }
}

#[test]
fn sieve_and_trial_division_agree() {
    let sieve = LpfSieve::new(20_000);
    for n in 0..=20_000 {
        assert_eq!(
            sieve.least_prime_factor(n),
            least_prime_divisor(n),
            "least prime factor differs at {n}"
        );
        assert_eq!(sieve.is_prime(n), is_prime(n), "primality differs at {n}");
    }
    let from_sieve = sieve.primes().count();
    let from_tests = (0..=20_000u64).filter(|&n| is_prime(n)).count();
    assert_eq!(from_sieve, from_tests);
}

#[test]
fn twin_predicates_agree_with_direct_primality() {
    for p in 0..=10_000u64 {
        assert_eq!(
            is_twin_greater(p),
            p >= 2 && is_prime(p) && is_prime(p - 2),
            "greater-member test differs at {p}"
        );
        assert_eq!(
            is_twin_lesser(p),
            is_prime(p) && is_prime(p + 2),
            "lesser-member test differs at {p}"
        );
        assert_eq!(twin_pair(p).is_some(), is_twin_lesser(p));
        if let Some((lo, hi)) = twin_pair(p) {
            assert_eq!((lo, hi), (p, p + 2));
        }
    }
}

#[test]
fn records_are_prefix_stable() {
    for rule in [
        SequenceRule::ctilde(),
        SequenceRule::c(),
        SequenceRule::f(),
        SequenceRule::atilde(),
    ] {
        let short = find_records(rule, 2_000);
        let long = find_records(rule, 5_000);
        assert!(long.len() >= short.len(), "{rule}: records disappeared");
        assert_eq!(&long[..short.len()], &short[..], "{rule}: prefix changed");
    }
}

#[test]
fn membership_divisors_behave() {
    for n in (6..=10_000u64).step_by(2) {
        let m = membership(n).unwrap();
        assert_eq!((n - 1) % m.p, 0, "p does not divide n - 1 at {n}");
        assert_eq!((n - 3) % m.q, 0, "q does not divide n - 3 at {n}");
        assert_ne!(m.p, m.q, "shared divisor at {n}");
        assert_eq!(m.in_set, !(is_prime(n - 1) && is_prime(n - 3)));
        match m.side {
            WitnessSet::Neither => assert!(!m.in_set),
            WitnessSet::A1 => assert!(m.in_set && m.p < m.q),
            WitnessSet::A2 => assert!(m.in_set && m.p > m.q),
        }
    }
    assert!(membership(5).is_err());
    assert!(membership(4).is_err());
}

#[test]
fn jump_walk_values_strictly_increase() {
    let mut prev = None;
    for (n, v) in values(SequenceRule::atilde(), 5_000) {
        if let Some(p) = prev {
            assert!(v > p, "walk fell back at n = {n}");
        }
        prev = Some(v);
    }
}

#[test]
fn all_trivial_extraction_fixes_the_twin_pair() {
    // Under the even-index convention the criterion says a twin pair
    // leaves every increment trivial; the extraction must then return
    // the pair (m - 2, m) itself.
    for m in 5..=3_000u64 {
        if !is_twin_greater(m) {
            continue;
        }
        let t = twin_from_m_with(m, ParamParity::EvenN).unwrap();
        assert_eq!(t.n_star, 1, "nontrivial increment for twin m = {m}");
        assert_eq!(t.value, m);
        assert_eq!(t.pair, (m - 2, m));
        assert!(t.verified);
    }
}

fn any_rule() -> impl Strategy<Value = SequenceRule> {
    prop_oneof![
        Just(SequenceRule::ctilde()),
        Just(SequenceRule::c()),
        Just(SequenceRule::f()),
        Just(SequenceRule::g()),
        Just(SequenceRule::h()),
        Just(SequenceRule::i()),
        Just(SequenceRule::atilde()),
        (4u64..4_000, any::<bool>()).prop_map(|(m, even)| {
            let parity = if even {
                ParamParity::EvenN
            } else {
                ParamParity::OddN
            };
            SequenceRule::ctilde_param_with(m, parity).unwrap()
        }),
    ]
}

fn gcd_coupled_rule() -> impl Strategy<Value = SequenceRule> {
    // Families whose every step adds gcd(., prev): the increment must
    // divide the previous value. The other families couple the gcd to
    // shifted values, and the jump walk does not use a gcd at all.
    prop_oneof![
        Just(SequenceRule::ctilde()),
        Just(SequenceRule::c()),
        (4u64..4_000, any::<bool>()).prop_map(|(m, even)| {
            let parity = if even {
                ParamParity::EvenN
            } else {
                ParamParity::OddN
            };
            SequenceRule::ctilde_param_with(m, parity).unwrap()
        }),
    ]
}

proptest! {
    #[test]
    fn gcd_divides_both_arguments(a in any::<u64>(), b in any::<u64>()) {
        let g = gcd(a, b);
        prop_assert_eq!(g, gcd(b, a));
        if g > 0 {
            prop_assert_eq!(a % g, 0);
            prop_assert_eq!(b % g, 0);
        } else {
            prop_assert_eq!((a, b), (0, 0));
        }
        prop_assert_eq!(gcd(a, 0), a);
        prop_assert_eq!(gcd(a, 1), 1);
    }

    #[test]
    fn gcd_scales_linearly(a in 0u64..1_000_000, b in 0u64..1_000_000, k in 1u64..1_000) {
        prop_assert_eq!(gcd(a * k, b * k), k * gcd(a, b));
    }

    #[test]
    fn value_at_matches_the_stream_tail(rule in any_rule(), offset in 0u64..1_500) {
        let n = rule.start_index() + offset;
        let direct = value_at(rule, n).unwrap();
        let (last_n, last_v) = values(rule, n).last().unwrap();
        prop_assert_eq!((last_n, last_v), (n, direct));
    }

    #[test]
    fn gcd_rule_increments_divide_the_previous_value(
        rule in gcd_coupled_rule(),
        span in 1u64..1_200,
    ) {
        for e in twinwalk::sequences::generate(rule, rule.start_index() + span) {
            prop_assert!(e.delta >= 1);
            let prev = e.value - e.delta;
            prop_assert_eq!(prev % e.delta, 0, "delta {} does not divide {}", e.delta, prev);
        }
    }

    #[test]
    fn checkpoint_json_round_trips(
        rule in any_rule(),
        steps in 0u64..5_000,
        record_max in 0u64..100,
        last_fundamental in proptest::option::of(0u64..10_000),
    ) {
        let n = rule.start_index() + steps;
        let value = value_at(rule, n).unwrap();
        let cp = Checkpoint::capture(rule, n, value, record_max, last_fundamental);
        let parsed: Checkpoint = serde_json::from_str(&cp.to_json()).unwrap();
        prop_assert_eq!(parsed, cp);
    }

    #[test]
    fn fast_walk_agrees_at_random_cutoffs(max in 50u64..4_000) {
        prop_assert!(verify_fast_equivalence(max).is_clean());
    }

    #[test]
    fn extraction_output_is_internally_consistent(
        m in 4u64..3_000,
        even in any::<bool>(),
    ) {
        let parity = if even { ParamParity::EvenN } else { ParamParity::OddN };
        let t = twin_from_m_with(m, parity).unwrap();
        prop_assert_eq!(t.m, m);
        prop_assert!(t.n_star == 1 || (2..=m.saturating_sub(3)).contains(&t.n_star));
        prop_assert!(t.value >= m);
        prop_assert_eq!(t.pair, (t.value - t.n_star - 1, t.value - t.n_star + 1));
        prop_assert_eq!(t.verified, is_prime(t.pair.0) && is_prime(t.pair.1));
    }
}
