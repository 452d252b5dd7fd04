//! Accelerated generation of the nontrivial `atilde` events.
//!
//! Between jumps the sequence only ever adds 1, so the full event
//! stream is determined by where the jumps land. Each jump target
//! follows from the least prime divisors of `x - 3` and `x - 5` at the
//! previous jump point `x`, capped by the barrier `2x - 4` where the
//! next fundamental-point jump fires. Walking jump to jump therefore
//! skips every trivial step: one division-bounded advance per
//! nontrivial event instead of one gcd per index.
//!
//! [`verify_fast_equivalence`] replays the naive stream against the
//! walk and reports any divergence; [`generalized_walk`] runs the same
//! skeleton with the offset 2 replaced by an arbitrary odd offset,
//! hunting prime pairs at other even distances.

use crate::arith::{is_prime, least_prime_divisor, least_prime_divisor_of_product};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::sequences::{generate, IncrementClass, IncrementEvent, SequenceRule};

/// Position of the accelerated walk: the index and value of the most
/// recent nontrivial event, plus its class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkState {
    pub index: u64,
    /// Always `2 * index - 4`: every jump lands on the doubling line.
    pub value: u64,
    pub kind: IncrementClass,
}

/// Where the next nontrivial index after the jump at `x` lands.
///
/// During the trivial run after `x` a later even index `n` is
/// nontrivial exactly when some odd prime of `x - 3` divides `n - 2`,
/// and a later odd index exactly when some odd prime of `x - 5`
/// divides `n`; for odd `x` the factor 2 fires at `x + 1` immediately.
/// The earliest candidate per branch comes from that factor's least
/// prime divisor `p`: `x + p - 1` on the even branch, `x + 2p - 5` on
/// the odd branch. The branches step differently, so the smaller prime
/// does not always fire first; the candidate is the earlier of the
/// two. It never exceeds the barrier `2x - 4` and hits it exactly when
/// `x - 3` is prime and the odd branch lands past it.
pub fn next_minor_candidate(state: &WalkState) -> u64 {
    let x = state.index;
    debug_assert!(x >= 8, "walk index below the first jump range");
    if x % 2 == 1 {
        return x + 1;
    }
    let p = least_prime_divisor(x - 3).expect("x - 3 exceeds 1 above the first jump range");
    let q = least_prime_divisor(x - 5).expect("x - 5 exceeds 1 above the first jump range");
    (x + p - 1).min(x + 2 * q - 5)
}

/// The jump-to-jump walk, seeded at the first main event.
#[derive(Debug, Clone)]
pub struct FastWalk {
    state: WalkState,
    advance_calls: u64,
}

impl FastWalk {
    /// Starts at the first nontrivial event, the main jump to 76 at
    /// index 40.
    pub fn seeded() -> Self {
        FastWalk {
            state: WalkState {
                index: 40,
                value: 76,
                kind: IncrementClass::Main,
            },
            advance_calls: 0,
        }
    }

    pub fn state(&self) -> &WalkState {
        &self.state
    }

    /// Number of [`advance`](Self::advance) calls made so far.
    pub fn advance_calls(&self) -> u64 {
        self.advance_calls
    }

    /// Moves to the next nontrivial event and returns it. Landing on
    /// the barrier is the main-increment mechanism; anything short of
    /// it is a minor increment.
    pub fn advance(&mut self) -> WalkState {
        self.advance_calls += 1;
        let candidate = next_minor_candidate(&self.state);
        let barrier = 2 * self.state.index - 4;
        debug_assert!(candidate <= barrier, "candidate overshot the barrier");
        self.state = WalkState {
            index: candidate,
            value: 2 * candidate - 4,
            kind: if candidate == barrier {
                IncrementClass::Main
            } else {
                IncrementClass::Minor
            },
        };
        self.state
    }
}

impl Default for FastWalk {
    fn default() -> Self {
        Self::seeded()
    }
}

/// Iterator over the nontrivial `atilde` events with index `<= n_max`,
/// produced by the accelerated walk. Yields nothing for `n_max < 40`.
#[derive(Debug)]
pub struct FastEvents {
    walk: FastWalk,
    n_max: u64,
    prev_index: u64,
    seed_pending: bool,
    done: bool,
}

/// Accelerated counterpart of filtering [`generate`] down to
/// `delta > 1`: same `(n, value, delta)` triples, far fewer steps.
pub fn fast_events(n_max: u64) -> FastEvents {
    FastEvents {
        walk: FastWalk::seeded(),
        n_max,
        // The jump magnitude counts from the previous nontrivial point;
        // for the seed event that role is played by the start index.
        prev_index: SequenceRule::atilde().start_index(),
        seed_pending: true,
        done: false,
    }
}

impl FastEvents {
    /// The walk driving this iterator, for advance counts and tie logs.
    pub fn walk(&self) -> &FastWalk {
        &self.walk
    }
}

impl Iterator for FastEvents {
    type Item = IncrementEvent;

    fn next(&mut self) -> Option<IncrementEvent> {
        if self.done {
            return None;
        }
        let state = if self.seed_pending {
            self.seed_pending = false;
            *self.walk.state()
        } else {
            self.walk.advance()
        };
        if state.index > self.n_max {
            self.done = true;
            return None;
        }
        let delta = state.index - self.prev_index + 1;
        self.prev_index = state.index;
        Some(IncrementEvent {
            n: state.index,
            value: state.value,
            delta,
            class: state.kind,
        })
    }
}

/// Replays the naive stream next to the accelerated walk up to `n_max`
/// and reports any disagreement in the nontrivial `(n, value, delta)`
/// triples, any nontrivial event before the walk's seed, and any
/// minor/main class disagreement.
pub fn verify_fast_equivalence(n_max: u64) -> Report {
    let mut report = Report::new("accelerated walk equivalence", n_max);
    let mut naive: Vec<IncrementEvent> = Vec::new();
    for e in generate(SequenceRule::atilde(), n_max) {
        if e.delta == 1 {
            continue;
        }
        if e.n < 40 {
            report.violation(
                "prefix-nontrivial",
                e.n,
                "only trivial increments before the first jump at 40",
                format!("delta {}", e.delta),
            );
        } else {
            naive.push(e);
        }
    }

    let mut fast = fast_events(n_max);
    let accelerated: Vec<IncrementEvent> = fast.by_ref().collect();
    let mut class_disagreements = 0u64;
    for k in 0..naive.len().max(accelerated.len()) {
        match (naive.get(k), accelerated.get(k)) {
            (Some(a), Some(b)) => {
                if (a.n, a.value, a.delta) != (b.n, b.value, b.delta) {
                    report.violation(
                        "walk-equivalence",
                        a.n,
                        format!("event ({}, {}, {})", a.n, a.value, a.delta),
                        format!("walk produced ({}, {}, {})", b.n, b.value, b.delta),
                    );
                } else if a.class != b.class {
                    class_disagreements += 1;
                    report.note(format!(
                        "class disagreement at n = {}: stream {}, walk {}",
                        a.n, a.class, b.class
                    ));
                }
            }
            (Some(a), None) => report.violation(
                "walk-equivalence",
                a.n,
                format!("walk event at n = {}", a.n),
                "walk stream ended early",
            ),
            (None, Some(b)) => report.violation(
                "walk-equivalence",
                b.n,
                "no further nontrivial events",
                format!("walk produced ({}, {}, {})", b.n, b.value, b.delta),
            ),
            (None, None) => unreachable!(),
        }
    }
    if class_disagreements > 0 {
        report.violation(
            "walk-class",
            n_max,
            "identical minor/main classes from stream and walk",
            format!("{class_disagreements} disagreement(s)"),
        );
    }
    report.note(format!(
        "nontrivial events: {}, walk advances: {}",
        naive.len(),
        fast.walk().advance_calls()
    ));
    report
}

/// Checks the arithmetic form of the walk's jump magnitudes up to
/// `n_max`:
///
/// * a minor event at an even point has prime magnitude;
/// * a minor event at an odd point follows an even nontrivial point and
///   has even magnitude `t` with `(t + 4) / 2` prime;
/// * a minor event at an odd point never follows an odd nontrivial
///   point.
pub fn verify_lemma_deltas(n_max: u64) -> Report {
    let mut report = Report::new("walk magnitude laws", n_max);
    let mut prev_index: Option<u64> = None;
    let mut minors = 0u64;
    for e in fast_events(n_max) {
        if e.class == IncrementClass::Minor {
            minors += 1;
            let prev = prev_index.expect("walk emits the seed main first");
            if e.n % 2 == 0 {
                if !is_prime(e.delta) {
                    report.violation(
                        "even-minor-delta-prime",
                        e.n,
                        "prime magnitude at an even minor point",
                        e.delta,
                    );
                }
            } else if prev % 2 == 0 {
                if e.delta % 2 != 0 || !is_prime((e.delta + 4) / 2) {
                    report.violation(
                        "odd-minor-delta-form",
                        e.n,
                        "even magnitude t with (t + 4) / 2 prime at an odd minor point",
                        e.delta,
                    );
                }
            } else {
                report.violation(
                    "odd-after-odd",
                    e.n,
                    "no odd minor point directly after an odd nontrivial point",
                    format!("follows {prev}"),
                );
            }
        }
        prev_index = Some(e.n);
    }
    report.note(format!("minor events checked: {minors}"));
    report
}

/// Trace of one generalized walk run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedWalk {
    /// Every point visited, starting point included.
    pub points: Vec<u64>,
    /// The first prime pair `(n - a - 2, n - a)` met along the walk,
    /// if one appeared within the step budget.
    pub pair: Option<(u64, u64)>,
}

/// Runs the walk skeleton with the pair offset 2 generalized to
/// `n - a - 2` and `n - a` for an odd `a` (negative allowed): from each
/// point `n`, step by `p - 1` where `p` is the least prime divisor of
/// `(n - a - 2) * (n - a)`, stopping as soon as the shifted pair is a
/// prime pair or `max_steps` runs out.
///
/// `start` must be even, and for positive `a` large enough that
/// `start - a - 2 >= 3`.
pub fn generalized_walk(a: i64, start: u64, max_steps: u64) -> Result<GeneralizedWalk> {
    if a.rem_euclid(2) == 0 {
        return Err(Error::WalkOffsetEven { a });
    }
    if start % 2 != 0 {
        return Err(Error::WalkStartInvalid {
            start,
            a,
            why: "start point must be even".into(),
        });
    }
    if a > 0 && (start as i128) - (a as i128) - 2 < 3 {
        return Err(Error::WalkStartInvalid {
            start,
            a,
            why: "start - a - 2 must be at least 3".into(),
        });
    }

    let offset = a as i128;
    let mut n = start as i128;
    let mut points = vec![start];
    let mut pair = None;
    let as_u64 = |x: i128| u64::try_from(x).expect("walk left the u64 range");

    let check = |n: i128| -> Option<(u64, u64)> {
        let lo = n - offset - 2;
        let hi = n - offset;
        if lo >= 2 && is_prime(as_u64(lo)) && is_prime(as_u64(hi)) {
            Some((as_u64(lo), as_u64(hi)))
        } else {
            None
        }
    };

    for _ in 0..max_steps {
        let f1 = (n - offset - 2).max(0) as u64;
        let f2 = (n - offset).max(0) as u64;
        let p = least_prime_divisor_of_product(f1, f2).ok_or_else(|| Error::WalkStartInvalid {
            start,
            a,
            why: format!("walk stalled at {n}: no prime divisor to step by"),
        })?;
        n += (p - 1) as i128;
        points.push(as_u64(n));
        if let Some(found) = check(n) {
            pair = Some(found);
            break;
        }
    }
    Ok(GeneralizedWalk { points, pair })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_state() {
        let walk = FastWalk::seeded();
        assert_eq!(
            *walk.state(),
            WalkState {
                index: 40,
                value: 76,
                kind: IncrementClass::Main
            }
        );
    }

    #[test]
    fn first_advances_match_hand_computation() {
        // From 40: branches 40 + 37 - 1 = 76 and 40 + 2*5 - 5 = 45, so a
        // minor at 45 (barrier 76). From 45 (odd): immediate minor at 46.
        // From 46: branches 46 + 43 - 1 = 88 and 46 + 2*41 - 5 = 123; the
        // even branch hits the barrier 88 exactly, a main.
        let mut walk = FastWalk::seeded();
        let s1 = walk.advance();
        assert_eq!((s1.index, s1.value, s1.kind), (45, 86, IncrementClass::Minor));
        let s2 = walk.advance();
        assert_eq!((s2.index, s2.value, s2.kind), (46, 88, IncrementClass::Minor));
        let s3 = walk.advance();
        assert_eq!((s3.index, s3.value, s3.kind), (88, 172, IncrementClass::Main));
        assert_eq!(walk.advance_calls(), 3);
    }

    #[test]
    fn candidate_prefers_the_earlier_branch() {
        // At 4186 the even branch (47 divides 4183) fires at 4232 before
        // the odd branch (37 divides 4181) would at 4255, even though 37
        // is the smaller prime.
        let state = WalkState {
            index: 4186,
            value: 2 * 4186 - 4,
            kind: IncrementClass::Minor,
        };
        assert_eq!(next_minor_candidate(&state), 4232);
    }

    #[test]
    fn fast_events_prefix() {
        let events: Vec<(u64, u64, u64)> =
            fast_events(100).map(|e| (e.n, e.value, e.delta)).collect();
        assert_eq!(
            events,
            vec![
                (40, 76, 19),
                (45, 86, 6),
                (46, 88, 2),
                (88, 172, 43),
                (92, 180, 5),
                (93, 182, 2),
                (94, 184, 2),
                (100, 196, 7),
            ]
        );
    }

    #[test]
    fn fast_events_empty_before_seed() {
        assert_eq!(fast_events(39).count(), 0);
        assert_eq!(fast_events(0).count(), 0);
        assert_eq!(fast_events(40).count(), 1);
    }

    #[test]
    fn advance_calls_bounded_by_events() {
        let mut stream = fast_events(10_000);
        let emitted = stream.by_ref().count() as u64;
        assert!(emitted > 0);
        assert!(stream.walk().advance_calls() <= emitted);
    }

    #[test]
    fn equivalence_clean_at_small_scale() {
        let report = verify_fast_equivalence(20_000);
        assert!(report.is_clean(), "{report}");
    }

    #[test]
    fn lemma_deltas_clean_at_small_scale() {
        let report = verify_lemma_deltas(50_000);
        assert!(report.is_clean(), "{report}");
    }

    #[test]
    fn generalized_walk_recovers_standard_pairs() {
        // Offset 1 shifts the probe window to (n - 3, n - 1): from 40
        // the first stop with both prime recovers a twin pair.
        let walk = generalized_walk(1, 40, 1000).unwrap();
        let (lo, hi) = walk.pair.unwrap();
        assert_eq!(hi - lo, 2);
        assert!(is_prime(lo) && is_prime(hi));
        assert_eq!(walk.points.first(), Some(&40));
    }

    #[test]
    fn generalized_walk_negative_offset() {
        let walk = generalized_walk(-3, 10, 5000).unwrap();
        let (lo, hi) = walk.pair.unwrap();
        assert_eq!(hi - lo, 2);
        assert!(is_prime(lo) && is_prime(hi));
    }

    #[test]
    fn generalized_walk_zero_budget() {
        let walk = generalized_walk(1, 40, 0).unwrap();
        assert_eq!(walk.points, vec![40]);
        assert_eq!(walk.pair, None);
    }

    #[test]
    fn generalized_walk_rejects_bad_arguments() {
        assert!(matches!(
            generalized_walk(2, 40, 10),
            Err(Error::WalkOffsetEven { a: 2 })
        ));
        assert!(generalized_walk(1, 41, 10).is_err());
        assert!(generalized_walk(37, 40, 10).is_err()); // 40 - 37 - 2 < 3
        assert!(generalized_walk(-3, 10, 10).is_ok());
    }
}
