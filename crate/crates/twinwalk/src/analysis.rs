//! Increment classification and the verification scans built on it.
//!
//! Three families carry a notion of *fundamental point*, an index where
//! the running value hits an exact 3/2 ratio against the index. The jump
//! right after a fundamental point is the *main* increment; every other
//! jump is *minor*. This module detects fundamental points, extracts
//! record increments, aggregates per-segment minor statistics, and
//! exposes falsification scans for the structural laws those objects
//! are observed to obey. Scans return [`Report`]s, never booleans, so a
//! failed run documents exactly what broke and where.

use std::fmt;

use crate::arith::{is_prime, is_twin_greater};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::sequences::{
    generate, value_at, values, Classifier, IncrementClass, RuleId, SequenceRule,
};

/// Does `(m, value)` satisfy the fundamental point condition of the
/// rule's family? Exact integer arithmetic throughout:
///
/// * `ctilde`: `(value - 3) / (m - 3) = 3/2`, written `2 * value + 3 = 3 * m`;
/// * `atilde`: the same ratio, and additionally `m = 3 (mod 12)`;
/// * `f`: `value / m = 3/2` at even `m`, excluding the accidental hit
///   at `m = 8`.
///
/// Families without a fundamental point convention always return false.
pub fn is_fundamental_value(id: RuleId, m: u64, value: u64) -> bool {
    match id {
        RuleId::CTilde => 2 * value + 3 == 3 * m,
        RuleId::ATilde => m % 12 == 3 && 2 * value + 3 == 3 * m,
        RuleId::F => m % 2 == 0 && m != 8 && 2 * value == 3 * m,
        _ => false,
    }
}

/// Expected main increment magnitude for an event at index `n`, given
/// that the family's fundamental predecessor condition held.
fn expected_main_delta(id: RuleId, n: u64) -> u64 {
    match id {
        // Fundamental point at m = n - 1, jump magnitude (m - 1) / 2.
        RuleId::CTilde | RuleId::ATilde => (n - 2) / 2,
        // Fundamental point at m = n - 2, jump magnitude (m + 2) / 2.
        RuleId::F => n / 2,
        _ => unreachable!("no main increment convention"),
    }
}

/// A classification that deviated from the family's stated pattern,
/// kept alongside the classified stream instead of being silently
/// folded into a class.
#[derive(Debug, Clone)]
pub struct Anomaly {
    pub rule: &'static str,
    pub n: u64,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Anomaly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at n={}: expected {}, got {}",
            self.rule, self.n, self.expected, self.actual
        )
    }
}

/// The per-family classification conventions.
///
/// For `ctilde` a main increment requires both a fundamental predecessor
/// and the exact magnitude `(n - 2) / 2`; a fundamental point followed by
/// any other delta is recorded as an anomaly rather than classified main.
/// For `atilde` the definition is positional (fundamental predecessor
/// with the mod-12 residue); a jump whose predecessor satisfies the ratio
/// but misses the residue stays minor and is logged. For `f` the main
/// increment sits two places after the fundamental point. The remaining
/// families have no main increments at all.
pub struct StandardClassifier {
    rule: SequenceRule,
    last_fundamental: Option<u64>,
    anomalies: Vec<Anomaly>,
}

impl StandardClassifier {
    pub fn new(rule: SequenceRule) -> Self {
        Self::with_state(rule, None)
    }

    /// Rebuilds a classifier mid-stream; `last_fundamental` is the most
    /// recent fundamental point at or before the resume index.
    pub fn with_state(rule: SequenceRule, last_fundamental: Option<u64>) -> Self {
        StandardClassifier {
            rule,
            last_fundamental,
            anomalies: Vec::new(),
        }
    }

    /// Most recent fundamental point seen so far (strictly before the
    /// next index the stream will produce).
    pub fn last_fundamental(&self) -> Option<u64> {
        self.last_fundamental
    }

    pub fn anomalies(&self) -> &[Anomaly] {
        &self.anomalies
    }

    fn plain(delta: u64) -> IncrementClass {
        if delta == 1 {
            IncrementClass::Trivial
        } else {
            IncrementClass::Minor
        }
    }
}

impl Classifier for StandardClassifier {
    fn classify(&mut self, n: u64, _value: u64, delta: u64, prev: u64) -> IncrementClass {
        let id = self.rule.id();
        // The predecessor's value is on hand; settle its fundamental
        // status before classifying the current increment.
        if is_fundamental_value(id, n - 1, prev) {
            self.last_fundamental = Some(n - 1);
        }
        match id {
            RuleId::CTilde => {
                if self.last_fundamental == Some(n - 1) {
                    let want = expected_main_delta(id, n);
                    if delta == want {
                        return IncrementClass::Main;
                    }
                    self.anomalies.push(Anomaly {
                        rule: "main-magnitude",
                        n,
                        expected: format!("main increment of {want} after fundamental point {}", n - 1),
                        actual: format!("delta {delta}"),
                    });
                }
                Self::plain(delta)
            }
            RuleId::ATilde => {
                if self.last_fundamental == Some(n - 1) {
                    if delta == 1 {
                        self.anomalies.push(Anomaly {
                            rule: "main-magnitude",
                            n,
                            expected: format!("jump after fundamental point {}", n - 1),
                            actual: "trivial increment".into(),
                        });
                        return IncrementClass::Trivial;
                    }
                    let want = expected_main_delta(id, n);
                    if delta != want {
                        self.anomalies.push(Anomaly {
                            rule: "main-magnitude",
                            n,
                            expected: format!("main increment of {want}"),
                            actual: format!("delta {delta}"),
                        });
                    }
                    return IncrementClass::Main;
                }
                if delta > 1 && 2 * prev + 3 == 3 * (n - 1) {
                    // Ratio without the mod-12 residue: stays minor, logged.
                    self.anomalies.push(Anomaly {
                        rule: "jump-residue",
                        n,
                        expected: format!("predecessor {} = 3 (mod 12) at the 3/2 ratio", n - 1),
                        actual: format!("{} = {} (mod 12)", n - 1, (n - 1) % 12),
                    });
                }
                Self::plain(delta)
            }
            RuleId::F => {
                if n >= 2 && self.last_fundamental == Some(n - 2) {
                    let want = expected_main_delta(id, n);
                    if delta == want {
                        return IncrementClass::Main;
                    }
                    self.anomalies.push(Anomaly {
                        rule: "main-magnitude",
                        n,
                        expected: format!("main increment of {want} two past fundamental point {}", n - 2),
                        actual: format!("delta {delta}"),
                    });
                }
                Self::plain(delta)
            }
            _ => Self::plain(delta),
        }
    }
}

/// An index where the sequence value satisfies the family's exact 3/2
/// ratio condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FundamentalPoint {
    pub sequence: SequenceRule,
    pub m: u64,
    /// The twin prime pair this point predicts: `((m-5)/2, (m-1)/2)`
    /// for the odd-point families, `((m-2)/2, (m+2)/2)` for `f`.
    pub twin_candidate: (u64, u64),
    /// Both candidate members tested prime.
    pub twin_verified: bool,
}

fn rule_has_fundamentals(rule: SequenceRule) -> Result<()> {
    match rule.id() {
        RuleId::CTilde | RuleId::ATilde | RuleId::F => Ok(()),
        _ => Err(Error::NoFundamentalConvention {
            rule: rule.to_string(),
        }),
    }
}

/// All fundamental points of `rule` with index `<= n_max`, in order.
/// Errors for families without a fundamental point convention.
pub fn find_fundamental_points(rule: SequenceRule, n_max: u64) -> Result<Vec<FundamentalPoint>> {
    rule_has_fundamentals(rule)?;
    let id = rule.id();
    let mut out = Vec::new();
    for (m, value) in values(rule, n_max) {
        if is_fundamental_value(id, m, value) {
            let twin_candidate = match id {
                RuleId::F => ((m - 2) / 2, (m + 2) / 2),
                _ => ((m - 5) / 2, (m - 1) / 2),
            };
            out.push(FundamentalPoint {
                sequence: rule,
                m,
                twin_candidate,
                twin_verified: is_prime(twin_candidate.0) && is_prime(twin_candidate.1),
            });
        }
    }
    Ok(out)
}

/// An increment that strictly exceeded every earlier increment of its
/// sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecordEvent {
    pub n: u64,
    pub delta: u64,
    /// Is the record magnitude the greater member of a twin prime pair?
    pub is_twin_greater: bool,
}

/// Record increments of `rule` up to `n_max`, in order of appearance.
pub fn find_records(rule: SequenceRule, n_max: u64) -> Vec<RecordEvent> {
    let mut max = 0u64;
    let mut out = Vec::new();
    for e in generate(rule, n_max) {
        if e.delta > max {
            max = e.delta;
            out.push(RecordEvent {
                n: e.n,
                delta: e.delta,
                is_twin_greater: is_twin_greater(e.delta),
            });
        }
    }
    out
}

/// Minor increment statistics between one adjacent pair of fundamental
/// points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentStats {
    pub m_lo: u64,
    pub m_hi: u64,
    /// Number of minor increments with index in `(m_lo, m_hi]`.
    pub minor_count: u64,
    /// Sum of those minor increment magnitudes.
    pub minor_sum: u64,
    /// Minor event indices relative to `m_lo + 1` (the main increment
    /// position), so an offset `l` means an event at `m_lo + 1 + l`.
    pub offsets: Vec<u64>,
}

/// Statistics for every complete segment between adjacent fundamental
/// points up to `n_max`. The open segment after the last detected point
/// is not reported.
pub fn segment_stats(rule: SequenceRule, n_max: u64) -> Result<Vec<SegmentStats>> {
    rule_has_fundamentals(rule)?;
    let id = rule.id();
    let mut out = Vec::new();
    let mut open: Option<SegmentStats> = None;
    let mut stream = generate(rule, n_max);
    while let Some(e) = stream.next() {
        if e.class == IncrementClass::Minor {
            if let Some(seg) = open.as_mut() {
                seg.minor_count += 1;
                seg.minor_sum += e.delta;
                seg.offsets.push(e.n - (seg.m_lo + 1));
            }
        }
        if is_fundamental_value(id, e.n, e.value) {
            if let Some(mut seg) = open.take() {
                seg.m_hi = e.n;
                out.push(seg);
            }
            open = Some(SegmentStats {
                m_lo: e.n,
                m_hi: 0,
                minor_count: 0,
                minor_sum: 0,
                offsets: Vec::new(),
            });
        }
    }
    Ok(out)
}

/// Ids accepted by [`verify_observation`].
pub const OBSERVATION_IDS: std::ops::RangeInclusive<u32> = 1..=6;

/// Scan-based falsification of one structural law of the `ctilde`
/// increment pattern, checked up to `n_max`:
///
/// 1. fundamental points exist and satisfy the exact 3/2 ratio;
/// 2. adjacent fundamental points obey `m_hi >= 2 * m_lo - 3`, with
///    equality only in minor-free segments;
/// 3. from the second point on, `m = 3 (mod 12)` and the predicted twin
///    pair `((m-5)/2, (m-1)/2)` is a twin prime pair;
/// 4. the increment right after each fundamental point is a main
///    increment of magnitude `(m - 1) / 2`;
/// 5. from the second point on, each segment's minor magnitude sum is
///    congruent to its minor count mod 6;
/// 6. from the second point on, minor increments sit strictly before
///    `m_hi - sqrt(2 * (m_hi - 1)) - 2`, compared in exact integers.
pub fn verify_observation(obs: u32, n_max: u64) -> Result<Report> {
    let rule = SequenceRule::ctilde();
    match obs {
        1 => {
            let mut report = Report::new("fundamental point existence and ratio", n_max);
            let points = find_fundamental_points(rule, n_max)?;
            if n_max >= 7 && points.is_empty() {
                report.violation("fundamental-exists", n_max, "at least one fundamental point", "none");
            }
            for p in &points {
                let v = value_at(rule, p.m)?;
                if 2 * v + 3 != 3 * p.m {
                    report.violation(
                        "fundamental-ratio",
                        p.m,
                        format!("2 * value + 3 = {}", 3 * p.m),
                        format!("2 * {v} + 3 = {}", 2 * v + 3),
                    );
                }
            }
            report.note(format!(
                "points: {:?}",
                points.iter().map(|p| p.m).collect::<Vec<_>>()
            ));
            Ok(report)
        }
        2 => {
            let mut report = Report::new("fundamental gap lower bound", n_max);
            for seg in segment_stats(rule, n_max)? {
                let bound = 2 * seg.m_lo - 3;
                if seg.m_hi < bound {
                    report.violation(
                        "segment-gap",
                        seg.m_hi,
                        format!("m_hi >= {bound} after m_lo = {}", seg.m_lo),
                        seg.m_hi,
                    );
                }
                if seg.m_hi == bound && seg.minor_count != 0 {
                    report.violation(
                        "segment-gap-equality",
                        seg.m_hi,
                        "no minor increments in a minimal-gap segment",
                        format!("{} minor increment(s)", seg.minor_count),
                    );
                }
            }
            Ok(report)
        }
        3 => {
            let mut report = Report::new("fundamental twin and residue structure", n_max);
            for p in find_fundamental_points(rule, n_max)?.iter().skip(1) {
                if p.m % 12 != 3 {
                    report.violation(
                        "point-mod-12",
                        p.m,
                        "m = 3 (mod 12)",
                        format!("m = {} (mod 12)", p.m % 12),
                    );
                }
                if !p.twin_verified {
                    report.violation(
                        "point-twin",
                        p.m,
                        format!("twin primes {:?}", p.twin_candidate),
                        "at least one member composite",
                    );
                }
            }
            Ok(report)
        }
        4 => {
            let mut report = Report::new("main increment magnitude", n_max);
            let mut stream = generate(rule, n_max);
            let mut mains = 0u64;
            for e in stream.by_ref() {
                if e.class == IncrementClass::Main {
                    mains += 1;
                }
            }
            for a in stream.classifier().anomalies() {
                report.violation(a.rule, a.n, &a.expected, &a.actual);
            }
            report.note(format!("main increments: {mains}"));
            Ok(report)
        }
        5 => {
            let mut report = Report::new("segment residue identity", n_max);
            for seg in segment_stats(rule, n_max)? {
                if seg.m_lo < 27 {
                    continue;
                }
                debug_assert!(seg.minor_sum >= seg.minor_count);
                if (seg.minor_sum - seg.minor_count) % 6 != 0 {
                    report.violation(
                        "segment-residue",
                        seg.m_hi,
                        format!("T = h (mod 6) with h = {}", seg.minor_count),
                        format!("T = {}", seg.minor_sum),
                    );
                }
            }
            Ok(report)
        }
        6 => {
            let mut report = Report::new("minor placement bound", n_max);
            for seg in segment_stats(rule, n_max)? {
                if seg.m_lo < 27 {
                    continue;
                }
                for &l in &seg.offsets {
                    let n = seg.m_lo + 1 + l;
                    // n < m_hi - sqrt(2 * (m_hi - 1)) - 2, i.e. the slack
                    // d = m_hi - n - 2 is positive with d^2 > 2 * (m_hi - 1).
                    let ok = n + 2 < seg.m_hi && {
                        let d = seg.m_hi - n - 2;
                        d * d > 2 * (seg.m_hi - 1)
                    };
                    if !ok {
                        report.violation(
                            "minor-placement",
                            n,
                            format!(
                                "minor strictly before {} - sqrt({}) - 2",
                                seg.m_hi,
                                2 * (seg.m_hi - 1)
                            ),
                            format!("minor at {n}"),
                        );
                    }
                }
            }
            Ok(report)
        }
        other => Err(Error::UnknownCheck {
            id: format!("obs{other}"),
        }),
    }
}

/// Two sharper placement bounds for the *last* minor increment of each
/// `ctilde` segment (from the second fundamental point on), phrased in
/// the coordinates of the surrounding main increments `n_1 = m_lo + 1`
/// and `n_2 = m_hi + 1`:
///
/// * `L <= n_2 - sqrt((n_2 - 6) / 2) - 8`;
/// * `L <= n_2 - sqrt(2 * (n_2 - 2)) - 3`.
///
/// Both are compared in exact integers.
pub fn verify_minor_tail_bounds(n_max: u64) -> Result<Report> {
    let mut report = Report::new("last minor placement bounds", n_max);
    for seg in segment_stats(SequenceRule::ctilde(), n_max)? {
        if seg.m_lo < 27 {
            continue;
        }
        let Some(&l_last) = seg.offsets.last() else {
            continue;
        };
        let last = seg.m_lo + 1 + l_last;
        let n2 = seg.m_hi + 1;
        // L <= n2 - sqrt((n2 - 6) / 2) - 8 with slack d = n2 - 8 - L.
        let ok_a = last + 8 <= n2 && {
            let d = n2 - 8 - last;
            2 * d * d >= n2 - 6
        };
        if !ok_a {
            report.violation(
                "tail-bound-a",
                last,
                format!("last minor at most {n2} - sqrt(({n2} - 6) / 2) - 8"),
                format!("last minor at {last}"),
            );
        }
        // L <= n2 - sqrt(2 * (n2 - 2)) - 3 with slack d = n2 - 3 - L.
        let ok_b = last + 3 <= n2 && {
            let d = n2 - 3 - last;
            d * d >= 2 * (n2 - 2)
        };
        if !ok_b {
            report.violation(
                "tail-bound-b",
                last,
                format!("last minor at most {n2} - sqrt(2 * ({n2} - 2)) - 3"),
                format!("last minor at {last}"),
            );
        }
    }
    Ok(report)
}

/// Scan-based falsification of the two record conjectures for `ctilde`:
///
/// 1. every record increment above 3 is the greater member of a twin
///    prime pair;
/// 2. from `n = 16` on, the record increments and the main increments
///    are the same events.
pub fn verify_conjecture(id: u32, n_max: u64) -> Result<Report> {
    let rule = SequenceRule::ctilde();
    match id {
        1 => {
            let mut report = Report::new("record twin property", n_max);
            for r in find_records(rule, n_max) {
                if r.delta > 3 && !r.is_twin_greater {
                    report.violation(
                        "record-twin",
                        r.n,
                        format!("record {} the greater of a twin prime pair", r.delta),
                        format!("{} and {} not both prime", r.delta.saturating_sub(2), r.delta),
                    );
                }
            }
            Ok(report)
        }
        2 => {
            let mut report = Report::new("record and main agreement", n_max);
            let mut max = 0u64;
            for e in generate(rule, n_max) {
                let is_record = e.delta > max;
                if is_record {
                    max = e.delta;
                }
                if e.n < 16 {
                    continue;
                }
                let is_main = e.class == IncrementClass::Main;
                if is_record && !is_main {
                    report.violation(
                        "record-main-agreement",
                        e.n,
                        format!("main class at record delta {}", e.delta),
                        format!("{} increment", e.class),
                    );
                }
                if is_main && !is_record {
                    report.violation(
                        "record-main-agreement",
                        e.n,
                        "record delta at main increment",
                        format!("delta {} within running max {max}", e.delta),
                    );
                }
            }
            Ok(report)
        }
        other => Err(Error::UnknownCheck {
            id: format!("conj{other}"),
        }),
    }
}

/// Compares the record increments above 7 of `ctilde` and `f` over the
/// same index range. Any divergence is reported with both sides' full
/// context. Near `n_max` a record can sit inside one sequence's range
/// but past the other's; the report states that honestly rather than
/// suppressing the tail.
pub fn records_coincide(n_max: u64) -> Report {
    let mut report = Report::new("record coincidence (ctilde vs f)", n_max);
    let a: Vec<RecordEvent> = find_records(SequenceRule::ctilde(), n_max)
        .into_iter()
        .filter(|r| r.delta > 7)
        .collect();
    let b: Vec<RecordEvent> = find_records(SequenceRule::f(), n_max)
        .into_iter()
        .filter(|r| r.delta > 7)
        .collect();
    for k in 0..a.len().max(b.len()) {
        match (a.get(k), b.get(k)) {
            (Some(x), Some(y)) => {
                if x.delta != y.delta {
                    report.violation(
                        "record-coincide",
                        x.n,
                        format!("record #{k} of f to equal ctilde's {} (at n = {})", x.delta, x.n),
                        format!("f has {} (at n = {})", y.delta, y.n),
                    );
                }
            }
            (Some(x), None) => report.violation(
                "record-coincide",
                x.n,
                format!("f record matching ctilde's {} (at n = {})", x.delta, x.n),
                "no further f record in range",
            ),
            (None, Some(y)) => report.violation(
                "record-coincide",
                y.n,
                format!("ctilde record matching f's {} (at n = {})", y.delta, y.n),
                "no further ctilde record in range",
            ),
            (None, None) => unreachable!(),
        }
    }
    report.note(format!("records above 7 compared: {}", a.len().max(b.len())));
    report
}

/// Scan-based falsification of the minor increment laws of `atilde`
/// over the full classified event stream up to `n_max`:
///
/// * every run of consecutive trivial increments after a nontrivial
///   event at `v` has length at most `v - 5`;
/// * a nontrivial increment of magnitude `t` is preceded by exactly
///   `t - 2` trivial increments since the previous nontrivial event;
/// * minor increments at even points have prime magnitude, and the
///   point is never divisible by 3;
/// * minor increments at odd points only follow an even nontrivial
///   point, have even magnitude `t` with `(t + 4) / 2` prime, and the
///   point is never `5 (mod 6)`;
/// * after a minor point `= 4 (mod 6)`, the next nontrivial event is
///   either main or a minor of magnitude at least 5;
/// * after a minor point `= 2 (mod 6)`, the very next index is again a
///   minor point;
/// * every minor magnitude is 2 or at least 5, and a magnitude of at
///   least 5 only follows a nontrivial point `= 4 (mod 6)`.
///
/// The count of minor points `= 4 (mod 6)` is reported as a note; at
/// any finite range their infinitude reduces to nonemptiness.
pub fn verify_atilde_lemmas(n_max: u64) -> Report {
    let rule = SequenceRule::atilde();
    let mut report = Report::new("minor increment laws (atilde)", n_max);
    let mut prev_nt = rule.start_index();
    let mut awaiting_geq5: Option<u64> = None;
    let mut awaiting_successor: Option<u64> = None;
    let mut mains = 0u64;
    let mut minors = 0u64;
    let mut minors_4_mod_6 = 0u64;

    let mut stream = generate(rule, n_max);
    while let Some(e) = stream.next() {
        if let Some(n0) = awaiting_successor.take() {
            if e.class != IncrementClass::Minor {
                report.violation(
                    "successor-point",
                    e.n,
                    format!("minor increment at {} right after the 2 (mod 6) minor point {n0}", n0 + 1),
                    format!("{} increment", e.class),
                );
            }
        }
        if e.delta == 1 {
            continue;
        }

        let run = e.n - prev_nt - 1;
        if run > prev_nt - 5 {
            report.violation(
                "trivial-run-length",
                e.n,
                format!("at most {} trivial increments after {prev_nt}", prev_nt - 5),
                format!("{run}"),
            );
        }
        if e.delta != e.n - prev_nt + 1 {
            report.violation(
                "jump-spacing",
                e.n,
                format!("magnitude {} after the nontrivial point {prev_nt}", e.n - prev_nt + 1),
                format!("magnitude {}", e.delta),
            );
        }

        if let Some(n0) = awaiting_geq5.take() {
            if e.class == IncrementClass::Minor && e.delta < 5 {
                report.violation(
                    "post-4-mod-6-magnitude",
                    e.n,
                    format!("main event or minor magnitude >= 5 after the 4 (mod 6) minor point {n0}"),
                    format!("minor magnitude {}", e.delta),
                );
            }
        }

        if e.class == IncrementClass::Minor {
            minors += 1;
            if e.n % 2 == 0 {
                if !is_prime(e.delta) {
                    report.violation(
                        "even-minor-delta-prime",
                        e.n,
                        "prime magnitude at an even minor point",
                        e.delta,
                    );
                }
                if e.n % 3 == 0 {
                    report.violation(
                        "even-minor-mod-3",
                        e.n,
                        "even minor point not divisible by 3",
                        format!("{} = 3 * {}", e.n, e.n / 3),
                    );
                }
            } else {
                if prev_nt % 2 == 0 {
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
                        format!("follows {}", prev_nt),
                    );
                }
                if e.n % 6 == 5 {
                    report.violation(
                        "odd-minor-mod-6",
                        e.n,
                        "odd minor point not 5 (mod 6)",
                        format!("{} = 5 (mod 6)", e.n),
                    );
                }
            }
            if e.delta != 2 && e.delta < 5 {
                report.violation(
                    "minor-magnitude-gap",
                    e.n,
                    "minor magnitude 2 or at least 5",
                    e.delta,
                );
            }
            if e.delta >= 5 && prev_nt % 6 != 4 {
                report.violation(
                    "large-minor-predecessor",
                    e.n,
                    "nontrivial predecessor point = 4 (mod 6) before a magnitude >= 5",
                    format!("predecessor {} = {} (mod 6)", prev_nt, prev_nt % 6),
                );
            }
            if e.n % 6 == 4 {
                minors_4_mod_6 += 1;
                awaiting_geq5 = Some(e.n);
            }
            if e.n % 6 == 2 {
                awaiting_successor = Some(e.n);
            }
        } else {
            mains += 1;
        }

        prev_nt = e.n;
    }

    // A trivial run still open at the end of the range can already have
    // overrun its bound.
    if n_max > prev_nt && n_max - prev_nt > prev_nt - 5 {
        report.violation(
            "trivial-run-length",
            n_max,
            format!("at most {} trivial increments after {prev_nt}", prev_nt - 5),
            format!("{} and counting", n_max - prev_nt),
        );
    }
    for a in stream.classifier().anomalies() {
        report.note(format!("classification anomaly: {a}"));
    }
    report.note(format!("main increments: {mains}, minor increments: {minors}"));
    report.note(format!("minor points = 4 (mod 6): {minors_4_mod_6}"));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifier_pinned_events() {
        let events: Vec<_> = generate(SequenceRule::ctilde(), 28).collect();
        let at = |n: u64| events.iter().find(|e| e.n == n).copied().unwrap();
        assert_eq!(at(8).class, IncrementClass::Main); // after fundamental point 7
        assert_eq!(at(8).delta, 3);
        assert_eq!(at(15).class, IncrementClass::Minor); // delta 5, no fundamental predecessor
        assert_eq!(at(15).delta, 5);
        assert_eq!(at(28).class, IncrementClass::Main); // after fundamental point 27
        assert_eq!(at(28).delta, 13);
        assert_eq!(at(3).class, IncrementClass::Trivial);
    }

    #[test]
    fn atilde_classes() {
        let classes: Vec<(u64, IncrementClass)> = generate(SequenceRule::atilde(), 100)
            .filter(|e| e.delta > 1)
            .map(|e| (e.n, e.class))
            .collect();
        assert_eq!(
            classes,
            vec![
                (40, IncrementClass::Main),
                (45, IncrementClass::Minor),
                (46, IncrementClass::Minor),
                (88, IncrementClass::Main),
                (92, IncrementClass::Minor),
                (93, IncrementClass::Minor),
                (94, IncrementClass::Minor),
                (100, IncrementClass::Minor),
            ]
        );
    }

    #[test]
    fn fundamental_points_ctilde_prefix() {
        let points = find_fundamental_points(SequenceRule::ctilde(), 130).unwrap();
        let ms: Vec<u64> = points.iter().map(|p| p.m).collect();
        assert_eq!(ms, vec![7, 27, 63, 123]);
        assert_eq!(points[0].twin_candidate, (1, 3));
        assert!(!points[0].twin_verified);
        assert_eq!(points[1].twin_candidate, (11, 13));
        assert!(points[1].twin_verified);
        assert_eq!(points[2].twin_candidate, (29, 31));
        assert!(points[2].twin_verified);
    }

    #[test]
    fn fundamental_points_atilde() {
        let points = find_fundamental_points(SequenceRule::atilde(), 100).unwrap();
        let ms: Vec<u64> = points.iter().map(|p| p.m).collect();
        assert_eq!(ms, vec![39, 87]);
    }

    #[test]
    fn fundamental_points_bare_range() {
        assert!(find_fundamental_points(SequenceRule::ctilde(), 6)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn fundamental_points_rejects_other_families() {
        assert!(find_fundamental_points(SequenceRule::c(), 100).is_err());
        assert!(find_fundamental_points(SequenceRule::g(), 100).is_err());
        assert!(find_fundamental_points(SequenceRule::ctilde_param(13).unwrap(), 100).is_err());
        assert!(segment_stats(SequenceRule::i(), 100).is_err());
    }

    #[test]
    fn records_ctilde_prefix() {
        let records = find_records(SequenceRule::ctilde(), 100);
        let got: Vec<(u64, u64, bool)> = records
            .iter()
            .map(|r| (r.n, r.delta, r.is_twin_greater))
            .collect();
        assert_eq!(
            got,
            vec![(2, 2, false), (8, 3, false), (15, 5, true), (28, 13, true), (64, 31, true)]
        );
    }

    #[test]
    fn segment_stats_ctilde_prefix() {
        let segs = segment_stats(SequenceRule::ctilde(), 63).unwrap();
        assert_eq!(segs.len(), 2);
        assert_eq!((segs[0].m_lo, segs[0].m_hi), (7, 27));
        assert_eq!(segs[0].minor_count, 3);
        assert_eq!(segs[0].minor_sum, 11); // deltas 3, 5, 3 at n = 9, 15, 21
        assert_eq!(segs[0].offsets, vec![1, 7, 13]);
        assert_eq!((segs[1].m_lo, segs[1].m_hi), (27, 63));
        assert_eq!(segs[1].minor_count, 2);
        assert_eq!(segs[1].minor_sum, 8); // deltas 5, 3 at n = 32, 33
        assert_eq!(segs[1].offsets, vec![4, 5]);
    }

    #[test]
    fn segment_stats_atilde_first_segment() {
        let segs = segment_stats(SequenceRule::atilde(), 100).unwrap();
        assert_eq!(segs.len(), 1);
        assert_eq!((segs[0].m_lo, segs[0].m_hi), (39, 87));
        assert_eq!(segs[0].offsets, vec![5, 6]); // minors at 45 and 46
        assert_eq!(segs[0].minor_sum, 8);
    }

    #[test]
    fn observations_clean_at_small_scale() {
        for obs in OBSERVATION_IDS {
            let report = verify_observation(obs, 2500).unwrap();
            assert!(
                report.is_clean(),
                "observation {obs} reported violations:\n{report}"
            );
        }
    }

    #[test]
    fn observation_unknown_id() {
        assert!(verify_observation(0, 100).is_err());
        assert!(verify_observation(7, 100).is_err());
    }

    #[test]
    fn conjectures_clean_at_small_scale() {
        for id in 1..=2 {
            let report = verify_conjecture(id, 5000).unwrap();
            assert!(report.is_clean(), "conjecture {id}:\n{report}");
        }
        assert!(verify_conjecture(3, 100).is_err());
    }

    #[test]
    fn tail_bounds_clean_at_small_scale() {
        let report = verify_minor_tail_bounds(5000).unwrap();
        assert!(report.is_clean(), "{report}");
    }

    #[test]
    fn coincidence_clean_at_small_scale() {
        let report = records_coincide(10_000);
        assert!(report.is_clean(), "{report}");
    }

    #[test]
    fn atilde_lemmas_clean_at_small_scale() {
        let report = verify_atilde_lemmas(10_000);
        assert!(report.is_clean(), "{report}");
    }

    #[test]
    fn segment_offsets_match_counts() {
        for rule in [SequenceRule::ctilde(), SequenceRule::atilde(), SequenceRule::f()] {
            for seg in segment_stats(rule, 3000).unwrap() {
                assert_eq!(seg.offsets.len() as u64, seg.minor_count);
                assert!(seg.m_lo < seg.m_hi);
            }
        }
    }
}
