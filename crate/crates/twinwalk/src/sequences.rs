//! The gcd-driven recurrence families and their increment event streams.
//!
//! Each family starts from a fixed `(index, value)` seed and advances by
//! adding a gcd whose arguments depend on the parity of the index. The
//! interesting structure lives in the increments: most steps add exactly
//! 1 ("trivial"), and the rare larger jumps carry prime and twin-prime
//! information. [`generate`] turns a rule into a stream of classified
//! [`IncrementEvent`]s; classification itself is pluggable via
//! [`Classifier`] so that the conventions live in the `analysis` module.

use serde::Serialize;
use std::fmt;

use crate::arith::gcd;
use crate::error::{Error, Result};

/// Which parity of the index `n` couples to the raw modulus `n` in the
/// parameterized family; the other parity uses `n - 2` (read as 2 at
/// the degenerate first step `n = 2`).
///
/// Both conventions are twin-prime extractors, but they extract
/// *different* pairs from the same parameter, and only one of them
/// doubles as an exact primality criterion. The default is
/// [`ParamParity::OddN`], the convention that shares the base
/// sequence's parity coupling and reproduces the documented
/// extractions; [`ParamParity::EvenN`] mirrors it and is the
/// convention under which the all-trivial criterion agrees with twin
/// primality without exception (see the extraction module).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ParamParity {
    /// Even `n` uses `gcd(n, prev)`, odd `n` uses `gcd(n - 2, prev)`.
    EvenN,
    /// Odd `n` uses `gcd(n, prev)`, even `n` uses `gcd(n - 2, prev)`,
    /// with the `n = 2` argument read as 2.
    #[default]
    OddN,
}

/// Identifier of one recurrence family, including any parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleId {
    /// Start (1, 2); odd `n` adds `gcd(n, prev)`, even `n` adds
    /// `gcd(n - 2, prev)`.
    CTilde,
    /// Start (1, 2); the parity-mirror of [`RuleId::CTilde`]: even `n`
    /// adds `gcd(n, prev)`, odd `n` adds `gcd(n - 2, prev)`.
    C,
    /// Start (1, 2); even `n` adds `gcd(n, prev + 2)`, odd `n` adds
    /// `gcd(n, prev)`.
    F,
    /// Start (1, 2); even `n` adds `gcd(n, prev + 2)`, odd `n` adds
    /// `gcd(n - 2, prev + 2)`.
    G,
    /// Start (1, 2); even `n` adds `gcd(n - 2, prev + 2)`, odd `n` adds
    /// `gcd(n, prev + 2)`.
    H,
    /// Start (1, 2); adds `gcd(n, prev + 2)` at even `n` and
    /// `gcd(n, prev - 2)` at odd `n`. A zero second argument is legal
    /// and follows the `gcd(0, x) = x` convention.
    I,
    /// Start (22, 40); for `n >= 23` the value grows by 1 while
    /// `gcd(n - 2, prev)` (even `n`) or `gcd(n, prev)` (odd `n`) stays 1,
    /// and jumps to `2 * (n - 2)` otherwise.
    ATilde,
    /// Start (1, m) for a parameter `m >= 4`; steps like
    /// [`RuleId::CTilde`] under the default parity, with the coupling
    /// selectable via [`ParamParity`].
    CTildeParam { m: u64, parity: ParamParity },
}

impl RuleId {
    pub fn start_index(self) -> u64 {
        match self {
            RuleId::ATilde => 22,
            _ => 1,
        }
    }

    pub fn start_value(self) -> u64 {
        match self {
            RuleId::ATilde => 40,
            RuleId::CTildeParam { m, .. } => m,
            _ => 2,
        }
    }

    /// One step of the recurrence. Assumes `n > start_index`.
    fn step_unchecked(self, n: u64, prev: u64) -> u64 {
        let even = n % 2 == 0;
        match self {
            RuleId::CTilde => {
                if even {
                    prev + gcd(n - 2, prev)
                } else {
                    prev + gcd(n, prev)
                }
            }
            RuleId::C => {
                if even {
                    prev + gcd(n, prev)
                } else {
                    prev + gcd(n - 2, prev)
                }
            }
            RuleId::F => {
                if even {
                    prev + gcd(n, prev + 2)
                } else {
                    prev + gcd(n, prev)
                }
            }
            RuleId::G => {
                if even {
                    prev + gcd(n, prev + 2)
                } else {
                    prev + gcd(n - 2, prev + 2)
                }
            }
            RuleId::H => {
                if even {
                    prev + gcd(n - 2, prev + 2)
                } else {
                    prev + gcd(n, prev + 2)
                }
            }
            RuleId::I => {
                if even {
                    prev + gcd(n, prev + 2)
                } else {
                    prev + gcd(n, prev - 2)
                }
            }
            RuleId::ATilde => {
                let g = if even { gcd(n - 2, prev) } else { gcd(n, prev) };
                if g == 1 {
                    prev + 1
                } else {
                    2 * (n - 2)
                }
            }
            RuleId::CTildeParam { parity, .. } => {
                let use_n = match parity {
                    ParamParity::EvenN => even,
                    ParamParity::OddN => !even,
                };
                if use_n {
                    prev + gcd(n, prev)
                } else {
                    prev + gcd(if n == 2 { 2 } else { n - 2 }, prev)
                }
            }
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::CTilde => write!(f, "ctilde"),
            RuleId::C => write!(f, "c"),
            RuleId::F => write!(f, "f"),
            RuleId::G => write!(f, "g"),
            RuleId::H => write!(f, "h"),
            RuleId::I => write!(f, "i"),
            RuleId::ATilde => write!(f, "atilde"),
            RuleId::CTildeParam { m, parity } => match parity {
                ParamParity::OddN => write!(f, "ctilde-param(m={m})"),
                ParamParity::EvenN => write!(f, "ctilde-param(m={m}, parity=even-n)"),
            },
        }
    }
}

/// A recurrence rule ready to run: identifier plus its seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequenceRule {
    id: RuleId,
}

impl SequenceRule {
    pub fn ctilde() -> Self {
        SequenceRule { id: RuleId::CTilde }
    }

    pub fn c() -> Self {
        SequenceRule { id: RuleId::C }
    }

    pub fn f() -> Self {
        SequenceRule { id: RuleId::F }
    }

    pub fn g() -> Self {
        SequenceRule { id: RuleId::G }
    }

    pub fn h() -> Self {
        SequenceRule { id: RuleId::H }
    }

    pub fn i() -> Self {
        SequenceRule { id: RuleId::I }
    }

    pub fn atilde() -> Self {
        SequenceRule { id: RuleId::ATilde }
    }

    /// Parameterized family under the shipped default parity.
    pub fn ctilde_param(m: u64) -> Result<Self> {
        Self::ctilde_param_with(m, ParamParity::default())
    }

    pub fn ctilde_param_with(m: u64, parity: ParamParity) -> Result<Self> {
        if m < 4 {
            return Err(Error::ParamTooSmall { m });
        }
        Ok(SequenceRule {
            id: RuleId::CTildeParam { m, parity },
        })
    }

    pub fn id(&self) -> RuleId {
        self.id
    }

    pub fn start_index(&self) -> u64 {
        self.id.start_index()
    }

    pub fn start_value(&self) -> u64 {
        self.id.start_value()
    }

    /// One step of the recurrence: the value at index `n` given the value
    /// at `n - 1`. Rejects indices at or before the seed.
    pub fn step(&self, n: u64, prev: u64) -> Result<u64> {
        let start = self.start_index();
        if n <= start {
            return Err(Error::StepBeforeStart {
                rule: self.id.to_string(),
                n,
                start,
            });
        }
        Ok(self.id.step_unchecked(n, prev))
    }
}

impl fmt::Display for SequenceRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.id.fmt(f)
    }
}

/// Class of one increment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IncrementClass {
    /// The step added exactly 1.
    Trivial,
    /// A jump that does not qualify as main.
    Minor,
    /// A jump arriving right after a fundamental point, with the
    /// magnitude the family's convention demands.
    Main,
}

impl fmt::Display for IncrementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IncrementClass::Trivial => write!(f, "trivial"),
            IncrementClass::Minor => write!(f, "minor"),
            IncrementClass::Main => write!(f, "main"),
        }
    }
}

/// One step of a sequence together with its increment and class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IncrementEvent {
    pub n: u64,
    pub value: u64,
    pub delta: u64,
    pub class: IncrementClass,
}

/// Assigns a class to each increment as the stream advances.
///
/// Implementations may keep rolling state (for example the most recent
/// fundamental point); the stream feeds them every event in order.
pub trait Classifier {
    fn classify(&mut self, n: u64, value: u64, delta: u64, prev: u64) -> IncrementClass;
}

/// Classifier that never sees a jump as more than minor. Useful where
/// only values or raw deltas matter.
pub struct UnclassifiedMinor;

impl Classifier for UnclassifiedMinor {
    fn classify(&mut self, _n: u64, _value: u64, delta: u64, _prev: u64) -> IncrementClass {
        if delta == 1 {
            IncrementClass::Trivial
        } else {
            IncrementClass::Minor
        }
    }
}

/// Iterator over classified increment events of one rule.
pub struct EventStream<C> {
    rule: SequenceRule,
    classifier: C,
    n: u64,
    value: u64,
    n_max: u64,
}

impl<C: Classifier> EventStream<C> {
    /// Stream of events at indices `start_index + 1 ..= n_max`.
    pub fn new(rule: SequenceRule, n_max: u64, classifier: C) -> Self {
        EventStream {
            rule,
            classifier,
            n: rule.start_index(),
            value: rule.start_value(),
            n_max,
        }
    }

    /// Resumes a stream mid-sequence: `value` is the sequence value at
    /// index `n`, and the classifier must carry whatever rolling state it
    /// had at that point.
    pub fn resume(rule: SequenceRule, n: u64, value: u64, n_max: u64, classifier: C) -> Self {
        EventStream {
            rule,
            classifier,
            n,
            value,
            n_max,
        }
    }

    pub fn rule(&self) -> SequenceRule {
        self.rule
    }

    /// Index and value of the most recently produced position (the seed
    /// before any call to `next`).
    pub fn position(&self) -> (u64, u64) {
        (self.n, self.value)
    }

    pub fn classifier(&self) -> &C {
        &self.classifier
    }

    pub fn into_classifier(self) -> C {
        self.classifier
    }
}

impl<C: Classifier> Iterator for EventStream<C> {
    type Item = IncrementEvent;

    fn next(&mut self) -> Option<IncrementEvent> {
        if self.n >= self.n_max {
            return None;
        }
        self.n += 1;
        let next = self.rule.id().step_unchecked(self.n, self.value);
        let delta = next
            .checked_sub(self.value)
            .filter(|&d| d >= 1)
            .unwrap_or_else(|| {
                panic!(
                    "{} failed to grow at n = {}: {} -> {}",
                    self.rule, self.n, self.value, next
                )
            });
        let class = self.classifier.classify(self.n, next, delta, self.value);
        self.value = next;
        Some(IncrementEvent {
            n: self.n,
            value: next,
            delta,
            class,
        })
    }
}

/// Classified event stream for `rule` up to and including `n_max`,
/// using the standard per-family classification conventions.
pub fn generate(
    rule: SequenceRule,
    n_max: u64,
) -> EventStream<crate::analysis::StandardClassifier> {
    EventStream::new(rule, n_max, crate::analysis::StandardClassifier::new(rule))
}

/// The raw `(index, value)` pairs of `rule` from its seed up to `n_max`,
/// seed included.
pub fn values(rule: SequenceRule, n_max: u64) -> impl Iterator<Item = (u64, u64)> {
    let seed = (rule.start_index() <= n_max).then(|| (rule.start_index(), rule.start_value()));
    seed.into_iter()
        .chain(EventStream::new(rule, n_max, UnclassifiedMinor).map(|e| (e.n, e.value)))
}

/// The value of `rule` at index `n`. Errors for indices before the seed.
pub fn value_at(rule: SequenceRule, n: u64) -> Result<u64> {
    let start = rule.start_index();
    if n < start {
        return Err(Error::IndexBeforeStart {
            rule: rule.to_string(),
            n,
            start,
        });
    }
    let mut value = rule.start_value();
    for k in start + 1..=n {
        value = rule.id().step_unchecked(k, value);
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_pinned_values() {
        let ctilde = SequenceRule::ctilde();
        assert_eq!(ctilde.step(2, 2).unwrap(), 4); // gcd(0, 2) = 2
        assert_eq!(ctilde.step(8, 9).unwrap(), 12);
        let atilde = SequenceRule::atilde();
        assert_eq!(atilde.step(23, 40).unwrap(), 41);
        assert_eq!(atilde.step(40, 57).unwrap(), 76); // gcd(38, 57) = 19 forces the jump
    }

    #[test]
    fn step_rejects_seed_indices() {
        assert!(SequenceRule::ctilde().step(1, 2).is_err());
        assert!(SequenceRule::atilde().step(22, 40).is_err());
        assert!(SequenceRule::atilde().step(5, 40).is_err());
    }

    #[test]
    fn ctilde_prefix() {
        let got: Vec<u64> = values(SequenceRule::ctilde(), 9).map(|(_, v)| v).collect();
        assert_eq!(got, vec![2, 4, 5, 6, 7, 8, 9, 12, 15]);
    }

    #[test]
    fn value_at_pinned_values() {
        assert_eq!(value_at(SequenceRule::ctilde(), 7).unwrap(), 9);
        assert_eq!(value_at(SequenceRule::ctilde(), 27).unwrap(), 39);
        assert_eq!(value_at(SequenceRule::atilde(), 22).unwrap(), 40);
        assert_eq!(value_at(SequenceRule::atilde(), 87).unwrap(), 129);
        assert_eq!(value_at(SequenceRule::atilde(), 88).unwrap(), 172);
        assert!(value_at(SequenceRule::atilde(), 21).is_err());
    }

    #[test]
    fn atilde_first_jumps() {
        let nontrivial: Vec<(u64, u64, u64)> = generate(SequenceRule::atilde(), 100)
            .filter(|e| e.delta > 1)
            .map(|e| (e.n, e.value, e.delta))
            .collect();
        assert_eq!(
            nontrivial,
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
    fn param_family_validates_m() {
        assert!(SequenceRule::ctilde_param(3).is_err());
        assert!(SequenceRule::ctilde_param(4).is_ok());
    }

    #[test]
    fn param_family_parities_differ() {
        // m = 9 separates the conventions: the default parity stays
        // trivial through n = 6, the mirrored parity jumps at n = 5
        // via gcd(3, 12) = 3.
        let default_rule = SequenceRule::ctilde_param(9).unwrap();
        assert!(generate(default_rule, 6).all(|e| e.delta == 1));
        let mirrored = SequenceRule::ctilde_param_with(9, ParamParity::EvenN).unwrap();
        let first = generate(mirrored, 6).find(|e| e.delta > 1).unwrap();
        assert_eq!((first.n, first.delta), (5, 3));
    }

    #[test]
    fn param_family_first_step_reads_two() {
        // Under the default parity the degenerate n = 2 step uses
        // gcd(2, m), not gcd(0, m) = m: for m = 6 the delta is 2.
        let rule = SequenceRule::ctilde_param(6).unwrap();
        let first = generate(rule, 2).next().unwrap();
        assert_eq!((first.n, first.value, first.delta), (2, 8, 2));
    }

    #[test]
    fn values_include_seed_and_respect_n_max() {
        let vals: Vec<(u64, u64)> = values(SequenceRule::atilde(), 24).collect();
        assert_eq!(vals, vec![(22, 40), (23, 41), (24, 42)]);
        assert_eq!(values(SequenceRule::atilde(), 21).count(), 0);
        assert_eq!(values(SequenceRule::ctilde(), 1).count(), 1);
    }

    #[test]
    fn generate_empty_at_or_below_start() {
        assert_eq!(generate(SequenceRule::ctilde(), 1).count(), 0);
        assert_eq!(generate(SequenceRule::atilde(), 22).count(), 0);
    }

    #[test]
    fn ctilde_value_parity_tracks_index() {
        let mut n_checked = 0u64;
        for e in generate(SequenceRule::ctilde(), 2000) {
            assert_eq!(e.value % 2, e.n % 2, "parity broke at n = {}", e.n);
            n_checked += 1;
        }
        assert_eq!(n_checked, 1999);
    }
}
