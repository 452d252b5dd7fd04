//! Structured results for verification scans.
//!
//! Every checker returns a [`Report`] rather than a bare boolean so that
//! a falsifying scan doubles as research output: each violation carries
//! the law that failed, the index where it failed, and the expected
//! versus actual values.

use std::fmt;

/// One falsified instance of a checked law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Short identifier of the law that failed, e.g. `"segment-gap"`.
    pub rule: String,
    /// Sequence index at which the failure was observed.
    pub index: u64,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at n={}: expected {}, got {}",
            self.rule, self.index, self.expected, self.actual
        )
    }
}

/// Outcome of one verification scan.
#[derive(Debug, Clone)]
pub struct Report {
    /// What was checked, e.g. `"segment gap bound"`.
    pub label: String,
    /// Largest sequence index the scan covered.
    pub scanned_to: u64,
    pub violations: Vec<Violation>,
    /// Non-fatal findings worth surfacing (anomaly logs, summary
    /// counts). Notes never affect [`Report::is_clean`].
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(label: impl Into<String>, scanned_to: u64) -> Self {
        Report {
            label: label.into(),
            scanned_to,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn violation(
        &mut self,
        rule: impl Into<String>,
        index: u64,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        self.violations.push(Violation {
            rule: rule.into(),
            index,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Folds another report into this one. Labels are joined, violations
    /// are re-sorted by index so that merged output is deterministic
    /// regardless of the order the parts were produced in.
    pub fn merge(&mut self, other: Report) {
        if !other.label.is_empty() && other.label != self.label {
            self.label = format!("{} + {}", self.label, other.label);
        }
        self.scanned_to = self.scanned_to.max(other.scanned_to);
        self.violations.extend(other.violations);
        self.violations.sort_by(|a, b| (a.index, &a.rule).cmp(&(b.index, &b.rule)));
        self.notes.extend(other.notes);
    }
}

// Display is the one place a report is flattened to text; the command
// line front end prints it verbatim.
impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check {}: scanned to n = {}", self.label, self.scanned_to)?;
        for v in &self.violations {
            writeln!(f, "  violation {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        if self.is_clean() {
            write!(f, "  result: clean")
        } else {
            write!(f, "  result: {} violation(s)", self.violations.len())
        }
    }
}
