//! Gcd-driven integer recurrences, their increment structure, and twin
//! prime extraction.
//!
//! The sequences here grow by `gcd`-sized steps: from a small seed,
//! each index adds the gcd of the index (or a near neighbour) and the
//! running value. The increments are almost always 1, but the
//! exceptions follow sharp arithmetic patterns: they cluster around
//! *fundamental points* where the value sits at an exact 3/2 ratio to
//! the index, the record-sized jumps are greater members of twin prime
//! pairs, and a parameterized variant turns the pattern into a twin
//! prime extractor and primality criterion.
//!
//! The crate generates these sequences ([`sequences`]), classifies
//! their increments and scans the structural laws at scale
//! ([`analysis`]), accelerates one family from jump to jump
//! ([`fastwalk`]), extracts twin primes from parameters ([`twinrule`]),
//! and searches minimal witnesses for a least-prime-divisor partition
//! of the even numbers ([`postulate`]). Every law is checked by a
//! falsification scan returning a [`report::Report`], so a failure
//! names the index and the expectation it broke.
//!
//! The `examples/` directory is the guided tour; each example is a
//! runnable demonstration of one capability. The `twinwalk` binary
//! wraps the same library surface in subcommands for scripted use.

pub mod analysis;
pub mod arith;
pub mod cli;
pub mod fastwalk;
pub mod postulate;
pub mod report;
pub mod sequences;
pub mod twinrule;

mod error;

pub use error::{Error, Result};
