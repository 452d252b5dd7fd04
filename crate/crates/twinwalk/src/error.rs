use std::path::PathBuf;

/// Errors surfaced by the library and the command-line front end.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("step index {n} is not after the start index {start} of {rule}")]
    StepBeforeStart { rule: String, n: u64, start: u64 },

    #[error("index {n} is before the start index {start} of {rule}")]
    IndexBeforeStart { rule: String, n: u64, start: u64 },

    #[error("parameter m = {m} is too small; the parameterized family needs m >= 4")]
    ParamTooSmall { m: u64 },

    #[error("{rule} has no fundamental point convention")]
    NoFundamentalConvention { rule: String },

    #[error("unknown check id `{id}`")]
    UnknownCheck { id: String },

    #[error("membership needs an even N >= 6, got {n}")]
    BadMembershipArgument { n: u64 },

    #[error("witness search needs an odd prime >= 3, got {p}")]
    BadWitnessPrime { p: u64 },

    #[error("no witness for p = {p} below the search limit {limit}")]
    WitnessSearchExhausted { p: u64, limit: u64 },

    #[error("generalized walk needs an odd offset, got a = {a}")]
    WalkOffsetEven { a: i64 },

    #[error("generalized walk start {start} is invalid for offset {a}: {why}")]
    WalkStartInvalid { start: u64, a: i64, why: String },

    #[error("checkpoint schema version {found} is not supported (expected {expected})")]
    CheckpointSchema { found: u64, expected: u64 },

    #[error("checkpoint rule `{found}` does not match the requested rule `{requested}`")]
    CheckpointRuleMismatch { found: String, requested: String },

    #[error("unknown sequence family `{family}` in checkpoint")]
    CheckpointRuleUnknown { family: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("malformed checkpoint {path}: {source}")]
    CheckpointParse {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
