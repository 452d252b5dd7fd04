//! Save and resume long generation runs.
//!
//! A checkpoint freezes everything a stream needs to continue exactly
//! where it stopped: the rule, the position, the running record
//! maximum, and the classifier's memory of the most recent fundamental
//! point. Resuming from a checkpoint and concatenating the output onto
//! the earlier run's output reproduces the uninterrupted run byte for
//! byte.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::{ParamParity, RuleId, SequenceRule};

/// Bump on any incompatible change to the checkpoint layout. Loading
/// refuses other versions outright instead of guessing at field
/// meanings.
pub const SCHEMA_VERSION: u64 = 1;

/// Serializable rule descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleSpec {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<String>,
}

impl RuleSpec {
    pub fn from_rule(rule: SequenceRule) -> Self {
        let (family, m, parity) = match rule.id() {
            RuleId::CTilde => ("ctilde", None, None),
            RuleId::C => ("c", None, None),
            RuleId::F => ("f", None, None),
            RuleId::G => ("g", None, None),
            RuleId::H => ("h", None, None),
            RuleId::I => ("i", None, None),
            RuleId::ATilde => ("atilde", None, None),
            RuleId::CTildeParam { m, parity } => (
                "ctilde-param",
                Some(m),
                Some(match parity {
                    ParamParity::EvenN => "even-n",
                    ParamParity::OddN => "odd-n",
                }),
            ),
        };
        RuleSpec {
            family: family.to_string(),
            m,
            parity: parity.map(str::to_string),
        }
    }

    pub fn to_rule(&self) -> Result<SequenceRule> {
        let unknown = || Error::CheckpointRuleUnknown {
            family: self.family.clone(),
        };
        match self.family.as_str() {
            "ctilde" => Ok(SequenceRule::ctilde()),
            "c" => Ok(SequenceRule::c()),
            "f" => Ok(SequenceRule::f()),
            "g" => Ok(SequenceRule::g()),
            "h" => Ok(SequenceRule::h()),
            "i" => Ok(SequenceRule::i()),
            "atilde" => Ok(SequenceRule::atilde()),
            "ctilde-param" => {
                let m = self.m.ok_or_else(unknown)?;
                let parity = match self.parity.as_deref() {
                    None => ParamParity::default(),
                    Some("even-n") => ParamParity::EvenN,
                    Some("odd-n") => ParamParity::OddN,
                    Some(_) => return Err(unknown()),
                };
                SequenceRule::ctilde_param_with(m, parity)
            }
            _ => Err(unknown()),
        }
    }
}

/// Frozen stream position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub schema_version: u64,
    pub rule: RuleSpec,
    /// Last index already emitted.
    pub n: u64,
    /// Value at that index.
    pub value: u64,
    /// Largest increment seen so far, for record streams.
    pub record_max: u64,
    /// Most recent fundamental point at or before `n`, if any.
    pub last_fundamental: Option<u64>,
}

impl Checkpoint {
    pub fn capture(
        rule: SequenceRule,
        n: u64,
        value: u64,
        record_max: u64,
        last_fundamental: Option<u64>,
    ) -> Self {
        Checkpoint {
            schema_version: SCHEMA_VERSION,
            rule: RuleSpec::from_rule(rule),
            n,
            value,
            record_max,
            last_fundamental,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("checkpoint serializes")
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json() + "\n").map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<Checkpoint> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let raw: serde_json::Value =
            serde_json::from_str(&text).map_err(|source| Error::CheckpointParse {
                path: path.to_path_buf(),
                source,
            })?;
        // Check the version before trusting any other field.
        let found = raw
            .get("schema_version")
            .and_then(serde_json::Value::as_u64)
            .unwrap_or(0);
        if found != SCHEMA_VERSION {
            return Err(Error::CheckpointSchema {
                found,
                expected: SCHEMA_VERSION,
            });
        }
        serde_json::from_value(raw).map_err(|source| Error::CheckpointParse {
            path: path.to_path_buf(),
            source,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_spec_round_trips() {
        let rules = [
            SequenceRule::ctilde(),
            SequenceRule::c(),
            SequenceRule::f(),
            SequenceRule::g(),
            SequenceRule::h(),
            SequenceRule::i(),
            SequenceRule::atilde(),
            SequenceRule::ctilde_param(577).unwrap(),
            SequenceRule::ctilde_param_with(13, ParamParity::OddN).unwrap(),
        ];
        for rule in rules {
            let spec = RuleSpec::from_rule(rule);
            assert_eq!(spec.to_rule().unwrap(), rule);
        }
    }

    #[test]
    fn rule_spec_rejects_unknown_family() {
        let spec = RuleSpec {
            family: "quux".into(),
            m: None,
            parity: None,
        };
        assert!(spec.to_rule().is_err());
    }

    #[test]
    fn checkpoint_file_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("walk.ckpt");
        let cp = Checkpoint::capture(SequenceRule::ctilde(), 12345, 18519, 31, Some(12339));
        cp.save(&path).unwrap();
        assert_eq!(Checkpoint::load(&path).unwrap(), cp);
    }

    #[test]
    fn load_rejects_other_schema_versions() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("walk.ckpt");
        std::fs::write(&path, "{\"schema_version\": 2, \"surprise\": true}").unwrap();
        match Checkpoint::load(&path) {
            Err(Error::CheckpointSchema { found: 2, expected: 1 }) => {}
            other => panic!("expected schema rejection, got {other:?}"),
        }
        std::fs::write(&path, "{\"n\": 5}").unwrap();
        assert!(matches!(
            Checkpoint::load(&path),
            Err(Error::CheckpointSchema { found: 0, .. })
        ));
        std::fs::write(&path, "not json").unwrap();
        assert!(matches!(
            Checkpoint::load(&path),
            Err(Error::CheckpointParse { .. })
        ));
    }
}
