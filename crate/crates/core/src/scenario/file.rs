//! Line-oriented `key = value` scenario files.
//!
//! ```text
//! # all classes at 25 %, tugs charge slowly instead
//! adoption.* = 0.25
//! mode.Pusher/Tug = slow
//! slow.t1_h = 2.5
//! aggregation = sat
//! ```
//!
//! Recognised keys: `adoption.<class>` (or `adoption.*` for every class in
//! the dataset), `mode.<class>`, `sessions.<class>`, `slow.rated_kw`,
//! `slow.t1_h`, `slow.t2_h`, the same three for `rapid.`, and `aggregation`.
//! Anything else is rejected.

use std::collections::BTreeMap;

use thiserror::Error;

use super::{default_policies, ChargeMode, ChargePolicy, ScenarioConfig, ScenarioError};
use crate::charging::{ChargingError, ChargingProfile};
use crate::profiles::Aggregation;

#[derive(Debug, Error, PartialEq)]
pub enum ScenarioFileError {
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },
    #[error("line {line}: bad value for `{key}`: {reason}")]
    BadValue {
        line: usize,
        key: String,
        reason: String,
    },
    #[error("invalid {mode} charging profile: {source}")]
    Profile {
        mode: ChargeMode,
        #[source]
        source: ChargingError,
    },
}

/// Parsed scenario file, not yet bound to the classes of a dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioFile {
    pub default_adoption: Option<f64>,
    pub adoption: BTreeMap<String, f64>,
    pub modes: BTreeMap<String, ChargeMode>,
    pub sessions: BTreeMap<String, f64>,
    pub slow: ChargingProfile,
    pub rapid: ChargingProfile,
    pub aggregation: Aggregation,
}

impl Default for ScenarioFile {
    fn default() -> Self {
        ScenarioFile {
            default_adoption: None,
            adoption: BTreeMap::new(),
            modes: BTreeMap::new(),
            sessions: BTreeMap::new(),
            slow: ChargingProfile::slow(),
            rapid: ChargingProfile::rapid(),
            aggregation: Aggregation::AllDays,
        }
    }
}

fn number(line: usize, key: &str, value: &str) -> Result<f64, ScenarioFileError> {
    value
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| ScenarioFileError::BadValue {
            line,
            key: key.to_string(),
            reason: format!("`{value}` is not a finite number"),
        })
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, ScenarioFileError> {
        let mut out = ScenarioFile::default();
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or(ScenarioFileError::Syntax { line })?;
            let (key, value) = (key.trim(), value.trim());
            if key.is_empty() || value.is_empty() {
                return Err(ScenarioFileError::Syntax { line });
            }
            if seen.insert(key.to_string(), line).is_some() {
                return Err(ScenarioFileError::DuplicateKey {
                    line,
                    key: key.to_string(),
                });
            }

            let bad = |reason: String| ScenarioFileError::BadValue {
                line,
                key: key.to_string(),
                reason,
            };

            match key {
                "aggregation" => {
                    out.aggregation = value.parse().map_err(|e| bad(format!("{e}")))?;
                }
                "slow.rated_kw" => out.slow.rated_power_kw = number(line, key, value)?,
                "slow.t1_h" => out.slow.ramp_start_h = number(line, key, value)?,
                "slow.t2_h" => out.slow.ramp_end_h = number(line, key, value)?,
                "rapid.rated_kw" => out.rapid.rated_power_kw = number(line, key, value)?,
                "rapid.t1_h" => out.rapid.ramp_start_h = number(line, key, value)?,
                "rapid.t2_h" => out.rapid.ramp_end_h = number(line, key, value)?,
                _ => {
                    let (prefix, class) = match key.split_once('.') {
                        Some((p, c)) if !c.trim().is_empty() => (p, c.trim()),
                        _ => {
                            return Err(ScenarioFileError::UnknownKey {
                                line,
                                key: key.to_string(),
                            })
                        }
                    };
                    match prefix {
                        "adoption" => {
                            let f = number(line, key, value)?;
                            if !(0.0..=1.0).contains(&f) {
                                return Err(bad(format!("fraction {f} outside [0, 1]")));
                            }
                            if class == "*" {
                                out.default_adoption = Some(f);
                            } else {
                                out.adoption.insert(class.to_string(), f);
                            }
                        }
                        "mode" => {
                            out.modes
                                .insert(class.to_string(), value.parse().map_err(bad)?);
                        }
                        "sessions" => {
                            let s = number(line, key, value)?;
                            if s < 0.0 {
                                return Err(bad(format!("negative sessions per arrival {s}")));
                            }
                            out.sessions.insert(class.to_string(), s);
                        }
                        _ => {
                            return Err(ScenarioFileError::UnknownKey {
                                line,
                                key: key.to_string(),
                            })
                        }
                    }
                }
            }
        }

        out.slow.validate().map_err(|source| ScenarioFileError::Profile {
            mode: ChargeMode::Slow,
            source,
        })?;
        out.rapid.validate().map_err(|source| ScenarioFileError::Profile {
            mode: ChargeMode::Rapid,
            source,
        })?;
        Ok(out)
    }

    /// Every class a `adoption.*` line would expand to, plus explicit ones.
    fn adopted_classes<'a>(&'a self, available: &[&'a str]) -> BTreeMap<String, f64> {
        let mut adoption = BTreeMap::new();
        if let Some(f) = self.default_adoption {
            for class in available {
                adoption.insert(class.to_string(), f);
            }
        }
        for (class, &f) in &self.adoption {
            adoption.insert(class.clone(), f);
        }
        adoption
    }

    /// Binds the file to the classes present in a dataset. Classes without a
    /// `mode.` line fall back to the default policy for that class.
    pub fn resolve(&self, available: &[&str]) -> Result<ScenarioConfig, ScenarioError> {
        let defaults = default_policies();
        let adoption = self.adopted_classes(available);
        let mut policies = BTreeMap::new();
        for class in adoption.keys() {
            let mode = match self.modes.get(class) {
                Some(&m) => m,
                None => defaults
                    .get(class)
                    .map(|p| p.mode)
                    .ok_or_else(|| ScenarioError::MissingPolicy(class.clone()))?,
            };
            let mut policy = ChargePolicy::new(class, mode);
            policy.profile = match mode {
                ChargeMode::Slow => self.slow,
                ChargeMode::Rapid => self.rapid,
            };
            if let Some(&s) = self.sessions.get(class) {
                policy.sessions_per_arrival = s;
            }
            policies.insert(class.clone(), policy);
        }
        let cfg = ScenarioConfig {
            adoption,
            policies,
            aggregation: self.aggregation,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vessel_class::*;
    use chrono::Weekday;

    #[test]
    fn wildcard_and_overrides() {
        let text = "\
# comment
adoption.* = 0.5
adoption.Yacht = 1.0   # trailing comment
mode.Pusher/Tug = slow
sessions.Trawler = 0.4
slow.t1_h = 2
aggregation = sat
";
        let file = ScenarioFile::parse(text).unwrap();
        assert_eq!(file.aggregation, Aggregation::Weekday(Weekday::Sat));
        let cfg = file.resolve(&ALL).unwrap();
        assert_eq!(cfg.adoption.len(), 5);
        assert_eq!(cfg.adoption[YACHT], 1.0);
        assert_eq!(cfg.adoption[TRAWLER], 0.5);
        assert_eq!(cfg.policies[PUSHER_TUG].mode, ChargeMode::Slow);
        assert_eq!(cfg.policies[PUSHER_TUG].profile.ramp_start_h, 2.0);
        assert_eq!(cfg.policies[TRAWLER].sessions_per_arrival, 0.4);
        assert_eq!(cfg.policies[SAILING_SHIP].profile.ramp_end_h, 4.0);
    }

    #[test]
    fn explicit_class_only() {
        let cfg = ScenarioFile::parse("adoption.Trawler = 0.1\n")
            .unwrap()
            .resolve(&ALL)
            .unwrap();
        assert_eq!(cfg.adoption.keys().collect::<Vec<_>>(), [TRAWLER]);
    }

    #[test]
    fn unknown_keys_rejected() {
        for text in ["colour = red", "adoption = 1", "speed.Yacht = 3", "slow.t3_h = 1"] {
            assert!(
                matches!(ScenarioFile::parse(text), Err(ScenarioFileError::UnknownKey { line: 1, .. })),
                "{text}"
            );
        }
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(
            ScenarioFile::parse("\nadoption.Yacht 1.0"),
            Err(ScenarioFileError::Syntax { line: 2 })
        );
        assert!(matches!(
            ScenarioFile::parse("adoption.Yacht = 1.2"),
            Err(ScenarioFileError::BadValue { .. })
        ));
        assert!(matches!(
            ScenarioFile::parse("adoption.Yacht = lots"),
            Err(ScenarioFileError::BadValue { .. })
        ));
        assert!(matches!(
            ScenarioFile::parse("mode.Yacht = warp"),
            Err(ScenarioFileError::BadValue { .. })
        ));
        assert!(matches!(
            ScenarioFile::parse("aggregation = someday"),
            Err(ScenarioFileError::BadValue { .. })
        ));
        assert!(matches!(
            ScenarioFile::parse("adoption.Yacht = 1\nadoption.Yacht = 0.5"),
            Err(ScenarioFileError::DuplicateKey { line: 2, .. })
        ));
        assert!(matches!(
            ScenarioFile::parse("slow.t1_h = 5"),
            Err(ScenarioFileError::Profile { mode: ChargeMode::Slow, .. })
        ));
    }

    #[test]
    fn class_without_policy() {
        let file = ScenarioFile::parse("adoption.* = 1").unwrap();
        assert_eq!(
            file.resolve(&["Kayak"]),
            Err(ScenarioError::MissingPolicy("Kayak".into()))
        );
        let file = ScenarioFile::parse("adoption.* = 1\nmode.Kayak = slow").unwrap();
        assert!(file.resolve(&["Kayak"]).is_ok());
    }
}
