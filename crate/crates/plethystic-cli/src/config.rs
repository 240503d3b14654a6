//! Defaults shared by every subcommand, read from an optional key-value file.
//!
//! The file named by `PLETHYSTIC_CONFIG` holds lines `key = value`; blank
//! lines and lines starting with `#` are ignored. Command-line flags win
//! over the file.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use plethystic::verifier::Interval;

pub const CONFIG_ENV: &str = "PLETHYSTIC_CONFIG";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliConfig {
    pub degree_budget: Option<usize>,
    pub mode_range: Option<Interval>,
    pub charge_range: Option<Interval>,
    pub window: Option<Interval>,
    pub jobs: Option<usize>,
    pub format: Option<Format>,
}

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Parses `lo,hi`, optionally wrapped in brackets.
pub fn parse_interval(s: &str) -> Result<Interval, String> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let (lo, hi) = inner.split_once(',').ok_or_else(|| format!("expected lo,hi but got {s:?}"))?;
    let lo = lo.trim().parse::<i64>().map_err(|e| format!("{lo:?}: {e}"))?;
    let hi = hi.trim().parse::<i64>().map_err(|e| format!("{hi:?}: {e}"))?;
    Ok((lo, hi))
}

impl CliConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut config = CliConfig::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| ConfigError(format!("config line {}: {msg}", n + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "degree_budget" => config.degree_budget = Some(value.parse().map_err(|e| err(format!("{key}: {e}")))?),
                "mode_range" => config.mode_range = Some(parse_interval(value).map_err(err)?),
                "charge_range" => config.charge_range = Some(parse_interval(value).map_err(err)?),
                "window" => config.window = Some(parse_interval(value).map_err(err)?),
                "jobs" => config.jobs = Some(value.parse().map_err(|e| err(format!("{key}: {e}")))?),
                "format" => {
                    config.format = Some(
                        <Format as clap::ValueEnum>::from_str(value, true).map_err(|e| err(format!("{key}: {e}")))?,
                    )
                }
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The file named by the environment, or empty defaults.
    pub fn from_env() -> Result<Self, ConfigError> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) => Self::load(Path::new(&path)),
            None => Ok(CliConfig::default()),
        }
    }

    fn validate(&self) -> Result<(), ConfigError> {
        for (name, r) in [("mode_range", self.mode_range), ("charge_range", self.charge_range), ("window", self.window)] {
            if let Some((lo, hi)) = r {
                if lo > hi + 1 {
                    return Err(ConfigError(format!("{name} [{lo},{hi}] is not an interval")));
                }
            }
        }
        if self.jobs == Some(0) {
            return Err(ConfigError("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

impl FromStr for CliConfig {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        Self::parse(s)
    }
}
