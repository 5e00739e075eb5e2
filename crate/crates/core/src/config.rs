//! Sweep configuration read from TOML.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lincode::DEFAULT_BUDGET;
use crate::modring::is_prime;

/// Exponents accepted for family sweeps.
pub const SWEEP_M_RANGE: std::ops::RangeInclusive<u32> = 4..=8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub p_list: Vec<u64>,
    pub m_list: Vec<u32>,
    #[serde(default = "default_budget")]
    pub budget: u64,
    /// A file path, or `-` for standard output.
    #[serde(default = "default_output")]
    pub output: String,
    #[serde(default)]
    pub format: Format,
    /// File listing the expected erratum keys, one per line, relative to
    /// the config file.
    #[serde(default)]
    pub expected_errata: Option<PathBuf>,
    /// Fail with the budget exit status when a weight check cannot be
    /// enumerated exhaustively.
    #[serde(default)]
    pub require_exhaustive: bool,
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

fn default_output() -> String {
    "-".into()
}

impl SweepConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text)
            .map_err(|e| Error::Config(e.to_string().trim_end().to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads and validates `path`; a relative `expected_errata` is resolved
    /// against the config file's directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let mut cfg = Self::parse(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })?;
        if let Some(rel) = &cfg.expected_errata {
            if rel.is_relative() {
                let base = path.parent().unwrap_or(Path::new("."));
                cfg.expected_errata = Some(base.join(rel));
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.p_list.is_empty() {
            return Err(Error::Config("field `p_list`: must be nonempty".into()));
        }
        for &p in &self.p_list {
            if !is_prime(p) || !matches!(p % 8, 1 | 7) {
                return Err(Error::Config(format!(
                    "field `p_list`: {p} is not a prime congruent to +-1 mod 8"
                )));
            }
        }
        if self.m_list.is_empty() {
            return Err(Error::Config("field `m_list`: must be nonempty".into()));
        }
        for &m in &self.m_list {
            if !SWEEP_M_RANGE.contains(&m) {
                return Err(Error::Config(format!(
                    "field `m_list`: {m} is outside {}..={}",
                    SWEEP_M_RANGE.start(),
                    SWEEP_M_RANGE.end()
                )));
            }
        }
        if self.budget == 0 {
            return Err(Error::Config("field `budget`: must be positive".into()));
        }
        Ok(())
    }
}
