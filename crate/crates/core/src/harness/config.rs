//! Run configuration from a flat `key = value` file, overridden by flags.

use std::collections::BTreeMap;
use std::path::PathBuf;

use super::claims;
use super::report::Format;
use crate::distrib::{EpsilonLadder, Probe};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub eps_ladder: Option<EpsilonLadder>,
    pub probe: Option<String>,
    /// Global tolerance override.
    pub tol: Option<f64>,
    /// Per-claim overrides (`tol.<claim-id>`), taking precedence over `tol`.
    pub tol_overrides: BTreeMap<String, f64>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub parallel: bool,
    /// Record wall-clock runtimes; off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            eps_ladder: None,
            probe: None,
            tol: None,
            tol_overrides: BTreeMap::new(),
            out: None,
            format: Format::Json,
            parallel: false,
            timing: false,
        }
    }
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(Error::Config(format!("{key}: expected a boolean, got '{v}'"))),
    }
}

fn parse_tol(key: &str, v: &str) -> Result<f64> {
    match v.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(Error::Config(format!("{key}: tolerance must be a positive number, got '{v}'"))),
    }
}

impl RunConfig {
    /// Parses config text; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", n + 1)))?;
            cfg.set(k.trim(), v.trim())?;
        }
        Ok(cfg)
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "eps_ladder" => {
                self.eps_ladder = Some(EpsilonLadder::parse(value).map_err(|e| Error::Config(format!("eps_ladder: {e}")))?)
            }
            "probe" => {
                Probe::by_name(value).map_err(|e| Error::Config(e.to_string()))?;
                self.probe = Some(value.to_string());
            }
            "tol" => self.tol = Some(parse_tol(key, value)?),
            "out" => self.out = Some(PathBuf::from(value)),
            "format" => self.format = value.parse()?,
            "parallel" => self.parallel = parse_bool(key, value)?,
            "timing" => self.timing = parse_bool(key, value)?,
            _ => {
                if let Some(id) = key.strip_prefix("tol.") {
                    claims::find(id)?;
                    self.tol_overrides.insert(id.to_string(), parse_tol(key, value)?);
                } else {
                    return Err(Error::Config(format!("unknown config key '{key}'")));
                }
            }
        }
        Ok(())
    }

    pub fn tolerance_for(&self, claim: &claims::Claim) -> f64 {
        self.tol_overrides.get(claim.id).copied().or(self.tol).unwrap_or(claim.tolerance)
    }

    pub fn ladder(&self) -> EpsilonLadder {
        self.eps_ladder.clone().unwrap_or_default()
    }

    pub fn probe(&self) -> Result<Probe> {
        Probe::by_name(self.probe.as_deref().unwrap_or("gaussian"))
    }
}
