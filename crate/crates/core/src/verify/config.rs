//! Plain `key = value` configuration for suite runs.

use std::collections::BTreeMap;

use crate::error::SuiteError;

/// A deliberate perturbation used as a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Drop one summand of the degree-30 relation.
    RelationTerm(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Degree bound for the homology models.
    pub max_degree: u32,
    /// Total-degree truncation for formal group computations.
    pub truncation: u32,
    pub parallel: bool,
    pub fault: Option<Fault>,
    /// Record elapsed times; off gives byte-stable reports.
    pub timing: bool,
    pub seed: u64,
    /// Number of random operation words in the rewriting corpus.
    pub corpus: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { max_degree: 40, truncation: 12, parallel: false, fault: None, timing: true, seed: 20, corpus: 500 }
    }
}

fn parse_bool(key: &str, v: &str) -> Result<bool, SuiteError> {
    match v {
        "true" | "on" | "yes" | "1" => Ok(true),
        "false" | "off" | "no" | "0" => Ok(false),
        _ => Err(SuiteError::Config(format!("{key}: expected a boolean, got '{v}'"))),
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, SuiteError> {
    v.parse().map_err(|_| SuiteError::Config(format!("{key}: expected a number, got '{v}'")))
}

impl VerifyConfig {
    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, SuiteError> {
        let mut cfg = Self::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| SuiteError::Config(format!("line {}: expected key = value", n + 1)))?;
            cfg.set(k.trim(), v.trim())?;
        }
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), SuiteError> {
        match key {
            "max_degree" => self.max_degree = parse_num(key, value)?,
            "truncation" => self.truncation = parse_num(key, value)?,
            "parallel" => self.parallel = parse_bool(key, value)?,
            "timing" => self.timing = parse_bool(key, value)?,
            "seed" => self.seed = parse_num(key, value)?,
            "corpus" => self.corpus = parse_num(key, value)?,
            "fault" => {
                self.fault = match value.split_once(':') {
                    Some(("relation-term", i)) => Some(Fault::RelationTerm(parse_num(key, i)?)),
                    _ if value == "none" => None,
                    _ => return Err(SuiteError::Config(format!("fault: unknown fault '{value}'"))),
                }
            }
            _ => return Err(SuiteError::Config(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    /// The configuration as echoed in reports.
    pub fn echo(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("max_degree".into(), self.max_degree.to_string());
        m.insert("truncation".into(), self.truncation.to_string());
        m.insert("parallel".into(), self.parallel.to_string());
        m.insert("seed".into(), self.seed.to_string());
        m.insert("corpus".into(), self.corpus.to_string());
        let fault = match self.fault {
            None => "none".to_string(),
            Some(Fault::RelationTerm(i)) => format!("relation-term:{i}"),
        };
        m.insert("fault".into(), fault);
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys() {
        let cfg = VerifyConfig::parse("# run\nmax_degree = 48\nparallel = on\nfault = relation-term:3\n").unwrap();
        assert_eq!(cfg.max_degree, 48);
        assert!(cfg.parallel);
        assert_eq!(cfg.fault, Some(Fault::RelationTerm(3)));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(matches!(VerifyConfig::parse("speed = 3"), Err(SuiteError::Config(_))));
        assert!(matches!(VerifyConfig::parse("max_degree = lots"), Err(SuiteError::Config(_))));
    }
}
