//! Coefficient rings for formal group laws, presented as quotients of
//! polynomial rings over ℚ together with the lattice their integral
//! elements live in.

use std::sync::Arc;

use crate::algebra::{Generator, PolyRing, Polynomial, Q};
use crate::error::FglError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    /// The ℤ-span of the standard monomials; integrality is checked.
    Integral,
    /// A rational presentation; integrality is not meaningful.
    Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientRing {
    name: String,
    ring: Arc<PolyRing<Q>>,
    lattice: Lattice,
}

/// A ring together with the text of a logarithm over it.
#[derive(Clone, Debug)]
pub struct FglConfig {
    pub ring: Arc<CoefficientRing>,
    pub log: String,
}

impl CoefficientRing {
    /// Checks that 2 is not a zero divisor: every relation is an integral
    /// rewrite of a monic monomial, so the quotient is a free ℤ-module.
    pub fn new(name: impl Into<String>, ring: PolyRing<Q>, lattice: Lattice) -> Result<Self, FglError> {
        if lattice == Lattice::Integral && ring.relations().iter().any(|r| !r.replacement.is_integral()) {
            return Err(FglError::Config { line: 0, msg: "relations must have integral coefficients".into() });
        }
        Ok(Self { name: name.into(), ring: Arc::new(ring), lattice })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<PolyRing<Q>> {
        &self.ring
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn is_integral(&self, p: &Polynomial<usize, Q>) -> bool {
        self.lattice == Lattice::Rational || p.is_integral()
    }

    pub fn display(&self, p: &Polynomial<usize, Q>) -> String {
        self.ring.fmt_poly(p)
    }
}

impl FglConfig {
    /// Built-in presets: `appendix-z-v3`, `additive-z`, `lazard-q` and `lazard-q:<k>`.
    pub fn preset(name: &str) -> Result<Self, FglError> {
        match name {
            "appendix-z-v3" => {
                Self::parse("name appendix-z-v3\ngen v3 deg 14\nrelation v3^2 = 0\nlog x + 1/2 v3 x^8\n")
            }
            "additive-z" => Self::parse("name additive-z\nlog x\n"),
            _ => {
                let k = match name.strip_prefix("lazard-q") {
                    Some("") => 4,
                    Some(rest) => rest
                        .strip_prefix(':')
                        .and_then(|k| k.parse::<u32>().ok())
                        .filter(|&k| k >= 1)
                        .ok_or_else(|| FglError::UnknownPreset(name.into()))?,
                    None => return Err(FglError::UnknownPreset(name.into())),
                };
                let mut text = format!("name {name}\nlattice rational\n");
                let mut log = String::from("x");
                for i in 1..=k {
                    text.push_str(&format!("gen m{i} deg {}\n", 2 * i));
                    log.push_str(&format!(" + m{i} x^{}", i + 1));
                }
                text.push_str(&format!("log {log}\n"));
                Self::parse(&text)
            }
        }
    }

    /// Parses a ring config. Lines: `name <text>`, `gen <name> deg <int>`,
    /// `relation <monomial> = <polynomial>`, `lattice integral|rational`,
    /// `log <series in x>`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, FglError> {
        let err = |line: usize, msg: &str| FglError::Config { line, msg: msg.into() };
        let mut name = String::from("custom");
        let mut gens = Vec::new();
        let mut relations = Vec::new();
        let mut lattice = Lattice::Integral;
        let mut log = None;
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "name" => name = rest.to_string(),
                "gen" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    match parts[..] {
                        [g, "deg", d] => {
                            let d = d.parse().map_err(|_| err(line_no, "degree must be a non-negative integer"))?;
                            gens.push(Generator::new(g, d));
                        }
                        _ => return Err(err(line_no, "expected 'gen <name> deg <int>'")),
                    }
                }
                "relation" => {
                    let (lhs, rhs) = rest.split_once('=').ok_or_else(|| err(line_no, "expected '<lead> = <poly>'"))?;
                    relations.push((line_no, lhs.trim().to_string(), rhs.trim().to_string()));
                }
                "lattice" => {
                    lattice = match rest {
                        "integral" => Lattice::Integral,
                        "rational" => Lattice::Rational,
                        _ => return Err(err(line_no, "lattice must be 'integral' or 'rational'")),
                    }
                }
                "log" => log = Some(rest.to_string()),
                _ => return Err(err(line_no, &format!("unknown key '{key}'"))),
            }
        }
        let mut ring = PolyRing::<Q>::free(gens).map_err(|e| err(0, &e.to_string()))?;
        for (line_no, lhs, rhs) in relations {
            let lead = ring.parse(&lhs).map_err(|e| err(line_no, &e.to_string()))?;
            let replacement = ring.parse(&rhs).map_err(|e| err(line_no, &e.to_string()))?;
            let (m, c) = match lead.terms().collect::<Vec<_>>()[..] {
                [(m, c)] if !m.is_one() => (m.clone(), c.clone()),
                _ => return Err(err(line_no, "relation lead must be a single monomial")),
            };
            if c.is_integer() && (c.to_integer() % 2u32) == 0.into() {
                return Err(FglError::TwoZeroDivisor);
            }
            if c != Q::from_integer(1.into()) {
                return Err(err(line_no, "relation lead must have coefficient 1"));
            }
            ring = ring.with_relation(m, replacement).map_err(|e| err(line_no, &e.to_string()))?;
        }
        let log = log.ok_or_else(|| err(0, "missing 'log' line"))?;
        Ok(Self { ring: Arc::new(CoefficientRing::new(name, ring, lattice)?), log })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_parse() {
        let a = FglConfig::preset("appendix-z-v3").unwrap();
        assert_eq!(a.ring.ring().generators().len(), 1);
        assert_eq!(a.ring.ring().relations().len(), 1);
        let l = FglConfig::preset("lazard-q:3").unwrap();
        assert_eq!(l.log, "x + m1 x^2 + m2 x^3 + m3 x^4");
        assert_eq!(l.ring.lattice(), Lattice::Rational);
        assert!(matches!(FglConfig::preset("nope"), Err(FglError::UnknownPreset(_))));
    }

    #[test]
    fn torsion_relation_is_rejected() {
        let text = "gen v deg 2\nrelation 2 v = 0\nlog x\n";
        assert_eq!(FglConfig::parse(text).unwrap_err(), FglError::TwoZeroDivisor);
    }

    #[test]
    fn config_errors_carry_line_numbers() {
        let err = FglConfig::parse("gen v deg two\nlog x\n").unwrap_err();
        assert!(matches!(err, FglError::Config { line: 1, .. }));
    }
}
