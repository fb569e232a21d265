//! Generator declarations for free unstable algebras.

use std::fmt;

use crate::algebra::Generator;
use crate::error::DlError;

/// An ordered list of named generators, read from `gen <name> deg <int>` lines.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DlContext {
    gens: Vec<Generator>,
}

/// Generator names: a letter or `_`, then letters, digits, `_` or `'`.
/// Names that would read as an operation symbol (`Q`, `Q12`) are rejected.
pub fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    let Some(first) = chars.next() else { return false };
    if !(first.is_ascii_alphabetic() || first == '_') {
        return false;
    }
    if !chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'') {
        return false;
    }
    !(name.starts_with('Q') && name[1..].chars().all(|c| c.is_ascii_digit()))
}

impl DlContext {
    pub fn new(gens: Vec<Generator>) -> Result<Self, DlError> {
        let mut ctx = Self::default();
        for g in gens {
            ctx.push(g)?;
        }
        Ok(ctx)
    }

    /// Convenience constructor from `(name, degree)` pairs.
    pub fn from_pairs(pairs: &[(&str, u32)]) -> Result<Self, DlError> {
        Self::new(pairs.iter().map(|(n, d)| Generator::new(*n, *d)).collect())
    }

    pub fn push(&mut self, g: Generator) -> Result<usize, DlError> {
        if !valid_name(&g.name) {
            return Err(DlError::Context { line: 0, msg: format!("invalid generator name '{}'", g.name) });
        }
        if self.index_of(&g.name).is_some() {
            return Err(DlError::DuplicateGenerator(g.name));
        }
        self.gens.push(g);
        Ok(self.gens.len() - 1)
    }

    /// Parses a context block. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, DlError> {
        let mut ctx = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| DlError::Context { line: i + 1, msg: msg.to_string() };
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["gen", name, "deg", d] => {
                    let degree = d.parse::<u32>().map_err(|_| err("degree must be a non-negative integer"))?;
                    ctx.push(Generator::new(*name, degree)).map_err(|e| match e {
                        DlError::Context { msg, .. } => err(&msg),
                        other => other,
                    })?;
                }
                _ => return Err(err("expected 'gen <name> deg <int>'")),
            }
        }
        Ok(ctx)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.gens[i].degree
    }
}

impl fmt::Display for DlContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.gens {
            writeln!(f, "gen {} deg {}", g.name, g.degree)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_declarations() {
        let ctx = DlContext::parse("# big relation\ngen x deg 2\n\ngen y11' deg 11\n").unwrap();
        assert_eq!(ctx.len(), 2);
        assert_eq!(ctx.degree(ctx.index_of("y11'").unwrap()), 11);
        assert_eq!(DlContext::parse(&ctx.to_string()).unwrap(), ctx);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(DlContext::parse("gen x deg two"), Err(DlError::Context { line: 1, .. })));
        assert!(matches!(DlContext::parse("gen Q4 deg 2"), Err(DlError::Context { .. })));
        assert!(matches!(DlContext::parse("gen x deg 2\ngen x deg 4"), Err(DlError::DuplicateGenerator(_))));
    }
}
