//! Maps between free unstable algebras given by generator images.

use std::sync::Arc;

use super::context::DlContext;
use super::expr::Expr;
use super::normalize::Normalizer;
use super::parser::parse_expression;
use super::word::{display_poly, poly_to_expr, DlPoly};
use crate::algebra::{Generator, Monomial};
use crate::error::DlError;

/// A map of free algebras sending each source generator to an expression in
/// the target generators.
///
/// Base generators occur in both contexts, are fixed by the map and behave as
/// scalars under suspension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionMap {
    source: Arc<DlContext>,
    target: Arc<DlContext>,
    base: Vec<String>,
    images: Vec<Expr>,
}

/// Name of a generator after suspension: a trailing degree is bumped and a
/// prime appended, so `y10` of degree 10 becomes `y11'`.
pub fn suspended_name(name: &str, degree: u32) -> String {
    let digits = degree.to_string();
    match name.strip_suffix(&digits) {
        Some(stem) if !stem.is_empty() && !stem.ends_with(|c: char| c.is_ascii_digit()) => {
            format!("{stem}{}'", degree + 1)
        }
        _ => format!("{name}'"),
    }
}

fn suspend_context(ctx: &DlContext, base: &[String]) -> Result<DlContext, DlError> {
    DlContext::new(
        ctx.generators()
            .iter()
            .map(|g| {
                if base.contains(&g.name) {
                    g.clone()
                } else {
                    Generator::new(suspended_name(&g.name, g.degree), g.degree + 1)
                }
            })
            .collect(),
    )
}

impl SubstitutionMap {
    /// Builds a map from `(generator, image text)` pairs. Unlisted generators go
    /// to the target generator of the same name.
    pub fn new(
        source: Arc<DlContext>,
        target: Arc<DlContext>,
        base: &[&str],
        images: &[(&str, &str)],
    ) -> Result<Self, DlError> {
        for b in base {
            let (Some(i), Some(j)) = (source.index_of(b), target.index_of(b)) else {
                return Err(DlError::ContextMismatch(format!("base generator '{b}' missing")));
            };
            if source.degree(i) != target.degree(j) {
                return Err(DlError::DegreeMismatch { lhs: source.degree(i), rhs: target.degree(j) });
            }
        }
        let mut exprs = Vec::with_capacity(source.len());
        for g in source.generators() {
            let listed = images.iter().find(|(n, _)| *n == g.name);
            let e = match listed {
                Some((_, text)) => parse_expression(text, &target)?,
                None => target
                    .index_of(&g.name)
                    .map(Expr::Gen)
                    .ok_or_else(|| DlError::ContextMismatch(format!("no image for '{}'", g.name)))?,
            };
            if base.contains(&g.name.as_str()) && e != Expr::Gen(target.index_of(&g.name).unwrap()) {
                return Err(DlError::ContextMismatch(format!("base generator '{}' must be fixed", g.name)));
            }
            if let Some(d) = e.degree(&target)? {
                if d != g.degree {
                    return Err(DlError::DegreeMismatch { lhs: g.degree, rhs: d });
                }
            }
            exprs.push(e);
        }
        Ok(Self { source, target, base: base.iter().map(|s| s.to_string()).collect(), images: exprs })
    }

    pub fn identity(ctx: Arc<DlContext>) -> Self {
        let images = (0..ctx.len()).map(Expr::Gen).collect();
        Self { source: ctx.clone(), target: ctx, base: Vec::new(), images }
    }

    pub fn source(&self) -> &Arc<DlContext> {
        &self.source
    }

    pub fn target(&self) -> &Arc<DlContext> {
        &self.target
    }

    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn images(&self) -> &[Expr] {
        &self.images
    }

    pub fn image(&self, name: &str) -> Option<&Expr> {
        self.source.index_of(name).map(|i| &self.images[i])
    }

    /// Substitutes the images into an expression over the source.
    pub fn apply(&self, e: &Expr) -> Expr {
        e.substitute(&self.images)
    }

    /// `self ∘ inner`, unnormalized.
    pub fn after(&self, inner: &SubstitutionMap) -> Result<SubstitutionMap, DlError> {
        if *inner.target != *self.source {
            return Err(DlError::ContextMismatch("target of the first map differs from source of the second".into()));
        }
        let base = inner.base.iter().filter(|b| self.base.contains(b)).cloned().collect();
        Ok(SubstitutionMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            base,
            images: inner.images.iter().map(|e| self.apply(e)).collect(),
        })
    }

    /// `self ∘ inner` with normalized images.
    pub fn compose(&self, inner: &SubstitutionMap) -> Result<SubstitutionMap, DlError> {
        self.after(inner)?.normalized()
    }

    /// Pointwise sum of two maps with the same source and target.
    pub fn sum(&self, other: &SubstitutionMap) -> Result<SubstitutionMap, DlError> {
        if self.source != other.source || self.target != other.target {
            return Err(DlError::ContextMismatch("summands have different contexts".into()));
        }
        let base: Vec<String> = self.base.iter().filter(|b| other.base.contains(b)).cloned().collect();
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .enumerate()
            .map(|(i, (a, b))| {
                if base_contains(&base, self.source.name(i)) {
                    a.clone()
                } else {
                    Expr::Sum(vec![a.clone(), b.clone()])
                }
            })
            .collect();
        Ok(SubstitutionMap { source: self.source.clone(), target: self.target.clone(), base, images })
    }

    pub fn normal_images(&self) -> Result<Vec<DlPoly>, DlError> {
        let n = Normalizer::new(&self.target);
        self.images.iter().map(|e| n.normalize(e).map(|r| r.poly)).collect()
    }

    pub fn normalized(&self) -> Result<SubstitutionMap, DlError> {
        let images = self.normal_images()?.iter().map(poly_to_expr).collect();
        Ok(SubstitutionMap { images, ..self.clone() })
    }

    /// Equal sources, targets and normalized images.
    pub fn equivalent(&self, other: &SubstitutionMap) -> Result<bool, DlError> {
        if self.source != other.source || self.target != other.target {
            return Ok(false);
        }
        Ok(self.normal_images()? == other.normal_images()?)
    }

    /// Normalized image of a named source generator, printed canonically.
    pub fn display_image(&self, name: &str) -> Result<String, DlError> {
        let i = self.source.index_of(name).ok_or_else(|| DlError::UnknownGenerator(name.into()))?;
        let p = Normalizer::new(&self.target).normalize(&self.images[i])?.poly;
        Ok(display_poly(&p, &self.target))
    }

    /// The suspended map: generators shift up one degree, operations are kept,
    /// base factors act as scalars and products of two non-base factors vanish.
    pub fn suspend(&self) -> Result<SubstitutionMap, DlError> {
        let source = Arc::new(suspend_context(&self.source, &self.base)?);
        let target = Arc::new(suspend_context(&self.target, &self.base)?);
        let is_free = |gen: usize| !base_contains(&self.base, self.target.name(gen));
        let images = self.normal_images()?;
        let n = Normalizer::new(&target);
        let mut out = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            if base_contains(&self.base, self.source.name(i)) {
                out.push(self.images[i].clone());
                continue;
            }
            let mut kept = DlPoly::zero();
            for (m, c) in img.terms() {
                let free: u32 = m.factors().iter().filter(|(w, _)| is_free(w.gen)).map(|(_, e)| e).sum();
                match free {
                    0 => {
                        return Err(DlError::NotZeroPreserving(format!(
                            "image of '{}' has the term {}",
                            self.source.name(i),
                            display_poly(&DlPoly::monomial(m.clone()), &self.target)
                        )))
                    }
                    1 => kept.add_term(Monomial::clone(m), *c),
                    _ => {}
                }
            }
            // Generator indices are unchanged by suspension, so the surviving
            // terms are reread over the suspended target and renormalized.
            out.push(poly_to_expr(&n.normalize(&poly_to_expr(&kept))?.poly));
        }
        Ok(SubstitutionMap { source, target, base: self.base.clone(), images: out })
    }
}

fn base_contains(base: &[String], name: &str) -> bool {
    base.iter().any(|b| b == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(pairs: &[(&str, u32)]) -> Arc<DlContext> {
        Arc::new(DlContext::from_pairs(pairs).unwrap())
    }

    #[test]
    fn names_after_suspension() {
        assert_eq!(suspended_name("y10", 10), "y11'");
        assert_eq!(suspended_name("z30", 30), "z31'");
        assert_eq!(suspended_name("z", 30), "z'");
        assert_eq!(suspended_name("y110", 10), "y110'");
    }

    #[test]
    fn suspension_keeps_operations_and_kills_products() {
        let src = ctx(&[("z30", 30)]);
        let tgt = ctx(&[("z14", 14)]);
        let nu = SubstitutionMap::new(src.clone(), tgt.clone(), &[], &[("z30", "Q16 z14")]).unwrap();
        assert_eq!(nu.suspend().unwrap().display_image("z31'").unwrap(), "Q16 z15'");
        let two = ctx(&[("y", 2), ("w", 4)]);
        let prod_src = ctx(&[("z", 6)]);
        let prod = SubstitutionMap::new(prod_src, two, &[], &[("z", "y w")]).unwrap();
        assert_eq!(prod.suspend().unwrap().display_image("z'").unwrap(), "0");
    }

    #[test]
    fn base_only_terms_are_rejected() {
        let src = ctx(&[("x", 2), ("z", 4)]);
        let tgt = ctx(&[("x", 2), ("y", 4)]);
        let m = SubstitutionMap::new(src, tgt, &["x"], &[("z", "y + x^2")]).unwrap();
        assert!(matches!(m.suspend(), Err(DlError::NotZeroPreserving(_))));
    }

    #[test]
    fn identity_is_neutral() {
        let src = ctx(&[("x", 2), ("y10", 10)]);
        let tgt = ctx(&[("x", 2), ("y4", 4)]);
        let mu = SubstitutionMap::new(src.clone(), tgt.clone(), &["x"], &[("y10", "Q6 y4")]).unwrap();
        let left = SubstitutionMap::identity(tgt).compose(&mu).unwrap();
        let right = mu.compose(&SubstitutionMap::identity(src)).unwrap();
        assert!(left.equivalent(&mu).unwrap());
        assert!(right.equivalent(&mu).unwrap());
    }

    #[test]
    fn degree_and_context_errors() {
        let src = ctx(&[("z", 4)]);
        let tgt = ctx(&[("y", 4)]);
        assert_eq!(
            SubstitutionMap::new(src.clone(), tgt.clone(), &[], &[("z", "Q1 y")]),
            Err(DlError::DegreeMismatch { lhs: 4, rhs: 5 })
        );
        assert!(matches!(SubstitutionMap::new(src.clone(), tgt.clone(), &[], &[]), Err(DlError::ContextMismatch(_))));
        let f = SubstitutionMap::new(src.clone(), tgt.clone(), &[], &[("z", "y")]).unwrap();
        assert!(matches!(f.compose(&f), Err(DlError::ContextMismatch(_))));
    }
}
