//! Evaluation of free-algebra expressions in a model.

use std::collections::BTreeMap;

use super::{DlModel, Elem};
use crate::dyer_lashof::{DlContext, DlPoly, Expr};
use crate::error::ModelError;

/// Values for the generators of a context, checked against their degrees.
pub struct Assignment<'a> {
    model: &'a dyn DlModel,
    ctx: &'a DlContext,
    values: Vec<Option<Elem>>,
}

impl<'a> Assignment<'a> {
    pub fn new(model: &'a dyn DlModel, ctx: &'a DlContext) -> Self {
        Self { model, ctx, values: vec![None; ctx.len()] }
    }

    /// Assigns `value`, which must be zero or homogeneous of the generator's degree.
    pub fn set(&mut self, name: &str, value: Elem) -> Result<(), ModelError> {
        let i = self.ctx.index_of(name).ok_or_else(|| ModelError::Unassigned(name.into()))?;
        let expected = self.ctx.degree(i);
        if !value.is_zero() {
            let found = value.homogeneous_degree(|g| self.model.ring().degree_of(*g));
            if found != Some(expected) {
                return Err(ModelError::DegreeMismatch {
                    name: name.into(),
                    expected,
                    found: found.map_or("inhomogeneous".into(), |d| d.to_string()),
                });
            }
        }
        self.values[i] = Some(value);
        Ok(())
    }

    /// Parses each value in the model's ring and assigns it.
    pub fn with_texts(mut self, pairs: &[(&str, &str)]) -> Result<Self, ModelError> {
        for (name, text) in pairs {
            let value = self.model.parse(text)?;
            self.set(name, value)?;
        }
        Ok(self)
    }

    fn value(&self, i: usize) -> Result<&Elem, ModelError> {
        self.values[i].as_ref().ok_or_else(|| ModelError::Unassigned(self.ctx.name(i).into()))
    }

    pub fn evaluate(&self, e: &Expr) -> Result<Elem, ModelError> {
        Ok(match e {
            Expr::Zero => Elem::zero(),
            Expr::One => Elem::one(),
            Expr::Gen(i) => self.value(*i)?.clone(),
            Expr::Sum(terms) => {
                let mut acc = Elem::zero();
                for t in terms {
                    acc.add_assign(&self.evaluate(t)?);
                }
                acc
            }
            Expr::Product(factors) => {
                let mut acc = Elem::one();
                for f in factors {
                    acc = acc.mul(&self.evaluate(f)?);
                }
                acc
            }
            Expr::Pow(base, n) => self.evaluate(base)?.pow(*n),
            Expr::Q(s, inner) => self.model.apply_q(*s, &self.evaluate(inner)?)?,
        })
    }

    pub fn evaluate_poly(&self, p: &DlPoly) -> Result<Elem, ModelError> {
        let mut cache: BTreeMap<_, Elem> = BTreeMap::new();
        let mut out = Elem::zero();
        for (m, _) in p.terms() {
            let mut term = Elem::one();
            for (w, e) in m.factors() {
                if !cache.contains_key(w) {
                    let mut v = self.value(w.gen)?.clone();
                    for &s in w.ops.iter().rev() {
                        v = self.model.apply_q(s, &v)?;
                    }
                    cache.insert(w.clone(), v);
                }
                term = term.mul(&cache[w].pow(*e));
            }
            out.add_assign(&term);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyer_lashof::parse_expression;
    use crate::models::{DualSteenrod, HMu};

    fn ctx() -> DlContext {
        DlContext::from_pairs(&[("x", 2), ("y4", 4)]).unwrap()
    }

    #[test]
    fn y12_vanishes_at_xi1_squared() {
        let a = DualSteenrod::new(31);
        let c = ctx();
        let asg = Assignment::new(&a, &c).with_texts(&[("x", "xi1^2")]).unwrap();
        let e = parse_expression("Q10 x + (Q4 x)^2", &c).unwrap();
        assert!(asg.evaluate(&e).unwrap().is_zero());
    }

    #[test]
    fn y10_at_b1_is_q6_b2() {
        let h = HMu::new(24);
        let c = ctx();
        let asg = Assignment::new(&h, &c).with_texts(&[("x", "b1"), ("y4", "b2")]).unwrap();
        let lhs = asg.evaluate(&parse_expression("Q8 x + x^2 Q4 x", &c).unwrap()).unwrap();
        let rhs = asg.evaluate(&parse_expression("Q6 y4", &c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let qbar = parse_expression("Q10 y4 + x^2 Q6 y4", &c).unwrap();
        assert!(asg.evaluate(&qbar).unwrap().is_zero());
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let h = HMu::new(24);
        let c = ctx();
        let err = Assignment::new(&h, &c).with_texts(&[("x", "b2")]).err().unwrap();
        assert!(matches!(err, ModelError::DegreeMismatch { expected: 2, .. }));
    }
}
