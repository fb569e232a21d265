//! Concrete algebras with Dyer-Lashof actions: the dual Steenrod algebra and
//! the homology of MU, the ring map between them and evaluation of free-algebra
//! expressions.

pub mod dual_steenrod;
pub mod evaluate;
pub mod hmu;
pub mod indeterminacy;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::poly::square_f2;
use crate::algebra::{GradedPolynomial, Monomial, PolyRing, Polynomial, F2};
use crate::error::ModelError;

pub use dual_steenrod::DualSteenrod;
pub use hmu::{map_p, HMu};

/// An element of a model: a polynomial over F₂ in the model's generators.
pub type Elem = Polynomial<usize, F2>;

/// Memo table for `Q^s` on monomials; values are only ever inserted.
pub type ActionMemo = Mutex<HashMap<(u32, Monomial<usize>), Elem>>;

/// A polynomial algebra over F₂ with Dyer-Lashof operations determined by
/// their values on generators.
pub trait DlModel: Send + Sync {
    fn name(&self) -> &'static str;
    fn ring(&self) -> &Arc<PolyRing<F2>>;
    /// Largest degree in which the model is complete.
    fn max_degree(&self) -> u32;
    /// `Q^s g_i` for `s > |g_i|`.
    fn q_generator(&self, s: u32, i: usize) -> Result<Elem, ModelError>;
    fn memo(&self) -> &ActionMemo;

    fn degree(&self, m: &Monomial<usize>) -> u32 {
        self.ring().monomial_degree(m)
    }

    fn generator(&self, name: &str) -> Option<Elem> {
        self.ring().index_of(name).map(Elem::var)
    }

    fn parse(&self, text: &str) -> Result<Elem, ModelError> {
        self.ring().parse(text).map_err(|e| ModelError::Inconsistent(e.to_string()))
    }

    fn display(&self, p: &Elem) -> String {
        self.ring().fmt_poly(p)
    }

    fn graded(&self, p: Elem) -> GradedPolynomial<F2> {
        GradedPolynomial::new(self.ring().clone(), p)
    }

    /// `Q^s` extended by additivity, the Cartan formula and instability.
    fn apply_q(&self, s: u32, p: &Elem) -> Result<Elem, ModelError> {
        let mut out = Elem::zero();
        for (m, _) in p.terms() {
            out.add_assign(&apply_q_monomial(self, s, m)?);
        }
        Ok(out)
    }
}

fn apply_q_monomial<M: DlModel + ?Sized>(model: &M, s: u32, m: &Monomial<usize>) -> Result<Elem, ModelError> {
    if m.is_one() {
        return Ok(if s == 0 { Elem::one() } else { Elem::zero() });
    }
    let d = model.degree(m);
    if s < d {
        return Ok(Elem::zero());
    }
    if s == d {
        return Ok(Elem::monomial(m.pow(2)));
    }
    if s + d > model.max_degree() {
        return Err(ModelError::DegreeOutOfRange { degree: s + d, bound: model.max_degree() });
    }
    if let Some(hit) = model.memo().lock().expect("memo lock").get(&(s, m.clone())) {
        return Ok(hit.clone());
    }
    let (u, v) = m.square_split();
    let value = if !u.is_one() {
        // Q^s(u^2 v) = sum over even p of (Q^{p/2} u)^2 Q^{s-p} v
        let (du, dv) = (model.degree(&u), model.degree(&v));
        let mut acc = Elem::zero();
        let mut p = 2 * du;
        while p + dv <= s {
            let qu = apply_q_monomial(model, p / 2, &u)?;
            if !qu.is_zero() {
                acc.add_assign(&square_f2(&qu).mul(&apply_q_monomial(model, s - p, &v)?));
            }
            p += 2;
        }
        acc
    } else if m.factors().len() > 1 {
        let a = Monomial::var(m.factors()[0].0);
        let b = a.quotient_of(m).expect("first factor divides");
        let (da, db) = (model.degree(&a), model.degree(&b));
        let mut acc = Elem::zero();
        for p in da..=(s - db) {
            let qa = apply_q_monomial(model, p, &a)?;
            if !qa.is_zero() {
                acc.add_assign(&qa.mul(&apply_q_monomial(model, s - p, &b)?));
            }
        }
        acc
    } else {
        model.q_generator(s, m.factors()[0].0)?
    };
    model.memo().lock().expect("memo lock").insert((s, m.clone()), value.clone());
    Ok(value)
}

/// Monomials of exactly degree `d` in the generators of `ring`.
pub fn monomials_of_degree(ring: &PolyRing<F2>, d: u32) -> Vec<Monomial<usize>> {
    fn go(ring: &PolyRing<F2>, start: usize, left: u32, acc: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial<usize>>) {
        if left == 0 {
            out.push(Monomial::from_pairs(acc.iter().copied()));
            return;
        }
        for i in start..ring.generators().len() {
            let g = ring.degree_of(i);
            if g == 0 || g > left {
                continue;
            }
            let mut e = 1;
            while e * g <= left {
                acc.push((i, e));
                go(ring, i + 1, left - e * g, acc, out);
                acc.pop();
                e += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(ring, 0, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Whether every term of `p` is a product of at least two generators.
pub fn is_decomposable(p: &Elem) -> bool {
    p.monomials().all(|m| m.word_length() >= 2)
}

/// Registered model names.
pub fn model_by_name(name: &str, max_degree: u32) -> Result<Box<dyn DlModel>, ModelError> {
    match name {
        "dual-steenrod" => Ok(Box::new(DualSteenrod::new(max_degree))),
        "h-mu" => Ok(Box::new(HMu::new(max_degree))),
        _ => Err(ModelError::UnknownModel(name.into())),
    }
}
