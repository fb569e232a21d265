//! `H_*(MU; F₂) = F₂[b₁, b₂, ...]`, `|b_k| = 2k`, with Priddy's action and the
//! ring map to the dual Steenrod algebra.
//!
//! With `b₀ = 1` and `I_m` the degree-`2m` part of `(1 + b₁ + b₂ + ...)^{-1}`,
//! `Q^{2t} b_k = sum_{n=k}^{t} N_{k,n} I_{t-n}` where
//! `N_{k,n} = sum_{u=0}^{k} binom(n-k+u-1, u) b_{n+u} b_{k-u}`; odd operations vanish.

use std::sync::{Arc, Mutex};

use super::{ActionMemo, DlModel, DualSteenrod, Elem};
use crate::algebra::{generalized_binomial_mod2, Generator, PolyRing, F2};
use crate::error::ModelError;

pub struct HMu {
    ring: Arc<PolyRing<F2>>,
    max_degree: u32,
    inverse: Mutex<Vec<Elem>>,
    memo: ActionMemo,
}

impl HMu {
    /// Generators `b_k` with `2k <= max_degree`.
    pub fn new(max_degree: u32) -> Self {
        let gens = (1..=max_degree / 2).map(|k| Generator::new(format!("b{k}"), 2 * k)).collect();
        Self {
            ring: Arc::new(PolyRing::free(gens).expect("distinct names")),
            max_degree,
            inverse: Mutex::new(vec![Elem::one()]),
            memo: Default::default(),
        }
    }

    pub fn rank(&self) -> usize {
        self.ring.generators().len()
    }

    /// `b_k`, with `b_0 = 1`; zero beyond the degree bound.
    pub fn b(&self, k: u32) -> Elem {
        match k {
            0 => Elem::one(),
            k if (k as usize) <= self.rank() => Elem::var(k as usize - 1),
            _ => Elem::zero(),
        }
    }

    /// Degree-`2m` part of `(1 + b₁ + b₂ + ...)^{-1}`.
    pub fn inverse_component(&self, m: u32) -> Elem {
        let mut inv = self.inverse.lock().expect("inverse lock");
        while inv.len() <= m as usize {
            let n = inv.len() as u32;
            let mut next = Elem::zero();
            for j in 1..=n.min(self.rank() as u32) {
                next.add_assign(&inv[(n - j) as usize].mul(&Elem::var(j as usize - 1)));
            }
            inv.push(next);
        }
        inv[m as usize].clone()
    }

    fn n_term(&self, k: u32, n: u32) -> Elem {
        let mut out = Elem::zero();
        for u in 0..=k {
            if generalized_binomial_mod2(n as i64 - k as i64 + u as i64 - 1, u as i64) {
                out.add_assign(&self.b(n + u).mul(&self.b(k - u)));
            }
        }
        out
    }

    /// Priddy's formula for `Q^j b_k` without the instability shortcut.
    pub fn priddy(&self, j: u32, k: u32) -> Result<Elem, ModelError> {
        if j + 2 * k > self.max_degree {
            return Err(ModelError::DegreeOutOfRange { degree: j + 2 * k, bound: self.max_degree });
        }
        if j % 2 == 1 {
            return Ok(Elem::zero());
        }
        let t = j / 2;
        let mut out = Elem::zero();
        for n in k..=t {
            out.add_assign(&self.n_term(k, n).mul(&self.inverse_component(t - n)));
        }
        Ok(out)
    }
}

impl DlModel for HMu {
    fn name(&self) -> &'static str {
        "h-mu"
    }

    fn ring(&self) -> &Arc<PolyRing<F2>> {
        &self.ring
    }

    fn max_degree(&self) -> u32 {
        self.max_degree
    }

    fn memo(&self) -> &ActionMemo {
        &self.memo
    }

    fn q_generator(&self, s: u32, i: usize) -> Result<Elem, ModelError> {
        self.priddy(s, i as u32 + 1)
    }
}

/// The ring map `b_{2^k - 1} ↦ ξ_k²`, all other `b_i ↦ 0`.
pub fn map_p(source: &HMu, target: &DualSteenrod, p: &Elem) -> Result<Elem, ModelError> {
    let images: Vec<Elem> = (1..=source.rank() as u32)
        .map(|k| {
            let j = k + 1;
            if j.is_power_of_two() {
                let i = j.trailing_zeros() as usize;
                target
                    .xi(i)
                    .map(|x| x.pow(2))
                    .ok_or(ModelError::DegreeOutOfRange { degree: 2 * k, bound: target.max_degree() })
            } else {
                Ok(Elem::zero())
            }
        })
        .collect::<Result<_, _>>()?;
    let mut out = Elem::zero();
    for (m, _) in p.terms() {
        let mut term = Elem::one();
        for &(g, e) in m.factors() {
            term = term.mul(&images[g].pow(e));
            if term.is_zero() {
                break;
            }
        }
        out.add_assign(&term);
    }
    Ok(out)
}

/// Outcome of comparing `p ∘ Q^s` with `Q^s ∘ p` on a basis range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compatibility {
    pub checked: usize,
    /// First failure as `(monomial, s)`.
    pub failure: Option<(String, u32)>,
}

/// Checks `p(Q^s m) = Q^s p(m)` for monomials `m` of degree at most
/// `max_source_degree` and `s <= max_s`.
pub fn check_dl_compatibility(
    source: &HMu,
    target: &DualSteenrod,
    max_source_degree: u32,
    max_s: u32,
) -> Result<Compatibility, ModelError> {
    let mut checked = 0;
    for d in (2..=max_source_degree).step_by(2) {
        for m in super::monomials_of_degree(source.ring(), d) {
            let elem = Elem::monomial(m.clone());
            let pm = map_p(source, target, &elem)?;
            for s in 0..=max_s {
                let lhs = map_p(source, target, &source.apply_q(s, &elem)?)?;
                let rhs = target.apply_q(s, &pm)?;
                checked += 1;
                if lhs != rhs {
                    return Ok(Compatibility { checked, failure: Some((source.ring().fmt_monomial(&m), s)) });
                }
            }
        }
    }
    Ok(Compatibility { checked, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_priddy_values() {
        let h = HMu::new(24);
        // Q^4 b_1 = b_1^3 + b_1 b_2 + b_3
        assert_eq!(h.display(&h.priddy(4, 1).unwrap()), "b3 + b1 b2 + b1^3");
        assert_eq!(h.priddy(2, 1).unwrap(), h.b(1).pow(2));
        assert!(h.priddy(0, 1).unwrap().is_zero());
        assert!(h.priddy(5, 2).unwrap().is_zero());
    }

    #[test]
    fn formula_matches_instability_on_squares() {
        let h = HMu::new(40);
        for k in 1..=10 {
            assert_eq!(h.priddy(2 * k, k).unwrap(), h.b(k).pow(2), "k = {k}");
            for t in 0..k {
                assert!(h.priddy(2 * t, k).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn p_commutes_with_operations_in_low_degrees() {
        let h = HMu::new(30);
        let a = DualSteenrod::new(30);
        let c = check_dl_compatibility(&h, &a, 8, 14).unwrap();
        assert_eq!(c.failure, None);
        assert!(c.checked > 50);
    }
}
