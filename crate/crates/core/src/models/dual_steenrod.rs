//! The dual Steenrod algebra `F₂[ξ₁, ξ₂, ...]`, `|ξ_i| = 2^i - 1`, with its
//! Dyer-Lashof action.
//!
//! `Q^s ξ₁` is the degree `s + 1` part of `(1 + ξ₁ + ξ₂ + ...)^{-1}`. On the
//! conjugates, `Q^s ξ̄_i = Q^{s + 2^i - 2} ξ₁` when `s ≡ 0, -1 mod 2^i` and
//! `s ≥ |ξ̄_i|`, and zero otherwise. Writing `ξ_i = ξ̄_i + D_i` with `D_i` in
//! lower generators gives `Q^s` on every generator.

use std::sync::{Arc, Mutex};

use super::{ActionMemo, DlModel, Elem};
use crate::algebra::{Generator, Monomial, PolyRing};
use crate::error::ModelError;

pub struct DualSteenrod {
    ring: Arc<PolyRing<crate::algebra::F2>>,
    max_degree: u32,
    /// `inverse[d]`: degree-`d` part of `(sum ξ_i)^{-1}`, grown on demand.
    inverse: Mutex<Vec<Elem>>,
    /// `conjugates[i]` is `ξ̄_i`, with `conjugates[0] = 1`.
    conjugates: Vec<Elem>,
    memo: ActionMemo,
}

pub fn xi_degree(i: usize) -> u32 {
    (1u32 << i) - 1
}

impl DualSteenrod {
    /// Generators `ξ_i` with `|ξ_i| <= max_degree`.
    pub fn new(max_degree: u32) -> Self {
        let mut gens = Vec::new();
        let mut i = 1;
        while xi_degree(i) <= max_degree {
            gens.push(Generator::new(format!("xi{i}"), xi_degree(i)));
            i += 1;
        }
        let ring = Arc::new(PolyRing::free(gens).expect("distinct names"));
        let conjugates = conjugates(ring.generators().len());
        Self { ring, max_degree, inverse: Mutex::new(vec![Elem::one()]), conjugates, memo: Default::default() }
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.ring.generators().len()
    }

    /// `ξ_i` (1-based), or `None` beyond the degree bound.
    pub fn xi(&self, i: usize) -> Option<Elem> {
        (1..=self.rank()).contains(&i).then(|| Elem::var(i - 1))
    }

    /// The conjugate `ξ̄_i` (1-based), from `sum_{j=0}^{i} ξ_{i-j}^{2^j} ξ̄_j = 0`.
    pub fn conjugate(&self, i: usize) -> Option<Elem> {
        self.conjugates.get(i).cloned()
    }

    /// Degree-`d` part of `(1 + ξ₁ + ξ₂ + ...)^{-1}`.
    pub fn inverse_component(&self, d: u32) -> Elem {
        let mut inv = self.inverse.lock().expect("inverse lock");
        while inv.len() <= d as usize {
            let n = inv.len() as u32;
            let mut next = Elem::zero();
            for g in 0..self.rank() {
                let dg = xi_degree(g + 1);
                if dg <= n {
                    next.add_assign(&inv[(n - dg) as usize].mul(&Elem::var(g)));
                }
            }
            inv.push(next);
        }
        inv[d as usize].clone()
    }

    /// `Q^s ξ̄_i` from the congruence rule.
    pub fn q_conjugate_rule(&self, s: u32, i: usize) -> Elem {
        let m = 1u32 << i;
        if s >= m - 1 && (s.is_multiple_of(m) || s % m == m - 1) {
            self.inverse_component(s + m - 1)
        } else {
            Elem::zero()
        }
    }

    /// Asserts that the rule reproduces instability at `s = |ξ̄_i|`.
    pub fn check_conjugate_square(&self, i: usize) -> Result<(), ModelError> {
        let s = xi_degree(i);
        let rule = self.q_conjugate_rule(s, i);
        let square = self.conjugates[i].mul(&self.conjugates[i]);
        if rule != square {
            return Err(ModelError::Inconsistent(format!(
                "Q^{s} of the conjugate of xi{i}: rule gives {}, instability gives {}",
                self.display(&rule),
                self.display(&square)
            )));
        }
        Ok(())
    }
}

fn conjugates(rank: usize) -> Vec<Elem> {
    let mut out = vec![Elem::one()];
    for i in 1..=rank {
        let mut c = Elem::zero();
        for (j, cj) in out.iter().enumerate() {
            let xi = Monomial::power(i - j - 1, 1 << j);
            c.add_assign(&cj.mul_monomial(&xi, &crate::algebra::F2(true)));
        }
        out.push(c);
    }
    out
}

impl DlModel for DualSteenrod {
    fn name(&self) -> &'static str {
        "dual-steenrod"
    }

    fn ring(&self) -> &Arc<PolyRing<crate::algebra::F2>> {
        &self.ring
    }

    fn max_degree(&self) -> u32 {
        self.max_degree
    }

    fn memo(&self) -> &ActionMemo {
        &self.memo
    }

    fn q_generator(&self, s: u32, g: usize) -> Result<Elem, ModelError> {
        let i = g + 1;
        if i == 1 {
            return Ok(self.inverse_component(s + 1));
        }
        let correction = self.conjugates[i].add(&Elem::var(g));
        if i <= 3 || s == xi_degree(i) {
            self.check_conjugate_square(i)?;
        }
        let rest = self.apply_q(s, &correction)?;
        Ok(self.q_conjugate_rule(s, i).add(&rest))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_conjugates() {
        let a = DualSteenrod::new(31);
        assert_eq!(a.display(&a.conjugate(1).unwrap()), "xi1");
        assert_eq!(a.display(&a.conjugate(2).unwrap()), "xi2 + xi1^3");
        for i in 1..=5 {
            let mut total = Elem::zero();
            for j in 0..=i {
                let xi = if i == j { Elem::one() } else { Elem::monomial(Monomial::power(i - j - 1, 1 << j)) };
                total.add_assign(&xi.mul(&a.conjugate(j).unwrap()));
            }
            assert!(total.is_zero(), "i = {i}");
        }
    }

    #[test]
    fn steinberger_values() {
        let a = DualSteenrod::new(40);
        let c = |i| a.conjugate(i).unwrap();
        assert_eq!(a.apply_q(2, &c(1)).unwrap(), c(2));
        assert_eq!(a.apply_q(3, &c(1)).unwrap(), c(1).pow(4));
        assert_eq!(a.apply_q(4, &c(1)).unwrap(), c(1).pow(2).mul(&c(2)));
        assert_eq!(a.apply_q(5, &c(1)).unwrap(), c(2).pow(2));
        let sq = c(1).pow(2);
        assert_eq!(a.apply_q(6, &sq).unwrap(), c(1).pow(8));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let a = DualSteenrod::new(7);
        assert!(matches!(a.apply_q(7, &a.xi(1).unwrap()), Err(ModelError::DegreeOutOfRange { .. })));
    }
}

#[cfg(test)]
mod heavy_tests {
    use super::*;
    use crate::dyer_lashof::adem_step;

    #[test]
    fn q16_on_fourth_conjugate() {
        let a = DualSteenrod::new(31);
        assert_eq!(a.apply_q(16, &a.conjugate(4).unwrap()).unwrap(), a.conjugate(5).unwrap());
        for i in 1..=4 {
            let q = a.apply_q(1 << i, &a.conjugate(i).unwrap()).unwrap();
            assert_eq!(q, a.conjugate(i + 1).unwrap(), "i = {i}");
        }
    }

    #[test]
    fn adem_coherence_on_generators() {
        let a = DualSteenrod::new(48);
        for g in 1..=4 {
            let x = a.xi(g).unwrap();
            let d = xi_degree(g);
            for s in d..=12 {
                for r in (2 * s + 1)..=(40 - s - d) {
                    let direct = a.apply_q(r, &a.apply_q(s, &x).unwrap()).unwrap();
                    let mut expanded = Elem::zero();
                    for t in adem_step(r, s, None).unwrap() {
                        expanded.add_assign(&a.apply_q(t.outer, &a.apply_q(t.inner, &x).unwrap()).unwrap());
                    }
                    assert_eq!(direct, expanded, "Q{r} Q{s} xi{g}");
                }
            }
        }
    }
}
