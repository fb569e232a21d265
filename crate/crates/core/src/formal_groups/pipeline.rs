//! The power operation on `ℂPⁿ` in `S⟦α⟧/[2]_F(α)`.
//!
//! Substituting `x = αy` in `g` gives `α² k(y, α)`. With `f_n(α)` the
//! coefficient of `yⁿ` in `ℓ'(α k⁻¹(y, α)) · (k⁻¹)'(y, α)` and `h_n` the
//! polynomial of degree at most `2n` with
//! `f_n − h_n ⟨2⟩ ≡ α^{2n} f(ℂPⁿ)² mod α^{2n+1}`, the class is
//! `α^{-2n}(f_n − h_n ⟨2⟩)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::law::{coefficients_by_var, divide_by_var, FormalGroupLaw, Series, A, X, Y};
use crate::algebra::scalar::div_rem_two;
use std::sync::Arc;

use crate::algebra::{Monomial, Polynomial, Scalar, SeriesVars, Sym, Truncation, Q};
use crate::error::FglError;

type Coef = Polynomial<usize, Q>;

#[derive(Clone, Debug)]
pub struct PowerOpResult {
    pub n: u32,
    /// The image of `ℂPⁿ` in the coefficient ring.
    pub cp_n: Coef,
    pub bracket2: Series,
    pub k: Series,
    pub k_inverse: Series,
    pub f_n: Series,
    pub h_n: Series,
    /// `α^{-2n}(f_n − h_n ⟨2⟩)` before reduction.
    pub raw: Series,
    /// `raw` in normal form modulo `[2]_F(α)`.
    pub reduced: Series,
}

impl PowerOpResult {
    /// `f_n − h_n ⟨2⟩ ≡ α^{2n} f(ℂPⁿ)²` modulo `α^{2n+1}`.
    pub fn reconstruction_holds(&self) -> bool {
        let Ok(lhs) = self.h_n.mul(&self.bracket2).and_then(|p| self.f_n.sub(&p)) else {
            return false;
        };
        let by_power = a_coefficients(&lhs);
        let ring = self.bracket2.vars().ring();
        let square = ring.reduce(&self.cp_n.mul(&self.cp_n));
        (0..=2 * self.n).all(|j| {
            let c = by_power.get(&j).cloned().unwrap_or_else(Coef::zero);
            if j == 2 * self.n {
                c == square
            } else {
                c.is_zero()
            }
        })
    }

    /// Exponent of `α` up to which `reduced` is known.
    pub fn precision(&self) -> Option<u32> {
        self.reduced.truncation().total
    }
}

/// Coefficients of a series in `α` alone, keyed by the power of `α`.
fn a_coefficients(s: &Series) -> BTreeMap<u32, Coef> {
    coefficients_by_var(s).into_iter().map(|(m, c)| (m.exponent(&Sym::Var(A)), c)).collect()
}

fn from_a_coefficients(vars: &Arc<SeriesVars<Q>>, trunc: Truncation, coeffs: &BTreeMap<u32, Coef>) -> Series {
    let mut poly = Polynomial::zero();
    for (&j, c) in coeffs {
        let a = Monomial::power(Sym::Var(A), j);
        for (m, q) in c.terms() {
            poly.add_term(m.map_vars(|&i| Sym::Coef(i)).mul(&a), q.clone());
        }
    }
    Series::from_poly(vars.clone(), trunc, poly)
}

/// Moves an `x, a` series onto the pipeline variables, where `y` has weight 0
/// so that total bounds measure the power of `α` alone.
fn rebase(s: &Series, vars: &Arc<SeriesVars<Q>>, y_bound: u32) -> Series {
    let trunc = Truncation { total: s.truncation().total, per_var: vec![None, Some(y_bound), None] };
    Series::from_poly(vars.clone(), trunc, s.terms().clone())
}

pub fn appendix_pipeline(law: &FormalGroupLaw, n: u32) -> Result<PowerOpResult, FglError> {
    let needed = 2 * n + 8;
    if law.bound() < needed {
        return Err(FglError::TruncationTooSmall { given: law.bound(), needed });
    }
    let ring = law.ring().ring().clone();
    let vars = SeriesVars::new(ring.clone(), &[("x", 1), ("y", 0), ("a", 1)]);
    let y_bound = n + 2;
    let region = Truncation { total: Some(law.bound()), per_var: vec![None, Some(y_bound), None] };
    let a = Series::var(vars.clone(), region.clone(), A);
    let y = Series::var(vars.clone(), region.clone(), Y);

    let g = rebase(&law.isogeny_g()?, &vars, y_bound);
    let ay = a.mul(&y)?;
    let k = divide_by_var(&g.compose(&[ay, y.clone(), a.clone()])?, A, 2)?;
    law.check_integral("k", &k)?;
    let k_inverse = k.comp_inverse(Y)?;
    law.check_integral("k inverse", &k_inverse)?;

    let log_prime = rebase(&law.log().derivative(X), &vars, y_bound);
    let outer = log_prime.compose(&[a.mul(&k_inverse)?, y.clone(), a.clone()])?;
    let product = outer.mul(&k_inverse.derivative(Y))?;
    let f_n = product.coefficient_of(Y, n);
    law.check_integral("f_n", &f_n)?;
    if f_n.truncation().total.is_some_and(|t| t <= 2 * n) {
        return Err(FglError::TruncationTooSmall { given: law.bound(), needed: law.bound() + 2 * n + 1 });
    }

    let log_coeffs = coefficients_by_var(law.log());
    let cp_n = log_coeffs
        .get(&Monomial::power(Sym::Var(X), n + 1))
        .cloned()
        .unwrap_or_else(Coef::zero)
        .scale(&Q::from_i64(n as i64 + 1));
    let target = ring.reduce(&cp_n.mul(&cp_n));

    let bracket2 = rebase(&law.bracket2_series()?, &vars, y_bound);
    let f = a_coefficients(&f_n);
    let t = a_coefficients(&bracket2);
    let half = Q::from_i64(2).inverse().expect("2 is invertible in Q");
    let mut h: BTreeMap<u32, Coef> = BTreeMap::new();
    for j in 0..=2 * n {
        let mut c = f.get(&j).cloned().unwrap_or_else(Coef::zero);
        if j == 2 * n {
            c = c.sub(&target);
        }
        for (&i, hi) in &h {
            if let Some(tj) = t.get(&(j - i)) {
                c = c.sub(&ring.reduce(&hi.mul(tj)));
            }
        }
        let hj = c.scale(&half);
        if !law.ring().is_integral(&hj) {
            return Err(FglError::NonIntegral {
                what: format!("coefficient {j} of h_{n}"),
                value: law.ring().display(&hj),
            });
        }
        if !hj.is_zero() {
            h.insert(j, hj);
        }
    }
    let h_n = from_a_coefficients(&vars, region, &h);
    let combined = f_n.sub(&h_n.mul(&bracket2)?)?;
    let raw = divide_by_var(&combined, A, 2 * n)?;
    law.check_integral("power operation", &raw)?;
    let reduced = reduce_mod_two_series(&raw, law)?;
    Ok(PowerOpResult { n, cp_n, bracket2, k, k_inverse, f_n, h_n, raw, reduced })
}

/// Normal form modulo the α-multiples of `⟨2⟩_F(α)`: every `2α^k` with
/// `k ≥ 1` is rewritten as `−(⟨2⟩ − 2) α^k`, in increasing `k`, until all
/// coefficients of positive powers of `α` are 0 or 1 on each ring monomial.
pub fn reduce_mod_two_series(s: &Series, law: &FormalGroupLaw) -> Result<Series, FglError> {
    let ring = law.ring().ring().clone();
    let tail: Vec<(u32, Coef)> = a_coefficients(&law.bracket2_series()?).into_iter().filter(|(j, _)| *j > 0).collect();
    let bound = s.truncation().total;
    let mut coeffs = a_coefficients(s);
    let mut k = 0;
    while let Some((&next, _)) = coeffs.range(k + 1..).next() {
        k = next;
        let c = coeffs.remove(&k).expect("key present");
        let mut rest = Coef::zero();
        let mut carry = Coef::zero();
        for (m, q) in c.terms() {
            match div_rem_two(q) {
                Some((quot, r)) => {
                    rest.add_term(m.clone(), Q::from_integer(r));
                    if quot != BigInt::from(0) {
                        carry.add_term(m.clone(), Q::from_integer(quot));
                    }
                }
                None => rest.add_term(m.clone(), q.clone()),
            }
        }
        if !rest.is_zero() {
            coeffs.insert(k, rest);
        }
        if carry.is_zero() {
            continue;
        }
        for (j, tj) in &tail {
            let e = k + j;
            if bound.is_some_and(|b| e >= b) {
                continue;
            }
            let add = ring.reduce(&carry.mul(tj).neg());
            let entry = coeffs.entry(e).or_insert_with(Coef::zero);
            entry.add_assign(&add);
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
    }
    Ok(from_a_coefficients(s.vars(), s.truncation().clone(), &coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formal_groups::FglConfig;

    fn appendix() -> FormalGroupLaw {
        FormalGroupLaw::from_config(&FglConfig::preset("appendix-z-v3").unwrap(), 12).unwrap()
    }

    #[test]
    fn appendix_values_for_cp2() {
        let law = appendix();
        let r = appendix_pipeline(&law, 2).unwrap();
        let parse = |t: &str| Series::parse(r.k.vars().clone(), r.k.truncation().clone(), t).unwrap();
        assert!(r.f_n.agrees_with(&parse("6 - 6 v3 a^7")), "{}", r.f_n);
        assert_eq!(r.h_n.to_string(), "3");
        assert_eq!(r.raw.to_string(), "375 v3 a^3");
        assert_eq!(r.reduced.to_string(), "v3 a^3");
        assert!(r.reconstruction_holds());
        assert!(r.k.agrees_with(&parse("y + y^2 - 4 v3 a^7 y^2 - 14 v3 a^7 y^3")), "{}", r.k);
        assert!(r.k_inverse.agrees_with(&parse("y - y^2 + 4 v3 a^7 y^2 + 2 y^3 - 2 v3 a^7 y^3")), "{}", r.k_inverse);
    }

    #[test]
    fn reduction_examples() {
        let law = appendix();
        let s = |t: &str| law.parse(t).unwrap();
        assert_eq!(reduce_mod_two_series(&s("2 v3 a"), &law).unwrap().to_string(), "0");
        assert_eq!(reduce_mod_two_series(&s("6"), &law).unwrap().to_string(), "6");
        assert_eq!(reduce_mod_two_series(&s("375 v3 a^3"), &law).unwrap().to_string(), "v3 a^3");
    }

    #[test]
    fn short_truncation_is_rejected() {
        let law = FormalGroupLaw::from_config(&FglConfig::preset("appendix-z-v3").unwrap(), 10).unwrap();
        assert_eq!(appendix_pipeline(&law, 2).unwrap_err(), FglError::TruncationTooSmall { given: 10, needed: 12 });
    }

    #[test]
    fn additive_law_cp1() {
        let law = FormalGroupLaw::from_config(&FglConfig::preset("additive-z").unwrap(), 10).unwrap();
        let r = appendix_pipeline(&law, 1).unwrap();
        assert!(r.reconstruction_holds());
        assert!(r.raw.is_zero());
    }
}
