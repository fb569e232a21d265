//! A formal group law `F(x, y) = ℓ⁻¹(ℓ(x) + ℓ(y))` recovered from its logarithm.
//!
//! All series live over one variable set `x, y, a` (each of weight 1) and are
//! truncated at a common total degree.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Monomial, Polynomial, Scalar, SeriesVars, Sym, TruncatedSeries, Truncation, Q};
use crate::error::{AlgebraError, FglError};

use super::coefficients::{CoefficientRing, FglConfig};

pub type Series = TruncatedSeries<Q>;

pub const X: usize = 0;
pub const Y: usize = 1;
pub const A: usize = 2;

#[derive(Clone, Debug)]
pub struct FormalGroupLaw {
    ring: Arc<CoefficientRing>,
    vars: Arc<SeriesVars<Q>>,
    bound: u32,
    log: Series,
    log_inverse: Series,
    sum: Series,
}

impl FormalGroupLaw {
    /// `log` is a series in `x` beginning with `x`.
    pub fn from_log_text(ring: Arc<CoefficientRing>, log: &str, bound: u32) -> Result<Self, FglError> {
        let vars = SeriesVars::new(ring.ring().clone(), &[("x", 1), ("y", 1), ("a", 1)]);
        let trunc = Truncation::total(3, bound);
        let log = Series::parse(vars.clone(), trunc, log)?;
        Self::from_log(ring, log)
    }

    pub fn from_config(config: &FglConfig, bound: u32) -> Result<Self, FglError> {
        Self::from_log_text(config.ring.clone(), &config.log, bound)
    }

    pub fn from_log(ring: Arc<CoefficientRing>, log: Series) -> Result<Self, FglError> {
        let vars = log.vars().clone();
        let bound = log.truncation().total.ok_or(FglError::BadLogarithm)?;
        let only_x = log.terms().monomials().all(|m| m.exponent(&Sym::Var(Y)) == 0 && m.exponent(&Sym::Var(A)) == 0);
        let linear = log.coefficient_of(X, 1).constant_term();
        if !only_x || !log.coefficient_of(X, 0).is_zero() || linear != Polynomial::one() {
            return Err(FglError::BadLogarithm);
        }
        let log_inverse = log.comp_inverse(X)?;
        let trunc = Truncation::total(3, bound);
        let y = Series::var(vars.clone(), trunc.clone(), Y);
        let a = Series::var(vars.clone(), trunc.clone(), A);
        let log_y = log.compose(&[y.clone(), y.clone(), a.clone()])?;
        let sum = log_inverse.compose(&[log.add(&log_y)?, y, a])?.truncate(&trunc);
        let law = Self { ring, vars, bound, log, log_inverse, sum };
        law.check_integral("sum series", &law.sum)?;
        Ok(law)
    }

    pub fn ring(&self) -> &Arc<CoefficientRing> {
        &self.ring
    }

    pub fn vars(&self) -> &Arc<SeriesVars<Q>> {
        &self.vars
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn truncation(&self) -> Truncation {
        Truncation::total(3, self.bound)
    }

    pub fn log(&self) -> &Series {
        &self.log
    }

    pub fn log_inverse(&self) -> &Series {
        &self.log_inverse
    }

    /// `x +_F y`.
    pub fn sum(&self) -> &Series {
        &self.sum
    }

    pub fn var(&self, i: usize) -> Series {
        Series::var(self.vars.clone(), self.truncation(), i)
    }

    pub fn constant(&self, c: i64) -> Series {
        Series::constant(self.vars.clone(), self.truncation(), Q::from_i64(c))
    }

    pub fn parse(&self, text: &str) -> Result<Series, FglError> {
        Ok(Series::parse(self.vars.clone(), self.truncation(), text)?)
    }

    pub(crate) fn check_integral(&self, what: &str, s: &Series) -> Result<(), FglError> {
        if self.ring.lattice() == super::Lattice::Integral && !s.is_integral() {
            return Err(FglError::NonIntegral { what: what.into(), value: s.to_string() });
        }
        Ok(())
    }

    /// Substitutes `u` for `x` in a series of `x` alone.
    pub fn in_terms_of(&self, s: &Series, u: &Series) -> Result<Series, FglError> {
        Ok(s.compose(&[u.clone(), self.var(Y), self.var(A)])?)
    }

    /// `u +_F v`.
    pub fn add(&self, u: &Series, v: &Series) -> Result<Series, FglError> {
        Ok(self.sum.compose(&[u.clone(), v.clone(), self.var(A)])?)
    }

    /// `[n]_F(a) = ℓ⁻¹(n ℓ(a))`.
    pub fn n_series(&self, n: u32) -> Result<Series, FglError> {
        if n == 0 {
            return Ok(Series::zero(self.vars.clone(), self.truncation()));
        }
        let log_a = self.in_terms_of(&self.log, &self.var(A))?;
        let scaled = log_a.scale(&Q::from_i64(n as i64));
        let s = self.in_terms_of(&self.log_inverse, &scaled)?;
        self.check_integral("n-series", &s)?;
        Ok(s)
    }

    /// `⟨2⟩_F(a) = [2]_F(a) / a`.
    pub fn bracket2_series(&self) -> Result<Series, FglError> {
        Ok(divide_by_var(&self.n_series(2)?, A, 1)?)
    }

    /// The isogeny `g(x, a) = x (x +_F a)`.
    pub fn isogeny_g(&self) -> Result<Series, FglError> {
        let g = self.var(X).mul(&self.add(&self.var(X), &self.var(A))?)?;
        self.check_isogeny()?;
        Ok(g)
    }

    /// The isogeny congruence reduced mod `(a, 2)`: there `Ψ` is the Frobenius
    /// `c ↦ c²` on coefficients and `g(x, 0) = x²`, so it reads
    /// `F^{(2)}(x², y²) ≡ F(x, y)²` with `F^{(2)}` the coefficientwise square.
    pub fn check_isogeny(&self) -> Result<(), FglError> {
        if self.ring.lattice() != super::Lattice::Integral {
            return Ok(());
        }
        let ring = self.ring.ring();
        let mut frob = Polynomial::zero();
        for (vm, c) in coefficients_by_var(&self.sum) {
            let c2 = ring.reduce(&c.mul(&c));
            let lifted = vm.map_vars(|s| *s);
            for (cm, cc) in c2.terms() {
                frob.add_term(cm.map_vars(|&i| Sym::Coef(i)).mul(&lifted), cc.clone());
            }
        }
        let frob = Series::from_poly(self.vars.clone(), self.truncation(), frob);
        let x2 = self.var(X).mul(&self.var(X))?;
        let y2 = self.var(Y).mul(&self.var(Y))?;
        let lhs = frob.compose(&[x2, y2, self.var(A)])?;
        let rhs = self.sum.mul(&self.sum)?;
        let diff = lhs.sub(&rhs)?;
        let two = Q::from_i64(2);
        for (m, c) in diff.terms().terms() {
            let half = c.mul(&two.inverse().expect("2 is invertible in Q"));
            if !half.is_integer() {
                return Err(FglError::Isogeny(format!("coefficient {c} of {m:?} is odd")));
            }
        }
        Ok(())
    }
}

/// Exact division by `v^k`; fails if some term has lower order in `v`.
pub fn divide_by_var(s: &Series, v: usize, k: u32) -> Result<Series, AlgebraError> {
    let mut out = Polynomial::zero();
    for (m, c) in s.terms().terms() {
        let e = m.exponent(&Sym::Var(v));
        if e < k {
            return Err(AlgebraError::InexactDivision(format!("{s} by variable {v} to the {k}")));
        }
        out.add_term(m.with_exponent(&Sym::Var(v), e - k), c.clone());
    }
    let mut trunc = s.truncation().clone();
    if let Some(t) = trunc.total.as_mut() {
        *t = t.saturating_sub(k * s.vars().weight(v));
    }
    if let Some(t) = trunc.per_var[v].as_mut() {
        *t = t.saturating_sub(k);
    }
    Ok(Series::from_poly(s.vars().clone(), trunc, out))
}

/// Groups a series by its variable part, giving each coefficient as a ring element.
pub fn coefficients_by_var(s: &Series) -> BTreeMap<Monomial<Sym>, Polynomial<usize, Q>> {
    let mut out: BTreeMap<Monomial<Sym>, Polynomial<usize, Q>> = BTreeMap::new();
    for (m, c) in s.terms().terms() {
        let var_part = Monomial::from_pairs(m.factors().iter().filter(|(s, _)| matches!(s, Sym::Var(_))).cloned());
        let coef_part = Monomial::from_pairs(m.factors().iter().filter_map(|(s, e)| match s {
            Sym::Coef(i) => Some((*i, *e)),
            Sym::Var(_) => None,
        }));
        out.entry(var_part).or_insert_with(Polynomial::zero).add_term(coef_part, c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn appendix(bound: u32) -> FormalGroupLaw {
        FormalGroupLaw::from_config(&FglConfig::preset("appendix-z-v3").unwrap(), bound).unwrap()
    }

    #[test]
    fn additive_law() {
        let f = FormalGroupLaw::from_config(&FglConfig::preset("additive-z").unwrap(), 8).unwrap();
        assert_eq!(f.sum().to_string(), "x + y");
        assert_eq!(f.n_series(2).unwrap().to_string(), "2 a");
        assert_eq!(f.bracket2_series().unwrap().to_string(), "2");
        assert_eq!(f.isogeny_g().unwrap().to_string(), "x a + x^2");
    }

    #[test]
    fn appendix_law_matches_closed_form() {
        let f = appendix(12);
        let x = f.var(X);
        let y = f.var(Y);
        let s = x.add(&y).unwrap();
        let v3 = f.parse("1/2 v3").unwrap();
        let expected = s.add(&v3.mul(&x.pow(8).add(&y.pow(8)).unwrap().sub(&s.pow(8)).unwrap()).unwrap()).unwrap();
        assert!(f.sum().agrees_with(&expected));
    }

    #[test]
    fn appendix_two_series() {
        let f = appendix(12);
        assert!(f.n_series(2).unwrap().agrees_with(&f.parse("2 a - 127 v3 a^8").unwrap()));
        assert!(f.bracket2_series().unwrap().agrees_with(&f.parse("2 - 127 v3 a^7").unwrap()));
    }

    #[test]
    fn appendix_isogeny_low_terms() {
        let f = appendix(12);
        let g = f.isogeny_g().unwrap();
        let low = g.truncate(&Truncation::total(3, 12).with_var(X, 4));
        let expected = f.parse("a x + x^2 - 4 v3 a^7 x^2 - 14 v3 a^6 x^3").unwrap();
        assert!(low.agrees_with(&expected), "{low}");
    }

    #[test]
    fn bad_logarithm_rejected() {
        let cfg = FglConfig::preset("additive-z").unwrap();
        let err = FormalGroupLaw::from_log_text(cfg.ring.clone(), "2 x", 6).unwrap_err();
        assert_eq!(err, FglError::BadLogarithm);
    }
}
