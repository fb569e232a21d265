//! Multivariate power series truncated by weighted total degree and per-variable order.
//!
//! A series is a polynomial in two kinds of symbols: generators of a coefficient
//! ring (which may carry relations) and the series variables themselves. Only the
//! series variables are subject to truncation. All bounds are exclusive, so a
//! per-variable bound of 4 on `y` means the series is known modulo `y^4`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::{fmt_poly_with, parse_poly, PolyRing};
use super::scalar::Scalar;
use crate::error::AlgebraError;

/// A symbol in a series monomial: coefficient-ring generator or series variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    Coef(usize),
    Var(usize),
}

/// The variables of a family of series together with their coefficient ring.
#[derive(Debug, PartialEq, Eq)]
pub struct SeriesVars<C> {
    ring: Arc<PolyRing<C>>,
    names: Vec<String>,
    weights: Vec<u32>,
}

impl<C: Scalar> SeriesVars<C> {
    pub fn new(ring: Arc<PolyRing<C>>, vars: &[(&str, u32)]) -> Arc<Self> {
        Arc::new(Self {
            ring,
            names: vars.iter().map(|(n, _)| n.to_string()).collect(),
            weights: vars.iter().map(|(_, w)| *w).collect(),
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing<C>> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    fn sym_name(&self, s: &Sym) -> String {
        match s {
            Sym::Coef(i) => self.ring.generators()[*i].name.clone(),
            Sym::Var(i) => self.names[*i].clone(),
        }
    }

    fn lookup(&self, name: &str) -> Option<Sym> {
        self.index_of(name).map(Sym::Var).or_else(|| self.ring.index_of(name).map(Sym::Coef))
    }

    /// Weighted total degree in the series variables.
    fn total(&self, m: &Monomial<Sym>) -> u32 {
        m.degree(|s| match s {
            Sym::Var(i) => self.weights[*i],
            Sym::Coef(_) => 0,
        })
    }
}

/// Exclusive truncation bounds; `None` means unbounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub total: Option<u32>,
    pub per_var: Vec<Option<u32>>,
}

fn min_bound(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Truncation {
    pub fn exact(nvars: usize) -> Self {
        Self { total: None, per_var: vec![None; nvars] }
    }

    pub fn total(nvars: usize, bound: u32) -> Self {
        Self { total: Some(bound), per_var: vec![None; nvars] }
    }

    pub fn with_var(mut self, i: usize, bound: u32) -> Self {
        self.per_var[i] = min_bound(self.per_var[i], Some(bound));
        self
    }

    pub fn meet(&self, other: &Self) -> Self {
        Self {
            total: min_bound(self.total, other.total),
            per_var: self.per_var.iter().zip(&other.per_var).map(|(a, b)| min_bound(*a, *b)).collect(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.total.is_none() && self.per_var.iter().all(Option::is_none)
    }

    fn keeps<C: Scalar>(&self, vars: &SeriesVars<C>, m: &Monomial<Sym>) -> bool {
        if let Some(t) = self.total {
            if vars.total(m) >= t {
                return false;
            }
        }
        m.factors().iter().all(|(s, e)| match s {
            Sym::Var(i) => self.per_var[*i].is_none_or(|b| *e < b),
            Sym::Coef(_) => true,
        })
    }

    /// Largest word length in the series variables inside the region, if finite.
    fn max_word_length<C: Scalar>(&self, vars: &SeriesVars<C>) -> Option<u32> {
        let mut sum = 0;
        for i in 0..vars.len() {
            let by_total = match (self.total, vars.weight(i)) {
                (Some(t), w) if w > 0 => Some(t.saturating_sub(1) / w),
                _ => None,
            };
            let by_var = self.per_var[i].map(|b| b.saturating_sub(1));
            sum += min_bound(by_total, by_var)?;
        }
        Some(sum)
    }
}

/// A truncated power series over a coefficient ring.
#[derive(Clone, Debug)]
pub struct TruncatedSeries<C> {
    vars: Arc<SeriesVars<C>>,
    trunc: Truncation,
    terms: Polynomial<Sym, C>,
}

impl<C: Scalar> PartialEq for TruncatedSeries<C> {
    fn eq(&self, other: &Self) -> bool {
        self.same_vars(other) && self.trunc == other.trunc && self.terms == other.terms
    }
}

impl<C: Scalar> TruncatedSeries<C> {
    /// Builds a series, discarding terms outside `trunc` and reducing by the ring relations.
    pub fn from_poly(vars: Arc<SeriesVars<C>>, trunc: Truncation, poly: Polynomial<Sym, C>) -> Self {
        let kept = poly.filter(|m| trunc.keeps(&vars, m));
        let terms = vars.ring.reduce_in(&kept, |&i| Sym::Coef(i));
        Self { vars, trunc, terms }
    }

    pub fn zero(vars: Arc<SeriesVars<C>>, trunc: Truncation) -> Self {
        Self { vars, trunc, terms: Polynomial::zero() }
    }

    pub fn one(vars: Arc<SeriesVars<C>>, trunc: Truncation) -> Self {
        Self::from_poly(vars, trunc, Polynomial::one())
    }

    pub fn constant(vars: Arc<SeriesVars<C>>, trunc: Truncation, c: C) -> Self {
        Self::from_poly(vars, trunc, Polynomial::constant(c))
    }

    pub fn var(vars: Arc<SeriesVars<C>>, trunc: Truncation, i: usize) -> Self {
        Self::from_poly(vars, trunc, Polynomial::var(Sym::Var(i)))
    }

    /// Embeds a coefficient-ring element as a constant series.
    pub fn from_coefficient(vars: Arc<SeriesVars<C>>, trunc: Truncation, c: &Polynomial<usize, C>) -> Self {
        Self::from_poly(vars, trunc, c.map_vars(|&i| Sym::Coef(i)))
    }

    /// Parses text over the coefficient generators and series variable names.
    pub fn parse(vars: Arc<SeriesVars<C>>, trunc: Truncation, text: &str) -> Result<Self, AlgebraError> {
        let poly = parse_poly(text, |n| vars.lookup(n))?;
        Ok(Self::from_poly(vars, trunc, poly))
    }

    pub fn vars(&self) -> &Arc<SeriesVars<C>> {
        &self.vars
    }

    pub fn truncation(&self) -> &Truncation {
        &self.trunc
    }

    pub fn terms(&self) -> &Polynomial<Sym, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn same_vars(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_vars(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.same_vars(other) {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    /// Restricts to a smaller region.
    pub fn truncate(&self, trunc: &Truncation) -> Self {
        Self::from_poly(self.vars.clone(), self.trunc.meet(trunc), self.terms.clone())
    }

    /// Equality on the common region of both truncations.
    pub fn agrees_with(&self, other: &Self) -> bool {
        if !self.same_vars(other) {
            return false;
        }
        let t = self.trunc.meet(&other.trunc);
        self.truncate(&t).terms == other.truncate(&t).terms
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let t = self.trunc.meet(&other.trunc);
        Ok(Self::from_poly(self.vars.clone(), t, self.terms.add(&other.terms)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { vars: self.vars.clone(), trunc: self.trunc.clone(), terms: self.terms.neg() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self { vars: self.vars.clone(), trunc: self.trunc.clone(), terms: self.terms.scale(c) }
    }

    /// Product. The result is known wherever both error terms provably vanish:
    /// an error of `self` beyond bound `B` times `other` starts at `B + ord(other)`.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let t = self.product_truncation(other);
        Ok(self.mul_within(other, t))
    }

    fn product_truncation(&self, other: &Self) -> Truncation {
        let shift = |bound: Option<u32>, ord: Option<u32>| match (bound, ord) {
            (Some(b), Some(o)) => Some(b + o),
            (Some(_), None) | (None, _) => None,
        };
        let (oa, ob) = (self.orders(), other.orders());
        let tot = |o: &Option<Orders>, t: &Truncation| o.as_ref().map(|o| o.total).or(t.total);
        let var = |o: &Option<Orders>, t: &Truncation, v: usize| o.as_ref().map(|o| o.per_var[v]).or(t.per_var[v]);
        Truncation {
            total: min_bound(
                shift(self.trunc.total, tot(&ob, &other.trunc)),
                shift(other.trunc.total, tot(&oa, &self.trunc)),
            ),
            per_var: (0..self.vars.len())
                .map(|v| {
                    min_bound(
                        shift(self.trunc.per_var[v], var(&ob, &other.trunc, v)),
                        shift(other.trunc.per_var[v], var(&oa, &self.trunc, v)),
                    )
                })
                .collect(),
        }
    }

    fn mul_within(&self, other: &Self, t: Truncation) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms.terms() {
            for (n, d) in other.terms.terms() {
                let mn = m.mul(n);
                if t.keeps(&self.vars, &mn) {
                    out.add_term(mn, c.mul(d));
                }
            }
        }
        Self::from_poly(self.vars.clone(), t, out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.vars.clone(), self.trunc.clone());
        for _ in 0..n {
            acc = acc.mul_within(self, self.trunc.clone());
        }
        acc
    }

    /// Terms with no series variable, as a coefficient-ring polynomial.
    pub fn constant_term(&self) -> Polynomial<usize, C> {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms.terms() {
            if m.factors().iter().all(|(s, _)| matches!(s, Sym::Coef(_))) {
                out.add_term(coef_part(m), c.clone());
            }
        }
        out
    }

    /// The coefficient of `x_i^e`, as a series in the remaining variables.
    pub fn coefficient_of(&self, i: usize, e: u32) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms.terms() {
            if m.exponent(&Sym::Var(i)) == e {
                out.add_term(m.split_off(&Sym::Var(i)).1, c.clone());
            }
        }
        let mut trunc = self.trunc.clone();
        if let Some(t) = trunc.total.as_mut() {
            *t = t.saturating_sub(e * self.vars.weight(i));
        }
        Self::from_poly(self.vars.clone(), trunc, out)
    }

    /// Multiplicative inverse; the constant term must be a unit scalar plus nilpotents.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        let c0 = self.terms.coefficient(&Monomial::one());
        let u_inv = c0.inverse().ok_or_else(|| {
            AlgebraError::NonUnit(fmt_poly_with(&self.constant_term(), |&i| {
                self.vars.ring.generators()[i].name.clone()
            }))
        })?;
        let cap = self
            .trunc
            .max_word_length(&self.vars)
            .ok_or_else(|| AlgebraError::IncompatibleTruncation("inverse needs a bounded region".into()))?
            + 64;
        let one = Self::one(self.vars.clone(), self.trunc.clone());
        let rest = self.sub(&Self::constant(self.vars.clone(), self.trunc.clone(), c0))?;
        let mut b = one.scale(&u_inv);
        for _ in 0..=cap {
            let next = one.sub(&rest.mul(&b)?)?.scale(&u_inv);
            if next.terms == b.terms {
                return Ok(next);
            }
            b = next;
        }
        Err(AlgebraError::NonUnit("constant term is not a unit".into()))
    }

    /// Substitutes `subs[i]` for variable `i`. All substitutes share one target variable set.
    ///
    /// The result's truncation is the meet of the substitutes' truncations, tightened
    /// where the outer series' own truncation leaves terms undetermined.
    pub fn compose(&self, subs: &[Self]) -> Result<Self, AlgebraError> {
        if subs.len() != self.vars.len() {
            return Err(AlgebraError::IncompatibleTruncation(format!(
                "expected {} substitutes, got {}",
                self.vars.len(),
                subs.len()
            )));
        }
        let target = match subs.first() {
            Some(s) => s.vars.clone(),
            None => return Ok(self.clone()),
        };
        for s in subs {
            if !(Arc::ptr_eq(&s.vars, &target) || *s.vars == *target) {
                return Err(AlgebraError::ContextMismatch);
            }
        }
        if *target.ring != *self.vars.ring {
            return Err(AlgebraError::RingMismatch);
        }
        let mut region = subs.iter().skip(1).fold(subs[0].trunc.clone(), |t, s| t.meet(&s.trunc));
        self.cover(subs, &target, &mut region)?;

        let mut powers: HashMap<(usize, u32), Self> = HashMap::new();
        let mut out = Self::zero(target.clone(), region.clone());
        for (m, c) in self.terms.terms() {
            let mut term = Self::from_poly(
                target.clone(),
                region.clone(),
                Polynomial::term(coef_part(m).map_vars(|&i| Sym::Coef(i)), c.clone()),
            );
            for (s, e) in m.factors() {
                if let Sym::Var(i) = s {
                    let p = powers.entry((*i, *e)).or_insert_with(|| subs[*i].truncate(&region).pow(*e)).clone();
                    term = term.mul_within(&p, region.clone());
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    fn cover(&self, subs: &[Self], target: &SeriesVars<C>, region: &mut Truncation) -> Result<(), AlgebraError> {
        let ords: Vec<Option<Orders>> = subs.iter().map(|s| s.orders()).collect();
        for (i, bound) in self.trunc.per_var.iter().enumerate() {
            let (Some(p), Some(o)) = (bound, &ords[i]) else { continue };
            let covered = region.total.is_some_and(|r| p * o.total >= r)
                || region.per_var.iter().zip(&o.per_var).any(|(r, ov)| r.is_some_and(|r| p * ov >= r));
            if covered {
                continue;
            }
            if o.total > 0 {
                region.total = min_bound(region.total, Some(p * o.total));
            } else if let Some(v) = o.per_var.iter().position(|&ov| ov > 0) {
                region.per_var[v] = min_bound(region.per_var[v], Some(p * o.per_var[v]));
            } else {
                return Err(AlgebraError::NonzeroConstantTerm);
            }
        }
        if let Some(t_out) = self.trunc.total {
            // A dropped outer term has weighted degree >= t_out; its image has order at
            // least ratio * t_out where ratio bounds image order per unit of outer weight.
            let ratio = |f: &dyn Fn(&Orders) -> u32| -> Option<(u32, u32)> {
                (0..self.vars.len())
                    .filter(|&i| self.vars.weight(i) > 0)
                    .filter_map(|i| ords[i].as_ref().map(|o| (f(o), self.vars.weight(i))))
                    .min_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)))
            };
            let image_order =
                |f: &dyn Fn(&Orders) -> u32| -> Option<u32> { ratio(f).map(|(num, den)| (num * t_out).div_ceil(den)) };
            let tot = image_order(&|o: &Orders| o.total);
            let covered = match tot {
                None => true,
                Some(t) => {
                    region.total.is_some_and(|r| t >= r)
                        || (0..target.len()).any(|v| {
                            region.per_var[v]
                                .is_some_and(|r| image_order(&|o: &Orders| o.per_var[v]).is_some_and(|x| x >= r))
                        })
                }
            };
            if !covered {
                let t = tot.unwrap_or(0);
                if t > 0 {
                    region.total = min_bound(region.total, Some(t));
                } else if let Some((v, x)) = (0..target.len())
                    .filter_map(|v| image_order(&|o: &Orders| o.per_var[v]).map(|x| (v, x)))
                    .find(|(_, x)| *x > 0)
                {
                    region.per_var[v] = min_bound(region.per_var[v], Some(x));
                } else {
                    return Err(AlgebraError::NonzeroConstantTerm);
                }
            }
        }
        Ok(())
    }

    /// Minimal orders of the terms; `None` for the zero series.
    fn orders(&self) -> Option<Orders> {
        if self.terms.is_zero() {
            return None;
        }
        let n = self.vars.len();
        let mut total = u32::MAX;
        let mut per_var = vec![u32::MAX; n];
        for m in self.terms.monomials() {
            total = total.min(self.vars.total(m));
            for (v, pv) in per_var.iter_mut().enumerate() {
                *pv = (*pv).min(m.exponent(&Sym::Var(v)));
            }
        }
        Some(Orders { total, per_var })
    }

    /// Formal partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms.terms() {
            let e = m.exponent(&Sym::Var(i));
            if e > 0 {
                out.add_term(m.with_exponent(&Sym::Var(i), e - 1), c.mul(&C::from_i64(e as i64)));
            }
        }
        let mut trunc = self.trunc.clone();
        if let Some(b) = trunc.per_var[i].as_mut() {
            *b = b.saturating_sub(1);
        }
        if let Some(t) = trunc.total.as_mut() {
            *t = t.saturating_sub(self.vars.weight(i));
        }
        Self::from_poly(self.vars.clone(), trunc, out)
    }

    /// Compositional inverse in variable `i`, other variables held as parameters.
    pub fn comp_inverse(&self, i: usize) -> Result<Self, AlgebraError> {
        if !self.coefficient_of(i, 0).is_zero() {
            return Err(AlgebraError::NonzeroConstantTerm);
        }
        let linear = self.coefficient_of(i, 1).truncate(&self.trunc);
        let linear_inv = linear.invert()?;
        let x = Self::var(self.vars.clone(), self.trunc.clone(), i);
        let higher = self.sub(&x.mul(&linear)?)?;
        let cap = self.trunc.max_word_length(&self.vars).ok_or_else(|| {
            AlgebraError::IncompatibleTruncation("compositional inverse needs a bounded region".into())
        })? + 2;
        let identity: Vec<Self> =
            (0..self.vars.len()).map(|v| Self::var(self.vars.clone(), self.trunc.clone(), v)).collect();
        let mut b = x.mul(&linear_inv)?;
        for _ in 0..=cap {
            let mut subs = identity.clone();
            subs[i] = b.clone();
            let next = x.sub(&higher.compose(&subs)?)?.mul(&linear_inv)?;
            if next.terms == b.terms {
                return Ok(next);
            }
            b = next;
        }
        Err(AlgebraError::IncompatibleTruncation("compositional inverse did not converge".into()))
    }

    /// Coefficientwise check that every coefficient lies in the integral lattice.
    pub fn is_integral(&self) -> bool {
        self.terms.is_integral()
    }
}

struct Orders {
    total: u32,
    per_var: Vec<u32>,
}

fn coef_part(m: &Monomial<Sym>) -> Monomial<usize> {
    Monomial::from_pairs(m.factors().iter().filter_map(|(s, e)| match s {
        Sym::Coef(i) => Some((*i, *e)),
        Sym::Var(_) => None,
    }))
}

impl<C: Scalar> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_poly_with(&self.terms, |s| self.vars.sym_name(s)))
    }
}
