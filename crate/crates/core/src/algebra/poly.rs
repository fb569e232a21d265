//! Sparse commutative polynomials with exact coefficients.

use std::collections::BTreeMap;

use super::monomial::Monomial;
use super::scalar::Scalar;

/// A finite `C`-linear combination of monomials in variables `V`.
///
/// Stored coefficients are always nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<V: Ord, C> {
    terms: BTreeMap<Monomial<V>, C>,
}

impl<V: Ord, C> Default for Polynomial<V, C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<V: Ord + Clone, C: Scalar> Polynomial<V, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial<V>, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial<V>) -> Self {
        Self::term(m, C::one())
    }

    pub fn var(v: V) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial<V>, C)> {
        self.terms.into_iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial<V>> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial<V>) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, d) in self.terms() {
            out.add_term(m.clone(), d.mul(c));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial<V>, c: &C) -> Self {
        let mut out = Self::zero();
        for (n, d) in self.terms() {
            out.add_term(n.mul(m), d.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            for (n, d) in other.terms() {
                out.add_term(m.mul(n), c.mul(d));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter<F: Fn(&Monomial<V>) -> bool>(&self, keep: F) -> Self {
        Self { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn map_vars<W: Ord + Clone, F: Fn(&V) -> W>(&self, f: F) -> Polynomial<W, C> {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.map_vars(&f), c.clone());
        }
        out
    }

    /// The component of weighted degree `d`.
    pub fn homogeneous_part<F: Fn(&V) -> u32>(&self, d: u32, weight: F) -> Self {
        self.filter(|m| m.degree(&weight) == d)
    }

    /// `Some(d)` when every term has weighted degree `d`; `None` for zero or mixed degrees.
    pub fn homogeneous_degree<F: Fn(&V) -> u32>(&self, weight: F) -> Option<u32> {
        let mut degrees = self.monomials().map(|m| m.degree(&weight));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Scalar::is_integral)
    }
}

/// Frobenius in characteristic 2: squares every monomial.
pub fn square_f2<V: Ord + Clone>(p: &Polynomial<V, super::F2>) -> Polynomial<V, super::F2> {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        out.add_term(m.pow(2), *c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{F2, Q};

    type P2 = Polynomial<usize, F2>;

    #[test]
    fn characteristic_two_cancellation() {
        let xi1_sq = P2::monomial(Monomial::power(0, 2));
        assert!(xi1_sq.add(&xi1_sq).is_zero());
        // (1 + ξ₁) + (ξ₁ + ξ₂) = 1 + ξ₂
        let a = P2::one().add(&P2::var(0));
        let b = P2::var(0).add(&P2::var(1));
        assert_eq!(a.add(&b), P2::one().add(&P2::var(1)));
    }

    #[test]
    fn frobenius_matches_direct_square() {
        let p = P2::var(0).add(&P2::var(1));
        assert_eq!(p.mul(&p), square_f2(&p));
    }

    #[test]
    fn rational_coefficients() {
        let x = Polynomial::<usize, Q>::var(0);
        let p = x.add(&Polynomial::one());
        let sq = p.mul(&p);
        assert_eq!(sq.coefficient(&Monomial::var(0)), Q::from_integer(2.into()));
        assert_eq!(sq.constant_term(), Q::from_integer(1.into()));
    }
}
