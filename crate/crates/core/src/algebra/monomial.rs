//! Commutative monomials stored as sorted exponent vectors.

use std::fmt;

/// A commutative monomial over variables of type `V`.
///
/// Factors are kept sorted by variable with strictly positive exponents, so
/// structural equality is monomial equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial<V> {
    factors: Vec<(V, u32)>,
}

impl<V: fmt::Debug> fmt::Debug for Monomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.factors.iter()).finish()
    }
}

impl<V> Default for Monomial<V> {
    fn default() -> Self {
        Self { factors: Vec::new() }
    }
}

impl<V: Ord + Clone> Monomial<V> {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: V) -> Self {
        Self { factors: vec![(v, 1)] }
    }

    pub fn power(v: V, exp: u32) -> Self {
        if exp == 0 {
            Self::one()
        } else {
            Self { factors: vec![(v, exp)] }
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (V, u32)>>(pairs: I) -> Self {
        let mut factors: Vec<(V, u32)> = pairs.into_iter().filter(|(_, e)| *e > 0).collect();
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(V, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some((last, le)) if *last == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Self { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(V, u32)] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<(V, u32)> {
        self.factors
    }

    pub fn exponent(&self, v: &V) -> u32 {
        self.factors.binary_search_by(|(w, _)| w.cmp(v)).map(|i| self.factors[i].1).unwrap_or(0)
    }

    /// Number of variable factors counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn degree<F: Fn(&V) -> u32>(&self, weight: F) -> u32 {
        self.factors.iter().map(|(v, e)| weight(v) * e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = &self.factors[i];
            let (b, eb) = &other.factors[j];
            match a.cmp(b) {
                std::cmp::Ordering::Less => {
                    out.push((a.clone(), *ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b.clone(), *eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.clone(), ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Self { factors: out }
    }

    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one();
        }
        Self { factors: self.factors.iter().map(|(v, e)| (v.clone(), e * n)).collect() }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// `other / self`, or `None` when `self` does not divide `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let factors = other
            .factors
            .iter()
            .filter_map(|(v, e)| {
                let rest = e - self.exponent(v);
                (rest > 0).then(|| (v.clone(), rest))
            })
            .collect();
        Some(Self { factors })
    }

    /// Drops the variable `v` entirely, returning its exponent and the remainder.
    pub fn split_off(&self, v: &V) -> (u32, Self) {
        let e = self.exponent(v);
        let factors = self.factors.iter().filter(|(w, _)| w != v).cloned().collect();
        (e, Self { factors })
    }

    /// Replaces the exponent of `v`.
    pub fn with_exponent(&self, v: &V, exp: u32) -> Self {
        let (_, rest) = self.split_off(v);
        rest.mul(&Self::power(v.clone(), exp))
    }

    /// Writes the monomial as `u² · v` with `v` squarefree, returning `(u, v)`.
    pub fn square_split(&self) -> (Self, Self) {
        let u = self.factors.iter().filter(|(_, e)| e / 2 > 0).map(|(v, e)| (v.clone(), e / 2)).collect();
        let w = self.factors.iter().filter(|(_, e)| e % 2 == 1).map(|(v, _)| (v.clone(), 1)).collect();
        (Self { factors: u }, Self { factors: w })
    }

    pub fn map_vars<W: Ord + Clone, F: Fn(&V) -> W>(&self, f: F) -> Monomial<W> {
        Monomial::from_pairs(self.factors.iter().map(|(v, e)| (f(v), *e)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_merges_exponents() {
        let a = Monomial::from_pairs([(0usize, 1), (2, 3)]);
        let b = Monomial::from_pairs([(2usize, 1), (1, 1)]);
        let c = a.mul(&b);
        assert_eq!(c.factors(), &[(0, 1), (1, 1), (2, 4)]);
        assert_eq!(c.word_length(), 6);
    }

    #[test]
    fn square_split_and_quotient() {
        let m = Monomial::from_pairs([(0usize, 3), (1, 2)]);
        let (u, v) = m.square_split();
        assert_eq!(u.pow(2).mul(&v), m);
        assert_eq!(v.factors(), &[(0, 1)]);
        let q = Monomial::var(0usize).quotient_of(&m).unwrap();
        assert_eq!(q.exponent(&0), 2);
        assert!(Monomial::var(3usize).quotient_of(&m).is_none());
    }
}
