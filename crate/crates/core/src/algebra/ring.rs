//! Graded polynomial rings, optionally modulo monomial-led relations.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::scalar::Scalar;
use crate::error::AlgebraError;

/// A named generator with a fixed non-negative degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Self { name: name.into(), degree }
    }
}

/// A rewrite `lead -> replacement` presenting one relation of a quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<C> {
    pub lead: Monomial<usize>,
    pub replacement: Polynomial<usize, C>,
}

/// A polynomial ring over `C` with a finite list of relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<C> {
    generators: Vec<Generator>,
    relations: Vec<Relation<C>>,
}

const REDUCTION_CEILING: usize = 100_000;

impl<C: Scalar> PolyRing<C> {
    pub fn free(generators: Vec<Generator>) -> Result<Self, AlgebraError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.name.as_str()) {
                return Err(AlgebraError::Parse { text: g.name.clone(), msg: "duplicate generator".into() });
            }
        }
        Ok(Self { generators, relations: Vec::new() })
    }

    /// Adds `lead = replacement`; the relation must be homogeneous.
    pub fn with_relation(
        mut self,
        lead: Monomial<usize>,
        replacement: Polynomial<usize, C>,
    ) -> Result<Self, AlgebraError> {
        let d = self.monomial_degree(&lead);
        if replacement.monomials().any(|m| self.monomial_degree(m) != d) {
            return Err(AlgebraError::InhomogeneousRelation(format!(
                "{} = {}",
                self.fmt_monomial(&lead),
                self.fmt_poly(&replacement)
            )));
        }
        self.relations.push(Relation { lead, replacement });
        Ok(self)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation<C>] {
        &self.relations
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn degree_of(&self, i: usize) -> u32 {
        self.generators[i].degree
    }

    pub fn monomial_degree(&self, m: &Monomial<usize>) -> u32 {
        m.degree(|&i| self.generators[i].degree)
    }

    /// Normal form modulo the relations. Idempotent.
    pub fn reduce(&self, p: &Polynomial<usize, C>) -> Polynomial<usize, C> {
        self.reduce_in(p, |&i| i)
    }

    /// Normal form of a polynomial whose variables embed the ring generators.
    pub fn reduce_in<V: Ord + Clone>(&self, p: &Polynomial<V, C>, embed: impl Fn(&usize) -> V) -> Polynomial<V, C> {
        if self.relations.is_empty() {
            return p.clone();
        }
        let rels: Vec<(Monomial<V>, Polynomial<V, C>)> =
            self.relations.iter().map(|r| (r.lead.map_vars(&embed), r.replacement.map_vars(&embed))).collect();
        let mut current = p.clone();
        for _ in 0..REDUCTION_CEILING {
            let mut next = Polynomial::zero();
            let mut changed = false;
            for (m, c) in current.terms() {
                match rels.iter().find_map(|(lead, rep)| lead.quotient_of(m).map(|q| (q, rep))) {
                    Some((q, rep)) => {
                        changed = true;
                        next.add_assign(&rep.mul_monomial(&q, c));
                    }
                    None => next.add_term(m.clone(), c.clone()),
                }
            }
            if !changed {
                return next;
            }
            current = next;
        }
        panic!("relation rewriting did not terminate; relations must decrease their leads");
    }

    pub fn fmt_monomial(&self, m: &Monomial<usize>) -> String {
        fmt_monomial_with(m, |&i| self.generators[i].name.clone())
    }

    pub fn fmt_poly(&self, p: &Polynomial<usize, C>) -> String {
        fmt_poly_with(p, |&i| self.generators[i].name.clone())
    }

    /// Parses text such as `3 b1^2 b3 - 1/2 v3` against the generator names.
    pub fn parse(&self, text: &str) -> Result<Polynomial<usize, C>, AlgebraError> {
        parse_poly(text, |name| self.index_of(name))
    }
}

/// Writes a monomial as `b1^2 b3`, or `1` for the empty monomial.
pub fn fmt_monomial_with<V: Ord + Clone>(m: &Monomial<V>, name: impl Fn(&V) -> String) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.factors()
        .iter()
        .map(|(v, e)| if *e == 1 { name(v) } else { format!("{}^{e}", name(v)) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Terms ordered by word length, then by monomial order; coefficients printed when not 1.
pub fn fmt_poly_with<V: Ord + Clone, C: Scalar>(p: &Polynomial<V, C>, name: impl Fn(&V) -> String) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| a.0.word_length().cmp(&b.0.word_length()).then(a.0.cmp(b.0)));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let mut coeff = c.to_string();
        let negative = coeff.starts_with('-');
        if negative {
            coeff.remove(0);
        }
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = fmt_monomial_with(m, &name);
        match (coeff == "1", m.is_one()) {
            (true, _) => out.push_str(&mono),
            (false, true) => out.push_str(&coeff),
            (false, false) => {
                out.push_str(&coeff);
                out.push(' ');
                out.push_str(&mono);
            }
        }
    }
    out
}

/// Parses a signed sum of terms `coeff factor factor ...` with factors `name` or `name^k`.
/// Coefficients are integers or fractions `p/q`; products may use spaces or `*`.
pub fn parse_poly<V: Ord + Clone, C: Scalar>(
    text: &str,
    lookup: impl Fn(&str) -> Option<V>,
) -> Result<Polynomial<V, C>, AlgebraError> {
    let err = |msg: &str| AlgebraError::Parse { text: text.to_string(), msg: msg.to_string() };
    let spaced = text.replace('+', " + ").replace('-', " - ").replace('*', " ");
    let mut out = Polynomial::zero();
    let mut sign: i64 = 1;
    let mut coeff = C::one();
    let mut mono = Monomial::one();
    let mut in_term = false;
    let flush = |out: &mut Polynomial<V, C>, sign: i64, coeff: &C, mono: &Monomial<V>| {
        out.add_term(mono.clone(), coeff.mul(&C::from_i64(sign)));
    };
    for tok in spaced.split_whitespace() {
        match tok {
            "+" | "-" => {
                if in_term {
                    flush(&mut out, sign, &coeff, &mono);
                    sign = 1;
                    coeff = C::one();
                    mono = Monomial::one();
                    in_term = false;
                }
                if tok == "-" {
                    sign = -sign;
                }
            }
            _ if tok.starts_with(|c: char| c.is_ascii_digit()) => {
                let (num, den) = match tok.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (tok, "1"),
                };
                let num: i64 = num.parse().map_err(|_| err("bad coefficient"))?;
                let den: i64 = den.parse().map_err(|_| err("bad coefficient"))?;
                let inv = C::from_i64(den).inverse().ok_or_else(|| err("denominator not invertible"))?;
                coeff = coeff.mul(&C::from_i64(num)).mul(&inv);
                in_term = true;
            }
            _ => {
                let (name, exp) = match tok.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (tok, 1),
                };
                let v = lookup(name).ok_or_else(|| AlgebraError::UnknownVariable(name.into()))?;
                mono = mono.mul(&Monomial::power(v, exp));
                in_term = true;
            }
        }
    }
    if !in_term {
        return Err(err("expected a term"));
    }
    flush(&mut out, sign, &coeff, &mono);
    Ok(out)
}

/// An element of a shared polynomial ring. Arithmetic between different rings is an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPolynomial<C> {
    ring: Arc<PolyRing<C>>,
    poly: Polynomial<usize, C>,
}

impl<C: Scalar> GradedPolynomial<C> {
    pub fn new(ring: Arc<PolyRing<C>>, poly: Polynomial<usize, C>) -> Self {
        let poly = ring.reduce(&poly);
        Self { ring, poly }
    }

    pub fn zero(ring: Arc<PolyRing<C>>) -> Self {
        Self { ring, poly: Polynomial::zero() }
    }

    pub fn one(ring: Arc<PolyRing<C>>) -> Self {
        Self::new(ring, Polynomial::one())
    }

    pub fn generator(ring: Arc<PolyRing<C>>, name: &str) -> Result<Self, AlgebraError> {
        let i = ring.index_of(name).ok_or_else(|| AlgebraError::UnknownVariable(name.into()))?;
        Ok(Self::new(ring, Polynomial::var(i)))
    }

    pub fn parse(ring: Arc<PolyRing<C>>, text: &str) -> Result<Self, AlgebraError> {
        let p = ring.parse(text)?;
        Ok(Self::new(ring, p))
    }

    pub fn ring(&self) -> &Arc<PolyRing<C>> {
        &self.ring
    }

    pub fn poly(&self) -> &Polynomial<usize, C> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn same_ring(&self, other: &Self) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_ring(other)?;
        Ok(Self { ring: self.ring.clone(), poly: self.poly.add(&other.poly) })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_ring(other)?;
        Ok(Self::new(self.ring.clone(), self.poly.mul(&other.poly)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.ring.clone());
        for _ in 0..n {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// `Some(d)` when homogeneous of degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.poly.homogeneous_degree(|&i| self.ring.degree_of(i))
    }

    /// Projection onto the span of single generators.
    pub fn indecomposable_part(&self) -> Self {
        Self { ring: self.ring.clone(), poly: self.poly.filter(|m| m.word_length() == 1) }
    }
}

impl<C: Scalar> fmt::Display for GradedPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.fmt_poly(&self.poly))
    }
}

/// Degrees in `0..=max_degree` carrying at least one generator.
pub fn indecomposable_degrees(generators: &[Generator], max_degree: u32) -> BTreeSet<u32> {
    generators.iter().map(|g| g.degree).filter(|&d| d <= max_degree).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{F2, Q};

    fn hmu() -> Arc<PolyRing<F2>> {
        let gens = (1..=5).map(|i| Generator::new(format!("b{i}"), 2 * i)).collect();
        Arc::new(PolyRing::free(gens).unwrap())
    }

    fn z_v3() -> Arc<PolyRing<Q>> {
        let ring = PolyRing::free(vec![Generator::new("v3", 14)]).unwrap();
        Arc::new(ring.with_relation(Monomial::power(0, 2), Polynomial::zero()).unwrap())
    }

    #[test]
    fn cancellation_and_frobenius() {
        let r = hmu();
        let a = GradedPolynomial::parse(r.clone(), "b3 + b1 b2").unwrap();
        let b = GradedPolynomial::parse(r.clone(), "b1 b2").unwrap();
        assert_eq!(a.add(&b).unwrap().to_string(), "b3");
        let s = GradedPolynomial::parse(r, "b1 + b2").unwrap().pow(2);
        assert_eq!(s.to_string(), "b1^2 + b2^2");
    }

    #[test]
    fn nilpotent_relation() {
        let r = z_v3();
        let v = GradedPolynomial::generator(r.clone(), "v3").unwrap();
        assert!(v.mul(&v).unwrap().is_zero());
        let p = GradedPolynomial::parse(r, "2 - 127 v3").unwrap();
        assert_eq!(p.to_string(), "2 - 127 v3");
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = GradedPolynomial::one(hmu());
        let other = Arc::new(PolyRing::<F2>::free(vec![Generator::new("x", 2)]).unwrap());
        let b = GradedPolynomial::one(other);
        assert_eq!(a.add(&b), Err(AlgebraError::RingMismatch));
    }

    #[test]
    fn indecomposables() {
        let r = hmu();
        let p = GradedPolynomial::parse(r, "b5 + b1 b4 + b2 b3 + b1 b2^2").unwrap();
        assert_eq!(p.indecomposable_part().to_string(), "b5");
        let gens: Vec<_> = (1..=5).map(|i| Generator::new(format!("b{i}"), 2 * i)).collect();
        assert_eq!(indecomposable_degrees(&gens, 10).into_iter().collect::<Vec<_>>(), vec![2, 4, 6, 8, 10]);
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let ring = PolyRing::<Q>::free(vec![Generator::new("v3", 14)]).unwrap();
        let err = ring.with_relation(Monomial::power(0, 2), Polynomial::one());
        assert!(matches!(err, Err(AlgebraError::InhomogeneousRelation(_))));
    }
}
