//! Coefficient classes, quotient classes and the operations between them.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::chain::Identification;
use crate::algebra::{Monomial, Sym};
use crate::error::HopfError;
use crate::formal_groups::law::{coefficients_by_var, A, X, Y};
use crate::formal_groups::{FormalGroupLaw, PowerOpResult};

/// An element of `π_*MU` modulo decomposables, reduced mod 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CoeffClass {
    Zero,
    One,
    /// The indecomposable `x_n` of degree `2n`.
    X(u32),
}

impl CoeffClass {
    pub fn degree(self) -> Option<u32> {
        match self {
            CoeffClass::Zero => None,
            CoeffClass::One => Some(0),
            CoeffClass::X(n) => Some(2 * n),
        }
    }
}

/// Products of two positive-degree classes are decomposable.
impl std::ops::Mul for CoeffClass {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        match (self, other) {
            (CoeffClass::Zero, _) | (_, CoeffClass::Zero) => CoeffClass::Zero,
            (CoeffClass::One, c) | (c, CoeffClass::One) => c,
            (CoeffClass::X(_), CoeffClass::X(_)) => CoeffClass::Zero,
        }
    }
}

impl fmt::Display for CoeffClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffClass::Zero => write!(f, "0"),
            CoeffClass::One => write!(f, "1"),
            CoeffClass::X(n) => write!(f, "x{n}"),
        }
    }
}

/// An F₂-sum of classes `[c] ∘ b₁^{∘m}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HopfClass {
    terms: BTreeSet<(CoeffClass, u32)>,
}

impl HopfClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(c: CoeffClass, m: u32) -> Self {
        let mut out = Self::zero();
        out.toggle(c, m);
        out
    }

    fn toggle(&mut self, c: CoeffClass, m: u32) {
        if c != CoeffClass::Zero && !self.terms.remove(&(c, m)) {
            self.terms.insert((c, m));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (CoeffClass, u32)> + '_ {
        self.terms.iter().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, m) in other.terms() {
            out.toggle(c, m);
        }
        out
    }

    /// Degrees of the terms, `deg(c) + 2m`.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.iter().filter_map(|(c, m)| c.degree().map(|d| d + 2 * m)).collect()
    }
}

impl fmt::Display for HopfClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(c, m)| format!("[{c}] o b1^o{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A term before the quotient rules: `[c₁ c₂ ...] ∘ b_{i₁} ∘ b_{i₂} ∘ ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTerm {
    pub coefficients: Vec<CoeffClass>,
    pub b_indices: Vec<u32>,
}

/// Order in which the two quotient rules are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleOrder {
    KillHigherBFirst,
    ContractCoefficientsFirst,
}

impl RawTerm {
    fn kills_b(&self) -> bool {
        self.b_indices.iter().any(|&i| i >= 2)
    }

    fn contract(&self) -> CoeffClass {
        self.coefficients.iter().fold(CoeffClass::One, |acc, &c| acc * c)
    }
}

impl HopfClass {
    /// Applies `b_i ↦ 0 (i ≥ 2)` and the coefficient contraction in the given order.
    pub fn from_raw(terms: &[RawTerm], order: RuleOrder) -> Self {
        let mut out = Self::zero();
        for t in terms {
            let (c, m) = match order {
                RuleOrder::KillHigherBFirst => {
                    if t.kills_b() {
                        continue;
                    }
                    (t.contract(), t.b_indices.len() as u32)
                }
                RuleOrder::ContractCoefficientsFirst => {
                    let c = t.contract();
                    if c == CoeffClass::Zero || t.kills_b() {
                        continue;
                    }
                    (c, t.b_indices.len() as u32)
                }
            };
            out.toggle(c, m);
        }
        out
    }
}

/// Coefficients `c_i` of `P(x) = Σ c_i αⁱ` modulo decomposables, for `x` of degree `2n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PSeries {
    pub source_degree: u32,
    pub coefficients: Vec<CoeffClass>,
}

impl PSeries {
    pub fn unit() -> Self {
        Self { source_degree: 0, coefficients: vec![CoeffClass::One] }
    }

    pub fn zero(source_degree: u32, len: usize) -> Self {
        Self { source_degree, coefficients: vec![CoeffClass::Zero; len] }
    }

    pub fn coefficient(&self, i: u32) -> CoeffClass {
        self.coefficients.get(i as usize).copied().unwrap_or(CoeffClass::Zero)
    }
}

impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != CoeffClass::Zero)
            .map(|(i, c)| format!("{c} a^{i}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Reads the reduced power operation modulo decomposables through `identification`.
pub fn import_pseries(result: &PowerOpResult, identification: &Identification) -> Result<PSeries, HopfError> {
    let ring = result.reduced.vars().ring().clone();
    let len = result.precision().unwrap_or(0) as usize;
    let mut coefficients = vec![CoeffClass::Zero; len];
    for (vm, coef) in coefficients_by_var(&result.reduced) {
        if vm.exponent(&Sym::Var(X)) > 0 || vm.exponent(&Sym::Var(Y)) > 0 {
            return Err(HopfError::Unidentified(format!("{vm:?}")));
        }
        let i = vm.exponent(&Sym::Var(A));
        let mut class = CoeffClass::Zero;
        for (m, q) in coef.terms() {
            let odd = q.is_integer() && (q.to_integer() % 2u32) != 0.into();
            if m.word_length() >= 2 || !odd {
                continue;
            }
            let next = if m.is_one() {
                CoeffClass::One
            } else {
                let g = &ring.generators()[m.factors()[0].0];
                let n = identification.target(&g.name).ok_or_else(|| HopfError::Unidentified(g.name.clone()))?;
                if 2 * n != g.degree {
                    return Err(HopfError::Unidentified(format!(
                        "{} has degree {}, x{n} has degree {}",
                        g.name,
                        g.degree,
                        2 * n
                    )));
                }
                CoeffClass::X(n)
            };
            if class != CoeffClass::Zero {
                return Err(HopfError::Unidentified(format!("coefficient of a^{i} has several indecomposable terms")));
            }
            class = next;
        }
        if (i as usize) < len {
            coefficients[i as usize] = class;
        }
    }
    Ok(PSeries { source_degree: 2 * result.n, coefficients })
}

/// `Q̂^{2k}([1] # ([x] ∘ b₁^{∘n})) ≡ [c_{k-n}] ∘ b₁^{∘(k+n)}` for `x` of degree `2n`.
pub fn qhat_on_hurewicz(k: u32, n: u32, p: &PSeries) -> HopfClass {
    if k < n {
        return HopfClass::zero();
    }
    HopfClass::term(p.coefficient(k - n), k + n)
}

/// `Q̂^s b₁ = b₁ ∘ b_{s/2}`, which survives the quotient only for `s = 2`.
pub fn qhat_b1(s: u32) -> Result<HopfClass, HopfError> {
    if s % 2 == 1 {
        return Err(HopfError::OddSuperscript(s));
    }
    Ok(if s == 2 { HopfClass::term(CoeffClass::One, 2) } else { HopfClass::zero() })
}

/// An F₂-sum of suspended generators `σx_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuspendedClass(pub BTreeSet<u32>);

impl fmt::Display for SuspendedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|n| format!("sigma x{n}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `[x_n] ∘ b₁^{∘m} ↦ σx_n`; unit-coefficient classes go to zero.
pub fn suspend_to_dual(h: &HopfClass) -> SuspendedClass {
    let mut out = BTreeSet::new();
    for (c, _) in h.terms() {
        if let CoeffClass::X(n) = c {
            if !out.remove(&n) {
                out.insert(n);
            }
        }
    }
    SuspendedClass(out)
}

/// The relation `b(s + t) = Σ [a_{i,j}] ∘ b(s)^{∘i} ∘ b(t)^{∘j}` expressing
/// the formal sum through the coefficients of `x +_F y`.
#[derive(Clone, Copy, Debug, Default)]
pub struct RavenelWilsonRule;

impl RavenelWilsonRule {
    /// The pairs `(i, j)` with `a_{i,j} ≠ 0` in `law`, with their coefficients.
    pub fn terms(&self, law: &FormalGroupLaw) -> Vec<(u32, u32, String)> {
        let mut out: Vec<(u32, u32, String)> = coefficients_by_var(law.sum())
            .into_iter()
            .map(|(m, c): (Monomial<Sym>, _)| {
                (m.exponent(&Sym::Var(X)), m.exponent(&Sym::Var(Y)), law.ring().display(&c))
            })
            .collect();
        out.sort();
        out
    }

    /// For the additive law the relation is `b(s + t) = b(s) # b(t)`: the only
    /// nonzero coefficients are `a_{1,0} = a_{0,1} = 1`.
    pub fn check_additive(&self, law: &FormalGroupLaw) -> bool {
        self.terms(law) == vec![(0, 1, "1".to_string()), (1, 0, "1".to_string())]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qhat_examples() {
        let p = PSeries {
            source_degree: 4,
            coefficients: vec![CoeffClass::Zero, CoeffClass::Zero, CoeffClass::Zero, CoeffClass::X(7)],
        };
        assert_eq!(qhat_on_hurewicz(5, 2, &p), HopfClass::term(CoeffClass::X(7), 7));
        assert!(qhat_on_hurewicz(4, 2, &p).is_zero());
        assert!(qhat_on_hurewicz(2, 2, &p).is_zero());
        assert!(qhat_on_hurewicz(1, 2, &p).is_zero());
    }

    #[test]
    fn qhat_b1_rules() {
        assert_eq!(qhat_b1(2).unwrap(), HopfClass::term(CoeffClass::One, 2));
        assert!(qhat_b1(4).unwrap().is_zero());
        assert_eq!(qhat_b1(3).unwrap_err(), HopfError::OddSuperscript(3));
    }

    #[test]
    fn suspension_examples() {
        assert_eq!(suspend_to_dual(&HopfClass::term(CoeffClass::X(7), 7)).to_string(), "sigma x7");
        assert_eq!(suspend_to_dual(&HopfClass::term(CoeffClass::One, 3)).to_string(), "0");
        let two = HopfClass::term(CoeffClass::X(7), 7).add(&HopfClass::term(CoeffClass::X(7), 3));
        assert_eq!(suspend_to_dual(&two).to_string(), "0");
    }

    #[test]
    fn degrees_add() {
        let h = HopfClass::term(CoeffClass::X(7), 7);
        assert_eq!(h.degrees().into_iter().collect::<Vec<_>>(), vec![28]);
    }

    #[test]
    fn additive_specialization_of_the_relation() {
        let law =
            FormalGroupLaw::from_config(&crate::formal_groups::FglConfig::preset("additive-z").unwrap(), 8).unwrap();
        assert!(RavenelWilsonRule.check_additive(&law));
        let other = FormalGroupLaw::from_config(&crate::formal_groups::FglConfig::preset("appendix-z-v3").unwrap(), 10)
            .unwrap();
        assert!(!RavenelWilsonRule.check_additive(&other));
    }
}
