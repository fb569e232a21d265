//! Rewriting to the admissible basis of the free unstable algebra.
//!
//! The basis is the polynomial algebra on words `Q^{s_1} ... Q^{s_k} g` with
//! `s_i <= 2 s_{i+1}` and every operation strictly above the degree it acts on.
//! Normalization applies additivity, the Cartan formula, instability
//! (`Q^s y = 0` for `s < |y|`, `Q^{|y|} y = y^2`) and the Adem relations.

use std::cell::{Cell, RefCell};
use std::collections::{BTreeSet, HashMap};

use super::context::DlContext;
use super::expr::Expr;
use super::word::{monomial_degree, DlMonomial, DlPoly, Word};
use crate::algebra::binomial_mod2;
use crate::algebra::poly::square_f2;
use crate::algebra::{Monomial, Polynomial, F2};
use crate::error::DlError;

/// Default rewrite-step ceiling per top-level normalization.
pub const STEP_CEILING: u64 = 1_000_000;

/// One summand `Q^{outer} Q^{inner}` of an Adem expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdemTerm {
    pub outer: u32,
    pub inner: u32,
    /// Set when the term is zero by instability on the supplied degree.
    pub vanishes: bool,
}

/// Expands `Q^r Q^s` (`r > 2s`) as `sum_i binom(i-s-1, 2i-r) Q^{r+s-i} Q^i`.
///
/// With `degree = Some(d)`, terms that vanish on a class of degree `d` are flagged.
pub fn adem_step(r: u32, s: u32, degree: Option<u32>) -> Result<Vec<AdemTerm>, DlError> {
    if r <= 2 * s {
        return Err(DlError::AdmissiblePair { r, s });
    }
    let (r64, s64) = (i64::from(r), i64::from(s));
    let lo = (s64 + 1).max((r64 + 1) / 2);
    let hi = r64 - s64 - 1;
    let mut out = Vec::new();
    for i in lo..=hi {
        if binomial_mod2(i - s64 - 1, 2 * i - r64) {
            let inner = i as u32;
            let outer = r + s - inner;
            let vanishes = degree.is_some_and(|d| inner < d || outer < d + inner);
            out.push(AdemTerm { outer, inner, vanishes });
        }
    }
    Ok(out)
}

/// A single application `Q^s` to a class of degree `degree`, ranked by the
/// `E_n` level `s - degree + 2` it requires.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct Application {
    pub level: u32,
    pub degree: u32,
    pub s: u32,
}

/// Normal form plus the most demanding operation application met on the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub poly: DlPoly,
    pub max_application: Option<Application>,
}

impl Normalized {
    fn new(poly: DlPoly) -> Self {
        Self { poly, max_application: None }
    }

    /// The least `n` such that every recorded application lives in `E_n`; at least 1.
    pub fn level(&self) -> u32 {
        self.max_application.map_or(1, |a| a.level.max(1))
    }

    fn absorb(&mut self, app: Option<Application>) {
        self.max_application = self.max_application.max(app);
    }
}

/// Outcome of comparing two expressions through their normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub residual: DlPoly,
}

/// Order in which inadmissible pairs of a raw operation word are rewritten.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Instability and Adem interleaved from the generator outwards.
    #[default]
    BottomUp,
    /// Pure Adem rewriting at the leftmost inadmissible pair, then instability.
    LeftmostFirst,
    /// Pure Adem rewriting at the rightmost inadmissible pair, then instability.
    RightmostFirst,
}

type Memo = HashMap<(u32, DlMonomial), (DlPoly, Option<Application>)>;

/// Normalizer over one generator context. Holds a private memo table, so one
/// instance should not be shared between threads.
pub struct Normalizer<'a> {
    ctx: &'a DlContext,
    strategy: Strategy,
    window: Option<u32>,
    strict: bool,
    ceiling: u64,
    caching: bool,
    steps: Cell<u64>,
    memo: RefCell<Memo>,
}

impl<'a> Normalizer<'a> {
    pub fn new(ctx: &'a DlContext) -> Self {
        Self {
            ctx,
            strategy: Strategy::default(),
            window: None,
            strict: false,
            ceiling: STEP_CEILING,
            caching: true,
            steps: Cell::new(0),
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    /// Rejects any application needing more than an `E_n` structure.
    pub fn with_window(mut self, n: u32) -> Self {
        self.window = Some(n);
        self
    }

    /// Like [`Self::with_window`], but also rejects the top operation
    /// `Q^{d+n-2}` on degree `d`, whose properties are weaker than the rest.
    pub fn with_strict_window(mut self, n: u32) -> Self {
        self.window = Some(n);
        self.strict = true;
        self
    }

    pub fn with_step_ceiling(mut self, ceiling: u64) -> Self {
        self.ceiling = ceiling;
        self
    }

    pub fn with_caching(mut self, caching: bool) -> Self {
        self.caching = caching;
        self
    }

    pub fn context(&self) -> &DlContext {
        self.ctx
    }

    pub fn normalize(&self, e: &Expr) -> Result<Normalized, DlError> {
        self.steps.set(0);
        self.norm(e)
    }

    /// Checks `lhs = rhs` by normalizing their sum.
    pub fn verify_identity(&self, lhs: &Expr, rhs: &Expr) -> Result<IdentityCheck, DlError> {
        if let (Some(l), Some(r)) = (lhs.degree(self.ctx)?, rhs.degree(self.ctx)?) {
            if l != r {
                return Err(DlError::DegreeMismatch { lhs: l, rhs: r });
            }
        }
        let l = self.normalize(lhs)?;
        let r = self.normalize(rhs)?;
        let residual = l.poly.add(&r.poly);
        Ok(IdentityCheck { holds: residual.is_zero(), residual })
    }

    /// The `E_n` level needed along the normalization trace, with its witness.
    pub fn min_en_level(&self, e: &Expr) -> Result<(u32, Option<Application>), DlError> {
        let n = self.normalize(e)?;
        Ok((n.level(), n.max_application))
    }

    /// `Q^s` applied to an already normalized polynomial.
    pub fn apply_q(&self, s: u32, p: &DlPoly) -> Result<Normalized, DlError> {
        self.steps.set(0);
        self.apply_poly(s, p)
    }

    fn tick(&self) -> Result<(), DlError> {
        let n = self.steps.get() + 1;
        if n > self.ceiling {
            return Err(DlError::Watchdog(self.ceiling));
        }
        self.steps.set(n);
        Ok(())
    }

    fn norm(&self, e: &Expr) -> Result<Normalized, DlError> {
        Ok(match e {
            Expr::Zero => Normalized::new(DlPoly::zero()),
            Expr::One => Normalized::new(DlPoly::one()),
            Expr::Gen(i) => Normalized::new(DlPoly::var(Word::generator(*i))),
            Expr::Sum(ts) => {
                let mut acc = Normalized::new(DlPoly::zero());
                for t in ts {
                    let n = self.norm(t)?;
                    acc.poly.add_assign(&n.poly);
                    acc.absorb(n.max_application);
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = Normalized::new(DlPoly::one());
                for f in fs {
                    let n = self.norm(f)?;
                    acc.poly = acc.poly.mul(&n.poly);
                    acc.absorb(n.max_application);
                }
                acc
            }
            Expr::Pow(b, k) => {
                let mut n = self.norm(b)?;
                n.poly = n.poly.pow(*k);
                n
            }
            Expr::Q(s, inner) => match self.strategy {
                Strategy::BottomUp => {
                    let mut n = self.norm(inner)?;
                    let applied = self.apply_poly(*s, &n.poly)?;
                    n.poly = applied.poly;
                    n.absorb(applied.max_application);
                    n
                }
                _ => self.norm_chain(*s, inner)?,
            },
        })
    }

    /// Word strategies: gather the chain `Q^{s_1} Q^{s_2} ... base`, rewrite the
    /// raw operation sequence by Adem relations alone, then evaluate.
    fn norm_chain(&self, s: u32, inner: &Expr) -> Result<Normalized, DlError> {
        let mut chain = vec![s];
        let mut cur = inner;
        while let Expr::Q(t, e) = cur {
            chain.push(*t);
            cur = e;
        }
        let base = self.norm(cur)?;
        let mut out = Normalized::new(DlPoly::zero());
        out.absorb(base.max_application);
        for (m, _) in base.poly.terms() {
            match single_word(m) {
                Some(w) => {
                    let mut seq = chain.clone();
                    seq.extend_from_slice(&w.ops);
                    for adm in self.rewrite_sequence(seq)? {
                        let mut p = DlPoly::var(Word::generator(w.gen));
                        for &t in adm.iter().rev() {
                            let n = self.apply_poly(t, &p)?;
                            out.absorb(n.max_application);
                            p = n.poly;
                        }
                        out.poly.add_assign(&p);
                    }
                }
                None => {
                    let mut p = DlPoly::monomial(m.clone());
                    for &t in chain.iter().rev() {
                        let n = self.apply_poly(t, &p)?;
                        out.absorb(n.max_application);
                        p = n.poly;
                    }
                    out.poly.add_assign(&p);
                }
            }
        }
        Ok(out)
    }

    /// Admissible sequences equal to `seq` modulo Adem relations (mod 2 multiplicity).
    fn rewrite_sequence(&self, seq: Vec<u32>) -> Result<BTreeSet<Vec<u32>>, DlError> {
        let mut done = BTreeSet::new();
        let mut work = vec![seq];
        while let Some(q) = work.pop() {
            self.tick()?;
            let mut pairs = (0..q.len().saturating_sub(1)).filter(|&j| q[j] > 2 * q[j + 1]);
            let pick = match self.strategy {
                Strategy::RightmostFirst => pairs.next_back(),
                _ => pairs.next(),
            };
            match pick {
                None => {
                    if !done.remove(&q) {
                        done.insert(q);
                    }
                }
                Some(j) => {
                    for t in adem_step(q[j], q[j + 1], None)? {
                        debug_assert_eq!(t.outer + t.inner, q[j] + q[j + 1]);
                        let mut next = q.clone();
                        next.splice(j..j + 2, [t.outer, t.inner]);
                        work.push(next);
                    }
                }
            }
        }
        Ok(done)
    }

    fn apply_poly(&self, s: u32, p: &DlPoly) -> Result<Normalized, DlError> {
        let mut out = Normalized::new(DlPoly::zero());
        for (m, _) in p.terms() {
            let (v, app) = self.apply_mono(s, m)?;
            out.poly.add_assign(&v);
            out.absorb(app);
        }
        Ok(out)
    }

    fn apply_mono(&self, s: u32, m: &DlMonomial) -> Result<(DlPoly, Option<Application>), DlError> {
        if m.is_one() {
            return Ok((if s == 0 { DlPoly::one() } else { DlPoly::zero() }, None));
        }
        if self.caching {
            if let Some(hit) = self.memo.borrow().get(&(s, m.clone())) {
                return Ok(hit.clone());
            }
        }
        self.tick()?;
        let d = monomial_degree(m, self.ctx);
        let here = Application { level: (s + 2).saturating_sub(d), degree: d, s };
        if let Some(n) = self.window {
            if here.level > n || (self.strict && s > d && here.level == n) {
                return Err(DlError::OutsideWindow { s, degree: d, level: n });
            }
        }
        let mut app = Some(here);
        let value = if s < d {
            DlPoly::zero()
        } else if s == d {
            DlPoly::monomial(m.pow(2))
        } else {
            let (u, v) = m.square_split();
            if !u.is_one() {
                self.cartan_square(s, &u, &v, &mut app)?
            } else if m.factors().len() > 1 {
                self.cartan_split(s, m, &mut app)?
            } else {
                let w = &m.factors()[0].0;
                self.apply_word(s, w, &mut app)?
            }
        };
        debug_assert!(value.monomials().all(|t| monomial_degree(t, self.ctx) == s + d));
        if self.caching {
            self.memo.borrow_mut().insert((s, m.clone()), (value.clone(), app));
        }
        Ok((value, app))
    }

    /// `Q^s(u^2 v) = sum_{p even} (Q^{p/2} u)^2 Q^{s-p} v`.
    fn cartan_square(
        &self,
        s: u32,
        u: &DlMonomial,
        v: &DlMonomial,
        app: &mut Option<Application>,
    ) -> Result<DlPoly, DlError> {
        let du = monomial_degree(u, self.ctx);
        let dv = monomial_degree(v, self.ctx);
        let mut out = DlPoly::zero();
        let mut p = 2 * du;
        while p + dv <= s {
            let (qu, a1) = self.apply_mono(p / 2, u)?;
            if !qu.is_zero() {
                let (qv, a2) = self.apply_mono(s - p, v)?;
                *app = (*app).max(a1).max(a2);
                out.add_assign(&square_f2(&qu).mul(&qv));
            }
            p += 2;
        }
        Ok(out)
    }

    /// Cartan formula on a squarefree monomial, splitting off its first factor.
    fn cartan_split(&self, s: u32, m: &DlMonomial, app: &mut Option<Application>) -> Result<DlPoly, DlError> {
        let a = Monomial::var(m.factors()[0].0.clone());
        let b = a.quotient_of(m).expect("first factor divides");
        let da = monomial_degree(&a, self.ctx);
        let db = monomial_degree(&b, self.ctx);
        let mut out = DlPoly::zero();
        for p in da..=(s - db) {
            let (qa, a1) = self.apply_mono(p, &a)?;
            if qa.is_zero() {
                continue;
            }
            let (qb, a2) = self.apply_mono(s - p, &b)?;
            *app = (*app).max(a1).max(a2);
            out.add_assign(&qa.mul(&qb));
        }
        Ok(out)
    }

    /// `Q^s w` for a basis word `w` with `s > |w|`.
    fn apply_word(&self, s: u32, w: &Word, app: &mut Option<Application>) -> Result<DlPoly, DlError> {
        match w.ops.first() {
            Some(&t) if s > 2 * t => {
                let inner = Monomial::var(Word { gen: w.gen, ops: w.ops[1..].to_vec() });
                let mut out = DlPoly::zero();
                for term in adem_step(s, t, None)? {
                    self.tick()?;
                    let (iv, a1) = self.apply_mono(term.inner, &inner)?;
                    let ov = self.apply_poly(term.outer, &iv)?;
                    *app = (*app).max(a1).max(ov.max_application);
                    out.add_assign(&ov.poly);
                }
                Ok(out)
            }
            _ => {
                let mut ops = Vec::with_capacity(w.ops.len() + 1);
                ops.push(s);
                ops.extend_from_slice(&w.ops);
                Ok(Polynomial::term(Monomial::var(Word { gen: w.gen, ops }), F2(true)))
            }
        }
    }
}

fn single_word(m: &DlMonomial) -> Option<&Word> {
    match m.factors() {
        [(w, 1)] => Some(w),
        _ => None,
    }
}

/// Whether every monomial of `p` is a product of basis words.
pub fn is_normal_form(p: &DlPoly, ctx: &DlContext) -> bool {
    p.monomials().all(|m| m.factors().iter().all(|(w, _)| w.is_basis_word(ctx)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyer_lashof::parser::parse_expression;
    use crate::dyer_lashof::word::display_poly;

    fn ctx() -> DlContext {
        DlContext::from_pairs(&[("x", 2), ("y", 4)]).unwrap()
    }

    fn nf(text: &str, c: &DlContext) -> String {
        let e = parse_expression(text, c).unwrap();
        display_poly(&Normalizer::new(c).normalize(&e).unwrap().poly, c)
    }

    #[test]
    fn adem_expansions() {
        let terms =
            |r, s| -> Vec<(u32, u32)> { adem_step(r, s, None).unwrap().iter().map(|t| (t.outer, t.inner)).collect() };
        assert_eq!(terms(20, 8), vec![(18, 10), (17, 11)]);
        assert_eq!(terms(20, 6), vec![(16, 10), (14, 12), (13, 13)]);
        let on_four = adem_step(20, 6, Some(4)).unwrap();
        assert_eq!(on_four.iter().map(|t| t.vanishes).collect::<Vec<_>>(), vec![false, true, true]);
        assert_eq!(adem_step(3, 2, None), Err(DlError::AdmissiblePair { r: 3, s: 2 }));
    }

    #[test]
    fn instability_and_squares() {
        let c = ctx();
        assert_eq!(nf("Q1 x", &c), "0");
        assert_eq!(nf("Q2 x", &c), "x^2");
        assert_eq!(nf("Q10 x^2", &c), "(Q5 x)^2");
        assert_eq!(nf("Q20 Q6 y", &c), "Q16 Q10 y");
    }

    #[test]
    fn level_of_single_application() {
        let c = ctx();
        let e = parse_expression("Q3 x", &c).unwrap();
        assert_eq!(Normalizer::new(&c).min_en_level(&e).unwrap().0, 3);
        assert_eq!(Normalizer::new(&c).min_en_level(&Expr::Gen(0)).unwrap(), (1, None));
    }

    #[test]
    fn window_rejects_high_operations() {
        let c = ctx();
        let e = parse_expression("Q5 x", &c).unwrap();
        assert!(Normalizer::new(&c).with_window(5).normalize(&e).is_ok());
        assert_eq!(
            Normalizer::new(&c).with_window(4).normalize(&e),
            Err(DlError::OutsideWindow { s: 5, degree: 2, level: 4 })
        );
    }

    #[test]
    fn strict_window_excludes_the_top_operation() {
        let c = ctx();
        let e = parse_expression("Q5 x", &c).unwrap();
        assert!(Normalizer::new(&c).with_strict_window(6).normalize(&e).is_ok());
        assert!(Normalizer::new(&c).with_strict_window(5).normalize(&e).is_err());
        let square = parse_expression("Q2 x", &c).unwrap();
        assert!(Normalizer::new(&c).with_strict_window(2).normalize(&square).is_ok());
    }

    #[test]
    fn watchdog_fires() {
        let c = ctx();
        let e = parse_expression("Q20 Q8 x", &c).unwrap();
        assert_eq!(Normalizer::new(&c).with_step_ceiling(2).normalize(&e), Err(DlError::Watchdog(2)));
    }

    #[test]
    fn identities_and_degree_mismatch() {
        let c = ctx();
        let n = Normalizer::new(&c);
        let p = |t: &str| parse_expression(t, &c).unwrap();
        assert!(n.verify_identity(&p("Q2 x"), &p("x^2")).unwrap().holds);
        assert!(n.verify_identity(&p("Q18 (Q4 x)^2"), &Expr::Zero).unwrap().holds);
        let bad = n.verify_identity(&p("Q3 x"), &p("Q4 x")).unwrap_err();
        assert_eq!(bad, DlError::DegreeMismatch { lhs: 5, rhs: 6 });
        let fail = n.verify_identity(&p("Q4 x"), &p("x y")).unwrap();
        assert!(!fail.holds);
    }

    #[test]
    fn strategies_agree_on_inadmissible_words() {
        let c = ctx();
        for text in ["Q20 Q8 x", "Q9 Q3 Q1 y", "Q17 Q5 Q3 x", "Q12 Q4 Q2 x"] {
            let e = parse_expression(text, &c).unwrap();
            let a = Normalizer::new(&c).normalize(&e).unwrap().poly;
            let b = Normalizer::new(&c).with_strategy(Strategy::LeftmostFirst).normalize(&e).unwrap().poly;
            let r = Normalizer::new(&c).with_strategy(Strategy::RightmostFirst).normalize(&e).unwrap().poly;
            assert_eq!(a, b, "{text}");
            assert_eq!(a, r, "{text}");
            assert!(is_normal_form(&a, &c));
        }
    }
}
