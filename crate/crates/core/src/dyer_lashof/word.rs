//! Operation words and the polynomial algebra on them.

use std::cmp::Reverse;

use super::context::DlContext;
use super::expr::Expr;
use crate::algebra::{Monomial, Polynomial, F2};

/// `Q^{s_1} ... Q^{s_k} g`, with `ops` listed outermost first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub gen: usize,
    pub ops: Vec<u32>,
}

impl Word {
    pub fn generator(gen: usize) -> Self {
        Self { gen, ops: Vec::new() }
    }

    pub fn degree(&self, ctx: &DlContext) -> u32 {
        ctx.degree(self.gen) + self.ops.iter().sum::<u32>()
    }

    /// `s_i <= 2 s_{i+1}` for every adjacent pair.
    pub fn is_admissible(&self) -> bool {
        self.ops.windows(2).all(|w| w[0] <= 2 * w[1])
    }

    /// Admissible, and every operation strictly exceeds the degree it acts on.
    pub fn is_basis_word(&self, ctx: &DlContext) -> bool {
        let mut d = ctx.degree(self.gen);
        for &s in self.ops.iter().rev() {
            if s <= d {
                return false;
            }
            d += s;
        }
        self.is_admissible()
    }

    pub fn display(&self, ctx: &DlContext) -> String {
        let mut out = String::new();
        for s in &self.ops {
            out.push_str(&format!("Q{s} "));
        }
        out.push_str(ctx.name(self.gen));
        out
    }

    pub fn to_expr(&self) -> Expr {
        self.ops.iter().rev().fold(Expr::Gen(self.gen), |e, &s| Expr::q(s, e))
    }
}

pub type DlMonomial = Monomial<Word>;

/// F₂-linear combination of monomials in operation words.
pub type DlPoly = Polynomial<Word, F2>;

pub fn monomial_degree(m: &DlMonomial, ctx: &DlContext) -> u32 {
    m.degree(|w| w.degree(ctx))
}

type DisplayKey = (Vec<(Reverse<u32>, Reverse<Vec<u32>>, usize, u32)>, u32);

/// Canonical term order for printing: compare factors from the highest-degree
/// word down, larger operations first, then shorter monomials.
fn display_key(m: &DlMonomial, ctx: &DlContext) -> DisplayKey {
    let mut factors: Vec<_> =
        m.factors().iter().map(|(w, e)| (Reverse(w.degree(ctx)), Reverse(w.ops.clone()), w.gen, *e)).collect();
    factors.sort();
    (factors, m.word_length())
}

fn ordered_factors<'m>(m: &'m DlMonomial, ctx: &DlContext) -> Vec<&'m (Word, u32)> {
    // Bare generators first, like x^4 Q12 y10.
    let mut fs: Vec<_> = m.factors().iter().collect();
    fs.sort_by_key(|(w, e)| (!w.ops.is_empty(), Reverse(w.degree(ctx)), w.ops.clone(), w.gen, *e));
    fs
}

pub fn display_monomial(m: &DlMonomial, ctx: &DlContext) -> String {
    if m.is_one() {
        return "1".into();
    }
    ordered_factors(m, ctx)
        .into_iter()
        .map(|(w, e)| match (*e, w.ops.is_empty()) {
            (1, _) => w.display(ctx),
            (e, true) => format!("{}^{e}", w.display(ctx)),
            (e, false) => format!("({})^{e}", w.display(ctx)),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn display_poly(p: &DlPoly, ctx: &DlContext) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut ms: Vec<&DlMonomial> = p.monomials().collect();
    ms.sort_by_cached_key(|m| display_key(m, ctx));
    ms.into_iter().map(|m| display_monomial(m, ctx)).collect::<Vec<_>>().join(" + ")
}

pub fn monomial_to_expr(m: &DlMonomial) -> Expr {
    Expr::product(
        m.factors().iter().map(|(w, e)| if *e == 1 { w.to_expr() } else { Expr::pow(w.to_expr(), *e) }).collect(),
    )
}

pub fn poly_to_expr(p: &DlPoly) -> Expr {
    Expr::sum(p.monomials().map(monomial_to_expr).collect())
}
