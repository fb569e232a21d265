//! Operation expressions: generators, `Q^s`, sums, products and powers.

use super::context::DlContext;
use crate::error::DlError;

/// Abstract syntax tree of an operation expression. Generators are indices
/// into a [`DlContext`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Zero,
    One,
    Gen(usize),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
    Q(u32, Box<Expr>),
}

impl Expr {
    pub fn q(s: u32, e: Expr) -> Self {
        Expr::Q(s, Box::new(e))
    }

    pub fn pow(e: Expr, n: u32) -> Self {
        Expr::Pow(Box::new(e), n)
    }

    /// Sum that avoids one-element and empty sums.
    pub fn sum(mut terms: Vec<Expr>) -> Self {
        match terms.len() {
            0 => Expr::Zero,
            1 => terms.pop().unwrap(),
            _ => Expr::Sum(terms),
        }
    }

    /// Product that avoids one-element and empty products.
    pub fn product(mut factors: Vec<Expr>) -> Self {
        match factors.len() {
            0 => Expr::One,
            1 => factors.pop().unwrap(),
            _ => Expr::Product(factors),
        }
    }

    /// Static degree. `Ok(None)` for expressions that are syntactically zero.
    pub fn degree(&self, ctx: &DlContext) -> Result<Option<u32>, DlError> {
        Ok(match self {
            Expr::Zero => None,
            Expr::One => Some(0),
            Expr::Gen(i) => Some(ctx.degree(*i)),
            Expr::Q(s, e) => e.degree(ctx)?.map(|d| d + s),
            Expr::Pow(e, n) => e.degree(ctx)?.map(|d| d * n),
            Expr::Product(fs) => {
                let mut total = Some(0);
                for f in fs {
                    total = match (total, f.degree(ctx)?) {
                        (Some(a), Some(b)) => Some(a + b),
                        _ => None,
                    };
                }
                total
            }
            Expr::Sum(ts) => {
                let mut deg = None;
                for t in ts {
                    if let Some(d) = t.degree(ctx)? {
                        match deg {
                            None => deg = Some(d),
                            Some(e) if e != d => return Err(DlError::Inhomogeneous),
                            _ => {}
                        }
                    }
                }
                deg
            }
        })
    }

    /// Replaces every generator `i` by `images[i]`.
    pub fn substitute(&self, images: &[Expr]) -> Expr {
        match self {
            Expr::Zero | Expr::One => self.clone(),
            Expr::Gen(i) => images[*i].clone(),
            Expr::Sum(ts) => Expr::Sum(ts.iter().map(|t| t.substitute(images)).collect()),
            Expr::Product(fs) => Expr::Product(fs.iter().map(|f| f.substitute(images)).collect()),
            Expr::Pow(e, n) => Expr::Pow(Box::new(e.substitute(images)), *n),
            Expr::Q(s, e) => Expr::Q(*s, Box::new(e.substitute(images))),
        }
    }

    /// Prints in the input grammar; parsing the output yields the same tree.
    pub fn display(&self, ctx: &DlContext) -> String {
        let mut out = String::new();
        self.write(ctx, &mut out);
        out
    }

    fn write(&self, ctx: &DlContext, out: &mut String) {
        match self {
            Expr::Sum(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" + ");
                    }
                    if matches!(t, Expr::Sum(_)) {
                        t.write_parenthesized(ctx, out);
                    } else {
                        t.write(ctx, out);
                    }
                }
            }
            Expr::Product(fs) => {
                for (i, f) in fs.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    f.write_factor(ctx, out);
                }
            }
            _ => self.write_factor(ctx, out),
        }
    }

    fn write_parenthesized(&self, ctx: &DlContext, out: &mut String) {
        out.push('(');
        self.write(ctx, out);
        out.push(')');
    }

    fn write_factor(&self, ctx: &DlContext, out: &mut String) {
        match self {
            Expr::Zero => out.push('0'),
            Expr::One => out.push('1'),
            Expr::Gen(i) => out.push_str(ctx.name(*i)),
            Expr::Q(s, e) => {
                out.push_str(&format!("Q{s} "));
                e.write_factor(ctx, out);
            }
            Expr::Pow(e, n) => {
                if matches!(**e, Expr::Gen(_)) {
                    e.write_factor(ctx, out);
                } else {
                    e.write_parenthesized(ctx, out);
                }
                out.push_str(&format!("^{n}"));
            }
            Expr::Sum(_) | Expr::Product(_) => self.write_parenthesized(ctx, out),
        }
    }
}
