//! Recursive-descent parser for operation expressions.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor+                      juxtaposition is product
//! factor := atom ('^' int)?
//! atom   := gen | '0' | '1' | 'Q' int factor | '(' expr ')'
//! ```
//! `Q20` and `Q^20` are both accepted as the operation symbol.

use super::context::DlContext;
use super::expr::Expr;
use crate::error::DlError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Op(u32),
    Int(u32),
    Plus,
    Caret,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> DlError {
    DlError::Syntax { pos, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, DlError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Result<u32, DlError> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        if start == *i {
            return Err(syntax(start, "expected an integer"));
        }
        text[start..*i].parse().map_err(|_| syntax(start, "integer out of range"))
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                toks.push((start, Tok::Plus));
                i += 1;
            }
            b'^' => {
                toks.push((start, Tok::Caret));
                i += 1;
            }
            b'(' => {
                toks.push((start, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((start, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => toks.push((start, Tok::Int(read_int(&mut i)?))),
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'') {
                    i += 1;
                }
                let word = &text[start..i];
                if word == "Q" && bytes.get(i) == Some(&b'^') {
                    i += 1;
                    toks.push((start, Tok::Op(read_int(&mut i)?)));
                } else if word.len() > 1 && word.starts_with('Q') && word[1..].bytes().all(|b| b.is_ascii_digit()) {
                    let s = word[1..].parse().map_err(|_| syntax(start, "integer out of range"))?;
                    toks.push((start, Tok::Op(s)));
                } else {
                    toks.push((start, Tok::Ident(word.to_string())));
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(syntax(start, format!("unexpected character '{ch}'")));
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a DlContext,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<Expr, DlError> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(Expr::sum(terms))
    }

    fn term(&mut self) -> Result<Expr, DlError> {
        let mut factors = vec![self.factor()?];
        while matches!(self.peek(), Some(Tok::Ident(_) | Tok::Op(_) | Tok::Int(_) | Tok::LParen)) {
            factors.push(self.factor()?);
        }
        Ok(Expr::product(factors))
    }

    fn factor(&mut self) -> Result<Expr, DlError> {
        let atom = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Int(n)) => {
                    let n = *n;
                    self.pos += 1;
                    return Ok(Expr::pow(atom, n));
                }
                _ => return Err(syntax(self.offset(), "expected an exponent")),
            }
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr, DlError> {
        let at = self.offset();
        let tok = self.peek().cloned().ok_or_else(|| syntax(at, "unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Ident(name) => self.ctx.index_of(&name).map(Expr::Gen).ok_or(DlError::UnknownGenerator(name)),
            Tok::Int(0) => Ok(Expr::Zero),
            Tok::Int(1) => Ok(Expr::One),
            Tok::Int(_) => Err(syntax(at, "only the constants 0 and 1 are allowed")),
            Tok::Op(s) => Ok(Expr::q(s, self.factor()?)),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(syntax(self.offset(), "expected ')'")),
                }
            }
            Tok::Plus | Tok::Caret | Tok::RParen => Err(syntax(at, "expected a factor")),
        }
    }
}

/// Parses `text` against the generators of `ctx`.
pub fn parse_expression(text: &str, ctx: &DlContext) -> Result<Expr, DlError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len(), ctx };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> DlContext {
        DlContext::from_pairs(&[("x", 2), ("y4", 4), ("z15", 15)]).unwrap()
    }

    #[test]
    fn nested_operations() {
        let c = ctx();
        let e = parse_expression("Q20 Q8 x", &c).unwrap();
        assert_eq!(e, Expr::q(20, Expr::q(8, Expr::Gen(0))));
        assert_eq!(parse_expression("Q^20 Q^8 x", &c).unwrap(), e);
    }

    #[test]
    fn sums_and_juxtaposition() {
        let c = ctx();
        let e = parse_expression("Q10 y4 + x^2 Q6 y4", &c).unwrap();
        let want = Expr::Sum(vec![
            Expr::q(10, Expr::Gen(1)),
            Expr::Product(vec![Expr::pow(Expr::Gen(0), 2), Expr::q(6, Expr::Gen(1))]),
        ]);
        assert_eq!(e, want);
        let b = parse_expression("Q3 x Q6 y4", &c).unwrap();
        assert_eq!(b, Expr::Product(vec![Expr::q(3, Expr::Gen(0)), Expr::q(6, Expr::Gen(1))]));
    }

    #[test]
    fn powers_of_groups() {
        let c = ctx();
        let e = parse_expression("(Q4 x)^2", &c).unwrap();
        assert_eq!(e, Expr::pow(Expr::q(4, Expr::Gen(0)), 2));
        assert_eq!(e.display(&c), "(Q4 x)^2");
    }

    #[test]
    fn errors_carry_positions() {
        let c = ctx();
        assert_eq!(parse_expression("x + w", &c), Err(DlError::UnknownGenerator("w".into())));
        assert!(matches!(parse_expression("x + ", &c), Err(DlError::Syntax { pos: 4, .. })));
        assert!(matches!(parse_expression("(x", &c), Err(DlError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expression("x ^", &c), Err(DlError::Syntax { .. })));
        assert!(matches!(parse_expression("x $", &c), Err(DlError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expression("2 x", &c), Err(DlError::Syntax { pos: 0, .. })));
    }

    #[test]
    fn print_parse_round_trip() {
        let c = ctx();
        for text in
            ["Q20 Q8 x", "Q3 (x y4) z15", "(x + y4) + Q2 (Q3 x + x^2)", "(Q4 x)^2 (x y4)^3", "Q8 (Q4 x)^2 + 0 + 1"]
        {
            let e = parse_expression(text, &c).unwrap();
            assert_eq!(parse_expression(&e.display(&c), &c).unwrap(), e, "{text}");
        }
    }
}
