//! Recursive-descent parser for rational-function expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' uint)?
//! base   := 'x' uint | int | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. Unary minus is accepted so that every
//! canonical display string parses back to the value it came from.

use num_bigint::BigInt;
use thiserror::Error;

use crate::fieldcore::{Coeff, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable x{index} at {pos} (variables are x1..x{n})")]
    UnknownVariable { pos: usize, index: usize, n: usize },
    #[error("division by zero at {pos}")]
    DivisionByZero { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    /// One-based variable index.
    Var {
        index: usize,
        pos: usize,
    },
    Int(BigInt),
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    /// `pos` is the position of the divisor, for error reporting.
    Div {
        num: Box<ExprAst>,
        den: Box<ExprAst>,
        pos: usize,
    },
    Pow(Box<ExprAst>, u32),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == b'+' {
                ExprAst::Add(Box::new(lhs), Box::new(rhs))
            } else {
                ExprAst::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let pos = self.pos;
            let rhs = self.unary()?;
            lhs = if op == b'*' {
                ExprAst::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                ExprAst::Div {
                    num: Box::new(lhs),
                    den: Box::new(rhs),
                    pos,
                }
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(ExprAst::Neg(Box::new(self.unary()?)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let Some(d) = self.digits() else {
                return self.error("expected a nonnegative integer exponent");
            };
            let Ok(k) = d.parse::<u32>() else {
                return self.error("exponent too large");
            };
            return Ok(ExprAst::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<ExprAst, ParseError> {
        match self.peek() {
            Some(b'x') => {
                let pos = self.pos;
                self.pos += 1;
                let Some(d) = self.digits() else {
                    return self.error("expected a variable index after 'x'");
                };
                let index = d.parse::<usize>().unwrap_or(usize::MAX);
                Ok(ExprAst::Var { index, pos })
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().expect("digit present");
                Ok(ExprAst::Int(d.parse::<BigInt>().expect("decimal digits")))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => self.error(format!("unexpected character '{}'", c as char)),
            None => self.error("unexpected end of input"),
        }
    }
}

pub fn parse_ast(src: &str) -> Result<ExprAst, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let ast = p.expr()?;
    if p.peek().is_some() {
        return p.error("trailing input");
    }
    Ok(ast)
}

impl ExprAst {
    /// Largest variable index mentioned, 0 for constants.
    pub fn max_var(&self) -> usize {
        match self {
            ExprAst::Var { index, .. } => *index,
            ExprAst::Int(_) => 0,
            ExprAst::Neg(a) | ExprAst::Pow(a, _) => a.max_var(),
            ExprAst::Add(a, b) | ExprAst::Sub(a, b) | ExprAst::Mul(a, b) => {
                a.max_var().max(b.max_var())
            }
            ExprAst::Div { num, den, .. } => num.max_var().max(den.max_var()),
        }
    }

    pub fn eval<C: Coeff>(&self, n: usize) -> Result<RatFunc<C>, ParseError> {
        Ok(match self {
            ExprAst::Var { index, pos } => {
                if *index == 0 || *index > n {
                    return Err(ParseError::UnknownVariable {
                        pos: *pos,
                        index: *index,
                        n,
                    });
                }
                RatFunc::var(n, index - 1)
            }
            ExprAst::Int(v) => RatFunc::constant(n, C::from_bigint(v)),
            ExprAst::Neg(a) => a.eval::<C>(n)?.neg(),
            ExprAst::Add(a, b) => a.eval::<C>(n)?.add(&b.eval(n)?),
            ExprAst::Sub(a, b) => a.eval::<C>(n)?.sub(&b.eval(n)?),
            ExprAst::Mul(a, b) => a.eval::<C>(n)?.mul(&b.eval(n)?),
            ExprAst::Div { num, den, pos } => {
                let d = den.eval::<C>(n)?;
                num.eval::<C>(n)?
                    .div(&d)
                    .map_err(|_| ParseError::DivisionByZero { pos: *pos })?
            }
            ExprAst::Pow(a, k) => a.eval::<C>(n)?.pow(*k),
        })
    }
}

/// Parses `src` as an element of `K(x1..xn)`; integer literals are mapped
/// into the scalar domain (reduced mod 2 over F2).
pub fn parse_expr<C: Coeff>(src: &str, n: usize) -> Result<RatFunc<C>, ParseError> {
    parse_ast(src)?.eval(n)
}

/// `;`-separated expression list.
pub fn parse_list<C: Coeff>(src: &str, n: usize) -> Result<Vec<RatFunc<C>>, ParseError> {
    src.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_expr(s, n))
        .collect()
}
