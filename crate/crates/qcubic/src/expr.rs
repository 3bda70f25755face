//! Surface syntax for series expressions.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' int)? | '-' factor
//! atom   := int | 'q' ('^' uint)? | func '(' args ')' | '(' expr ')'
//! func   := 'E' | 'eta' | 'phi' | 'psi' | 'P' | 'X'
//! ```
//!
//! Binding strength: `^` over unary minus over `*` `/` over `+` `-`; binary
//! operators associate to the left. An exponent written directly after `q`
//! must be non-negative (there are no Laurent series); a factor-level
//! exponent may carry a sign, so `E(1,1)^-4` is the reciprocal fourth power.
//!
//! Functions: `E(a,b)` is `(q^a; q^b)_inf`, `eta(k)` abbreviates `E(k,k)`,
//! `phi(k)`/`psi(k)` are the theta sums with argument `q^k`, and `P(k)`/`X(k)`
//! are the auxiliary products with argument `q^k`.
//!
//! Error positions are 1-based character offsets; end of input reports the
//! offset one past the last character.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::products::{euler, pochhammer, NamedFunction, ThetaTag};
use crate::series::{SeriesError, TruncatedSeries};

/// Byte range of a node in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn to(self, other: Span) -> Span {
        Span {
            start: self.start,
            end: other.end,
        }
    }
}

/// An expression node. Equality ignores spans so that a reparsed rendering
/// compares equal to the original tree.
#[derive(Debug, Clone)]
pub struct ExprAst {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Int(BigInt),
    QPower(u32),
    Pochhammer { a: u32, b: u32 },
    Euler { k: u32 },
    Named { tag: ThetaTag, k: u32 },
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i64),
    Paren(Box<ExprAst>),
}

impl PartialEq for ExprAst {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct SyntaxError {
    /// 1-based character offset into the source text.
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{source} in `{snippet}` at offset {offset}")]
    Series {
        source: SeriesError,
        /// Rendering of the offending subexpression.
        snippet: String,
        /// 1-based character offset of the subexpression.
        offset: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "integer {n}"),
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Plus => write!(f, "`+`"),
            Token::Minus => write!(f, "`-`"),
            Token::Star => write!(f, "`*`"),
            Token::Slash => write!(f, "`/`"),
            Token::Caret => write!(f, "`^`"),
            Token::LParen => write!(f, "`(`"),
            Token::RParen => write!(f, "`)`"),
            Token::Comma => write!(f, "`,`"),
            Token::Eof => write!(f, "end of input"),
        }
    }
}

struct Lexed {
    token: Token,
    span: Span,
}

fn tokenize(text: &str) -> Result<Vec<Lexed>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let token = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            ',' => Token::Comma,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let value = digits.parse::<BigInt>().expect("digits parse");
                tokens.push(Lexed {
                    token: Token::Int(value),
                    span: Span { start, end: i },
                });
                continue;
            }
            'a'..='z' | 'A'..='Z' => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                tokens.push(Lexed {
                    token: Token::Ident(text[start..i].to_string()),
                    span: Span { start, end: i },
                });
                continue;
            }
            other => {
                return Err(SyntaxError {
                    offset: start + 1,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        i += 1;
        tokens.push(Lexed {
            token,
            span: Span { start, end: i },
        });
    }
    tokens.push(Lexed {
        token: Token::Eof,
        span: Span {
            start: text.len(),
            end: text.len(),
        },
    });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Lexed>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].token
    }

    fn peek_span(&self) -> Span {
        self.tokens[self.pos].span
    }

    fn advance(&mut self) -> &Token {
        let token = &self.tokens[self.pos].token;
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        token
    }

    fn error(&self, expected: &str) -> SyntaxError {
        SyntaxError {
            offset: self.peek_span().start + 1,
            message: format!("expected {expected}, found {}", self.peek()),
        }
    }

    fn expect(&mut self, token: Token, expected: &str) -> Result<Span, SyntaxError> {
        if self.peek() == &token {
            let span = self.peek_span();
            self.advance();
            Ok(span)
        } else {
            Err(self.error(expected))
        }
    }

    fn parse_expr(&mut self) -> Result<ExprAst, SyntaxError> {
        let mut lhs = self.parse_term()?;
        loop {
            let op = match self.peek() {
                Token::Plus => ExprKind::Add as fn(_, _) -> _,
                Token::Minus => ExprKind::Sub as fn(_, _) -> _,
                _ => break,
            };
            self.advance();
            let rhs = self.parse_term()?;
            let span = lhs.span.to(rhs.span);
            lhs = ExprAst {
                kind: op(Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn parse_term(&mut self) -> Result<ExprAst, SyntaxError> {
        let mut lhs = self.parse_factor()?;
        loop {
            let op = match self.peek() {
                Token::Star => ExprKind::Mul as fn(_, _) -> _,
                Token::Slash => ExprKind::Div as fn(_, _) -> _,
                _ => break,
            };
            self.advance();
            let rhs = self.parse_factor()?;
            let span = lhs.span.to(rhs.span);
            lhs = ExprAst {
                kind: op(Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn parse_factor(&mut self) -> Result<ExprAst, SyntaxError> {
        if self.peek() == &Token::Minus {
            let start = self.peek_span();
            self.advance();
            let inner = self.parse_factor()?;
            let span = start.to(inner.span);
            return Ok(ExprAst {
                kind: ExprKind::Neg(Box::new(inner)),
                span,
            });
        }
        let atom = self.parse_atom()?;
        if self.peek() == &Token::Caret {
            self.advance();
            let (exponent, end) = self.parse_signed_exponent()?;
            let span = atom.span.to(end);
            return Ok(ExprAst {
                kind: ExprKind::Pow(Box::new(atom), exponent),
                span,
            });
        }
        Ok(atom)
    }

    fn parse_signed_exponent(&mut self) -> Result<(i64, Span), SyntaxError> {
        let negative = if self.peek() == &Token::Minus {
            self.advance();
            true
        } else {
            false
        };
        let span = self.peek_span();
        match self.peek().clone() {
            Token::Int(value) => {
                self.advance();
                let magnitude = value
                    .to_i64()
                    .ok_or_else(|| SyntaxError {
                        offset: span.start + 1,
                        message: "exponent too large".to_string(),
                    })?;
                Ok((if negative { -magnitude } else { magnitude }, span))
            }
            _ => Err(self.error("integer exponent")),
        }
    }

    fn parse_uint(&mut self, what: &str) -> Result<(u32, Span), SyntaxError> {
        let span = self.peek_span();
        match self.peek().clone() {
            Token::Int(value) => {
                self.advance();
                value
                    .to_u32()
                    .map(|v| (v, span))
                    .ok_or_else(|| SyntaxError {
                        offset: span.start + 1,
                        message: format!("{what} too large"),
                    })
            }
            _ => Err(self.error(what)),
        }
    }

    fn parse_positive(&mut self, what: &str) -> Result<(u32, Span), SyntaxError> {
        let (value, span) = self.parse_uint(what)?;
        if value == 0 {
            return Err(SyntaxError {
                offset: span.start + 1,
                message: format!("{what} must be positive"),
            });
        }
        Ok((value, span))
    }

    fn parse_atom(&mut self) -> Result<ExprAst, SyntaxError> {
        let span = self.peek_span();
        match self.peek().clone() {
            Token::Int(value) => {
                self.advance();
                Ok(ExprAst {
                    kind: ExprKind::Int(value),
                    span,
                })
            }
            Token::LParen => {
                self.advance();
                let inner = self.parse_expr()?;
                let close = self.expect(Token::RParen, "`)`")?;
                Ok(ExprAst {
                    kind: ExprKind::Paren(Box::new(inner)),
                    span: span.to(close),
                })
            }
            Token::Ident(name) => {
                self.advance();
                match name.as_str() {
                    "q" => {
                        // An exponent directly after q binds into the atom
                        // when it is unsigned; `q^-2` falls back to the
                        // factor-level power so it can be rejected at
                        // evaluation rather than parse time.
                        if self.peek() == &Token::Caret
                            && matches!(self.tokens[self.pos + 1].token, Token::Int(_))
                        {
                            self.advance();
                            let (value, end) = self.parse_uint("q exponent")?;
                            Ok(ExprAst {
                                kind: ExprKind::QPower(value),
                                span: span.to(end),
                            })
                        } else {
                            Ok(ExprAst {
                                kind: ExprKind::QPower(1),
                                span,
                            })
                        }
                    }
                    "E" => {
                        self.expect(Token::LParen, "`(`")?;
                        let (a, _) = self.parse_positive("product offset")?;
                        self.expect(Token::Comma, "`,`")?;
                        let (b, _) = self.parse_positive("product step")?;
                        let close = self.expect(Token::RParen, "`)`")?;
                        Ok(ExprAst {
                            kind: ExprKind::Pochhammer { a, b },
                            span: span.to(close),
                        })
                    }
                    "eta" => {
                        self.expect(Token::LParen, "`(`")?;
                        let (k, _) = self.parse_positive("eta argument")?;
                        let close = self.expect(Token::RParen, "`)`")?;
                        Ok(ExprAst {
                            kind: ExprKind::Euler { k },
                            span: span.to(close),
                        })
                    }
                    "phi" | "psi" | "P" | "X" => {
                        let tag = match name.as_str() {
                            "phi" => ThetaTag::PhiNeg,
                            "psi" => ThetaTag::Psi,
                            "P" => ThetaTag::P,
                            _ => ThetaTag::XNeg,
                        };
                        self.expect(Token::LParen, "`(`")?;
                        let (k, _) = self.parse_positive("argument power")?;
                        let close = self.expect(Token::RParen, "`)`")?;
                        Ok(ExprAst {
                            kind: ExprKind::Named { tag, k },
                            span: span.to(close),
                        })
                    }
                    _ => Err(SyntaxError {
                        offset: span.start + 1,
                        message: format!(
                            "unknown function `{name}` (expected E, eta, phi, psi, P, X or q)"
                        ),
                    }),
                }
            }
            _ => Err(self.error("integer, `q`, function call or `(`")),
        }
    }
}

/// Parse a DSL expression into an AST.
pub fn parse_expr(text: &str) -> Result<ExprAst, SyntaxError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.parse_expr()?;
    if parser.peek() != &Token::Eof {
        return Err(parser.error("end of input"));
    }
    Ok(expr)
}

/// Evaluate an AST to a series, exact at every index `0..=terms`.
pub fn eval_expr(ast: &ExprAst, terms: usize) -> Result<TruncatedSeries, EvalError> {
    let lift = |err: SeriesError, node: &ExprAst| EvalError::Series {
        source: err,
        snippet: render(node),
        offset: node.span.start + 1,
    };
    match &ast.kind {
        ExprKind::Int(value) => Ok(TruncatedSeries::constant(value.clone(), terms)),
        ExprKind::QPower(s) => Ok(TruncatedSeries::monomial(1, *s as usize, terms)),
        ExprKind::Pochhammer { a, b } => Ok(pochhammer(*a, *b, terms)),
        ExprKind::Euler { k } => Ok(euler(*k, terms)),
        ExprKind::Named { tag, k } => Ok(NamedFunction::new(*tag, *k).series(terms)),
        ExprKind::Neg(inner) => Ok(eval_expr(inner, terms)?.neg()),
        ExprKind::Add(lhs, rhs) => Ok(eval_expr(lhs, terms)?.add(&eval_expr(rhs, terms)?)),
        ExprKind::Sub(lhs, rhs) => Ok(eval_expr(lhs, terms)?.sub(&eval_expr(rhs, terms)?)),
        ExprKind::Mul(lhs, rhs) => Ok(eval_expr(lhs, terms)?.mul(&eval_expr(rhs, terms)?)),
        ExprKind::Div(lhs, rhs) => {
            let denominator = eval_expr(rhs, terms)?;
            let inverse = denominator.invert().map_err(|e| lift(e, rhs))?;
            Ok(eval_expr(lhs, terms)?.mul(&inverse))
        }
        ExprKind::Pow(base, e) => {
            let series = eval_expr(base, terms)?;
            series.pow(*e).map_err(|err| lift(err, base))
        }
        ExprKind::Paren(inner) => eval_expr(inner, terms),
    }
}

/// Parse and evaluate in one step.
pub fn eval_text(text: &str, terms: usize) -> Result<TruncatedSeries, String> {
    let ast = parse_expr(text).map_err(|e| e.to_string())?;
    eval_expr(&ast, terms).map_err(|e| e.to_string())
}

/// Canonical rendering: single spaces around binary operators, none around
/// `^`. Reparsing the rendering reproduces the tree.
pub fn render(ast: &ExprAst) -> String {
    match &ast.kind {
        ExprKind::Int(value) => value.to_string(),
        ExprKind::QPower(1) => "q".to_string(),
        ExprKind::QPower(s) => format!("q^{s}"),
        ExprKind::Pochhammer { a, b } => format!("E({a},{b})"),
        ExprKind::Euler { k } => format!("eta({k})"),
        ExprKind::Named { tag, k } => {
            let name = match tag {
                ThetaTag::PhiNeg => "phi",
                ThetaTag::Psi => "psi",
                ThetaTag::P => "P",
                ThetaTag::XNeg => "X",
            };
            format!("{name}({k})")
        }
        ExprKind::Neg(inner) => format!("-{}", render(inner)),
        ExprKind::Add(lhs, rhs) => format!("{} + {}", render(lhs), render(rhs)),
        ExprKind::Sub(lhs, rhs) => format!("{} - {}", render(lhs), render(rhs)),
        ExprKind::Mul(lhs, rhs) => format!("{} * {}", render(lhs), render(rhs)),
        ExprKind::Div(lhs, rhs) => format!("{} / {}", render(lhs), render(rhs)),
        ExprKind::Pow(base, e) => format!("{}^{e}", render(base)),
        ExprKind::Paren(inner) => format!("({})", render(inner)),
    }
}
