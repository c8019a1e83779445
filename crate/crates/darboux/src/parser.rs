//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' integer]
//! atom   := rational | identifier | '(' expr ')'
//! ```
//!
//! Rational literals are `p` or `p/q` with decimal digits. Identifiers
//! resolve first to context variables, then to field scalars (`z8` in the
//! cyclotomic field). Exponents must fit the monomial exponent type.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::context::VarContext;
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    position: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let position = i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'+' => {
                out.push(Spanned { token: Token::Plus, position });
                i += 1;
            }
            b'-' => {
                out.push(Spanned { token: Token::Minus, position });
                i += 1;
            }
            b'*' => {
                out.push(Spanned { token: Token::Star, position });
                i += 1;
            }
            b'^' => {
                out.push(Spanned { token: Token::Caret, position });
                i += 1;
            }
            b'/' => {
                out.push(Spanned { token: Token::Slash, position });
                i += 1;
            }
            b'(' => {
                out.push(Spanned { token: Token::LParen, position });
                i += 1;
            }
            b')' => {
                out.push(Spanned { token: Token::RParen, position });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let value: BigInt = digits.parse().map_err(|_| Error::Syntax {
                    position,
                    message: format!("invalid integer literal `{digits}`"),
                })?;
                out.push(Spanned { token: Token::Number(value), position });
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Spanned {
                    token: Token::Ident(text[start..i].to_string()),
                    position,
                });
            }
            _ => {
                return Err(Error::Syntax {
                    position,
                    message: format!("unexpected character `{}`", text[i..].chars().next().unwrap()),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    tokens: Vec<Spanned>,
    pos: usize,
    ctx: &'a VarContext,
    end: usize,
    _marker: std::marker::PhantomData<F>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|s| s.position)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, label: &str) -> Result<()> {
        match self.bump() {
            Some(s) if s.token == want => Ok(()),
            Some(s) => Err(Error::Syntax {
                position: s.position,
                message: format!("expected {label}"),
            }),
            None => Err(Error::Syntax {
                position: self.end,
                message: format!("expected {label}, found end of input"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let mut negate = false;
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.add(&rhs);
                }
                Some(Token::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            let rhs = self.factor()?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let position = self.position();
            match self.bump() {
                Some(Spanned { token: Token::Number(n), .. }) => {
                    let exp = u16::try_from(&n).map_err(|_| Error::Syntax {
                        position,
                        message: format!("exponent `{n}` out of range (0..=65535)"),
                    })?;
                    Ok(base.pow(exp))
                }
                Some(s) => Err(Error::Syntax {
                    position: s.position,
                    message: "expected a nonnegative integer exponent after `^`".into(),
                }),
                None => Err(Error::Syntax {
                    position: self.end,
                    message: "expected a nonnegative integer exponent after `^`".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        let position = self.position();
        match self.bump() {
            Some(Spanned { token: Token::Number(n), .. }) => {
                // A '/' directly after an integer continues a rational literal.
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    let dpos = self.position();
                    match self.bump() {
                        Some(Spanned { token: Token::Number(d), .. }) => {
                            if d.is_zero() {
                                return Err(Error::DivisionByZero { position: dpos });
                            }
                            let value = F::from_rational(&Rational::new(n, d));
                            Ok(Poly::constant(self.ctx, value))
                        }
                        Some(s) => Err(Error::Syntax {
                            position: s.position,
                            message: "expected an integer denominator after `/`".into(),
                        }),
                        None => Err(Error::Syntax {
                            position: self.end,
                            message: "expected an integer denominator after `/`".into(),
                        }),
                    }
                } else {
                    let value = F::from_rational(&Rational::from_integer(n));
                    Ok(Poly::constant(self.ctx, value))
                }
            }
            Some(Spanned { token: Token::Ident(name), position }) => {
                if let Some(idx) = self.ctx.index_of(&name) {
                    if F::scalar_ident(&name).is_some() {
                        return Err(Error::ReservedIdentifier { name, position });
                    }
                    Ok(Poly::var(self.ctx, idx))
                } else if let Some(scalar) = F::scalar_ident(&name) {
                    Ok(Poly::constant(self.ctx, scalar))
                } else {
                    Err(Error::UnknownIdentifier { name, position })
                }
            }
            Some(Spanned { token: Token::LParen, .. }) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            Some(s) => Err(Error::Syntax {
                position: s.position,
                message: "expected a number, variable, or parenthesized expression".into(),
            }),
            None => Err(Error::Syntax {
                position,
                message: "expected a number, variable, or parenthesized expression, found end of input"
                    .into(),
            }),
        }
    }
}

/// Parses `text` into a polynomial over `ctx`. The coefficient field decides
/// which scalar identifiers exist (`z8` in the cyclotomic field, none for
/// rationals).
pub fn parse_poly<F: Field>(text: &str, ctx: &VarContext) -> Result<Poly<F>> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Syntax {
            position: 0,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser::<F> {
        tokens,
        pos: 0,
        ctx,
        end: text.len(),
        _marker: std::marker::PhantomData,
    };
    let poly = parser.expr()?;
    if let Some(s) = parser.bump() {
        return Err(Error::Syntax {
            position: s.position,
            message: "unexpected trailing input".into(),
        });
    }
    Ok(poly)
}

/// Parses a scalar expression (no variables) in the field `F`.
pub fn parse_scalar<F: Field>(text: &str) -> Result<F> {
    let ctx = VarContext::new(Vec::<String>::new())?;
    let poly = parse_poly::<F>(text, &ctx)?;
    Ok(poly.constant_value().expect("no variables in scope"))
}
