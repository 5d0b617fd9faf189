//! The bundle expression language.
//!
//! ```text
//! expr   := factor ('*' factor)*
//! factor := 'W' n | 'Wd' n | 'O' '(' int ')' | 'dual' '(' expr ')'
//!         | 'wedge' '(' expr ',' k ')' | 'sym' '(' expr ',' k ')'
//!         | 'ad' '(' expr ')' | 'twist' '(' expr ',' int ')' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored everywhere.

use std::fmt;

use thiserror::Error;

use crate::cubic::{BundleOnCubic, CubicError, CurveKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    W(usize),
    Wd(usize),
    O(i64),
    Dual(Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Wedge(Box<Expr>, usize),
    Sym(Box<Expr>, usize),
    Ad(Box<Expr>),
    Twist(Box<Expr>, i64),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::W(n) => write!(f, "W{n}"),
            Expr::Wd(n) => write!(f, "Wd{n}"),
            Expr::O(m) => write!(f, "O({m})"),
            Expr::Dual(e) => write!(f, "dual({e})"),
            Expr::Tensor(a, b) => {
                // `*` is left-associative, so a tensor on the right needs parentheses.
                match **b {
                    Expr::Tensor(..) => write!(f, "{a}*({b})"),
                    _ => write!(f, "{a}*{b}"),
                }
            }
            Expr::Wedge(e, k) => write!(f, "wedge({e},{k})"),
            Expr::Sym(e, k) => write!(f, "sym({e},{k})"),
            Expr::Ad(e) => write!(f, "ad({e})"),
            Expr::Twist(e, m) => write!(f, "twist({e},{m})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    Comma,
    Star,
    End,
    Invalid(char),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "{s:?}"),
            Token::Int(n) => write!(f, "{n}"),
            Token::LParen => f.write_str("'('"),
            Token::RParen => f.write_str("')'"),
            Token::Comma => f.write_str("','"),
            Token::Star => f.write_str("'*'"),
            Token::End => f.write_str("end of input"),
            Token::Invalid(c) => write!(f, "{c:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at column {}: expected {}, found {found}", .position + 1, .expected.join(" or "))]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    /// The input with a caret under the offending position.
    pub fn render(&self, input: &str) -> String {
        let col = input[..self.position.min(input.len())].chars().count();
        format!("{input}\n{}^\n{self}", " ".repeat(col))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Bundle(#[from] CubicError),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn next(&mut self) -> (usize, Token) {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return (start, Token::End);
        };
        let simple = match c {
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            ',' => Some(Token::Comma),
            '*' => Some(Token::Star),
            _ => None,
        };
        if let Some(t) = simple {
            self.pos += 1;
            return (start, t);
        }
        if c.is_ascii_alphabetic() {
            let len = rest
                .find(|ch: char| !ch.is_ascii_alphabetic())
                .unwrap_or(rest.len());
            self.pos += len;
            return (start, Token::Ident(rest[..len].to_string()));
        }
        if c.is_ascii_digit() || c == '-' {
            let body = &rest[c.len_utf8()..];
            let digits = body
                .find(|ch: char| !ch.is_ascii_digit())
                .unwrap_or(body.len());
            let len = c.len_utf8() + digits;
            if let Ok(n) = rest[..len].parse() {
                self.pos += len;
                return (start, Token::Int(n));
            }
        }
        self.pos += c.len_utf8();
        (start, Token::Invalid(c))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: Option<(usize, Token)>,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> &(usize, Token) {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next());
        }
        self.peeked.as_ref().unwrap()
    }

    fn bump(&mut self) -> (usize, Token) {
        self.peek();
        self.peeked.take().unwrap()
    }

    fn error(&mut self, expected: &[&str]) -> ParseError {
        let (position, found) = self.peek().clone();
        ParseError {
            position,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: found.to_string(),
        }
    }

    fn expect(&mut self, tok: Token, name: &str) -> Result<(), ParseError> {
        if self.peek().1 == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        match self.peek().1 {
            Token::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn natural(&mut self) -> Result<usize, ParseError> {
        match self.peek().1 {
            Token::Int(n) if n >= 0 => {
                self.bump();
                Ok(n as usize)
            }
            _ => Err(self.error(&["nonnegative integer"])),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek().1 == Token::Star {
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr::Tensor(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        const STARTS: &[&str] = &[
            "W<n>", "Wd<n>", "O", "dual", "wedge", "sym", "ad", "twist", "'('",
        ];
        let (pos, tok) = self.peek().clone();
        match tok {
            Token::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(e)
            }
            Token::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "W" | "Wd" => {
                        let n = match self.peek().1 {
                            Token::Int(n) if n >= 1 => n as usize,
                            _ => return Err(self.error(&["positive integer"])),
                        };
                        self.bump();
                        Ok(if name == "W" { Expr::W(n) } else { Expr::Wd(n) })
                    }
                    "O" => {
                        self.expect(Token::LParen, "'('")?;
                        let m = self.int()?;
                        self.expect(Token::RParen, "')'")?;
                        Ok(Expr::O(m))
                    }
                    "dual" | "ad" => {
                        self.expect(Token::LParen, "'('")?;
                        let e = Box::new(self.expr()?);
                        self.expect(Token::RParen, "')'")?;
                        Ok(if name == "dual" {
                            Expr::Dual(e)
                        } else {
                            Expr::Ad(e)
                        })
                    }
                    "wedge" | "sym" => {
                        self.expect(Token::LParen, "'('")?;
                        let e = Box::new(self.expr()?);
                        self.expect(Token::Comma, "','")?;
                        let k = self.natural()?;
                        self.expect(Token::RParen, "')'")?;
                        Ok(if name == "wedge" {
                            Expr::Wedge(e, k)
                        } else {
                            Expr::Sym(e, k)
                        })
                    }
                    "twist" => {
                        self.expect(Token::LParen, "'('")?;
                        let e = Box::new(self.expr()?);
                        self.expect(Token::Comma, "','")?;
                        let m = self.int()?;
                        self.expect(Token::RParen, "')'")?;
                        Ok(Expr::Twist(e, m))
                    }
                    _ => Err(ParseError {
                        position: pos,
                        expected: STARTS.iter().map(|s| s.to_string()).collect(),
                        found: Token::Ident(name).to_string(),
                    }),
                }
            }
            _ => Err(self.error(STARTS)),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        lexer: Lexer { src: input, pos: 0 },
        peeked: None,
    };
    let e = p.expr()?;
    if p.peek().1 != Token::End {
        return Err(p.error(&["'*'", "end of input"]));
    }
    Ok(e)
}

impl Expr {
    pub fn evaluate(&self, curve: CurveKind) -> Result<BundleOnCubic, CubicError> {
        Ok(match self {
            Expr::W(n) => BundleOnCubic::w(curve, *n)?,
            Expr::Wd(n) => BundleOnCubic::w_dual(curve, *n)?,
            Expr::O(m) => BundleOnCubic::line_bundle(curve, *m),
            Expr::Dual(e) => e.evaluate(curve)?.dual(),
            Expr::Tensor(a, b) => a.evaluate(curve)?.tensor(&b.evaluate(curve)?)?,
            Expr::Wedge(e, k) => e.evaluate(curve)?.wedge(*k),
            Expr::Sym(e, k) => e.evaluate(curve)?.sym(*k),
            Expr::Ad(e) => e.evaluate(curve)?.end0(),
            Expr::Twist(e, m) => e.evaluate(curve)?.twist(*m),
        })
    }

    /// Rank of the bundle, without building it.
    pub fn rank(&self) -> usize {
        match self {
            Expr::W(n) | Expr::Wd(n) => *n,
            Expr::O(_) => 1,
            Expr::Dual(e) | Expr::Twist(e, _) => e.rank(),
            Expr::Tensor(a, b) => a.rank() * b.rank(),
            Expr::Wedge(e, k) => crate::linalg::binomial(e.rank() as u64, *k as u64) as usize,
            Expr::Sym(e, k) => {
                crate::linalg::binomial((e.rank() + k) as u64 - 1, *k as u64) as usize
            }
            Expr::Ad(e) => (e.rank() * e.rank()).saturating_sub(1),
        }
    }
}

/// Parses and evaluates in one step.
pub fn evaluate_str(input: &str, curve: CurveKind) -> Result<BundleOnCubic, ExprError> {
    Ok(parse(input)?.evaluate(curve)?)
}
