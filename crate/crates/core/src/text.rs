//! Operator description language.
//!
//! ```text
//! expr    := ['+' | '-'] term (('+' | '-') term)*
//! term    := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary   := ('+' | '-') unary | power
//! power   := primary ['^' INT]
//! primary := NUMBER | 'i' | 't' | 'x'K | 'Dt' | 'Dx'K | 'Lap' | 'I' | '(' expr ')'
//! NUMBER  := INT ['/' INT] ['i']
//! ```
//!
//! `1/2i` is the literal `(1/2) i`. A product `A*B` needs `B` to have constant
//! coefficients unless `A` has order zero, and division is only by nonzero
//! constants; `(expr)^k` therefore expands only for constant-coefficient groups.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{GaussianRational, MultiPoly};
use crate::error::{Error, Result};
use crate::operator::{Derivative, Lpdo};
use crate::space::Space;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Number(GaussianRational),
    Time,
    Position(usize),
    Dt,
    Dx(usize),
    Lap,
    Identity,
    Neg(Box<OperatorExpr>),
    Add(Box<OperatorExpr>, Box<OperatorExpr>),
    Sub(Box<OperatorExpr>, Box<OperatorExpr>),
    Mul(Box<OperatorExpr>, Box<OperatorExpr>),
    Div(Box<OperatorExpr>, Box<OperatorExpr>),
    Pow(Box<OperatorExpr>, u32),
}

/// Parsed operator text; `offset` is the byte position of the node in the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorExpr {
    pub kind: ExprKind,
    pub offset: usize,
}

impl OperatorExpr {
    fn children(&self) -> Vec<&OperatorExpr> {
        match &self.kind {
            ExprKind::Neg(a) | ExprKind::Pow(a, _) => vec![a],
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) | ExprKind::Div(a, b) => vec![a, b],
            _ => vec![],
        }
    }

    /// Largest spatial index mentioned by `xK` or `DxK`.
    pub fn max_index(&self) -> Option<usize> {
        let own = match self.kind {
            ExprKind::Position(k) | ExprKind::Dx(k) => Some(k),
            _ => None,
        };
        self.children().into_iter().filter_map(OperatorExpr::max_index).chain(own).max()
    }

    pub fn uses_laplacian(&self) -> bool {
        matches!(self.kind, ExprKind::Lap) || self.children().into_iter().any(OperatorExpr::uses_laplacian)
    }

    /// Dimension from the highest index, or `explicit` when given.
    pub fn dimension(&self, explicit: Option<usize>) -> Result<usize> {
        match (explicit, self.max_index()) {
            (Some(n), Some(k)) if k > n => Err(Error::IndexExceedsDimension { index: k, n }),
            (Some(0), _) => Err(Error::DimensionUnknown),
            (Some(n), _) => Ok(n),
            (None, Some(k)) => Ok(k),
            (None, None) if self.uses_laplacian() => Err(Error::DimensionUnknown),
            (None, None) => Ok(1),
        }
    }

    /// Evaluates in dimension `n`; `source` is only used to place error messages.
    pub fn evaluate(&self, n: usize, source: &str) -> Result<Lpdo> {
        let space = Space::new(n);
        let value = Evaluator { space: &space, source }.eval(self)?;
        Lpdo::new(n, value)
    }
}

pub fn parse_expr(source: &str) -> Result<OperatorExpr> {
    let tokens = lex(source)?;
    let mut parser = Parser {
        source,
        tokens,
        pos: 0,
    };
    let expr = parser.expr()?;
    match parser.peek() {
        None => Ok(expr),
        Some(tok) => Err(parse_error(source, tok.offset, format!("unexpected {}", tok.kind.describe()))),
    }
}

/// Parses operator text in dimension `n`, or the highest spatial index mentioned.
pub fn parse_operator(source: &str, n: Option<usize>) -> Result<Lpdo> {
    let expr = parse_expr(source)?;
    let n = expr.dimension(n)?;
    expr.evaluate(n, source)
}

fn parse_error(source: &str, offset: usize, message: String) -> Error {
    let before = &source[..offset.min(source.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Error::Parse { line, column, message }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Number(GaussianRational),
    Ident(String, Option<usize>),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Number(c) => format!("number {c}"),
            TokenKind::Ident(name, Some(k)) => format!("'{name}{k}'"),
            TokenKind::Ident(name, None) => format!("'{name}'"),
            TokenKind::Plus => "'+'".into(),
            TokenKind::Minus => "'-'".into(),
            TokenKind::Star => "'*'".into(),
            TokenKind::Slash => "'/'".into(),
            TokenKind::Caret => "'^'".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(self, TokenKind::Number(_) | TokenKind::Ident(..) | TokenKind::LParen)
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    offset: usize,
}

fn lex(source: &str) -> Result<Vec<Token>> {
    let bytes = source.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_from = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let kind = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => TokenKind::Plus,
            b'-' => TokenKind::Minus,
            b'*' => TokenKind::Star,
            b'/' => TokenKind::Slash,
            b'^' => TokenKind::Caret,
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            b'0'..=b'9' => {
                let mut end = digits_from(i);
                let numer: BigInt = source[i..end].parse().expect("digits");
                let mut value = BigRational::from_integer(numer);
                if end + 1 < bytes.len() && bytes[end] == b'/' && bytes[end + 1].is_ascii_digit() {
                    let den_end = digits_from(end + 1);
                    let denom: BigInt = source[end + 1..den_end].parse().expect("digits");
                    if denom.is_zero() {
                        return Err(parse_error(source, end + 1, "zero denominator".into()));
                    }
                    value /= BigRational::from_integer(denom);
                    end = den_end;
                }
                let imaginary = end < bytes.len() && bytes[end] == b'i' && !bytes.get(end + 1).is_some_and(u8::is_ascii_alphanumeric);
                i = if imaginary { end + 1 } else { end };
                out.push(Token {
                    kind: TokenKind::Number(if imaginary {
                        GaussianRational::new(BigRational::zero(), value)
                    } else {
                        GaussianRational::from_real(value)
                    }),
                    offset: start,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = i;
                while end < bytes.len() && bytes[end].is_ascii_alphabetic() {
                    end += 1;
                }
                let name = source[i..end].to_string();
                let digits_end = digits_from(end);
                let index = if digits_end > end {
                    let k: usize = source[end..digits_end]
                        .parse()
                        .map_err(|_| parse_error(source, end, "index too large".into()))?;
                    Some(k)
                } else {
                    None
                };
                i = digits_end;
                out.push(Token {
                    kind: TokenKind::Ident(name, index),
                    offset: start,
                });
                continue;
            }
            _ => {
                let ch = source[i..].chars().next().expect("in bounds");
                return Err(parse_error(source, i, format!("unexpected character '{ch}'")));
            }
        };
        i += 1;
        out.push(Token { kind, offset: start });
    }
    Ok(out)
}

struct Parser<'a> {
    source: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        tok
    }

    fn eat(&mut self, kind: &TokenKind) -> Option<usize> {
        match self.peek() {
            Some(tok) if tok.kind == *kind => {
                let offset = tok.offset;
                self.pos += 1;
                Some(offset)
            }
            _ => None,
        }
    }

    fn error_here(&self, message: &str) -> Error {
        match self.peek() {
            Some(tok) => parse_error(self.source, tok.offset, format!("{message}, found {}", tok.kind.describe())),
            None => parse_error(self.source, self.source.len(), format!("{message}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<OperatorExpr> {
        let mut lhs = self.term()?;
        loop {
            let node = if let Some(offset) = self.eat(&TokenKind::Plus) {
                (ExprKind::Add as fn(_, _) -> _, offset)
            } else if let Some(offset) = self.eat(&TokenKind::Minus) {
                (ExprKind::Sub as fn(_, _) -> _, offset)
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = OperatorExpr {
                kind: (node.0)(Box::new(lhs), Box::new(rhs)),
                offset: node.1,
            };
        }
    }

    fn term(&mut self) -> Result<OperatorExpr> {
        let mut lhs = self.unary()?;
        loop {
            let (div, offset) = if let Some(offset) = self.eat(&TokenKind::Star) {
                (false, offset)
            } else if let Some(offset) = self.eat(&TokenKind::Slash) {
                (true, offset)
            } else if let Some(tok) = self.peek().filter(|t| t.kind.starts_primary()) {
                (false, tok.offset)
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            let kind = if div {
                ExprKind::Div(Box::new(lhs), Box::new(rhs))
            } else {
                ExprKind::Mul(Box::new(lhs), Box::new(rhs))
            };
            lhs = OperatorExpr { kind, offset };
        }
    }

    fn unary(&mut self) -> Result<OperatorExpr> {
        if let Some(offset) = self.eat(&TokenKind::Minus) {
            let inner = self.unary()?;
            return Ok(OperatorExpr {
                kind: ExprKind::Neg(Box::new(inner)),
                offset,
            });
        }
        if self.eat(&TokenKind::Plus).is_some() {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<OperatorExpr> {
        let base = self.primary()?;
        let Some(offset) = self.eat(&TokenKind::Caret) else {
            return Ok(base);
        };
        match self.bump() {
            Some(Token {
                kind: TokenKind::Number(c),
                offset: at,
            }) => {
                let k = c
                    .is_real()
                    .then(|| c.re().clone())
                    .filter(|r| r.is_integer())
                    .and_then(|r| u32::try_from(r.to_integer()).ok())
                    .ok_or_else(|| parse_error(self.source, at, "exponent must be a non-negative integer".into()))?;
                Ok(OperatorExpr {
                    kind: ExprKind::Pow(Box::new(base), k),
                    offset,
                })
            }
            _ => {
                self.pos -= 1;
                Err(self.error_here("expected an exponent"))
            }
        }
    }

    fn primary(&mut self) -> Result<OperatorExpr> {
        let Some(tok) = self.bump() else {
            return Err(parse_error(self.source, self.source.len(), "unexpected end of input".into()));
        };
        let offset = tok.offset;
        let kind = match tok.kind {
            TokenKind::Number(c) => ExprKind::Number(c),
            TokenKind::LParen => {
                let inner = self.expr()?;
                if self.eat(&TokenKind::RParen).is_none() {
                    return Err(self.error_here("expected ')'"));
                }
                return Ok(OperatorExpr {
                    kind: inner.kind,
                    offset,
                });
            }
            TokenKind::Ident(name, index) => match (name.as_str(), index) {
                ("i", None) => ExprKind::Number(GaussianRational::i()),
                ("t", None) => ExprKind::Time,
                ("Dt", None) => ExprKind::Dt,
                ("Lap", None) => ExprKind::Lap,
                ("I", None) => ExprKind::Identity,
                ("x", Some(k)) if k > 0 => ExprKind::Position(k),
                ("Dx", Some(k)) if k > 0 => ExprKind::Dx(k),
                ("x" | "Dx", _) => {
                    return Err(parse_error(self.source, offset, format!("'{name}' needs an index 1, 2, ...")));
                }
                _ => {
                    let shown = TokenKind::Ident(name, index).describe();
                    return Err(parse_error(self.source, offset, format!("unknown identifier {shown}")));
                }
            },
            other => {
                return Err(parse_error(self.source, offset, format!("unexpected {}", other.describe())));
            }
        };
        Ok(OperatorExpr { kind, offset })
    }
}

type Value = BTreeMap<Derivative, MultiPoly>;

struct Evaluator<'a> {
    space: &'a Space,
    source: &'a str,
}

impl Evaluator<'_> {
    fn scalar(&self, p: MultiPoly) -> Value {
        self.atom(Derivative::identity(self.space.n()), p)
    }

    fn atom(&self, d: Derivative, p: MultiPoly) -> Value {
        let mut v = Value::new();
        if !p.is_zero() {
            v.insert(d, p);
        }
        v
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k > self.space.n() {
            return Err(Error::IndexExceedsDimension { index: k, n: self.space.n() });
        }
        Ok(())
    }

    fn eval(&self, e: &OperatorExpr) -> Result<Value> {
        let s = self.space;
        let n = s.n();
        Ok(match &e.kind {
            ExprKind::Number(c) => self.scalar(s.constant(c.clone())),
            ExprKind::Time => self.scalar(s.var(s.t())),
            ExprKind::Position(k) => {
                self.check_index(*k)?;
                self.scalar(s.var(s.x(*k)))
            }
            ExprKind::Dt => self.atom(Derivative::dt(n, 1), s.one()),
            ExprKind::Dx(k) => {
                self.check_index(*k)?;
                self.atom(Derivative::dx(n, *k, 1), s.one())
            }
            ExprKind::Lap => (1..=n).map(|a| (Derivative::dx(n, a, 2), s.one())).collect(),
            ExprKind::Identity => self.scalar(s.one()),
            ExprKind::Neg(a) => negate(self.eval(a)?),
            ExprKind::Add(a, b) => add(self.eval(a)?, &self.eval(b)?)?,
            ExprKind::Sub(a, b) => add(self.eval(a)?, &negate(self.eval(b)?))?,
            ExprKind::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?, e.offset)?,
            ExprKind::Div(a, b) => {
                let lhs = self.eval(a)?;
                let rhs = self.eval(b)?;
                let id = Derivative::identity(n);
                let divisor = match rhs.iter().next() {
                    Some((d, c)) if rhs.len() == 1 && *d == id && c.is_constant() => c.constant_term(),
                    _ => {
                        return Err(parse_error(self.source, e.offset, "division is only by nonzero constants".into()));
                    }
                };
                let inv = divisor.inv()?;
                lhs.into_iter().map(|(d, c)| (d, c.scale(&inv))).collect()
            }
            ExprKind::Pow(a, k) => {
                let base = self.eval(a)?;
                let mut acc = self.scalar(s.one());
                for _ in 0..*k {
                    acc = self.mul(&acc, &base, e.offset)?;
                }
                acc
            }
        })
    }

    fn mul(&self, a: &Value, b: &Value, offset: usize) -> Result<Value> {
        let a_is_function = a.keys().all(|d| d.order() == 0);
        if !a_is_function && !b.values().all(MultiPoly::is_constant) {
            return Err(parse_error(
                self.source,
                offset,
                "a derivative may only act on constant-coefficient factors".into(),
            ));
        }
        let mut out = Value::new();
        for (d1, c1) in a {
            for (d2, c2) in b {
                let c = c1.try_mul(c2)?;
                let slot = out.entry(d1.compose(d2)).or_insert_with(|| self.space.zero());
                *slot = slot.try_add(&c)?;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

fn add(mut a: Value, b: &Value) -> Result<Value> {
    for (d, c) in b {
        match a.get_mut(d) {
            Some(slot) => *slot = slot.try_add(c)?,
            None => {
                a.insert(d.clone(), c.clone());
            }
        }
    }
    a.retain(|_, c| !c.is_zero());
    Ok(a)
}

fn negate(a: Value) -> Value {
    a.into_iter().map(|(d, c)| (d, -c)).collect()
}

/// `(negative, magnitude)` with the sign pulled out of real and purely
/// imaginary values.
fn split_sign(c: &GaussianRational) -> (bool, GaussianRational) {
    let zero = BigRational::zero();
    if (c.im().is_zero() && c.re() < &zero) || (c.re().is_zero() && c.im() < &zero) {
        (true, -c.clone())
    } else {
        (false, c.clone())
    }
}

fn power_factor(name: String, k: u32) -> Option<String> {
    match k {
        0 => None,
        1 => Some(name),
        k => Some(format!("{name}^{k}")),
    }
}

/// Canonical text accepted by [`parse_operator`]: one term per monomial of each
/// coefficient, highest order first, e.g. `(3/2+1/2*i)*t^2*x1*Dt*Dx1^2`.
pub fn print_operator(l: &Lpdo) -> String {
    let s = l.space();
    let mut derivatives: Vec<&Derivative> = l.coeffs().keys().collect();
    derivatives.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| b.cmp(a)));
    let mut out = String::new();
    for d in derivatives {
        let coeff = &l.coeffs()[d];
        for (mono, c) in coeff.sorted_terms() {
            let (negative, magnitude) = split_sign(c);
            let mut factors = Vec::new();
            if !magnitude.is_one() {
                factors.push(if !magnitude.re().is_zero() && !magnitude.im().is_zero() {
                    format!("({magnitude})")
                } else {
                    magnitude.to_string()
                });
            }
            factors.extend(power_factor("t".into(), mono[s.t()]));
            factors.extend((1..=s.n()).filter_map(|a| power_factor(format!("x{a}"), mono[s.x(a)])));
            if d.order() > 0 {
                factors.push(d.to_string());
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            let sign = match (out.is_empty(), negative) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            let _ = write!(out, "{sign}{}", factors.join("*"));
        }
    }
    out
}

/// Exact text for an `n`-vector of rationals: `(1, -1/2, 3)`.
pub fn format_vector(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(crate::algebra::fmt_rational).collect();
    format!("({})", parts.join(", "))
}

/// Inverse of [`format_vector`]; also accepts a bare comma-separated list.
pub fn parse_vector(text: &str) -> Result<Vec<BigRational>> {
    let body = text.trim();
    let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',').map(crate::algebra::parse_rational).collect()
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;

    fn gq(p: i64, q: i64, r: i64, s: i64) -> GaussianRational {
        GaussianRational::from_ratios(p, q, r, s)
    }

    #[test]
    fn schrodinger_text() {
        let l = parse_operator("2i*Dt + Lap", Some(3)).unwrap();
        assert_eq!(l, Lpdo::schrodinger(3, &BigRational::one()));
        assert_eq!(l.constant_coefficient(&Derivative::dt(3, 1)), gq(0, 1, 2, 1));
        for a in 1..=3 {
            assert_eq!(l.constant_coefficient(&Derivative::dx(3, a, 2)), GaussianRational::one());
        }
    }

    #[test]
    fn heat_and_variable_coefficients() {
        let heat = parse_operator("Dt - Lap", Some(2)).unwrap();
        assert_eq!(heat.coeffs().len(), 3);
        assert_eq!(heat.constant_coefficient(&Derivative::dx(2, 2, 2)), (-1).into());
        let l = parse_operator("t*Dx1", None).unwrap();
        let s = l.space();
        assert_eq!(l.n(), 1);
        assert_eq!(l.coefficient(&Derivative::dx(1, 1, 1)), s.var(s.t()));
    }

    #[test]
    fn coefficient_literals() {
        let l = parse_operator("(3/2+1/2i)*Dx1", None).unwrap();
        assert_eq!(l.constant_coefficient(&Derivative::dx(1, 1, 1)), gq(3, 2, 1, 2));
        let l = parse_operator("Dt - (1/2)i*Lap", Some(2)).unwrap();
        assert_eq!(l.constant_coefficient(&Derivative::dx(2, 1, 2)), gq(0, 1, -1, 2));
        let l = parse_operator("Dx1 / 4 + 3 I", None).unwrap();
        assert_eq!(l.constant_coefficient(&Derivative::dx(1, 1, 1)), gq(1, 4, 0, 1));
        assert_eq!(l.constant_coefficient(&Derivative::identity(1)), 3.into());
    }

    #[test]
    fn group_powers() {
        let sq = parse_operator("(2i*Dt + Lap)^2", Some(2)).unwrap();
        let sch = Lpdo::schrodinger(2, &BigRational::one());
        assert_eq!(sq, crate::operator::compose_const(&sch, &sch).unwrap());
        let l = parse_operator("x1^2*Dx1 - Dt^2", None).unwrap();
        assert_eq!(l.order(), 2);
        assert!(parse_operator("(t*Dx1)^2", None).is_err());
    }

    #[test]
    fn dimension_rules() {
        assert_eq!(parse_operator("Lap", None).unwrap_err(), Error::DimensionUnknown);
        assert_eq!(parse_operator("Dx3 + Lap", None).unwrap().n(), 3);
        assert_eq!(
            parse_operator("Dx3", Some(2)).unwrap_err(),
            Error::IndexExceedsDimension { index: 3, n: 2 }
        );
        assert_eq!(parse_operator("Dt", None).unwrap().n(), 1);
    }

    #[test]
    fn errors_have_positions() {
        assert_eq!(
            parse_operator("Dt +\n  * Dx1", None).unwrap_err(),
            Error::Parse {
                line: 2,
                column: 3,
                message: "unexpected '*'".into()
            }
        );
        assert!(matches!(parse_operator("Dt + Foo", None), Err(Error::Parse { line: 1, column: 6, .. })));
        assert!(matches!(parse_operator("(Dt", None), Err(Error::Parse { .. })));
        assert!(matches!(parse_operator("Dt / Dx1", None), Err(Error::Parse { column: 4, .. })));
        assert!(matches!(parse_operator("Dt^x1", None), Err(Error::Parse { .. })));
        assert_eq!(parse_operator("Dt - Dt", None).unwrap_err(), Error::ZeroOperator);
    }

    #[test]
    fn print_round_trip() {
        for (text, n) in [
            ("2i*Dt + Lap", 3),
            ("Dt - Lap", 2),
            ("t*Dx1", 1),
            ("(3/2+1/2i)*t^2*x1*Dt*Dx1^2 - 1/3*x2 + 7", 2),
            ("-i*Dx1*Dx2 + (1-i)*I", 2),
            ("(2i*Dt + Lap)^3 - 5", 2),
        ] {
            let l = parse_operator(text, Some(n)).unwrap();
            let printed = print_operator(&l);
            assert_eq!(parse_operator(&printed, Some(n)).unwrap(), l, "{printed}");
        }
        let l = parse_operator("2i*Dt + Lap", Some(2)).unwrap();
        assert_eq!(print_operator(&l), "Dx1^2 + Dx2^2 + 2*i*Dt");
        let l = parse_operator("-Dt + (3/2+1/2i)*t", Some(1)).unwrap();
        assert_eq!(print_operator(&l), "-Dt + (3/2+1/2*i)*t");
    }

    #[test]
    fn vectors() {
        let v = parse_vector("(1, -1/2, 3)").unwrap();
        assert_eq!(format_vector(&v), "(1, -1/2, 3)");
        assert_eq!(parse_vector("2,0").unwrap().len(), 2);
    }
}
