use std::fmt;

use thiserror::Error;

use super::{AtomicPredicate, Comparison, Operand, SparsFormula, SrelFormula};
use crate::graph::{DistInterval, Metric};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Unexpected { found: String, expected: Vec<String> },
    InvalidInterval(String),
    InvalidNumber(String),
    ConstantAtom,
}

/// Syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Unexpected { found, expected } => {
                write!(f, "found {found}, expected ")?;
                match expected.as_slice() {
                    [one] => f.write_str(one),
                    many => write!(f, "one of {}", many.join(", ")),
                }
            }
            ParseErrorKind::InvalidInterval(msg) => write!(f, "invalid interval: {msg}"),
            ParseErrorKind::InvalidNumber(text) => write!(f, "invalid number '{text}'"),
            ParseErrorKind::ConstantAtom => {
                f.write_str("a comparison must mention at least one signal field")
            }
        }
    }
}

/// Parses a Boolean formula; untagged operators use the weight metric.
pub fn parse_srel<T: Scalar>(text: &str) -> Result<SrelFormula<T>, ParseError> {
    parse_srel_with(text, Metric::Weight)
}

/// Parses a Boolean formula; untagged operators use `default_metric`.
pub fn parse_srel_with<T: Scalar>(
    text: &str,
    default_metric: Metric,
) -> Result<SrelFormula<T>, ParseError> {
    Parser::new(text, default_metric)?.parse_all()
}

/// Parses a resiliency specification; untagged operators use the weight metric.
pub fn parse_spars<T: Scalar>(text: &str) -> Result<SparsFormula<T>, ParseError> {
    parse_spars_with(text, Metric::Weight)
}

/// Parses a resiliency specification; untagged operators use `default_metric`.
pub fn parse_spars_with<T: Scalar>(
    text: &str,
    default_metric: Metric,
) -> Result<SparsFormula<T>, ParseError> {
    Parser::new(text, default_metric)?.parse_all()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Bang,
    And,
    Or,
    Cmp(Comparison),
    Num(String),
    Ident(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::Comma => "','".into(),
            Tok::Bang => "'!'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::Cmp(c) => format!("'{}'", c.symbol()),
            Tok::Num(n) => format!("number {n}"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn unexpected(offset: usize, found: &Tok, expected: &[&str]) -> ParseError {
    ParseError {
        offset,
        kind: ParseErrorKind::Unexpected {
            found: found.describe(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        },
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digit_at = |j: usize| j < bytes.len() && bytes[j].is_ascii_digit();
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            b'{' => Some(Tok::LBrace),
            b'}' => Some(Tok::RBrace),
            b',' => Some(Tok::Comma),
            b'!' => Some(Tok::Bang),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((tok, start));
            i += 1;
            continue;
        }
        match c {
            _ if c.is_ascii_whitespace() => i += 1,
            b'&' | b'|' => {
                i += if bytes.get(i + 1) == Some(&c) { 2 } else { 1 };
                out.push((if c == b'&' { Tok::And } else { Tok::Or }, start));
            }
            b'<' | b'>' => {
                let eq = bytes.get(i + 1) == Some(&b'=');
                let cmp = match (c, eq) {
                    (b'<', false) => Comparison::Lt,
                    (b'<', true) => Comparison::Le,
                    (_, false) => Comparison::Gt,
                    (_, true) => Comparison::Ge,
                };
                i += if eq { 2 } else { 1 };
                out.push((Tok::Cmp(cmp), start));
            }
            b'=' => {
                if bytes.get(i + 1) != Some(&b'=') {
                    return Err(unexpected(start, &Tok::Ident("=".into()), &["'=='"]));
                }
                i += 2;
                out.push((Tok::Cmp(Comparison::Eq), start));
            }
            _ if c.is_ascii_digit()
                || (c == b'.' && digit_at(i + 1))
                || ((c == b'-' || c == b'+')
                    && (digit_at(i + 1) || (bytes.get(i + 1) == Some(&b'.') && digit_at(i + 2)))) =>
            {
                if c == b'-' || c == b'+' {
                    i += 1;
                }
                while digit_at(i) {
                    i += 1;
                }
                if bytes.get(i) == Some(&b'.') {
                    i += 1;
                    while digit_at(i) {
                        i += 1;
                    }
                }
                if matches!(bytes.get(i), Some(b'e' | b'E')) {
                    let mut j = i + 1;
                    if matches!(bytes.get(j), Some(b'-' | b'+')) {
                        j += 1;
                    }
                    if digit_at(j) {
                        i = j;
                        while digit_at(i) {
                            i += 1;
                        }
                    }
                }
                out.push((Tok::Num(src[start..i].to_string()), start));
            }
            _ if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::Unexpected {
                        found: format!("character '{ch}'"),
                        expected: vec!["a formula token".into()],
                    },
                });
            }
        }
    }
    out.push((Tok::Eof, src.len()));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SpatialOp {
    Reach,
    Escape,
    Somewhere,
    Everywhere,
}

impl SpatialOp {
    fn keyword(self) -> &'static str {
        match self {
            SpatialOp::Reach => "R",
            SpatialOp::Escape => "E",
            SpatialOp::Somewhere => "somewhere",
            SpatialOp::Everywhere => "everywhere",
        }
    }
}

/// Shared shape of the two formula languages.
trait Grammar<T: Scalar>: Sized {
    fn primary(p: &mut Parser) -> Result<Self, ParseError>;
    fn check_interval(op: SpatialOp, iv: &DistInterval<T>) -> Result<(), String>;
    fn negate(c: Self) -> Self;
    fn conj(l: Self, r: Self) -> Self;
    fn disj(l: Self, r: Self) -> Self;
    fn spatial(op: SpatialOp, iv: DistInterval<T>, m: Metric, l: Option<Self>, r: Self) -> Self;
}

impl<T: Scalar> Grammar<T> for SrelFormula<T> {
    fn primary(p: &mut Parser) -> Result<Self, ParseError> {
        match p.peek() {
            Tok::Ident(s) if s == "true" => {
                p.bump();
                Ok(SrelFormula::True)
            }
            Tok::Ident(s) if s == "false" => {
                p.bump();
                Ok(SrelFormula::False)
            }
            _ => p.atom().map(SrelFormula::Atom),
        }
    }

    fn check_interval(op: SpatialOp, iv: &DistInterval<T>) -> Result<(), String> {
        match op {
            SpatialOp::Somewhere | SpatialOp::Everywhere if !iv.is_bounded() => {
                Err(format!("{} needs a finite upper bound", op.keyword()))
            }
            SpatialOp::Somewhere | SpatialOp::Everywhere if iv.lo() != T::zero() => {
                Err(format!("{} needs a lower bound of 0", op.keyword()))
            }
            _ => Ok(()),
        }
    }

    fn negate(c: Self) -> Self {
        SrelFormula::not(c)
    }

    fn conj(l: Self, r: Self) -> Self {
        SrelFormula::and(l, r)
    }

    fn disj(l: Self, r: Self) -> Self {
        SrelFormula::or(l, r)
    }

    fn spatial(op: SpatialOp, iv: DistInterval<T>, m: Metric, l: Option<Self>, r: Self) -> Self {
        match (op, l) {
            (SpatialOp::Reach, Some(l)) => SrelFormula::reach(l, iv, m, r),
            (SpatialOp::Escape, _) => SrelFormula::escape(iv, m, r),
            (SpatialOp::Somewhere, _) => SrelFormula::somewhere(iv, m, r),
            _ => SrelFormula::everywhere(iv, m, r),
        }
    }
}

impl<T: Scalar> Grammar<T> for SparsFormula<T> {
    fn primary(p: &mut Parser) -> Result<Self, ParseError> {
        if !p.at_keyword("S") {
            return Err(p.error(&["S-atom", "'('", "'!'"]));
        }
        p.bump();
        let metric = p.metric_tag()?;
        let open = p.offset();
        p.expect(&Tok::LBracket)?;
        let d1: T = p.number()?;
        p.expect(&Tok::Comma)?;
        let d2: T = p.upper_bound()?;
        p.expect(&Tok::RBracket)?;
        if !(d1 >= T::zero() && d1 <= d2 && d2.is_finite()) {
            return Err(ParseError {
                offset: open,
                kind: ParseErrorKind::InvalidInterval(format!(
                    "S-atom needs 0 <= d1 <= d2 < inf, got [{d1},{d2}]"
                )),
            });
        }
        p.expect(&Tok::LParen)?;
        let body = p.or_expr::<T, SrelFormula<T>>()?;
        p.expect(&Tok::RParen)?;
        Ok(SparsFormula::satom(d1, d2, metric, body))
    }

    fn check_interval(op: SpatialOp, iv: &DistInterval<T>) -> Result<(), String> {
        if iv.is_bounded() {
            Ok(())
        } else {
            Err(format!(
                "{} over resiliency values needs a finite upper bound",
                op.keyword()
            ))
        }
    }

    fn negate(c: Self) -> Self {
        SparsFormula::not(c)
    }

    fn conj(l: Self, r: Self) -> Self {
        SparsFormula::and(l, r)
    }

    fn disj(l: Self, r: Self) -> Self {
        SparsFormula::or(l, r)
    }

    fn spatial(op: SpatialOp, iv: DistInterval<T>, m: Metric, l: Option<Self>, r: Self) -> Self {
        match (op, l) {
            (SpatialOp::Reach, Some(l)) => SparsFormula::reach(l, iv, m, r),
            (SpatialOp::Escape, _) => SparsFormula::escape(iv, m, r),
            (SpatialOp::Somewhere, _) => SparsFormula::somewhere(iv, m, r),
            _ => SparsFormula::everywhere(iv, m, r),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    default_metric: Metric,
}

impl Parser {
    fn new(src: &str, default_metric: Metric) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(src)?,
            pos: 0,
            default_metric,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_next(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        unexpected(self.offset(), self.peek(), expected)
    }

    fn expect(&mut self, tok: &Tok) -> Result<(), ParseError> {
        if self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&tok.describe()]))
        }
    }

    /// An operator keyword counts only when an interval or metric tag follows.
    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
            && matches!(self.peek_next(), Tok::LBracket | Tok::LBrace)
    }

    fn parse_all<T: Scalar, F: Grammar<T>>(mut self) -> Result<F, ParseError> {
        let f = self.or_expr::<T, F>()?;
        if *self.peek() != Tok::Eof {
            return Err(self.error(&["'&'", "'|'", "'R'", "end of input"]));
        }
        Ok(f)
    }

    fn or_expr<T: Scalar, F: Grammar<T>>(&mut self) -> Result<F, ParseError> {
        let mut lhs = self.and_expr::<T, F>()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and_expr::<T, F>()?;
            lhs = F::disj(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and_expr<T: Scalar, F: Grammar<T>>(&mut self) -> Result<F, ParseError> {
        let mut lhs = self.reach_expr::<T, F>()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.reach_expr::<T, F>()?;
            lhs = F::conj(lhs, rhs);
        }
        Ok(lhs)
    }

    fn reach_expr<T: Scalar, F: Grammar<T>>(&mut self) -> Result<F, ParseError> {
        let mut lhs = self.unary::<T, F>()?;
        while self.at_keyword("R") {
            self.bump();
            let (metric, iv) = self.operator_suffix::<T, F>(SpatialOp::Reach)?;
            let rhs = self.unary::<T, F>()?;
            lhs = F::spatial(SpatialOp::Reach, iv, metric, Some(lhs), rhs);
        }
        Ok(lhs)
    }

    fn unary<T: Scalar, F: Grammar<T>>(&mut self) -> Result<F, ParseError> {
        if *self.peek() == Tok::Bang {
            self.bump();
            return Ok(F::negate(self.unary::<T, F>()?));
        }
        for op in [SpatialOp::Escape, SpatialOp::Somewhere, SpatialOp::Everywhere] {
            if self.at_keyword(op.keyword()) {
                self.bump();
                let (metric, iv) = self.operator_suffix::<T, F>(op)?;
                let child = self.unary::<T, F>()?;
                return Ok(F::spatial(op, iv, metric, None, child));
            }
        }
        if *self.peek() == Tok::LParen {
            self.bump();
            let inner = self.or_expr::<T, F>()?;
            self.expect(&Tok::RParen)?;
            return Ok(inner);
        }
        F::primary(self)
    }

    fn operator_suffix<T: Scalar, F: Grammar<T>>(
        &mut self,
        op: SpatialOp,
    ) -> Result<(Metric, DistInterval<T>), ParseError> {
        let metric = self.metric_tag()?;
        let open = self.offset();
        self.expect(&Tok::LBracket)?;
        let lo: T = self.number()?;
        self.expect(&Tok::Comma)?;
        let hi: T = self.upper_bound()?;
        self.expect(&Tok::RBracket)?;
        let invalid = |msg: String| ParseError {
            offset: open,
            kind: ParseErrorKind::InvalidInterval(msg),
        };
        let iv = DistInterval::new(lo, hi).map_err(|e| invalid(e.to_string()))?;
        F::check_interval(op, &iv).map_err(invalid)?;
        Ok((metric, iv))
    }

    fn upper_bound<T: Scalar>(&mut self) -> Result<T, ParseError> {
        if matches!(self.peek(), Tok::Ident(s) if s == "inf") {
            self.bump();
            Ok(T::infinity())
        } else {
            self.number()
        }
    }

    fn metric_tag(&mut self) -> Result<Metric, ParseError> {
        if *self.peek() != Tok::LBrace {
            return Ok(self.default_metric);
        }
        self.bump();
        let metric = match self.peek() {
            Tok::Ident(s) if s == "weight" => Metric::Weight,
            Tok::Ident(s) if s == "hops" => Metric::Hops,
            _ => return Err(self.error(&["'weight'", "'hops'"])),
        };
        self.bump();
        self.expect(&Tok::RBrace)?;
        Ok(metric)
    }

    fn number<T: Scalar>(&mut self) -> Result<T, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Num(text) => {
                self.bump();
                let v = T::from_str_radix(&text, 10).map_err(|_| ParseError {
                    offset,
                    kind: ParseErrorKind::InvalidNumber(text.clone()),
                })?;
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(ParseError {
                        offset,
                        kind: ParseErrorKind::InvalidNumber(text),
                    })
                }
            }
            _ => Err(self.error(&["number"])),
        }
    }

    fn operand<T: Scalar>(&mut self) -> Result<Operand<T>, ParseError> {
        match self.peek().clone() {
            Tok::Num(_) => self.number().map(Operand::Const),
            Tok::Ident(name) if !matches!(name.as_str(), "true" | "false" | "inf") => {
                self.bump();
                Ok(Operand::Field(name))
            }
            _ => Err(self.error(&["field name", "number", "'('", "'!'"])),
        }
    }

    fn atom<T: Scalar>(&mut self) -> Result<AtomicPredicate<T>, ParseError> {
        let start = self.offset();
        let lhs = self.operand()?;
        let cmp = match self.peek() {
            Tok::Cmp(c) => *c,
            _ => return Err(self.error(&["'<'", "'<='", "'>'", "'>='", "'=='"])),
        };
        self.bump();
        let rhs = self.operand()?;
        if matches!((&lhs, &rhs), (Operand::Const(_), Operand::Const(_))) {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::ConstantAtom,
            });
        }
        Ok(AtomicPredicate::new(lhs, cmp, rhs))
    }
}
