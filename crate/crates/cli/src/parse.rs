//! Polynomial text into vectors.
//!
//! ```text
//! poly   := [sign] sterm (sign sterm)*
//! sterm  := [coeff] ['*'] factor ('*'? factor)*  |  coeff
//! factor := var ['^' nat] | 'e' nat | 's' nat
//! coeff  := integer | integer '/' integer
//! ```
//!
//! Whitespace is ignored. With rank 1 a term without a basis factor sits in
//! position 1. Columns in errors are 1-based character positions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use syzcalc_core::polynomials::{FreeModule, ModuleMonomial, Monomial, PolyVector, Term};
use syzcalc_core::rings::{Ring, RingDescriptor};

use crate::context::PolyContext;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    /// 1-based position as written.
    PositionOutOfRange(usize),
    MissingPosition,
    RationalOutsideQQ,
    ZeroDenominator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub column: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: ", self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax(m) => f.write_str(m),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ParseErrorKind::PositionOutOfRange(i) => write!(f, "basis vector {i} is out of range"),
            ParseErrorKind::MissingPosition => f.write_str("term has no basis vector and the rank exceeds 1"),
            ParseErrorKind::RationalOutsideQQ => f.write_str("fractions are only allowed over QQ"),
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n = BigInt::parse_bytes(digits.as_bytes(), 10).expect("ascii digits");
            out.push((Tok::Int(n), col));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            _ => {
                return Err(ParseError {
                    kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
                    column: col,
                })
            }
        };
        out.push((t, col));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    ctx: &'a PolyContext,
}

/// A term before its coefficient is mapped into the ring.
struct RawTerm {
    negative: bool,
    num: BigInt,
    den: Option<(BigInt, usize)>,
    exps: Vec<u32>,
    position: Option<usize>,
    column: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, c)| *c)
    }

    fn error<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            kind,
            column: self.column(),
        })
    }

    fn syntax<T>(&self, msg: &str) -> Result<T, ParseError> {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Int(n)) => format!("`{n}`"),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::Plus) => "`+`".into(),
            Some(Tok::Minus) => "`-`".into(),
            Some(Tok::Star) => "`*`".into(),
            Some(Tok::Caret) => "`^`".into(),
            Some(Tok::Slash) => "`/`".into(),
        };
        self.error(ParseErrorKind::Syntax(format!("expected {msg}, found {found}")))
    }

    fn bump(&mut self) {
        self.at += 1;
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>, ParseError> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            terms.push(self.sterm(negative)?);
            negative = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                None => break,
                _ => return self.syntax("`+`, `-` or `*`"),
            };
            self.bump();
        }
        Ok(terms)
    }

    fn sterm(&mut self, negative: bool) -> Result<RawTerm, ParseError> {
        let column = self.column();
        let mut raw = RawTerm {
            negative,
            num: BigInt::from(1),
            den: None,
            exps: vec![0; self.ctx.nvars()],
            position: None,
            column,
        };
        let mut has_coeff = false;
        if let Some(Tok::Int(n)) = self.peek() {
            raw.num = n.clone();
            has_coeff = true;
            self.bump();
            if self.peek() == Some(&Tok::Slash) {
                self.bump();
                let col = self.column();
                match self.peek() {
                    Some(Tok::Int(d)) => raw.den = Some((d.clone(), col)),
                    _ => return self.syntax("a denominator"),
                }
                self.bump();
            }
        }
        let mut factors = 0;
        loop {
            let starred = self.peek() == Some(&Tok::Star);
            if starred {
                if !has_coeff && factors == 0 {
                    return self.syntax("a coefficient or factor");
                }
                self.bump();
            }
            match self.peek() {
                Some(Tok::Ident(_)) => {
                    self.factor(&mut raw)?;
                    factors += 1;
                }
                _ if starred => return self.syntax("a variable or basis vector"),
                _ => break,
            }
        }
        if !has_coeff && factors == 0 {
            return self.syntax("a term");
        }
        Ok(raw)
    }

    fn factor(&mut self, raw: &mut RawTerm) -> Result<(), ParseError> {
        let Some(Tok::Ident(name)) = self.peek().cloned() else {
            unreachable!("checked by caller")
        };
        if let Some(v) = self.ctx.vars.iter().position(|w| *w == name) {
            self.bump();
            let mut e: u32 = 1;
            if self.peek() == Some(&Tok::Caret) {
                self.bump();
                match self.peek() {
                    Some(Tok::Int(n)) => match u32::try_from(n) {
                        Ok(k) => e = k,
                        Err(_) => return self.error(ParseErrorKind::Syntax("exponent too large".into())),
                    },
                    _ => return self.syntax("an exponent"),
                }
                self.bump();
            }
            raw.exps[v] = match raw.exps[v].checked_add(e) {
                Some(k) => k,
                None => return self.error(ParseErrorKind::Syntax("exponent too large".into())),
            };
            return Ok(());
        }
        let letter = name.chars().next().expect("nonempty identifier");
        let digits = &name[1..];
        if (letter == 'e' || letter == 's') && !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
            let i: usize = digits.parse().unwrap_or(usize::MAX);
            if i == 0 || i > self.ctx.rank {
                return self.error(ParseErrorKind::PositionOutOfRange(i));
            }
            if raw.position.is_some() {
                return self.error(ParseErrorKind::Syntax("more than one basis vector in a term".into()));
            }
            raw.position = Some(i - 1);
            self.bump();
            return Ok(());
        }
        self.error(ParseErrorKind::UnknownVariable(name))
    }
}

/// Parses `text` as an element of the module `ctx` describes.
///
/// # Panics
/// If `module` was not built for `ctx`.
pub fn parse_polynomial<R: Ring>(
    text: &str,
    ctx: &PolyContext,
    module: &FreeModule<R>,
) -> Result<PolyVector<R::Elem>, ParseError> {
    assert_eq!(module.rank(), ctx.rank, "module does not match the context");
    assert_eq!(module.nvars(), ctx.nvars(), "module does not match the context");
    let toks = lex(text)?;
    let end = text.chars().count() + 1;
    let mut p = Parser { toks, at: 0, end, ctx };
    let raws = p.poly()?;
    let ring = module.ring();
    let mut terms = Vec::with_capacity(raws.len());
    for raw in raws {
        let num = if raw.negative { -raw.num } else { raw.num };
        let coeff = match raw.den {
            None => ring.from_integer(&num),
            Some((den, col)) => {
                if ring.descriptor() != RingDescriptor::Rationals {
                    return Err(ParseError {
                        kind: ParseErrorKind::RationalOutsideQQ,
                        column: col,
                    });
                }
                if den.is_zero() {
                    return Err(ParseError {
                        kind: ParseErrorKind::ZeroDenominator,
                        column: col,
                    });
                }
                ring.from_fraction(&num, &den).expect("QQ accepts nonzero denominators")
            }
        };
        let position = match raw.position {
            Some(i) => i,
            None if ctx.rank == 1 || ring.is_zero(&coeff) => 0,
            None => {
                return Err(ParseError {
                    kind: ParseErrorKind::MissingPosition,
                    column: raw.column,
                })
            }
        };
        terms.push(Term::new(coeff, ModuleMonomial::new(Monomial::new(raw.exps), position)));
    }
    Ok(module.normalize(terms))
}

/// Parses a bare coefficient such as `-3`, `7` or `5/2`.
pub fn parse_coefficient<R: Ring>(text: &str, ring: &R) -> Result<R::Elem, ParseError> {
    let t = text.trim();
    let (sign, rest) = match t.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, t),
    };
    let bad = |column| ParseError {
        kind: ParseErrorKind::Syntax(format!("`{t}` is not a coefficient")),
        column,
    };
    let int = |s: &str| -> Option<BigInt> {
        (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
            .then(|| BigInt::parse_bytes(s.as_bytes(), 10))
            .flatten()
    };
    let (num, den) = match rest.split_once('/') {
        None => (int(rest).ok_or_else(|| bad(1))?, None),
        Some((a, b)) => (int(a).ok_or_else(|| bad(1))?, Some(int(b).ok_or_else(|| bad(a.len() + 2))?)),
    };
    let num = if sign { -num } else { num };
    match den {
        None => Ok(ring.from_integer(&num)),
        Some(d) if ring.descriptor() != RingDescriptor::Rationals => {
            let _ = d;
            Err(ParseError {
                kind: ParseErrorKind::RationalOutsideQQ,
                column: 1,
            })
        }
        Some(d) if d.is_zero() => Err(ParseError {
            kind: ParseErrorKind::ZeroDenominator,
            column: 1,
        }),
        Some(d) => Ok(ring.from_fraction(&num, &d).expect("QQ accepts nonzero denominators")),
    }
}
