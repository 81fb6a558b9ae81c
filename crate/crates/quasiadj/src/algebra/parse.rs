//! Parser and renderer for the `.germ` file grammar.
//!
//! ```text
//! file    := line*                      # one definition per line
//! line    := 'f' INT '=' expr | blank | comment
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ['^' INT]
//! primary := rational | 'x' | 'y' | '(' expr ')'
//! rational:= INT ['/' INT]
//! comment := '#' .. end of line
//! ```
//!
//! Definitions must be `f1, f2, ...` consecutively, each factor must be a
//! nonzero polynomial vanishing at the origin, and errors carry 1-based
//! line/column positions. Deterministic resource caps (`^` exponent at most
//! 4096, bounded intermediate term counts) make the parser total on hostile
//! inputs; they are far above anything a meaningful germ needs.

use super::poly::{BiPoly, GermSpec};
use super::Rat;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// Cap on `^` exponents.
pub const MAX_EXPONENT: u32 = 4096;
/// Cap on intermediate polynomial sizes during evaluation.
pub const MAX_TERMS: usize = 100_000;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Y,
    FLabel(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Eq,
    LParen,
    RParen,
}

struct Lexed {
    toks: Vec<(Tok, usize)>, // (token, 1-based column)
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn lex_line(line_no: usize, text: &str) -> Result<Lexed> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            '#' => break,
            ' ' | '\t' | '\r' => {
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, col));
                i += 1;
            }
            '=' => {
                toks.push((Tok::Eq, col));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                let n: BigInt = lit.parse().expect("digits");
                toks.push((Tok::Int(n), start + 1));
            }
            'x' => {
                toks.push((Tok::X, col));
                i += 1;
            }
            'y' => {
                toks.push((Tok::Y, col));
                i += 1;
            }
            'f' => {
                let start = i;
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i == dstart {
                    return Err(err(line_no, col, "expected digits after 'f'"));
                }
                let lit: String = chars[dstart..i].iter().collect();
                let n: usize = lit
                    .parse()
                    .map_err(|_| err(line_no, col, "factor label out of range"))?;
                toks.push((Tok::FLabel(n), start + 1));
            }
            other => {
                return Err(err(line_no, col, format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(Lexed { toks })
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, c)| c)
            .unwrap_or_else(|| self.toks.last().map(|&(_, c)| c + 1).unwrap_or(1))
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t);
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(err(self.line, self.col(), format!("expected {what}")))
        }
    }

    fn parse_expr(&mut self) -> Result<BiPoly> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
            }
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.parse_term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.parse_term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.parse_term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<BiPoly> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let f = self.parse_factor()?;
            acc = acc.mul_checked(&f, MAX_TERMS)?;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<BiPoly> {
        let base = self.parse_primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let col = self.col();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let exp = u32::try_from(n.clone()).ok().filter(|&e| e <= MAX_EXPONENT);
                    match exp {
                        Some(e) => base.pow_checked(e, MAX_TERMS),
                        None => Err(Error::LimitExceeded {
                            what: format!("exponent {n} exceeds cap {MAX_EXPONENT}"),
                        }),
                    }
                }
                _ => Err(err(self.line, col, "expected non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn parse_primary(&mut self) -> Result<BiPoly> {
        let col = self.col();
        match self.bump().cloned() {
            Some(Tok::Int(n)) => {
                // optional '/ INT' forms a rational literal
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let dcol = self.col();
                    match self.bump().cloned() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                Err(err(self.line, dcol, "zero denominator"))
                            } else {
                                Ok(BiPoly::constant(Rat::new(n, d)))
                            }
                        }
                        _ => Err(err(self.line, dcol, "expected denominator")),
                    }
                } else {
                    Ok(BiPoly::constant(Rat::from_integer(n)))
                }
            }
            Some(Tok::X) => Ok(BiPoly::var_x()),
            Some(Tok::Y) => Ok(BiPoly::var_y()),
            Some(Tok::LParen) => {
                let e = self.parse_expr()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => Err(err(self.line, col, "expected a number, 'x', 'y', or '('")),
        }
    }
}

/// Parses the `.germ` grammar into a [`GermSpec`].
pub fn parse_germ(text: &str) -> Result<GermSpec> {
    let mut factors: Vec<BiPoly> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let lexed = lex_line(line_no, raw)?;
        if lexed.toks.is_empty() {
            continue;
        }
        let mut p = Parser {
            toks: &lexed.toks,
            pos: 0,
            line: line_no,
        };
        let label_col = p.col();
        let label = match p.bump().cloned() {
            Some(Tok::FLabel(n)) => n,
            _ => {
                return Err(err(
                    line_no,
                    label_col,
                    "expected a factor definition 'fN = ...'",
                ))
            }
        };
        let expected = factors.len() + 1;
        if label != expected {
            return Err(Error::FactorNumbering {
                expected,
                found: label,
            });
        }
        p.expect(&Tok::Eq, "'='")?;
        let poly = p.parse_expr()?;
        if p.pos != p.toks.len() {
            return Err(err(line_no, p.col(), "unexpected trailing tokens"));
        }
        factors.push(poly);
    }
    if factors.is_empty() {
        return Err(err(1, 1, "no factor definitions found"));
    }
    GermSpec::new(factors)
}

/// Renders a germ spec in the canonical form accepted by [`parse_germ`].
pub fn render_germ(spec: &GermSpec) -> String {
    let mut out = String::new();
    for (i, f) in spec.factors.iter().enumerate() {
        out.push_str(&format!("f{} = {}\n", i + 1, f));
    }
    out
}
