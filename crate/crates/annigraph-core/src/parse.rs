//! The ring expression language.
//!
//! ```text
//! expr     := atom { "x" atom }
//! atom     := "Z" INT | "GF(" INT ")" | "F" INT | quotient | "(" expr ")"
//! quotient := ("Z" INT) "[" VAR { "," VAR } "]" "/(" poly { "," poly } ")"
//! poly     := term { ("+"|"-") term }
//! term     := [INT ["*"]] VAR ["^" INT] { "*" VAR ["^" INT] } | INT
//! ```
//!
//! `x` between atoms is the product operator; inside brackets it is an
//! ordinary variable. `F4` abbreviates `GF(4)`. Whitespace is insignificant.

use std::collections::BTreeMap;
use std::fmt;

use crate::ring::{
    make_gf, make_product, make_quotient, make_zn, prime_power, QuotientPoly, RingError, RingObject,
};
use thiserror::Error;

/// Abstract syntax of a ring expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zn(u64),
    Gf(u64),
    Quotient {
        modulus: u64,
        vars: Vec<String>,
        relations: Vec<QuotientPoly>,
    },
    Product(Vec<RingExpr>),
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
#[error("syntax error at offset {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

/// Elaboration failure, annotated with the source span of the atom whose
/// constructor rejected it.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ElaborateError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("in `{snippet}` (bytes {}..{}): {source}", span.0, span.1)]
    Construct {
        span: (usize, usize),
        snippet: String,
        source: RingError,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Zn(u64),
    F(u64),
    Gf,
    Var(char),
    Int(u64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Slash,
    Caret,
    Star,
    Plus,
    Minus,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Zn(n) => write!(f, "Z{n}"),
            Tok::F(n) => write!(f, "F{n}"),
            Tok::Gf => write!(f, "GF"),
            Tok::Var(c) => write!(f, "{c}"),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::LBracket => write!(f, "["),
            Tok::RBracket => write!(f, "]"),
            Tok::Slash => write!(f, "/"),
            Tok::Caret => write!(f, "^"),
            Tok::Star => write!(f, "*"),
            Tok::Plus => write!(f, "+"),
            Tok::Minus => write!(f, "-"),
            Tok::Comma => write!(f, ","),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '[' => {
                toks.push((Tok::LBracket, i));
                i += 1;
            }
            ']' => {
                toks.push((Tok::RBracket, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: u64 = input[start..i].parse().map_err(|_| ParseError {
                    offset: start,
                    expected: vec!["a smaller integer".into()],
                    found: input[start..i].into(),
                })?;
                toks.push((Tok::Int(n), start));
            }
            'Z' | 'F' => {
                let start = i;
                i += 1;
                let dstart = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(ParseError {
                        offset: start,
                        expected: vec![format!("digits after {c}")],
                        found: c.to_string(),
                    });
                }
                let n: u64 = input[dstart..i].parse().map_err(|_| ParseError {
                    offset: dstart,
                    expected: vec!["a smaller integer".into()],
                    found: input[dstart..i].into(),
                })?;
                toks.push((if c == 'Z' { Tok::Zn(n) } else { Tok::F(n) }, start));
            }
            'G' => {
                if bytes.get(i + 1) == Some(&b'F') {
                    toks.push((Tok::Gf, i));
                    i += 2;
                } else {
                    return Err(ParseError {
                        offset: i,
                        expected: vec!["GF".into()],
                        found: c.to_string(),
                    });
                }
            }
            'a'..='z' => {
                toks.push((Tok::Var(c), i));
                i += 1;
            }
            _ => {
                return Err(ParseError {
                    offset: i,
                    expected: vec!["a ring expression token".into()],
                    found: c.to_string(),
                })
            }
        }
    }
    toks.push((Tok::Eof, input.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

#[derive(Debug, Clone)]
struct Spanned {
    expr: RingExpr,
    span: (usize, usize),
    /// Populated only for products: the spanned factors.
    children: Vec<Spanned>,
}

impl Spanned {
    fn leaf(expr: RingExpr, span: (usize, usize)) -> Self {
        Spanned {
            expr,
            span,
            children: Vec::new(),
        }
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    /// Errors caused by input ending inside a bracketed group anchor at the
    /// opening bracket.
    fn anchor_eof(&self, e: ParseError, open: usize) -> ParseError {
        if matches!(self.peek(), Tok::Eof) {
            ParseError { offset: open, ..e }
        } else {
            e
        }
    }

    fn parse_expr(&mut self) -> Result<Spanned, ParseError> {
        let first = self.parse_atom()?;
        let start = first.span.0;
        let mut factors = vec![first];
        while matches!(self.peek(), Tok::Var('x')) {
            self.bump();
            factors.push(self.parse_atom()?);
        }
        if factors.len() == 1 {
            Ok(factors.pop().unwrap())
        } else {
            let end = factors.last().unwrap().span.1;
            let expr = RingExpr::Product(factors.iter().map(|s| s.expr.clone()).collect());
            Ok(Spanned {
                expr,
                span: (start, end),
                children: factors,
            })
        }
    }

    fn parse_atom(&mut self) -> Result<Spanned, ParseError> {
        let start = self.offset();
        match self.peek().clone() {
            Tok::Zn(n) => {
                self.bump();
                if matches!(self.peek(), Tok::LBracket) {
                    self.parse_quotient(n, start)
                } else {
                    Ok(Spanned::leaf(
                        RingExpr::Zn(n),
                        (start, self.offset_of_prev_end(start)),
                    ))
                }
            }
            Tok::F(q) => {
                self.bump();
                Ok(Spanned::leaf(
                    RingExpr::Gf(q),
                    (start, self.offset_of_prev_end(start)),
                ))
            }
            Tok::Gf => {
                self.bump();
                if !matches!(self.peek(), Tok::LParen) {
                    return Err(self.err(&["("]));
                }
                let open = self.offset();
                self.bump();
                let q = match self.peek().clone() {
                    Tok::Int(q) => {
                        self.bump();
                        q
                    }
                    _ => return Err(self.anchor_eof(self.err(&["a field order"]), open)),
                };
                if !matches!(self.peek(), Tok::RParen) {
                    return Err(self.anchor_eof(self.err(&[")"]), open));
                }
                self.bump();
                Ok(Spanned::leaf(
                    RingExpr::Gf(q),
                    (start, self.offset_of_prev_end(start)),
                ))
            }
            Tok::LParen => {
                let open = start;
                self.bump();
                let inner = self.parse_expr()?;
                if !matches!(self.peek(), Tok::RParen) {
                    return Err(self.anchor_eof(self.err(&[")"]), open));
                }
                self.bump();
                Ok(Spanned {
                    span: (start, self.offset_of_prev_end(start)),
                    ..inner
                })
            }
            _ => Err(self.err(&["Z<n>", "GF(q)", "F<q>", "("])),
        }
    }

    /// End offset after the token just consumed; tokens are contiguous up to
    /// whitespace, so the next token's start is a safe upper bound.
    fn offset_of_prev_end(&self, fallback: usize) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(fallback)
    }

    fn parse_quotient(&mut self, modulus: u64, start: usize) -> Result<Spanned, ParseError> {
        let open_bracket = self.offset();
        self.bump(); // [
        let mut vars: Vec<char> = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::Var(v) => {
                    let voff = self.offset();
                    if vars.contains(&v) {
                        return Err(ParseError {
                            offset: voff,
                            expected: vec!["a fresh variable name".into()],
                            found: v.to_string(),
                        });
                    }
                    vars.push(v);
                    self.bump();
                }
                _ => return Err(self.anchor_eof(self.err(&["a variable name"]), open_bracket)),
            }
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBracket => {
                    self.bump();
                    break;
                }
                _ => return Err(self.anchor_eof(self.err(&[",", "]"]), open_bracket)),
            }
        }
        if !matches!(self.peek(), Tok::Slash) {
            return Err(self.err(&["/("]));
        }
        self.bump();
        if !matches!(self.peek(), Tok::LParen) {
            return Err(self.err(&["("]));
        }
        let open_paren = self.offset();
        self.bump();
        let mut relations = Vec::new();
        loop {
            let poly = self.parse_poly(&vars, open_paren)?;
            relations.push(poly);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RParen => {
                    self.bump();
                    break;
                }
                _ => return Err(self.anchor_eof(self.err(&[",", ")"]), open_paren)),
            }
        }
        Ok(Spanned::leaf(
            RingExpr::Quotient {
                modulus,
                vars: vars.iter().map(|c| c.to_string()).collect(),
                relations,
            },
            (start, self.offset_of_prev_end(start)),
        ))
    }

    fn parse_poly(&mut self, vars: &[char], open: usize) -> Result<QuotientPoly, ParseError> {
        let mut terms: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        let mut sign = 1i64;
        loop {
            let (mono, coeff) = self.parse_term(vars, open)?;
            let entry = terms.entry(mono).or_insert(0);
            *entry += sign * coeff;
            match self.peek() {
                Tok::Plus => {
                    sign = 1;
                    self.bump();
                }
                Tok::Minus => {
                    sign = -1;
                    self.bump();
                }
                _ => break,
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(QuotientPoly(terms))
    }

    fn parse_term(&mut self, vars: &[char], open: usize) -> Result<(Vec<u32>, i64), ParseError> {
        let mut coeff: Option<u64> = None;
        if let Tok::Int(n) = self.peek().clone() {
            self.bump();
            coeff = Some(n);
            if matches!(self.peek(), Tok::Star) {
                self.bump();
                // a star after the coefficient requires a variable next
                if !matches!(self.peek(), Tok::Var(_)) {
                    return Err(self.anchor_eof(self.err(&["a variable"]), open));
                }
            }
        }
        let mut mono = vec![0u32; vars.len()];
        let mut saw_var = false;
        loop {
            match self.peek().clone() {
                Tok::Var(v) => {
                    let voff = self.offset();
                    let idx = vars.iter().position(|&u| u == v).ok_or(ParseError {
                        offset: voff,
                        expected: vec!["a declared variable".into()],
                        found: v.to_string(),
                    })?;
                    self.bump();
                    let mut exp = 1u32;
                    if matches!(self.peek(), Tok::Caret) {
                        self.bump();
                        match self.peek().clone() {
                            Tok::Int(e) => {
                                self.bump();
                                exp = e as u32;
                            }
                            _ => return Err(self.anchor_eof(self.err(&["an exponent"]), open)),
                        }
                    }
                    mono[idx] += exp;
                    saw_var = true;
                    if matches!(self.peek(), Tok::Star) {
                        self.bump();
                        continue;
                    }
                    break;
                }
                _ if !saw_var && coeff.is_none() => {
                    return Err(self.anchor_eof(self.err(&["a term"]), open))
                }
                _ => break,
            }
        }
        Ok((mono, coeff.unwrap_or(1) as i64))
    }
}

fn parse_spanned(text: &str) -> Result<Spanned, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser { toks, pos: 0 };
    let expr = parser.parse_expr()?;
    if !matches!(parser.peek(), Tok::Eof) {
        return Err(parser.err(&["x", "end of input"]));
    }
    Ok(expr)
}

/// Parses a ring expression into its AST.
pub fn parse_ring_expr(text: &str) -> Result<RingExpr, ParseError> {
    parse_spanned(text).map(|s| s.expr)
}

/// Elaborates an AST into a verified ring object.
pub fn elaborate(expr: &RingExpr) -> Result<RingObject, RingError> {
    match expr {
        RingExpr::Zn(n) => make_zn(*n),
        RingExpr::Gf(q) => {
            let (p, k) = prime_power(*q).ok_or(RingError::NotPrimePower(*q))?;
            make_gf(p, k, None)
        }
        RingExpr::Quotient {
            modulus,
            vars,
            relations,
        } => make_quotient(*modulus, vars, relations),
        RingExpr::Product(factors) => {
            let elaborated: Result<Vec<_>, _> = factors.iter().map(elaborate).collect();
            make_product(elaborated?)
        }
    }
}

/// Parses and elaborates, annotating constructor failures with the source
/// span of the offending atom.
pub fn elaborate_str(text: &str) -> Result<RingObject, ElaborateError> {
    let spanned = parse_spanned(text)?;
    elaborate_with_spans(text, &spanned)
}

fn elaborate_with_spans(text: &str, s: &Spanned) -> Result<RingObject, ElaborateError> {
    // descend into product factors first so a failing factor reports its own
    // span rather than the whole product's
    for child in &s.children {
        elaborate_with_spans(text, child)?;
    }
    match elaborate(&s.expr) {
        Ok(r) => Ok(r),
        Err(source) => {
            let (a, b) = s.span;
            let b = b.min(text.len()).max(a);
            Err(ElaborateError::Construct {
                span: (a, b),
                snippet: text[a..b].trim().to_string(),
                source,
            })
        }
    }
}

/// Canonical form: single spaces around the product `x`, variables in
/// declared order, relation monomials highest degree first.
pub fn format_expr(expr: &RingExpr) -> String {
    match expr {
        RingExpr::Zn(n) => format!("Z{n}"),
        RingExpr::Gf(q) => format!("F{q}"),
        RingExpr::Quotient {
            modulus,
            vars,
            relations,
        } => {
            let rels: Vec<String> = relations.iter().map(|p| format_poly(p, vars)).collect();
            format!("Z{}[{}]/({})", modulus, vars.join(","), rels.join(", "))
        }
        RingExpr::Product(factors) => {
            let parts: Vec<String> = factors
                .iter()
                .map(|f| match f {
                    RingExpr::Product(_) => format!("({})", format_expr(f)),
                    _ => format_expr(f),
                })
                .collect();
            parts.join(" x ")
        }
    }
}

fn format_poly(poly: &QuotientPoly, vars: &[String]) -> String {
    if poly.0.is_empty() {
        return "0".into();
    }
    // highest total degree first; ties broken by the reversed exponent
    // vector so that y^2 precedes x*y and presentations read naturally
    let mut terms: Vec<(&Vec<u32>, &i64)> = poly.0.iter().collect();
    terms.sort_by(|(ma, _), (mb, _)| {
        let da: u32 = ma.iter().sum();
        let db: u32 = mb.iter().sum();
        let ra: Vec<u32> = ma.iter().rev().copied().collect();
        let rb: Vec<u32> = mb.iter().rev().copied().collect();
        db.cmp(&da).then_with(|| rb.cmp(&ra))
    });
    let mut out = String::new();
    for (i, (mono, &coeff)) in terms.iter().enumerate() {
        let mag = coeff.unsigned_abs();
        let neg = coeff < 0;
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mono_str = format_mono(mono, vars);
        if mono_str == "1" {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&mono_str);
        } else {
            out.push_str(&format!("{mag}*{mono_str}"));
        }
    }
    out
}

fn format_mono(mono: &[u32], vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in mono.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products() {
        let e = parse_ring_expr("Z4 x GF(4)").unwrap();
        assert_eq!(e, RingExpr::Product(vec![RingExpr::Zn(4), RingExpr::Gf(4)]));
        let e = parse_ring_expr("F4 x F4").unwrap();
        assert_eq!(e, RingExpr::Product(vec![RingExpr::Gf(4), RingExpr::Gf(4)]));
    }

    #[test]
    fn parses_quotients() {
        let e = parse_ring_expr("Z2[x,y]/(x^2, x*y, y^2)").unwrap();
        match e {
            RingExpr::Quotient {
                modulus,
                vars,
                relations,
            } => {
                assert_eq!(modulus, 2);
                assert_eq!(vars, vec!["x", "y"]);
                assert_eq!(relations.len(), 3);
                assert_eq!(relations[0].0.get(&vec![2, 0]), Some(&1));
                assert_eq!(relations[1].0.get(&vec![1, 1]), Some(&1));
            }
            other => panic!("expected quotient, got {other:?}"),
        }
    }

    #[test]
    fn x_is_product_at_top_level_and_variable_inside() {
        let e = parse_ring_expr("Z4[x]/(x^2 - 2, 2*x) x Z3").unwrap();
        match e {
            RingExpr::Product(fs) => {
                assert_eq!(fs.len(), 2);
                assert!(matches!(fs[0], RingExpr::Quotient { .. }));
                assert_eq!(fs[1], RingExpr::Zn(3));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parenthesized_products_nest() {
        let e = parse_ring_expr("(Z2 x Z3) x Z2").unwrap();
        match &e {
            RingExpr::Product(fs) => {
                assert_eq!(fs.len(), 2);
                assert!(matches!(&fs[0], RingExpr::Product(inner) if inner.len() == 2));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(format_expr(&e), "(Z2 x Z3) x Z2");
        let ring = elaborate(&e).unwrap();
        assert_eq!(ring.order(), 12);
        assert!(ring.element_by_label("((1,1),1)").is_some());
    }

    #[test]
    fn error_offset_for_unclosed_bracket() {
        let err = parse_ring_expr("Z6[").unwrap_err();
        assert_eq!(err.offset, 2);
    }

    #[test]
    fn error_reports_position_and_expectation() {
        let err = parse_ring_expr("Z4 x").unwrap_err();
        assert_eq!(err.offset, 4);
        let err = parse_ring_expr("Q5").unwrap_err();
        assert_eq!(err.offset, 0);
        let err = parse_ring_expr("Z2[x]/(y)").unwrap_err();
        assert_eq!(err.offset, 7);
    }

    #[test]
    fn format_is_canonical() {
        let e = RingExpr::Product(vec![RingExpr::Zn(2), RingExpr::Zn(2), RingExpr::Zn(3)]);
        assert_eq!(format_expr(&e), "Z2 x Z2 x Z3");
        assert_eq!(format_expr(&RingExpr::Zn(25)), "Z25");

        let e = parse_ring_expr("Z4[x]/(x^2-2,2*x)").unwrap();
        assert_eq!(format_expr(&e), "Z4[x]/(x^2 - 2, 2*x)");
    }

    #[test]
    fn roundtrip_parse_format_parse() {
        for s in [
            "Z4",
            "F8",
            "GF(9)",
            "Z2 x Z2 x Z3",
            "Z4[x]/(x^2 - 2, 2*x)",
            "Z2[x,y]/(x^2, x*y, y^2)",
            "Z4[x,y]/(x^2, y^2 - x*y, x*y - 2, 2*x, 2*y)",
            "Z2[x]/(x^2) x Z3",
            "Z8[x]/(2*x, x^2 + 4)",
        ] {
            let e1 = parse_ring_expr(s).unwrap();
            let e2 = parse_ring_expr(&format_expr(&e1)).unwrap();
            assert_eq!(e1, e2, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn elaborate_examples() {
        assert_eq!(elaborate(&RingExpr::Zn(49)).unwrap().order(), 49);
        assert_eq!(elaborate(&RingExpr::Gf(9)).unwrap().order(), 9);
        assert_eq!(
            elaborate(&RingExpr::Gf(6)).unwrap_err(),
            RingError::NotPrimePower(6)
        );
    }

    #[test]
    fn elaborate_str_annotates_spans() {
        let err = elaborate_str("GF(6)").unwrap_err();
        match err {
            ElaborateError::Construct {
                snippet, source, ..
            } => {
                assert_eq!(snippet, "GF(6)");
                assert_eq!(source, RingError::NotPrimePower(6));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn elaboration_is_deterministic() {
        let a = elaborate_str("Z2 x Z2 x Z3").unwrap();
        let b = elaborate_str("Z2 x Z2 x Z3").unwrap();
        let ta = a.to_table().unwrap();
        let tb = b.to_table().unwrap();
        assert_eq!(ta, tb);
    }

    #[test]
    fn negative_coefficients_reduce_at_elaboration() {
        // x^2 - 2 and x^2 + 2 agree over Z4
        let a = elaborate_str("Z4[x]/(x^2 - 2, 2*x)").unwrap();
        let b = elaborate_str("Z4[x]/(x^2 + 2, 2*x)").unwrap();
        assert_eq!(a.to_table().unwrap(), b.to_table().unwrap());
    }
}
