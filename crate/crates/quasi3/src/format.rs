//! Polynomial and matrix file formats: JSON term lists, a plain-text
//! expression parser, and LaTeX output in the grouped `m_{[i,j]}` style.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use quasi3_core::linsys::CoeffSystem;
use quasi3_core::{ExactInteger, ExactRational, Matrix, Monomial, Polynomial};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("duplicate monomial {0:?} in term list")]
    DuplicateMonomial([u32; 3]),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub e: [u32; 3],
    pub c: String,
}

pub fn parse_rational(s: &str) -> Result<ExactRational, FormatError> {
    let bad = || FormatError::Rational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(ExactRational::new(n, d))
}

pub fn poly_to_terms(p: &Polynomial) -> Vec<TermJson> {
    p.terms().map(|(m, c)| TermJson { e: m.0, c: c.to_string() }).collect()
}

pub fn poly_to_json(p: &Polynomial) -> Value {
    serde_json::to_value(poly_to_terms(p)).expect("plain data")
}

pub fn poly_from_terms(terms: &[TermJson]) -> Result<Polynomial, FormatError> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Polynomial::zero();
    for t in terms {
        if !seen.insert(t.e) {
            return Err(FormatError::DuplicateMonomial(t.e));
        }
        out.add_term(Monomial(t.e), parse_rational(&t.c)?);
    }
    Ok(out)
}

pub fn poly_from_json_str(s: &str) -> Result<Polynomial, FormatError> {
    let terms: Vec<TermJson> = serde_json::from_str(s).map_err(|e| FormatError::Json(e.to_string()))?;
    poly_from_terms(&terms)
}

/// Reads either the JSON term list (input starting with `[`) or a plain
/// text expression.
pub fn read_polynomial(s: &str) -> Result<Polynomial, FormatError> {
    if s.trim_start().starts_with('[') {
        poly_from_json_str(s)
    } else {
        parse_expr(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, FormatError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let ch = b[i] as char;
        match ch {
            c if c.is_ascii_whitespace() => i += 1,
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push((i, Tok::Op(ch)));
                i += 1;
            }
            '0'..='9' => {
                let st = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((st, Tok::Num(BigInt::from_str(&s[st..i]).expect("digits"))));
            }
            'x' => {
                let st = i;
                i += 1;
                if i < b.len() && b[i] == b'_' {
                    i += 1;
                }
                match b.get(i) {
                    Some(b'1') => out.push((st, Tok::Var(1))),
                    Some(b'2') => out.push((st, Tok::Var(2))),
                    Some(b'3') => out.push((st, Tok::Var(3))),
                    _ => return Err(FormatError::Parse { pos: st, msg: "expected variable x1, x2 or x3".into() }),
                }
                i += 1;
            }
            _ => return Err(FormatError::Parse { pos: i, msg: format!("unexpected character {ch:?}") }),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T, FormatError> {
        Err(FormatError::Parse { pos: self.here(), msg: msg.to_string() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, FormatError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, FormatError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let pos = self.here();
                let d = self.unary()?;
                let c = constant_value(&d)
                    .filter(|c| !c.is_zero())
                    .ok_or(FormatError::Parse { pos, msg: "division only by nonzero constants".into() })?;
                acc = acc.scale(&c.recip());
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Var(_) | Tok::Op('('))) {
                acc = acc * self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, FormatError> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Polynomial, FormatError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e = u32::try_from(&n).ok().filter(|&e| e <= 1000);
                    match e {
                        Some(e) => Ok(base.pow(e)),
                        None => self.err("exponent out of range"),
                    }
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, FormatError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(ExactRational::from_integer(n)))
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(Polynomial::var(v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

fn constant_value(p: &Polynomial) -> Option<ExactRational> {
    match p.degree() {
        None => Some(ExactRational::zero()),
        Some(0) => Some(p.coeff(&Monomial::ONE)),
        _ => None,
    }
}

/// Parses expressions such as `x1^4 - 2*x1^3*(x2 + x3) + 5/3 x1 x2 x3`.
pub fn parse_expr(s: &str) -> Result<Polynomial, FormatError> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0, end: s.len() };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

fn latex_coeff(c: &ExactRational, lead: bool, unit_elided: bool) -> String {
    let mut s = String::new();
    if c.is_negative() {
        s.push_str(if lead { "-" } else { " - " });
    } else if !lead {
        s.push_str(" + ");
    }
    let a = c.abs();
    if a.is_one() && unit_elided {
        return s;
    }
    if a.is_integer() {
        write!(s, "{}", a.numer()).unwrap();
    } else {
        write!(s, "{{{} \\over {}}}", a.numer(), a.denom()).unwrap();
    }
    s
}

fn latex_var(s: &mut String, var: usize, e: u32) {
    match e {
        0 => {}
        1 => write!(s, "x_{var}").unwrap(),
        2..=9 => write!(s, "x_{var}^{e}").unwrap(),
        _ => write!(s, "x_{var}^{{{e}}}").unwrap(),
    }
}

fn latex_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for v in 1..=3 {
        latex_var(&mut s, v, m.exp(v));
    }
    s
}

pub fn latex_poly(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let mono = latex_monomial(m);
        s.push_str(&latex_coeff(c, k == 0, !mono.is_empty()));
        s.push_str(&mono);
    }
    s
}

/// `sum C_[i,j] x1^(d-i-j) m_[i,j](x2, x3)` with the monomial symmetric
/// factor in parentheses, e.g. `x_1^4 - 2x_1^3(x_2+x_3) + 6x_1^2(x_2x_3)`.
pub fn latex_grouped(d: u32, cols: &[(u32, u32)], coeffs: &[ExactRational]) -> String {
    let mut s = String::new();
    let mut first = true;
    for (&(i, j), c) in cols.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let mut body = String::new();
        latex_var(&mut body, 1, d - i - j);
        let sym = if i == 0 && j == 0 {
            String::new()
        } else {
            let mut a = String::new();
            latex_var(&mut a, 2, i);
            latex_var(&mut a, 3, j);
            if i != j {
                let mut b = String::new();
                latex_var(&mut b, 2, j);
                latex_var(&mut b, 3, i);
                let sep = if j > 0 { " + " } else { "+" };
                a = format!("{a}{sep}{b}");
            }
            format!("({a})")
        };
        body.push_str(&sym);
        s.push_str(&latex_coeff(c, first, !body.is_empty()));
        s.push_str(&body);
        first = false;
    }
    if first {
        s.push('0');
    }
    s
}

pub fn labels_json(labels: &[(u32, u32)]) -> Value {
    Value::Array(labels.iter().map(|&(a, b)| json!([a, b])).collect())
}

pub fn int_matrix_json(m: &Matrix<ExactInteger>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(|v| json!(v.to_string())).collect())).collect())
}

pub fn system_json(sys: &CoeffSystem) -> Value {
    json!({
        "m": sys.m,
        "d": sys.d,
        "rows": labels_json(&sys.rows),
        "cols": labels_json(&sys.cols),
        "entries": int_matrix_json(&sys.entries),
    })
}

/// Right-aligned table with row labels `[k,l]` and column labels `[i,j]`.
pub fn labeled_matrix_text(rows: &[(u32, u32)], cols: &[(u32, u32)], m: &Matrix<ExactInteger>) -> String {
    let cells: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    let head: Vec<String> = cols.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
    let lab: Vec<String> = rows.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
    let lw = lab.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols.len()).map(|c| cells.iter().map(|r| r[c].len()).chain([head[c].len()]).max().unwrap_or(1)).collect();
    let mut s = String::new();
    write!(s, "{:lw$}", "").unwrap();
    for (h, w) in head.iter().zip(&widths) {
        write!(s, "  {h:>w$}").unwrap();
    }
    s.push('\n');
    for (l, r) in lab.iter().zip(&cells) {
        write!(s, "{l:lw$}").unwrap();
        for (v, w) in r.iter().zip(&widths) {
            write!(s, "  {v:>w$}").unwrap();
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use quasi3_core::arith::rat;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-5/3").unwrap(), rat(-5, 3));
        assert_eq!(parse_rational("10/4").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn parser_basics() {
        let p = parse_expr("x1^4 - 2*x1^3*x2").unwrap();
        let q = Polynomial::monomial(4, 0, 0) - Polynomial::monomial(3, 1, 0).scale(&rat(2, 1));
        assert_eq!(p, q);
        assert_eq!(parse_expr("5/3 x1 x2").unwrap(), Polynomial::monomial(1, 1, 0).scale(&rat(5, 3)));
        assert_eq!(parse_expr("(x1 - x2)^2").unwrap(), parse_expr("x1^2 - 2x1 x2 + x2^2").unwrap());
        assert_eq!(parse_expr("-x_3").unwrap(), -Polynomial::var(3));
        assert_eq!(parse_expr("2^3").unwrap(), Polynomial::constant(rat(8, 1)));
        assert!(parse_expr("x4").is_err());
        assert!(parse_expr("x1/x2").is_err());
        assert!(parse_expr("(x1").is_err());
        assert!(parse_expr("x1 +").is_err());
        assert!(parse_expr("x1 ^ x2").is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = parse_expr("x1^4 - 2*x1^3*(x2+x3) + 5/3*x1*x2*x3 - 7").unwrap();
        let s = serde_json::to_string(&poly_to_json(&p)).unwrap();
        assert!(s.starts_with(r#"[{"e":[4,0,0],"c":"1"}"#));
        assert!(s.contains(r#""c":"5/3""#));
        assert_eq!(poly_from_json_str(&s).unwrap(), p);
        assert_eq!(read_polynomial(&s).unwrap(), p);
        assert!(matches!(
            poly_from_json_str(r#"[{"e":[1,0,0],"c":"1"},{"e":[1,0,0],"c":"2"}]"#),
            Err(FormatError::DuplicateMonomial(_))
        ));
    }

    #[test]
    fn latex_grouping() {
        let cols = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)];
        let c = [rat(1, 1), rat(-7, 2), rat(14, 1), rat(7, 2), rat(-35, 2), rat(35, 1)];
        assert_eq!(
            latex_grouped(7, &cols, &c),
            "x_1^7 - {7 \\over 2}x_1^6(x_2+x_3) + 14x_1^5(x_2x_3) + {7 \\over 2}x_1^5(x_2^2+x_3^2) \
             - {35 \\over 2}x_1^4(x_2^2x_3 + x_2x_3^2) + 35x_1^3(x_2^2x_3^2)"
        );
        assert_eq!(latex_poly(&parse_expr("x1^12 - x2 + 1/2").unwrap()), "x_1^{12} - x_2 + {1 \\over 2}");
    }
}
