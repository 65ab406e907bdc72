//! Canonical text form of rational functions, and its parser.
//!
//! Output is an integer-coefficient fraction such as `16/(5*cM)` or
//! `(64*hM^3 - 405*cM*hV^2)/(45*cM)`, terms in decreasing graded
//! reverse-lexicographic order.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::gauss::GaussRat;
use super::poly::{Monomial, MultiPoly};
use super::ratfn::ScalarFn;
use super::symbol::Symbol;
use super::ScalarError;

type IntTerm = (Monomial, BigInt, BigInt);

fn integerise(num: &MultiPoly, den: &MultiPoly) -> (Vec<IntTerm>, Vec<IntTerm>) {
    let mut l = BigInt::one();
    for (_, c) in num.terms().chain(den.terms()) {
        l = num::integer::lcm(l, c.denom_lcm());
    }
    let lr = BigRational::from_integer(l);
    let conv = |p: &MultiPoly| -> Vec<IntTerm> {
        let mut v: Vec<IntTerm> = p
            .terms()
            .map(|(m, c)| {
                let s = c.scale(&lr);
                (m.clone(), s.re.to_integer(), s.im.to_integer())
            })
            .collect();
        v.sort_by(|a, b| grevlex(&b.0, &a.0));
        v
    };
    let mut n = conv(num);
    let mut d = conv(den);
    let mut g = BigInt::zero();
    for (_, re, im) in n.iter().chain(d.iter()) {
        g = num::integer::gcd(g, re.clone());
        g = num::integer::gcd(g, im.clone());
    }
    if !g.is_zero() && !g.is_one() {
        for (_, re, im) in n.iter_mut().chain(d.iter_mut()) {
            *re = &*re / &g;
            *im = &*im / &g;
        }
    }
    (n, d)
}

/// Display order: total degree, then reverse lexicographic.
fn grevlex(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        let (x, y) = (a.exps(), b.exps());
        for i in (0..x.len().max(y.len())).rev() {
            let ea = x.get(i).copied().unwrap_or(0);
            let eb = y.get(i).copied().unwrap_or(0);
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        std::cmp::Ordering::Equal
    })
}

fn monomial_text(m: &Monomial) -> String {
    m.symbols()
        .map(|(s, e)| if e == 1 { s.name() } else { format!("{}^{}", s.name(), e) })
        .collect::<Vec<_>>()
        .join("*")
}

/// Returns (negative, body) for one term.
fn term_text(m: &Monomial, re: &BigInt, im: &BigInt) -> (bool, String) {
    let mono = monomial_text(m);
    let join = |c: String| if mono.is_empty() { c } else { format!("{}*{}", c, mono) };
    if im.is_zero() {
        let neg = re.is_negative();
        let a = re.abs();
        if a.is_one() && !mono.is_empty() {
            return (neg, mono);
        }
        return (neg, join(a.to_string()));
    }
    if re.is_zero() {
        let neg = im.is_negative();
        let a = im.abs();
        let c = if a.is_one() { "I".to_string() } else { format!("{}*I", a) };
        return (neg, join(c));
    }
    let sign = if im.is_negative() { "-" } else { "+" };
    let a = im.abs();
    let imt = if a.is_one() { "I".to_string() } else { format!("{}*I", a) };
    (false, join(format!("({} {} {})", re, sign, imt)))
}

fn poly_text(terms: &[IntTerm]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, re, im)) in terms.iter().enumerate() {
        let (neg, body) = term_text(m, re, im);
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

fn is_atomic(terms: &[IntTerm]) -> bool {
    if terms.len() != 1 {
        return false;
    }
    let (m, re, im) = &terms[0];
    if !im.is_zero() {
        return re.is_zero() && m.is_one() && im.is_one();
    }
    if re.is_negative() {
        return false;
    }
    m.is_one() || (re.is_one() && m.degree() == 1)
}

impl ScalarFn {
    /// Canonical text form.
    pub fn to_text(&self) -> String {
        let (n, d) = integerise(self.num(), self.den());
        let d_is_one = d.len() == 1 && d[0].0.is_one() && d[0].1.is_one() && d[0].2.is_zero();
        let nt = poly_text(&n);
        if d_is_one {
            return nt;
        }
        let nt = if n.len() > 1 || (n.len() == 1 && !n[0].1.is_zero() && !n[0].2.is_zero()) {
            format!("({})", nt)
        } else {
            nt
        };
        let dt = poly_text(&d);
        if is_atomic(&d) {
            format!("{}/{}", nt, dt)
        } else {
            format!("{}/({})", nt, dt)
        }
    }

    /// Parses the text form (also accepts any `+ - * / ^ ( )` expression
    /// over integers, `I` and identifiers; unknown identifiers are registered).
    pub fn parse(s: &str) -> Result<ScalarFn, ScalarError> {
        let toks = tokenize(s)?;
        let mut p = Parser { toks, pos: 0 };
        let v = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(ScalarError::Parse(format!("trailing input in {:?}", s)));
        }
        Ok(v)
    }
}

impl fmt::Display for ScalarFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for ScalarFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::str::FromStr for ScalarFn {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScalarFn::parse(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ScalarError> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Int(t.parse().unwrap()));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(ScalarError::Parse(format!("unexpected character {:?}", c)));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<ScalarFn, ScalarError> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ScalarFn, ScalarError> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let t = self.unary()?;
            acc = if c == '*' { &acc * &t } else { acc.checked_div(&t)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ScalarFn, ScalarError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<ScalarFn, ScalarError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let neg = if self.peek_op() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = match self.toks.get(self.pos) {
                Some(Tok::Int(n)) => {
                    let e: i32 = n.try_into().map_err(|_| ScalarError::Parse("exponent too large".into()))?;
                    self.pos += 1;
                    e
                }
                _ => return Err(ScalarError::Parse("expected integer exponent".into())),
            };
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ScalarFn, ScalarError> {
        let tok = self.toks.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Int(n)) => Ok(ScalarFn::constant(GaussRat::from_rational(BigRational::from_integer(n)))),
            Some(Tok::Ident(name)) if name == "I" => Ok(ScalarFn::i()),
            Some(Tok::Ident(name)) => Ok(ScalarFn::var(Symbol::new(&name))),
            Some(Tok::Op('(')) => {
                let v = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(ScalarError::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(t) => Err(ScalarError::Parse(format!("unexpected token {:?}", t))),
            None => Err(ScalarError::Parse("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_integer_fraction() {
        let x = ScalarFn::parse("16/(5*cM)").unwrap();
        assert_eq!(x.to_string(), "16/(5*cM)");
        assert_eq!(ScalarFn::parse("32/(5*cM)/2").unwrap(), x);
        assert_eq!(ScalarFn::parse("1/cM").unwrap().to_string(), "1/cM");
        assert_eq!(ScalarFn::parse("5/6").unwrap().to_string(), "5/6");
        assert_eq!(ScalarFn::parse("0").unwrap().to_string(), "0");
    }

    #[test]
    fn prints_registry_order() {
        let x = ScalarFn::parse("64*hM^3/(45*cM) - 9*hV^2").unwrap();
        assert_eq!(x.to_string(), "(64*hM^3 - 405*cM*hV^2)/(45*cM)");
    }

    #[test]
    fn gaussian_coefficients() {
        assert_eq!(ScalarFn::parse("I*I").unwrap().to_string(), "-1");
        assert_eq!(ScalarFn::parse("lam + I*mu").unwrap().to_string(), "lam + I*mu");
        assert_eq!(ScalarFn::parse("(1 - 2*I)*cL").unwrap().to_string(), "(1 - 2*I)*cL");
    }

    #[test]
    fn roundtrip() {
        for s in ["(cL + 44/5)*96/cM^2", "-(3/10)*(p+2)*(p+3)", "lam/(lam + I*mu)^2 - 1", "hL^-2"] {
            let x = ScalarFn::parse(s).unwrap();
            assert_eq!(ScalarFn::parse(&x.to_string()).unwrap(), x, "{}", s);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(ScalarFn::parse("1/0"), Err(ScalarError::DivisionByZero)));
        assert!(matches!(ScalarFn::parse("(cL"), Err(ScalarError::Parse(_))));
        assert!(matches!(ScalarFn::parse("cL $"), Err(ScalarError::Parse(_))));
    }
}
