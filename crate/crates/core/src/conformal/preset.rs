//! Algebra presets: generators, central charges and a declared bracket table.
//!
//! Text format, one declaration per line (`#` starts a comment):
//!
//! ```text
//! preset gw3
//! central cL cM
//! generator L 2
//! generator W 3
//! bracket L W = (D + 3*l)W
//! ```
//!
//! Bracket right-hand sides are sums of products. Juxtaposition multiplies
//! and associates to the right; `D` acts as a derivation, `l` is the bracket
//! variable, and a field followed by another field forms their normally
//! ordered product. Pairs that are not declared are filled in by
//! skew-symmetry, or are zero.

use std::collections::BTreeMap;

use crate::scalars::{ScalarFn, Symbol};

use super::expr::DGen;
use super::ConformalError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub weight: u32,
    pub index: u16,
}

/// One term `coef * lambda^lam * :factors:` with factors in written order.
#[derive(Clone, Debug, PartialEq)]
pub struct RawTerm {
    pub lam: u32,
    pub word: Vec<DGen>,
    pub coef: ScalarFn,
}

#[derive(Clone, Debug)]
pub struct Preset {
    pub name: String,
    pub generators: Vec<Generator>,
    pub central: Vec<Symbol>,
    /// Declared entries `[a_lambda b]`.
    pub entries: BTreeMap<(u16, u16), Vec<RawTerm>>,
}

pub const PRESET_NAMES: &[&str] =
    &["virasoro", "gca", "w3", "gw3", "gw3_cm0", "heisenberg4", "heisenberg2", "gw3_nogo"];

const VIRASORO: &str = "
preset virasoro
central c
generator L 2
bracket L L = (D + 2*l)L + c/12*l^3
";

const GCA: &str = "
preset gca
central cL cM
generator L 2
generator M 2
bracket L L = (D + 2*l)L + cL/12*l^3
bracket L M = (D + 2*l)M + cM/12*l^3
";

const W3: &str = "
preset w3
central c
generator L 2
generator W 3
bracket L L = (D + 2*l)L + c/12*l^3
bracket L W = (D + 3*l)W
bracket W W = c/360*l^5 + (l^3/3 + l^2/2*D + 3/10*l*D^2 + 1/15*D^3)L
    + 16/(5*c + 22)*(D + 2*l)(LL - 3/10*D^2L)
";

const GW3: &str = "
preset gw3
central cL cM
generator L 2
generator W 3
generator M 2
generator V 3
bracket L L = (D + 2*l)L + cL/12*l^3
bracket L M = (D + 2*l)M + cM/12*l^3
bracket L W = (D + 3*l)W
bracket L V = (D + 3*l)V
bracket M W = (D + 3*l)V
bracket W W = cL/360*l^5 + (l^3/3 + l^2/2*D + 3/10*l*D^2 + 1/15*D^3)L
    + 32/(5*cM)*(D + 2*l)(LM - 3/10*D^2M) - 16/(5*cM^2)*(cL + 44/5)*(D + 2*l)MM
bracket W V = cM/360*l^5 + (l^3/3 + l^2/2*D + 3/10*l*D^2 + 1/15*D^3)M + 16/(5*cM)*(D + 2*l)MM
";

// W here is the rescaled field cM*W taken to cM = 0.
const GW3_CM0: &str = "
preset gw3_cm0
central cL
generator L 2
generator W 3
generator M 2
generator V 3
bracket L L = (D + 2*l)L + cL/12*l^3
bracket L M = (D + 2*l)M
bracket L W = (D + 3*l)W
bracket L V = (D + 3*l)V
bracket W W = -16/5*(cL + 44/5)*(D + 2*l)MM
bracket W V = 16/5*(D + 2*l)MM
";

const GW3_NOGO: &str = "
preset gw3_nogo
central cL cM
generator L 2
generator W 3
generator M 2
generator V 3
bracket L L = (D + 2*l)L + cL/12*l^3
bracket L M = (D + 2*l)M + cM/12*l^3
bracket L W = (D + 3*l)W
bracket L V = (D + 3*l)V
bracket M W = (D + 3*l)V
bracket W W = cL/360*l^5 + (l^3/3 + l^2/2*D + 3/10*l*D^2 + 1/15*D^3)L
    + 16/(5*cL + 22)*(D + 2*l)(LL - 3/10*D^2L)
bracket W V = cM/360*l^5 + (l^3/3 + l^2/2*D + 3/10*l*D^2 + 1/15*D^3)M + 16/(5*cM)*(D + 2*l)MM
";

const HEISENBERG4: &str = "
preset heisenberg4
generator a 1
generator b 1
generator c 1
generator d 1
bracket a a = 2*l
bracket b b = 2*l
bracket c c = 2*l
bracket d d = 2*l
bracket a b = -l
bracket c d = -l
";

const HEISENBERG2: &str = "
preset heisenberg2
generator c 1
generator d 1
bracket c d = 2*l
";

impl Preset {
    /// A built-in preset by name.
    pub fn builtin(name: &str) -> Result<Preset, ConformalError> {
        let text = match name {
            "virasoro" => VIRASORO,
            "gca" => GCA,
            "w3" => W3,
            "gw3" => GW3,
            "gw3_cm0" => GW3_CM0,
            "gw3_nogo" => GW3_NOGO,
            "heisenberg4" => HEISENBERG4,
            "heisenberg2" => HEISENBERG2,
            _ => return Err(ConformalError::UnknownPreset(name.to_string())),
        };
        Preset::parse(text)
    }

    /// The text of a built-in preset.
    pub fn builtin_text(name: &str) -> Option<&'static str> {
        Some(match name {
            "virasoro" => VIRASORO,
            "gca" => GCA,
            "w3" => W3,
            "gw3" => GW3,
            "gw3_cm0" => GW3_CM0,
            "gw3_nogo" => GW3_NOGO,
            "heisenberg4" => HEISENBERG4,
            "heisenberg2" => HEISENBERG2,
            _ => return None,
        })
    }

    pub fn parse(text: &str) -> Result<Preset, ConformalError> {
        let mut preset = Preset {
            name: String::new(),
            generators: Vec::new(),
            central: Vec::new(),
            entries: BTreeMap::new(),
        };
        // join continuation lines (leading whitespace) onto the previous declaration
        let mut decls: Vec<String> = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap();
            if line.trim().is_empty() {
                continue;
            }
            if line.starts_with(char::is_whitespace) && !decls.is_empty() {
                let last = decls.last_mut().unwrap();
                last.push(' ');
                last.push_str(line.trim());
            } else {
                decls.push(line.trim().to_string());
            }
        }
        for decl in decls {
            let (head, rest) = decl.split_once(char::is_whitespace).unwrap_or((decl.as_str(), ""));
            let rest = rest.trim();
            match head {
                "preset" => preset.name = rest.to_string(),
                "central" => preset.central = rest.split_whitespace().map(Symbol::new).collect(),
                "generator" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    if parts.len() != 2 {
                        return Err(ConformalError::Parse(format!("bad generator line: {}", decl)));
                    }
                    let weight = parts[1]
                        .parse()
                        .map_err(|_| ConformalError::Parse(format!("bad weight in: {}", decl)))?;
                    if preset.gen_index(parts[0]).is_some() {
                        return Err(ConformalError::Parse(format!("duplicate generator {}", parts[0])));
                    }
                    let index = preset.generators.len() as u16;
                    preset.generators.push(Generator { name: parts[0].to_string(), weight, index });
                }
                "bracket" => {
                    let (lhs, rhs) = rest
                        .split_once('=')
                        .ok_or_else(|| ConformalError::Parse(format!("missing '=' in: {}", decl)))?;
                    let names: Vec<&str> = lhs.split_whitespace().collect();
                    if names.len() != 2 {
                        return Err(ConformalError::Parse(format!("bad bracket head: {}", decl)));
                    }
                    let a = preset.require_gen(names[0])?;
                    let b = preset.require_gen(names[1])?;
                    let terms = preset.parse_raw(rhs)?;
                    preset.entries.insert((a, b), terms);
                }
                _ => return Err(ConformalError::Parse(format!("unknown declaration: {}", decl))),
            }
        }
        if preset.generators.is_empty() {
            return Err(ConformalError::Parse("preset declares no generators".into()));
        }
        Ok(preset)
    }

    pub fn gen_index(&self, name: &str) -> Option<u16> {
        self.generators.iter().find(|g| g.name == name).map(|g| g.index)
    }

    fn require_gen(&self, name: &str) -> Result<u16, ConformalError> {
        self.gen_index(name).ok_or_else(|| ConformalError::UnknownGenerator(name.to_string()))
    }

    pub fn gen_name(&self, g: u16) -> &str {
        &self.generators[g as usize].name
    }

    pub fn weight(&self, g: u16) -> u32 {
        self.generators[g as usize].weight
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Parses an expression over this preset into raw terms.
    pub fn parse_raw(&self, s: &str) -> Result<Vec<RawTerm>, ConformalError> {
        let toks = self.tokenize(s)?;
        let mut p = ExprParser { toks, pos: 0 };
        let v = p.sum()?;
        if p.pos != p.toks.len() {
            return Err(ConformalError::Parse(format!("trailing input in {:?}", s)));
        }
        finish(v)
    }

    fn tokenize(&self, s: &str) -> Result<Vec<Tok>, ConformalError> {
        let mut names: Vec<(String, Tok)> = Vec::new();
        for g in &self.generators {
            names.push((g.name.clone(), Tok::Gen(g.index)));
        }
        for c in &self.central {
            names.push((c.name(), Tok::Sym(*c)));
        }
        names.push(("D".into(), Tok::D));
        names.push(("l".into(), Tok::Lam));
        names.push(("I".into(), Tok::I));
        names.sort_by(|a, b| b.0.len().cmp(&a.0.len()));

        let cs: Vec<char> = s.chars().collect();
        let mut out = Vec::new();
        let mut i = 0;
        'outer: while i < cs.len() {
            let c = cs[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let n: String = cs[st..i].iter().collect();
                out.push(Tok::Int(n.parse().map_err(|_| ConformalError::Parse(format!("integer too large: {}", n)))?));
                continue;
            }
            if "+-*/^()".contains(c) {
                out.push(Tok::Op(c));
                i += 1;
                continue;
            }
            for (name, tok) in &names {
                let nc: Vec<char> = name.chars().collect();
                if cs[i..].starts_with(&nc) {
                    out.push(tok.clone());
                    i += nc.len();
                    continue 'outer;
                }
            }
            let rest: String = cs[i..].iter().take(12).collect();
            return Err(ConformalError::Parse(format!("unknown name at {:?}", rest)));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Gen(u16),
    Sym(Symbol),
    D,
    Lam,
    I,
    Op(char),
}

/// `coef * lambda^lam * D^dpow` acting on `word`, or a pending operator when
/// `word` is `None`.
#[derive(Clone, Debug)]
struct OpTerm {
    coef: ScalarFn,
    lam: u32,
    dpow: u32,
    word: Option<Vec<DGen>>,
}

type Value = Vec<OpTerm>;

fn scalar_value(c: ScalarFn) -> Value {
    vec![OpTerm { coef: c, lam: 0, dpow: 0, word: None }]
}

/// `D^k` on a written word by the Leibniz rule, with multiplicities.
pub(crate) fn derive_raw(word: &[DGen], k: u32) -> Vec<(i64, Vec<DGen>)> {
    let mut cur: BTreeMap<Vec<DGen>, i64> = BTreeMap::new();
    cur.insert(word.to_vec(), 1);
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for (w, m) in cur {
            for i in 0..w.len() {
                let mut w2 = w.clone();
                w2[i] = w2[i].derive(1);
                *next.entry(w2).or_insert(0) += m;
            }
        }
        cur = next;
    }
    cur.into_iter().map(|(w, m)| (m, w)).collect()
}

fn mul(x: &Value, y: &Value) -> Result<Value, ConformalError> {
    let mut out = Vec::new();
    for tx in x {
        for ty in y {
            let coef = &tx.coef * &ty.coef;
            let lam = tx.lam + ty.lam;
            match (&tx.word, &ty.word) {
                (None, None) => out.push(OpTerm { coef, lam, dpow: tx.dpow + ty.dpow, word: None }),
                (None, Some(w)) => {
                    for (m, w2) in derive_raw(w, tx.dpow) {
                        out.push(OpTerm { coef: &coef * &ScalarFn::from_int(m), lam, dpow: 0, word: Some(w2) });
                    }
                }
                (Some(w), None) => {
                    if ty.dpow > 0 {
                        return Err(ConformalError::Parse("D to the right of a field has nothing to act on".into()));
                    }
                    out.push(OpTerm { coef, lam, dpow: 0, word: Some(w.clone()) });
                }
                (Some(wx), Some(wy)) => {
                    if wx.len() != 1 {
                        return Err(ConformalError::Parse(
                            "the left factor of a normally ordered product must be a single field".into(),
                        ));
                    }
                    let mut w = wx.clone();
                    w.extend_from_slice(wy);
                    out.push(OpTerm { coef, lam, dpow: 0, word: Some(w) });
                }
            }
        }
    }
    Ok(out)
}

fn as_scalar(v: &Value) -> Option<ScalarFn> {
    let mut acc = ScalarFn::zero();
    for t in v {
        if t.word.is_some() || t.dpow > 0 || t.lam > 0 {
            return None;
        }
        acc = &acc + &t.coef;
    }
    Some(acc)
}

fn finish(v: Value) -> Result<Vec<RawTerm>, ConformalError> {
    let mut merged: BTreeMap<(u32, Vec<DGen>), ScalarFn> = BTreeMap::new();
    for t in v {
        if t.dpow > 0 {
            return Err(ConformalError::Parse("D with nothing to act on".into()));
        }
        let w = t.word.unwrap_or_default();
        let e = merged.entry((t.lam, w)).or_default();
        *e = &*e + &t.coef;
    }
    Ok(merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((lam, word), coef)| RawTerm { lam, word, coef })
        .collect())
}

struct ExprParser {
    toks: Vec<Tok>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn sum(&mut self) -> Result<Value, ConformalError> {
        let mut acc = self.product()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let t = self.product()?;
            if c == '+' {
                acc.extend(t);
            } else {
                acc.extend(mul(&scalar_value(ScalarFn::from_int(-1)), &t)?);
            }
        }
        Ok(acc)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Gen(_) | Tok::Sym(_) | Tok::D | Tok::Lam | Tok::I | Tok::Op('('))
        )
    }

    fn product(&mut self) -> Result<Value, ConformalError> {
        let mut factors = vec![self.signed()?];
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    factors.push(self.signed()?);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let d = self.power()?;
                    let s = as_scalar(&d).ok_or_else(|| ConformalError::Parse("division by a non-scalar".into()))?;
                    let inv = s.inv().map_err(|_| ConformalError::Parse("division by zero".into()))?;
                    factors.push(scalar_value(inv));
                }
                _ if self.starts_atom() => factors.push(self.power()?),
                _ => break,
            }
        }
        let mut acc = factors.pop().unwrap();
        while let Some(f) = factors.pop() {
            acc = mul(&f, &acc)?;
        }
        Ok(acc)
    }

    fn signed(&mut self) -> Result<Value, ConformalError> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            let v = self.signed()?;
            return mul(&scalar_value(ScalarFn::from_int(-1)), &v);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value, ConformalError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Int(n)) if *n >= 0 => *n as u32,
                _ => return Err(ConformalError::Parse("expected a non-negative integer exponent".into())),
            };
            self.pos += 1;
            let mut acc = scalar_value(ScalarFn::one());
            for _ in 0..e {
                acc = mul(&base, &acc)?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Value, ConformalError> {
        let tok = self.peek().cloned();
        self.pos += 1;
        Ok(match tok {
            Some(Tok::Int(n)) => scalar_value(ScalarFn::from_int(n)),
            Some(Tok::Sym(s)) => scalar_value(ScalarFn::var(s)),
            Some(Tok::I) => scalar_value(ScalarFn::i()),
            Some(Tok::Lam) => vec![OpTerm { coef: ScalarFn::one(), lam: 1, dpow: 0, word: None }],
            Some(Tok::D) => vec![OpTerm { coef: ScalarFn::one(), lam: 0, dpow: 1, word: None }],
            Some(Tok::Gen(g)) => vec![OpTerm { coef: ScalarFn::one(), lam: 0, dpow: 0, word: Some(vec![DGen::new(g, 0)]) }],
            Some(Tok::Op('(')) => {
                let v = self.sum()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(ConformalError::Parse("missing ')'".into()));
                }
                self.pos += 1;
                v
            }
            Some(t) => return Err(ConformalError::Parse(format!("unexpected {:?}", t))),
            None => return Err(ConformalError::Parse("unexpected end of expression".into())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_parse() {
        for n in PRESET_NAMES {
            let p = Preset::builtin(n).unwrap();
            assert_eq!(&p.name, n);
        }
        assert!(matches!(Preset::builtin("nope"), Err(ConformalError::UnknownPreset(_))));
    }

    #[test]
    fn gw3_weights() {
        let p = Preset::builtin("gw3").unwrap();
        let w: Vec<u32> = p.generators.iter().map(|g| g.weight).collect();
        assert_eq!(w, vec![2, 3, 2, 3]);
        assert_eq!(p.entries.len(), 7);
    }

    #[test]
    fn operator_application() {
        let p = Preset::builtin("gw3").unwrap();
        let t = p.parse_raw("(D + 3*l)W").unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.iter().any(|r| r.lam == 0 && r.word == vec![DGen::new(1, 1)]));
        assert!(t.iter().any(|r| r.lam == 1 && r.coef == ScalarFn::from_int(3)));
        // Leibniz on a product
        let t = p.parse_raw("D(LM)").unwrap();
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn parse_errors() {
        let p = Preset::builtin("gw3").unwrap();
        assert!(p.parse_raw("L D").is_err());
        assert!(p.parse_raw("(LM)W").is_err());
        assert!(p.parse_raw("L/W").is_err());
        assert!(p.parse_raw("X").is_err());
    }
}
