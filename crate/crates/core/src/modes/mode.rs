use std::fmt;

use crate::scalars::ScalarFn;

/// The four generating fields and the two composite fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    L,
    W,
    M,
    V,
    Lam,
    Theta,
}

impl Field {
    pub const ELEMENTARY: [Field; 4] = [Field::L, Field::W, Field::M, Field::V];

    pub fn weight(self) -> i64 {
        match self {
            Field::L | Field::M => 2,
            Field::W | Field::V => 3,
            Field::Lam | Field::Theta => 4,
        }
    }

    pub fn is_elementary(self) -> bool {
        !matches!(self, Field::Lam | Field::Theta)
    }

    pub fn name(self) -> &'static str {
        match self {
            Field::L => "L",
            Field::W => "W",
            Field::M => "M",
            Field::V => "V",
            Field::Lam => "Lam",
            Field::Theta => "Theta",
        }
    }

    pub fn parse(s: &str) -> Option<Field> {
        Some(match s {
            "L" => Field::L,
            "W" => Field::W,
            "M" => Field::M,
            "V" => Field::V,
            "Lam" | "Lambda" => Field::Lam,
            "Theta" => Field::Theta,
            _ => return None,
        })
    }

    /// Position in the PBW order, V leftmost.
    pub(crate) fn rank(self) -> u8 {
        match self {
            Field::V => 0,
            Field::M => 1,
            Field::W => 2,
            Field::L => 3,
            _ => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mode {
    pub field: Field,
    pub n: i64,
}

impl Mode {
    pub fn new(field: Field, n: i64) -> Mode {
        Mode { field, n }
    }

    /// Sort key of the PBW order: fields V, M, W, L, then ascending index.
    pub(crate) fn key(self) -> (u8, i64) {
        (self.field.rank(), self.n)
    }

    /// Parses `W(-2)` or `Theta(0)`.
    pub fn parse(s: &str) -> Option<Mode> {
        let s = s.trim();
        let open = s.find('(')?;
        let inner = s[open + 1..].strip_suffix(')')?;
        Some(Mode::new(Field::parse(s[..open].trim())?, inner.trim().parse().ok()?))
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.field.name(), self.n)
    }
}

/// Contragredient adjoint `m*` with its sign.
pub fn adjoint(m: Mode) -> (i64, Mode) {
    let sign = match m.field {
        Field::W | Field::V => -1,
        _ => 1,
    };
    (sign, Mode::new(m.field, -m.n))
}

/// Which algebra the mode relations belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Generic,
    /// The rescaled algebra at `c_M = 0`; `W` stands for `W' = c_M W`.
    CmZero,
}

/// A finite sum of modes; `None` is the identity (central term).
pub type ModeSum = Vec<(Option<Mode>, ScalarFn)>;

fn push(out: &mut ModeSum, m: Option<Mode>, c: ScalarFn) {
    if !c.is_zero() {
        out.push((m, c));
    }
}

fn int(n: i64) -> ScalarFn {
    ScalarFn::from_int(n)
}

fn frac(n: i64, d: i64) -> ScalarFn {
    ScalarFn::from_frac(n, d)
}

/// `[x, y]` for elementary modes with central charges `c_l`, `c_m`.
pub fn commutator(x: Mode, y: Mode, c_l: &ScalarFn, c_m: &ScalarFn, variant: Variant) -> ModeSum {
    use Field::*;
    assert!(x.field.is_elementary() && y.field.is_elementary(), "commutator of composite modes");
    let (n, m) = (x.n, y.n);
    let k = n + m;
    let delta = n + m == 0;
    let cm0 = variant == Variant::CmZero;
    let mut out = ModeSum::new();
    match (x.field, y.field) {
        (L, L) => {
            push(&mut out, Some(Mode::new(L, k)), int(n - m));
            if delta {
                push(&mut out, None, &frac(n * (n * n - 1), 12) * c_l);
            }
        }
        (L, M) => {
            push(&mut out, Some(Mode::new(M, k)), int(n - m));
            if delta && !cm0 {
                push(&mut out, None, &frac(n * (n * n - 1), 12) * c_m);
            }
        }
        (L, W) => push(&mut out, Some(Mode::new(W, k)), int(2 * n - m)),
        (L, V) => push(&mut out, Some(Mode::new(V, k)), int(2 * n - m)),
        (M, W) if !cm0 => push(&mut out, Some(Mode::new(V, k)), int(2 * n - m)),
        (W, W) => {
            let r = frac(n - m, 30);
            if cm0 {
                let c = &(c_l + &frac(44, 5)) * &r;
                push(&mut out, Some(Mode::new(Theta, k)), &c * &int(-96));
            } else {
                let inv = c_m.inv().expect("c_M must be nonzero");
                let inv2 = &inv * &inv;
                push(&mut out, Some(Mode::new(L, k)), &r * &int(2 * n * n + 2 * m * m - n * m - 8));
                push(&mut out, Some(Mode::new(Lam, k)), &(&r * &int(192)) * &inv);
                let t = &(&(c_l + &frac(44, 5)) * &inv2) * &(&r * &int(-96));
                push(&mut out, Some(Mode::new(Theta, k)), t);
                if delta {
                    push(&mut out, None, &frac(n * (n * n - 1) * (n * n - 4), 360) * c_l);
                }
            }
        }
        (W, V) => {
            let r = frac(n - m, 30);
            if cm0 {
                push(&mut out, Some(Mode::new(Theta, k)), &r * &int(96));
            } else {
                let inv = c_m.inv().expect("c_M must be nonzero");
                push(&mut out, Some(Mode::new(M, k)), &r * &int(2 * n * n + 2 * m * m - n * m - 8));
                push(&mut out, Some(Mode::new(Theta, k)), &(&r * &int(96)) * &inv);
                if delta {
                    push(&mut out, None, &frac(n * (n * n - 1) * (n * n - 4), 360) * c_m);
                }
            }
        }
        (W, L) | (M, L) | (V, L) | (W, M) | (V, W) => {
            return commutator(y, x, c_l, c_m, variant).into_iter().map(|(md, c)| (md, -c)).collect();
        }
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::sf;

    fn table(x: Mode, y: Mode) -> ModeSum {
        commutator(x, y, &sf("cL"), &sf("cM"), Variant::Generic)
    }

    #[test]
    fn l2_w1() {
        assert_eq!(table(Mode::new(Field::L, 2), Mode::new(Field::W, 1)), vec![(Some(Mode::new(Field::W, 3)), int(3))]);
    }

    #[test]
    fn m_v_commute() {
        for n in -3..4 {
            for m in -3..4 {
                assert!(table(Mode::new(Field::M, n), Mode::new(Field::V, m)).is_empty());
            }
        }
    }

    #[test]
    fn w1_wm1() {
        let got = table(Mode::new(Field::W, 1), Mode::new(Field::W, -1));
        let want = vec![
            (Some(Mode::new(Field::L, 0)), sf("-3*2/30")),
            (Some(Mode::new(Field::Lam, 0)), sf("2/30*192/cM")),
            (Some(Mode::new(Field::Theta, 0)), sf("-2/30*96/cM^2*(cL + 44/5)")),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn antisymmetric() {
        for x in Field::ELEMENTARY {
            for y in Field::ELEMENTARY {
                let (a, b) = (Mode::new(x, 2), Mode::new(y, -2));
                let mut s = table(a, b);
                s.extend(table(b, a));
                let mut tot: std::collections::BTreeMap<Option<Mode>, ScalarFn> = Default::default();
                for (m, c) in s {
                    let e = tot.entry(m).or_insert_with(ScalarFn::zero);
                    *e = &*e + &c;
                }
                assert!(tot.values().all(|c| c.is_zero()), "{:?} {:?}", x, y);
            }
        }
    }

    #[test]
    fn adjoints() {
        assert_eq!(adjoint(Mode::new(Field::W, 2)), (-1, Mode::new(Field::W, -2)));
        assert_eq!(adjoint(Mode::new(Field::L, 0)), (1, Mode::new(Field::L, 0)));
        assert_eq!(adjoint(Mode::new(Field::Theta, -4)), (1, Mode::new(Field::Theta, 4)));
    }

    #[test]
    fn parse_display() {
        let m = Mode::new(Field::Theta, -4);
        assert_eq!(Mode::parse(&m.to_string()), Some(m));
    }
}
