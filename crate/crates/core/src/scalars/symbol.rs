//! Process-wide registry of indeterminates.
//!
//! The first entries are fixed so that the variable order (and with it the
//! canonical form of every rational function) is stable across runs.

use std::fmt;
use std::sync::{OnceLock, RwLock};

/// Names registered at start-up, in registry order.
pub const BUILTIN: &[&str] = &[
    "cL", "cM", "hL", "hW", "hM", "hV", "lam", "mu", "p", "q", "r", "s", "u", "t",
];

fn registry() -> &'static RwLock<Vec<String>> {
    static REG: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(BUILTIN.iter().map(|s| s.to_string()).collect()))
}

/// An interned indeterminate. Ordering follows registration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub(crate) u16);

impl Symbol {
    /// Interns `name`, registering it if it is new.
    pub fn new(name: &str) -> Symbol {
        if let Some(s) = Symbol::lookup(name) {
            return s;
        }
        let mut reg = registry().write().unwrap();
        if let Some(i) = reg.iter().position(|n| n == name) {
            return Symbol(i as u16);
        }
        reg.push(name.to_string());
        Symbol((reg.len() - 1) as u16)
    }

    /// Finds an already registered symbol.
    pub fn lookup(name: &str) -> Option<Symbol> {
        let reg = registry().read().unwrap();
        reg.iter().position(|n| n == name).map(|i| Symbol(i as u16))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> String {
        registry().read().unwrap()[self.0 as usize].clone()
    }

    /// All registered names, in order.
    pub fn all_names() -> Vec<String> {
        registry().read().unwrap().clone()
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Shorthands for the built-in symbols.
pub mod sym {
    use super::Symbol;
    pub const CL: Symbol = Symbol(0);
    pub const CM: Symbol = Symbol(1);
    pub const HL: Symbol = Symbol(2);
    pub const HW: Symbol = Symbol(3);
    pub const HM: Symbol = Symbol(4);
    pub const HV: Symbol = Symbol(5);
    pub const LAM: Symbol = Symbol(6);
    pub const MU: Symbol = Symbol(7);
    pub const P: Symbol = Symbol(8);
    pub const Q: Symbol = Symbol(9);
    pub const R: Symbol = Symbol(10);
    pub const S: Symbol = Symbol(11);
    pub const U: Symbol = Symbol(12);
    pub const T: Symbol = Symbol(13);
}
