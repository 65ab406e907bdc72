use std::collections::HashMap;

use clap::Args;
use gw3ca_core::modes::Params;
use gw3ca_core::scalars::{GaussRat, ScalarFn, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::CliError;

/// A value given on the command line, or the named symbol for `symbolic`.
pub fn binding(value: &str, name: &str) -> Result<ScalarFn, CliError> {
    if value == "symbolic" {
        let s = Symbol::lookup(name).ok_or_else(|| CliError::Parse(format!("unknown symbol {}", name)))?;
        return Ok(ScalarFn::var(s));
    }
    Ok(ScalarFn::parse(value)?)
}

#[derive(Args, Clone, Debug)]
pub struct ModuleArgs {
    #[arg(long = "cL", default_value = "symbolic", allow_hyphen_values = true)]
    pub c_l: String,
    #[arg(long = "cM", default_value = "symbolic", allow_hyphen_values = true)]
    pub c_m: String,
    #[arg(long = "hL", default_value = "symbolic", allow_hyphen_values = true)]
    pub h_l: String,
    #[arg(long = "hW", default_value = "symbolic", allow_hyphen_values = true)]
    pub h_w: String,
    #[arg(long = "hM", default_value = "symbolic", allow_hyphen_values = true)]
    pub h_m: String,
    #[arg(long = "hV", default_value = "symbolic", allow_hyphen_values = true)]
    pub h_v: String,
    /// contragredient or symmetric
    #[arg(long, default_value = "contragredient")]
    pub pairing: String,
}

impl ModuleArgs {
    pub fn params(&self) -> Result<Params, CliError> {
        let p = Params {
            c_l: binding(&self.c_l, "cL")?,
            c_m: binding(&self.c_m, "cM")?,
            h_l: binding(&self.h_l, "hL")?,
            h_w: binding(&self.h_w, "hW")?,
            h_m: binding(&self.h_m, "hM")?,
            h_v: binding(&self.h_v, "hV")?,
        };
        if p.c_m.is_zero() {
            return Err(CliError::Pole("c_M = 0; the generic algebra needs c_M != 0".into()));
        }
        Ok(p)
    }

    pub fn pairing(&self) -> Result<gw3ca_core::verma::Pairing, CliError> {
        use gw3ca_core::verma::Pairing;
        match self.pairing.as_str() {
            "contragredient" => Ok(Pairing::Contragredient),
            "symmetric" => Ok(Pairing::Symmetric),
            other => Err(CliError::Parse(format!("unknown pairing {:?}", other))),
        }
    }
}

/// Rationals `n/d` with `|n|, d <= 10^4` from a seeded stream.
pub struct Sampler(ChaCha8Rng);

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn rational(&mut self) -> GaussRat {
        GaussRat::from_frac(self.0.gen_range(-10_000..=10_000), self.0.gen_range(1..=10_000))
    }

    /// A binding of every free symbol of `params`.
    pub fn point(&mut self, params: &Params) -> HashMap<Symbol, GaussRat> {
        let mut syms: Vec<Symbol> = [&params.c_l, &params.c_m, &params.h_l, &params.h_w, &params.h_m, &params.h_v]
            .iter()
            .flat_map(|x| x.symbols())
            .collect();
        syms.sort();
        syms.dedup();
        syms.into_iter().map(|s| (s, self.rational())).collect()
    }
}
