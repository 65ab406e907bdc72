use clap::{Args, Subcommand};
use gw3ca_core::conformal::print_lambda;
use gw3ca_core::freefield::{
    gca_realisation, gw3_realisation, parametrised, printed_weights, wt1_images, zero_mode_weights, Realisation,
    RealisationParams, Weights,
};
use gw3ca_core::scalars::ScalarFn;
use serde_json::json;

use crate::params::binding;
use crate::report::{CliError, Report};

#[derive(Args, Clone, Debug)]
pub struct LatticeArgs {
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub lam: String,
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub mu: String,
}

impl LatticeArgs {
    fn params(&self) -> Result<RealisationParams, CliError> {
        Ok(RealisationParams::new(binding(&self.lam, "lam")?, binding(&self.mu, "mu")?)?)
    }
}

#[derive(Args, Clone, Debug)]
pub struct PointArgs {
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub p: String,
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub q: String,
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub r: String,
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub s: String,
}

#[derive(Subcommand, Clone, Debug)]
pub enum FreeFieldCmd {
    /// Check the brackets of the composite fields against the target algebra.
    Verify {
        /// gw3 or gca
        #[arg(long, default_value = "gw3")]
        preset: String,
        #[command(flatten)]
        lattice: LatticeArgs,
    },
    /// Highest weights of `e[p,q,r,s]`, or whether given weights are reached.
    Weights {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[command(flatten)]
        point: PointArgs,
        /// Test `h_M` (with `--hV`) against the excluded locus instead.
        #[arg(long = "hM", allow_hyphen_values = true, requires = "h_v")]
        h_m: Option<String>,
        #[arg(long = "hV", allow_hyphen_values = true, requires = "h_m")]
        h_v: Option<String>,
    },
    /// Level-one vectors in the Fock modules `e[+-1, q, r, s]`.
    Wt1 {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        r: String,
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        s: String,
    },
}

pub fn run(cmd: &FreeFieldCmd) -> Result<Report, CliError> {
    match cmd {
        FreeFieldCmd::Verify { preset, lattice } => verify(preset, lattice),
        FreeFieldCmd::Weights { lattice, h_m: Some(hm), h_v: Some(hv), .. } => excluded(lattice, hm, hv),
        FreeFieldCmd::Weights { lattice, point, .. } => weights(lattice, point),
        FreeFieldCmd::Wt1 { lattice, q, r, s } => wt1(lattice, q, r, s),
    }
}

fn verify(preset: &str, lattice: &LatticeArgs) -> Result<Report, CliError> {
    let real: Realisation = match preset {
        "gw3" => gw3_realisation(&lattice.params()?)?,
        "gca" => gca_realisation(),
        other => return Err(CliError::Parse(format!("no realisation for preset {:?}", other))),
    };
    let checks = real.verify();
    let ok = checks.iter().all(|c| c.matches);
    let mut text = String::new();
    for c in &checks {
        let status = if c.matches { "match".to_string() } else { format!("MISMATCH {}", print_lambda(real.source.preset(), &c.computed)) };
        text.push_str(&format!("{} {}  {}\n", c.pair.0, c.pair.1, status));
    }
    let good = checks.iter().filter(|c| c.matches).count();
    text.push_str(&format!("{}/{} brackets match", good, checks.len()));
    let js = json!({"preset": preset, "matching": good, "total": checks.len(),
        "brackets": checks.iter().map(|c| c.to_json(&real.source)).collect::<Vec<_>>()});
    Ok(Report::new(text, js, ok))
}

fn over_s10_text(x: &ScalarFn) -> String {
    if x.is_zero() {
        "0".into()
    } else {
        format!("({})/s10", x)
    }
}

fn weights_text(w: &Weights) -> String {
    format!("hL = {}\nhW = {}\nhM = {}\nhV = {}", w.h_l, over_s10_text(&w.h_w_s10()), w.h_m, over_s10_text(&w.h_v_s10()))
}

fn weights(lattice: &LatticeArgs, point: &PointArgs) -> Result<Report, CliError> {
    let rp = lattice.params()?;
    let x = [binding(&point.p, "p")?, binding(&point.q, "q")?, binding(&point.r, "r")?, binding(&point.s, "s")?];
    let printed = printed_weights(&rp, &x);
    let fock = zero_mode_weights(&gw3_realisation(&rp)?, &rp, &x)?;
    let ok = printed == fock;
    let text = format!("{}\nzero modes agree: {}", weights_text(&printed), ok);
    let js = json!({"weights": printed.to_json(), "zero_modes_agree": ok});
    Ok(Report::new(text, js, ok))
}

fn excluded(lattice: &LatticeArgs, hm: &str, hv: &str) -> Result<Report, CliError> {
    let rp = lattice.params()?;
    let (h_m, h_v) = (binding(hm, "hM")?, binding(hv, "hV")?);
    let ok = parametrised(&h_m, &(&h_v * &h_v), &rp.c_m());
    let verdict = if ok { "parametrised" } else { "not parametrised" };
    let text = format!("c_M = {}\nh_M = {}, h_V = {}: {}", rp.c_m(), h_m, h_v, verdict);
    let js = json!({"c_M": rp.c_m().to_string(), "hM": h_m.to_string(), "hV": h_v.to_string(), "parametrised": ok});
    Ok(Report::new(text, js, true))
}

fn wt1(lattice: &LatticeArgs, q: &str, r: &str, s: &str) -> Result<Report, CliError> {
    let rp = lattice.params()?;
    let real = gw3_realisation(&rp)?;
    let (q, r, s): (ScalarFn, ScalarFn, ScalarFn) = (binding(q, "q")?, binding(r, "r")?, binding(s, "s")?);
    let rep = wt1_images(&real, &rp, &q, &r, &s)?;
    let mut text: Vec<String> = rep.claims.iter().map(|c| format!("{}: {}", c.name, if c.holds { "holds" } else { "FAILS" })).collect();
    text.push(format!("{}/{} claims hold", rep.claims.iter().filter(|c| c.holds).count(), rep.claims.len()));
    Ok(Report::new(text.join("\n"), rep.to_json(), rep.all_hold()))
}
