use crate::modes::{ModeAlgebra, Params};
use crate::scalars::ScalarFn;

use super::basis::{vacuum_basis, BasisMonomial};
use super::pairing::{gram_on, GramBlock, Pairing};
use super::VermaError;

#[derive(Clone, Debug)]
pub struct VacuumLevel {
    pub level: u32,
    pub basis: Vec<BasisMonomial>,
    pub gram: GramBlock,
    pub det: ScalarFn,
}

#[derive(Clone, Debug)]
pub struct VacuumReport {
    pub levels: Vec<VacuumLevel>,
}

impl VacuumReport {
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.basis.len()).collect()
    }

    /// Every Gram determinant on `B'` is nonzero.
    pub fn nondegenerate(&self) -> bool {
        self.levels.iter().all(|l| !l.det.is_zero())
    }
}

/// Gram matrices on the spanning set `B'` of `V(c, 0) / <L(-1)v>`.
pub fn vacuum_module(params: &Params, max_level: u32, conv: Pairing) -> Result<VacuumReport, VermaError> {
    if params.c_m.is_zero() {
        return Err(VermaError::CMZero);
    }
    let zero = [&params.h_l, &params.h_w, &params.h_m, &params.h_v];
    if zero.iter().any(|h| !h.is_zero()) {
        return Err(VermaError::NonzeroWeight);
    }
    let alg = ModeAlgebra::new(params.clone());
    let levels = (0..=max_level)
        .map(|n| {
            let basis = vacuum_basis(n).elements;
            let gram = gram_on(&alg, &basis, &basis, conv);
            let det = gram.det();
            VacuumLevel { level: n, basis, gram, det }
        })
        .collect();
    Ok(VacuumReport { levels })
}
