//! Fixed surfaces of antisymplectic involutions on symplectic fourfolds with
//! `b₂ = 23`, parameterized by the trace `t` of the involution on `H^{1,1}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::genera::{complete_invariants, KnownInvariants, SurfaceInvariants};
use crate::lefschetz::{check_trace, eigen_split, euler_fixed, MAX_TRACE, MIN_TRACE};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourfoldFixedInvariants {
    pub t: i64,
    pub surface: SurfaceInvariants,
    /// Dimension of the local deformation space of the pair `(X, σ)`.
    pub moduli_dim: u32,
}

/// `K² = t² - 1`, `χ = (t² + 7)/8`, `e = (t² + 23)/2`, moduli `(21 - t)/2`.
///
/// The Euler number is cross-checked against the topological Lefschetz
/// route and the whole surface record against Noether completion.
pub fn invariants_from_trace(t: i64) -> Result<FourfoldFixedInvariants> {
    check_trace(t)?;
    let t2 = t * t;
    let k2 = t2 - 1;
    let chi = (t2 + 7) / 8;
    let euler = (t2 + 23) / 2;

    let via_trace = euler_fixed(t)?;
    if via_trace != euler {
        return Err(Error::CrossCheck(format!(
            "t = {t}: Lefschetz trace gives e = {via_trace}, closed form gives {euler}"
        )));
    }
    let surface = complete_invariants(KnownInvariants::k2_chi(k2, chi))?;
    if surface.euler != euler {
        return Err(Error::CrossCheck(format!(
            "t = {t}: Noether gives e = {}, closed form gives {euler}",
            surface.euler
        )));
    }

    // b - 2 = (21 - t)/2
    let moduli_dim = (eigen_split(t)?.b - 2) as u32;
    Ok(FourfoldFixedInvariants {
        t,
        surface,
        moduli_dim,
    })
}

/// The odd integers `-19, -17, …, 21`.
pub fn admissible_traces() -> Vec<i64> {
    (MIN_TRACE..=MAX_TRACE).step_by(2).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub k2: i64,
    pub chi: i64,
    /// Admissible traces realizing this pair, ascending.
    pub traces: Vec<i64>,
}

/// Distinct `(K², χ)` pairs over all admissible traces, ascending in `K²`.
pub fn corollary_table() -> Vec<TableRow> {
    let mut rows: BTreeMap<(i64, i64), Vec<i64>> = BTreeMap::new();
    for t in admissible_traces() {
        let inv = invariants_from_trace(t).expect("admissible trace");
        rows.entry((inv.surface.k2, inv.surface.chi))
            .or_default()
            .push(t);
    }
    rows.into_iter()
        .map(|((k2, chi), traces)| TableRow { k2, chi, traces })
        .collect()
}

pub fn corollary_pairs() -> Vec<(i64, i64)> {
    corollary_table()
        .into_iter()
        .map(|r| (r.k2, r.chi))
        .collect()
}
