//! Worked example families of antisymplectic involutions, as constructors
//! producing traces and fixed-surface invariants.
//!
//! Entries are static data: the traces come from each family's formula, the
//! totals from [`invariants_from_trace`], and component splits only where
//! they are known independently.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fourfold::{admissible_traces, invariants_from_trace, FourfoldFixedInvariants};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    HilbertSquare,
    SexticDoublePlane,
    NikulinCurves,
    EpwDoubleSextic,
    BitangentSurface,
    CubicFourfoldFano,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::HilbertSquare,
        Family::SexticDoublePlane,
        Family::NikulinCurves,
        Family::EpwDoubleSextic,
        Family::BitangentSurface,
        Family::CubicFourfoldFano,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::HilbertSquare => "hilbert_square",
            Family::SexticDoublePlane => "sextic_double_plane",
            Family::NikulinCurves => "nikulin_curves",
            Family::EpwDoubleSextic => "epw_double_sextic",
            Family::BitangentSurface => "bitangent_surface",
            Family::CubicFourfoldFano => "cubic_fourfold_fano",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_owned()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub label: String,
    pub k2: i64,
    pub chi: i64,
}

impl Component {
    fn new(label: &str, k2: i64, chi: i64) -> Self {
        Component {
            label: label.to_owned(),
            k2,
            chi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub family: Family,
    pub parameters: BTreeMap<String, i64>,
    pub t: i64,
    pub invariants: FourfoldFixedInvariants,
    /// Known invariants of the connected pieces of the fixed surface.
    pub components: Option<Vec<Component>>,
    /// What the fixed surface is, in words.
    pub fixed_locus: &'static str,
}

impl CatalogEntry {
    fn new(
        family: Family,
        parameters: &[(&str, i64)],
        t: i64,
        components: Option<Vec<Component>>,
        fixed_locus: &'static str,
    ) -> Result<Self> {
        let invariants = invariants_from_trace(t)?;
        if let Some(parts) = &components {
            let k2: i64 = parts.iter().map(|c| c.k2).sum();
            let chi: i64 = parts.iter().map(|c| c.chi).sum();
            if (k2, chi) != (invariants.surface.k2, invariants.surface.chi) {
                return Err(Error::CrossCheck(format!(
                    "{family}: components sum to ({k2}, {chi}), totals are ({}, {})",
                    invariants.surface.k2, invariants.surface.chi
                )));
            }
        }
        Ok(CatalogEntry {
            family,
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            t,
            invariants,
            components,
            fixed_locus,
        })
    }
}

fn check_range(name: &'static str, value: i64, min: i64, max: i64) -> Result<()> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::ParameterRange {
            name,
            value,
            min,
            max,
        })
    }
}

const HILBERT_LOCUS: &str = "symmetric square of the fixed curve plus the quotient K3/involution";

/// Natural involution on the Hilbert square of a K3 surface with an
/// antisymplectic involution fixing a curve of Euler number `e(Γ)`:
/// `t = e(Γ) + 1`, the `+1` coming from the exceptional divisor.
pub fn hilbert_square(euler_gamma: i64) -> Result<CatalogEntry> {
    CatalogEntry::new(
        Family::HilbertSquare,
        &[("euler_gamma", euler_gamma)],
        euler_gamma + 1,
        None,
        HILBERT_LOCUS,
    )
}

/// Double plane branched over a sextic with `s` nodes, `0 ≤ s ≤ 10`. The
/// fixed curve is the normalized sextic, `e(Γ) = -18 + 2s`.
pub fn sextic_double_plane(s: i64) -> Result<CatalogEntry> {
    check_range("s", s, 0, 10)?;
    let euler_gamma = -18 + 2 * s;
    let t = euler_gamma + 1;
    debug_assert_eq!(t, -17 + 2 * s);
    CatalogEntry::new(
        Family::SexticDoublePlane,
        &[("euler_gamma", euler_gamma), ("s", s)],
        t,
        None,
        HILBERT_LOCUS,
    )
}

/// K3 involution fixing `r` disjoint rational curves, `1 ≤ r ≤ 10`:
/// `e(Γ) = 2r`, `t = 2r + 1`.
pub fn nikulin_curves(r: i64) -> Result<CatalogEntry> {
    check_range("r", r, 1, 10)?;
    let euler_gamma = 2 * r;
    CatalogEntry::new(
        Family::NikulinCurves,
        &[("euler_gamma", euler_gamma), ("r", r)],
        euler_gamma + 1,
        None,
        HILBERT_LOCUS,
    )
}

/// Covering involution of a double EPW sextic; the only family realizing the
/// maximal 20-dimensional moduli, so `t = -19`. The fixed surface is connected.
pub fn epw_double_sextic() -> CatalogEntry {
    CatalogEntry::new(
        Family::EpwDoubleSextic,
        &[],
        -19,
        Some(vec![Component::new("F", 360, 46)]),
        "connected surface",
    )
    .expect("static entry")
}

/// Specialization of the EPW family to the Hilbert square of a quartic
/// without lines; the fixed locus becomes the surface of bitangents, with
/// the same invariants.
pub fn bitangent_surface() -> CatalogEntry {
    CatalogEntry::new(
        Family::BitangentSurface,
        &[],
        -19,
        Some(vec![Component::new("B", 360, 46)]),
        "surface of bitangents of a quartic",
    )
    .expect("static entry")
}

/// Fano variety of lines on a cubic fourfold invariant under a reflection.
/// The fixed surface is a cubic surface `S` plus the Fano surface `T` of a
/// cubic threefold; `t = -7` is taken as known data.
pub fn cubic_fourfold_fano() -> CatalogEntry {
    CatalogEntry::new(
        Family::CubicFourfoldFano,
        &[],
        -7,
        Some(vec![Component::new("S", 3, 1), Component::new("T", 45, 6)]),
        "cubic surface plus Fano surface of a cubic threefold",
    )
    .expect("static entry")
}

/// Full parameter sweep for one family.
///
/// The `hilbert_square` sweep runs over the fixed-curve Euler numbers
/// `-18, -16, …, 20` realized by the sextic and Nikulin families.
pub fn family_entries(family: Family) -> Vec<CatalogEntry> {
    let ok = |r: Result<CatalogEntry>| r.expect("parameter in range");
    match family {
        Family::HilbertSquare => (-18..=20)
            .step_by(2)
            .map(|e| ok(hilbert_square(e)))
            .collect(),
        Family::SexticDoublePlane => (0..=10).map(|s| ok(sextic_double_plane(s))).collect(),
        Family::NikulinCurves => (1..=10).map(|r| ok(nikulin_curves(r))).collect(),
        Family::EpwDoubleSextic => vec![epw_double_sextic()],
        Family::BitangentSurface => vec![bitangent_surface()],
        Family::CubicFourfoldFano => vec![cubic_fourfold_fano()],
    }
}

/// Every concrete family: 11 sextic, 10 Nikulin, EPW, bitangent and cubic
/// fourfold entries, 24 in total. The generic `hilbert_square` constructor is
/// left out since the sextic and Nikulin entries are instances of it.
pub fn all_entries() -> Vec<CatalogEntry> {
    [
        Family::SexticDoublePlane,
        Family::NikulinCurves,
        Family::EpwDoubleSextic,
        Family::BitangentSurface,
        Family::CubicFourfoldFano,
    ]
    .into_iter()
    .flat_map(family_entries)
    .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub realized: Vec<i64>,
    pub missing: Vec<i64>,
    pub surplus: Vec<i64>,
    pub complete: bool,
}

/// Compares the traces realized by `entries` with the admissible set.
pub fn coverage_of(entries: &[CatalogEntry]) -> CoverageReport {
    let realized: BTreeSet<i64> = entries.iter().map(|e| e.t).collect();
    let admissible: BTreeSet<i64> = admissible_traces().into_iter().collect();
    let missing: Vec<i64> = admissible.difference(&realized).copied().collect();
    let surplus: Vec<i64> = realized.difference(&admissible).copied().collect();
    CoverageReport {
        complete: missing.is_empty() && surplus.is_empty(),
        realized: realized.into_iter().collect(),
        missing,
        surplus,
    }
}

/// Entries used for the coverage claim: sextic double planes, Nikulin
/// involutions and the EPW family.
pub fn coverage_sources() -> Vec<CatalogEntry> {
    [
        Family::SexticDoublePlane,
        Family::NikulinCurves,
        Family::EpwDoubleSextic,
    ]
    .into_iter()
    .flat_map(family_entries)
    .collect()
}

pub fn trace_coverage() -> CoverageReport {
    coverage_of(&coverage_sources())
}
