//! Named characteristic classes and surface genus formulas.

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::symseries::{SymSeries, UniSeries};

/// Todd class `∏ γ_i / (1 - e^{-γ_i})`.
pub fn todd_class(num_roots: usize, degree: usize) -> Result<SymSeries> {
    SymSeries::per_root_product(&UniSeries::todd_factor(degree), num_roots, degree)
}

/// Chern character of the full exterior algebra, `∏ (1 + e^{γ_i})`.
pub fn ch_exterior(num_roots: usize, degree: usize) -> Result<SymSeries> {
    let f = &UniSeries::one(degree) + &UniSeries::exp_scaled(&exact::int(1), degree);
    SymSeries::per_root_product(&f, num_roots, degree)
}

/// `Td · e^{-c₁/2}`, whose top-degree integral is the Â-genus.
pub fn ahat_integrand(num_roots: usize, degree: usize) -> Result<SymSeries> {
    let half = SymSeries::exp_c1_multiple(&exact::ratio(-1, 2), num_roots, degree)?;
    todd_class(num_roots, degree)?.mul(&half)
}

/// Â-genus of a surface from its Chern numbers, by integrating
/// [`ahat_integrand`]. Equals `(2e - K²)/24`.
pub fn ahat_surface(k2: i64, euler: i64) -> Rational {
    ahat_integrand(2, 2)
        .and_then(|s| s.evaluate_surface(k2, euler))
        .expect("two-root integrand of degree 2")
}

/// Invariants of a compact complex surface, summed over components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub k2: i64,
    pub chi: i64,
    pub euler: i64,
    pub signature: i64,
    #[serde(serialize_with = "exact::serialize_pq")]
    pub ahat: BigRational,
}

/// Any subset of `(K², χ(O), e)`; [`complete_invariants`] needs at least two.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KnownInvariants {
    pub k2: Option<i64>,
    pub chi: Option<i64>,
    pub euler: Option<i64>,
}

impl KnownInvariants {
    pub fn k2_chi(k2: i64, chi: i64) -> Self {
        KnownInvariants {
            k2: Some(k2),
            chi: Some(chi),
            euler: None,
        }
    }

    pub fn k2_euler(k2: i64, euler: i64) -> Self {
        KnownInvariants {
            k2: Some(k2),
            chi: None,
            euler: Some(euler),
        }
    }

    pub fn chi_euler(chi: i64, euler: i64) -> Self {
        KnownInvariants {
            k2: None,
            chi: Some(chi),
            euler: Some(euler),
        }
    }
}

/// Fills in the missing invariant with Noether's formula `12χ = K² + e`,
/// then the signature `K² - 8χ` and `Â = -sign/8`.
pub fn complete_invariants(known: KnownInvariants) -> Result<SurfaceInvariants> {
    let (k2, chi, euler) = match (known.k2, known.chi, known.euler) {
        (Some(k2), Some(chi), None) => (k2, chi, 12 * chi - k2),
        (Some(k2), None, Some(e)) => {
            if (k2 + e) % 12 != 0 {
                return Err(Error::InconsistentSurface(format!(
                    "K² + e = {} is not divisible by 12",
                    k2 + e
                )));
            }
            (k2, (k2 + e) / 12, e)
        }
        (None, Some(chi), Some(e)) => (12 * chi - e, chi, e),
        (Some(k2), Some(chi), Some(e)) => {
            if 12 * chi != k2 + e {
                return Err(Error::InconsistentSurface(format!(
                    "12χ = {} but K² + e = {}",
                    12 * chi,
                    k2 + e
                )));
            }
            (k2, chi, e)
        }
        _ => {
            return Err(Error::InconsistentSurface(
                "at least two of K², χ, e are required".to_owned(),
            ))
        }
    };
    let signature = k2 - 8 * chi;
    debug_assert_eq!(3 * signature, k2 - 2 * euler);
    Ok(SurfaceInvariants {
        k2,
        chi,
        euler,
        signature,
        ahat: exact::ratio(-signature, 8),
    })
}
