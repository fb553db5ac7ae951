//! Exact verification of the series identities that turn the holomorphic
//! Lefschetz integrand into the Â-integrand.
//!
//! Per root,
//!
//! ```text
//! γ / ((1 - e^{-γ})(1 + e^{γ})) = ½ · e^{-γ} · 2γ / (1 - e^{-2γ})
//! ```
//!
//! and multiplying over the `m` roots of `T_F`,
//!
//! ```text
//! Td(F) · ch(∧T_F)^{-1} = 2^{-m} · e^{-c₁} · Td(F)|_{γ ↦ 2γ}
//! ```
//!
//! The degree-`m` part of the right-hand side equals the degree-`m` part of
//! `Td(F) · e^{-c₁/2}`, since rescaling the roots by 2 multiplies the
//! degree-`m` piece by `2^m`.
//!
//! Every check can be run with a [`Perturbation`] that breaks one factor; the
//! broken variants must fail, which keeps the verifier honest.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::exact::{self, Rational};
use crate::genera::{ahat_integrand, ch_exterior, todd_class};
use crate::symseries::chern::{canonical_order, monomial_label, weighted_degree};
use crate::symseries::{SymSeries, UniSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Perturbation {
    #[default]
    None,
    /// Omit the `e^{-c₁}` factor.
    DropExpC1,
    /// Use `2^{-2m}` instead of `2^{-m}` as normalizer.
    SquaredNormalizer,
    /// Scale roots by 3 instead of 2.
    RootScaleThree,
}

impl Perturbation {
    pub const ALL: [Perturbation; 3] = [
        Perturbation::DropExpC1,
        Perturbation::SquaredNormalizer,
        Perturbation::RootScaleThree,
    ];

    fn root_scale(self) -> i64 {
        if self == Perturbation::RootScaleThree {
            3
        } else {
            2
        }
    }

    /// Normalizer `2^{-m}`, or `2^{-2m}` when perturbed.
    fn normalizer(self, num_roots: usize) -> Rational {
        let exp = if self == Perturbation::SquaredNormalizer {
            2 * num_roots
        } else {
            num_roots
        };
        exact::pow(&exact::ratio(1, 2), exp)
    }

    fn suffix(self) -> &'static str {
        match self {
            Perturbation::None => "",
            Perturbation::DropExpC1 => "[drop_exp_c1]",
            Perturbation::SquaredNormalizer => "[squared_normalizer]",
            Perturbation::RootScaleThree => "[root_scale_3]",
        }
    }
}

/// First coefficient, in canonical Chern-basis order, at which the two sides
/// differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub degree: usize,
    pub monomial: String,
    #[serde(serialize_with = "exact::serialize_pq")]
    pub lhs: Rational,
    #[serde(serialize_with = "exact::serialize_pq")]
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub num_roots: usize,
    pub trunc_degree: usize,
    pub passed: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

impl VerificationReport {
    fn new(
        check_name: String,
        num_roots: usize,
        trunc_degree: usize,
        first: Option<Discrepancy>,
    ) -> Self {
        VerificationReport {
            check_name,
            num_roots,
            trunc_degree,
            passed: first.is_none(),
            first_discrepancy: first,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} (roots={}, degree={})",
            self.check_name, self.num_roots, self.trunc_degree
        )?;
        if let Some(d) = &self.first_discrepancy {
            write!(
                f,
                ": degree {} coefficient of {} is {} vs {}",
                d.degree,
                d.monomial,
                exact::to_pq(&d.lhs),
                exact::to_pq(&d.rhs)
            )?;
        }
        Ok(())
    }
}

/// Compares two series coefficientwise in the Chern basis.
pub fn first_discrepancy(lhs: &SymSeries, rhs: &SymSeries) -> Option<Discrepancy> {
    let l = lhs.to_chern_basis();
    let r = rhs.to_chern_basis();
    let mut keys: Vec<Vec<u32>> = l
        .terms()
        .into_iter()
        .chain(r.terms())
        .map(|(k, _)| k.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    keys.sort_by(|a, b| canonical_order(a, b));
    keys.into_iter().find_map(|k| {
        let (a, b) = (l.coeff(&k), r.coeff(&k));
        (a != b).then(|| Discrepancy {
            degree: weighted_degree(&k),
            monomial: monomial_label(&k),
            lhs: a,
            rhs: b,
        })
    })
}

fn first_uni_discrepancy(lhs: &UniSeries, rhs: &UniSeries) -> Option<Discrepancy> {
    let d = lhs.degree().min(rhs.degree());
    (0..=d).find_map(|k| {
        let (a, b) = (lhs.coeff(k), rhs.coeff(k));
        (a != b).then(|| Discrepancy {
            degree: k,
            monomial: monomial_label(&[k as u32]),
            lhs: a,
            rhs: b,
        })
    })
}

pub fn verify_per_root(degree: usize) -> VerificationReport {
    verify_per_root_with(degree, Perturbation::None)
}

/// Single-root identity as univariate series through `degree`.
pub fn verify_per_root_with(degree: usize, p: Perturbation) -> VerificationReport {
    let one = exact::int(1);
    let todd = UniSeries::todd_factor(degree);
    let ch = &UniSeries::one(degree) + &UniSeries::exp_scaled(&one, degree);
    let lhs = &todd * &ch.reciprocal().expect("1 + e^x is a unit");

    let scale = exact::int(p.root_scale());
    let scaled_todd = UniSeries::todd_denominator(&scale, degree)
        .reciprocal()
        .expect("unit");
    let mut rhs = scaled_todd.scale(&p.normalizer(1));
    if p != Perturbation::DropExpC1 {
        rhs = &rhs * &UniSeries::exp_scaled(&-one, degree);
    }
    let name = format!("per_root{}", p.suffix());
    VerificationReport::new(name, 1, degree, first_uni_discrepancy(&lhs, &rhs))
}

/// `2^{-m} · e^{-c₁} · Td|_{γ ↦ 2γ}` (or its perturbed variant).
fn product_rhs(num_roots: usize, degree: usize, p: Perturbation) -> Result<SymSeries> {
    let scaled = todd_class(num_roots, degree)?.scale_roots(&exact::int(p.root_scale()));
    let mut rhs = scaled.scalar_mul(&p.normalizer(num_roots));
    if p != Perturbation::DropExpC1 {
        rhs = rhs.mul(&SymSeries::exp_c1_multiple(
            &exact::int(-1),
            num_roots,
            degree,
        )?)?;
    }
    Ok(rhs)
}

pub fn verify_product(num_roots: usize, degree: usize) -> Result<VerificationReport> {
    verify_product_with(num_roots, degree, Perturbation::None)
}

/// `Td · ch(∧T)^{-1} = 2^{-m} e^{-c₁} Td|_{γ ↦ 2γ}` through `degree`.
pub fn verify_product_with(
    num_roots: usize,
    degree: usize,
    p: Perturbation,
) -> Result<VerificationReport> {
    let lhs = todd_class(num_roots, degree)?.mul(&ch_exterior(num_roots, degree)?.reciprocal()?)?;
    let rhs = product_rhs(num_roots, degree, p)?;
    let name = format!("product{}", p.suffix());
    Ok(VerificationReport::new(
        name,
        num_roots,
        degree,
        first_discrepancy(&lhs, &rhs),
    ))
}

pub fn verify_top_degree(num_roots: usize) -> Result<VerificationReport> {
    verify_top_degree_with(num_roots, Perturbation::None)
}

/// Degree-`m` part of the rescaled product against the degree-`m` part of
/// the Â-integrand.
pub fn verify_top_degree_with(num_roots: usize, p: Perturbation) -> Result<VerificationReport> {
    let m = num_roots;
    let lhs = product_rhs(m, m, p)?.homogeneous_part(m)?;
    let rhs = ahat_integrand(m, m)?.homogeneous_part(m)?;
    let name = format!("top_degree{}", p.suffix());
    Ok(VerificationReport::new(
        name,
        m,
        m,
        first_discrepancy(&lhs, &rhs),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Check {
    PerRoot(usize),
    Product(usize, usize),
    TopDegree(usize),
}

impl Check {
    fn run(self, p: Perturbation) -> Result<VerificationReport> {
        match self {
            Check::PerRoot(d) => Ok(verify_per_root_with(d, p)),
            Check::Product(m, d) => verify_product_with(m, d, p),
            Check::TopDegree(m) => verify_top_degree_with(m, p),
        }
    }
}

/// Runs the per-root check at `degree`, then the product and top-degree
/// checks for every root count in ascending order. Checks execute in
/// parallel; the returned order depends only on the parameters.
pub fn run_suite(roots: &[usize], degree: usize) -> Result<Vec<VerificationReport>> {
    run_suite_with(roots, degree, Perturbation::None)
}

pub fn run_suite_with(
    roots: &[usize],
    degree: usize,
    p: Perturbation,
) -> Result<Vec<VerificationReport>> {
    let mut roots = roots.to_vec();
    roots.sort_unstable();
    roots.dedup();
    let mut checks = vec![Check::PerRoot(degree)];
    checks.extend(roots.iter().map(|&m| Check::Product(m, degree)));
    checks.extend(roots.iter().map(|&m| Check::TopDegree(m)));
    checks.into_par_iter().map(|c| c.run(p)).collect()
}

/// Orders reports as [`run_suite`] does: by check kind, then root count,
/// then degree.
pub fn report_order(a: &VerificationReport, b: &VerificationReport) -> Ordering {
    let rank = |r: &VerificationReport| match r.check_name.split('[').next() {
        Some("per_root") => 0,
        Some("product") => 1,
        _ => 2,
    };
    rank(a)
        .cmp(&rank(b))
        .then(a.num_roots.cmp(&b.num_roots))
        .then(a.trunc_degree.cmp(&b.trunc_degree))
}
