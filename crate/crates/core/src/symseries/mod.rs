//! Truncated symmetric power series in `m` formal Chern roots.
//!
//! A [`SymSeries`] stores one coefficient per orbit of monomials under the
//! symmetric group: the key is the weakly decreasing exponent vector (a
//! partition padded with zeros to length `m`) and the value is the common
//! coefficient of every monomial in that orbit. In other words the series is
//! written in the monomial symmetric basis `m_λ`.

pub mod chern;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};

pub use chern::ChernPolynomial;
pub use univariate::UniSeries;

/// Canonical orbit representative: exponents sorted weakly decreasing.
pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSeries {
    num_roots: usize,
    trunc_degree: usize,
    terms: BTreeMap<Exponents, Rational>,
}

pub(crate) fn degree_of(exps: &[u32]) -> usize {
    exps.iter().map(|&e| e as usize).sum()
}

fn canonical(mut exps: Vec<u32>) -> Exponents {
    exps.sort_unstable_by(|a, b| b.cmp(a));
    exps
}

/// Number of distinct monomials in the orbit of `exps` (length-`m` vector).
fn orbit_size(exps: &[u32]) -> u64 {
    let mut total = 1u64;
    let mut seen = 0u64;
    let mut run = 0u64;
    let mut prev: Option<u32> = None;
    let mut sorted = exps.to_vec();
    sorted.sort_unstable();
    // multinomial m! / prod(mult!) computed incrementally as a product of binomials
    for e in sorted {
        if prev == Some(e) {
            run += 1;
        } else {
            run = 1;
            prev = Some(e);
        }
        seen += 1;
        total = total * seen / run;
    }
    total
}

/// All distinct permutations of a multiset, in lexicographic order.
fn distinct_permutations(exps: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = exps.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Weakly decreasing vectors of length `m` with entry sum at most `d`.
pub(crate) fn partitions(m: usize, d: usize) -> Vec<Exponents> {
    fn rec(m: usize, left: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let hi = cap.min(left as u32);
        for e in (0..=hi).rev() {
            cur.push(e);
            rec(m, left - e as usize, e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, d, u32::MAX, &mut Vec::with_capacity(m), &mut out);
    out
}

impl SymSeries {
    fn empty(num_roots: usize, trunc_degree: usize) -> Result<Self> {
        if num_roots == 0 {
            return Err(Error::NoRoots);
        }
        Ok(SymSeries {
            num_roots,
            trunc_degree,
            terms: BTreeMap::new(),
        })
    }

    /// Builds a series from `(exponents, coefficient)` pairs. Exponent vectors
    /// may be given in any order; they are canonicalized, terms above the
    /// truncation are dropped and coefficients on the same orbit are summed.
    ///
    /// Each pair contributes its coefficient to the whole orbit, i.e. the
    /// input is read in the monomial symmetric basis.
    pub fn from_terms<I>(num_roots: usize, trunc_degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut out = Self::empty(num_roots, trunc_degree)?;
        for (exps, c) in terms {
            if exps.len() > num_roots {
                return Err(Error::RootCountMismatch {
                    left: num_roots,
                    right: exps.len(),
                });
            }
            let mut exps = exps;
            exps.resize(num_roots, 0);
            if degree_of(&exps) <= trunc_degree {
                out.accumulate(canonical(exps), c);
            }
        }
        Ok(out)
    }

    fn accumulate(&mut self, key: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn zero(num_roots: usize, trunc_degree: usize) -> Result<Self> {
        Self::empty(num_roots, trunc_degree)
    }

    pub fn constant(c: Rational, num_roots: usize, trunc_degree: usize) -> Result<Self> {
        Self::from_terms(num_roots, trunc_degree, [(vec![0; num_roots], c)])
    }

    pub fn one(num_roots: usize, trunc_degree: usize) -> Result<Self> {
        Self::constant(Rational::one(), num_roots, trunc_degree)
    }

    /// The monomial symmetric function `m_λ`.
    pub fn monomial_symmetric(
        partition: &[u32],
        num_roots: usize,
        trunc_degree: usize,
    ) -> Result<Self> {
        Self::from_terms(
            num_roots,
            trunc_degree,
            [(partition.to_vec(), Rational::one())],
        )
    }

    /// The elementary symmetric polynomial `e_k` (zero when `k > m`).
    pub fn elementary(k: usize, num_roots: usize, trunc_degree: usize) -> Result<Self> {
        if k > num_roots {
            return Self::zero(num_roots, trunc_degree);
        }
        Self::monomial_symmetric(&vec![1; k], num_roots, trunc_degree)
    }

    pub fn num_roots(&self) -> usize {
        self.num_roots
    }

    pub fn trunc_degree(&self) -> usize {
        self.trunc_degree
    }

    /// Stored terms, keyed by canonical exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with the given exponents (any order).
    pub fn coeff(&self, exps: &[u32]) -> Rational {
        let mut key = exps.to_vec();
        key.resize(self.num_roots, 0);
        self.terms
            .get(&canonical(key))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&[])
    }

    /// Re-truncates at a lower degree. Asking for a higher degree than the
    /// series is known to is a [`Error::DegreeOutOfRange`].
    pub fn truncate(&self, degree: usize) -> Result<Self> {
        if degree > self.trunc_degree {
            return Err(Error::DegreeOutOfRange {
                degree,
                trunc: self.trunc_degree,
            });
        }
        Ok(SymSeries {
            num_roots: self.num_roots,
            trunc_degree: degree,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| degree_of(k) <= degree)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        })
    }

    /// `∏_i f(γ_i)` truncated at degree `d`.
    ///
    /// The coefficient of `γ^α` in the product is `∏_i f_{α_i}`, so the
    /// result is filled directly orbit by orbit.
    pub fn per_root_product(f: &UniSeries, num_roots: usize, trunc_degree: usize) -> Result<Self> {
        if f.degree() < trunc_degree {
            return Err(Error::InsufficientDegree {
                given: f.degree(),
                needed: trunc_degree,
            });
        }
        let mut out = Self::empty(num_roots, trunc_degree)?;
        for key in partitions(num_roots, trunc_degree) {
            let c = key
                .iter()
                .fold(Rational::one(), |acc, &e| acc * f.coeff(e as usize));
            out.accumulate(key, c);
        }
        Ok(out)
    }

    /// `exp(c · e₁)`, i.e. `∏_i exp(c γ_i)`.
    pub fn exp_c1_multiple(c: &Rational, num_roots: usize, trunc_degree: usize) -> Result<Self> {
        Self::per_root_product(
            &UniSeries::exp_scaled(c, trunc_degree),
            num_roots,
            trunc_degree,
        )
    }

    fn check_roots(&self, other: &Self) -> Result<()> {
        if self.num_roots != other.num_roots {
            return Err(Error::RootCountMismatch {
                left: self.num_roots,
                right: other.num_roots,
            });
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_roots(other)?;
        let d = self.trunc_degree.min(other.trunc_degree);
        let mut out = self.truncate(d)?;
        for (k, v) in &other.terms {
            if degree_of(k) <= d {
                out.accumulate(k.clone(), v.clone());
            }
        }
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        self.scalar_mul(&-Rational::one())
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect()
        };
        SymSeries {
            num_roots: self.num_roots,
            trunc_degree: self.trunc_degree,
            terms,
        }
    }

    /// Truncated product.
    ///
    /// For orbit representatives `λ`, `μ` and each distinct rearrangement `β`
    /// of `μ`, the monomial `γ^λ γ^β` lies in the orbit `ν = sort(λ + β)`.
    /// Summing over the full orbit of `λ` overcounts each monomial of `ν` by
    /// `|orbit(λ)| / |orbit(ν)|`, which gives the orbit-representative
    /// coefficient of `m_λ · m_μ`.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_roots(other)?;
        let d = self.trunc_degree.min(other.trunc_degree);
        let mut out = Self::empty(self.num_roots, d)?;

        let rhs: Vec<(usize, Vec<Vec<u32>>, &Rational)> = other
            .terms
            .iter()
            .map(|(k, v)| (degree_of(k), distinct_permutations(k), v))
            .collect();

        let mut sum = vec![0u32; self.num_roots];
        for (lam, a) in &self.terms {
            let deg_lam = degree_of(lam);
            if deg_lam > d {
                continue;
            }
            let orbit_lam = orbit_size(lam);
            for (deg_mu, perms, b) in &rhs {
                if deg_lam + deg_mu > d {
                    continue;
                }
                let ab = a * *b;
                for beta in perms {
                    for i in 0..self.num_roots {
                        sum[i] = lam[i] + beta[i];
                    }
                    let nu = canonical(sum.clone());
                    let w = exact::ratio(orbit_lam as i64, orbit_size(&nu) as i64);
                    out.accumulate(nu, &ab * w);
                }
            }
        }
        Ok(out)
    }

    /// Inverse of a unit series, exact through `trunc_degree`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv0 = a0.recip();
        // a = a0 (1 + u) with u of order >= 1, so 1/a = a0^{-1} Σ_k (-u)^k
        let mut minus_u = self.scalar_mul(&-inv0.clone());
        minus_u.terms.remove(&vec![0; self.num_roots]);

        let one = Self::one(self.num_roots, self.trunc_degree)?;
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..self.trunc_degree {
            power = power.mul(&minus_u)?;
            if power.is_empty() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc.scalar_mul(&inv0))
    }

    /// Substitutes `γ_i ↦ c γ_i`.
    pub fn scale_roots(&self, c: &Rational) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), v * exact::pow(c, degree_of(k))))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SymSeries {
            num_roots: self.num_roots,
            trunc_degree: self.trunc_degree,
            terms,
        }
    }

    /// The degree-`k` graded piece. The result keeps the truncation degree of
    /// `self`, so it can be combined with the original series directly.
    pub fn homogeneous_part(&self, k: usize) -> Result<Self> {
        if k > self.trunc_degree {
            return Err(Error::DegreeOutOfRange {
                degree: k,
                trunc: self.trunc_degree,
            });
        }
        Ok(SymSeries {
            num_roots: self.num_roots,
            trunc_degree: self.trunc_degree,
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| degree_of(key) == k)
                .map(|(key, v)| (key.clone(), v.clone()))
                .collect(),
        })
    }

    /// Rewrites the series in the elementary symmetric basis.
    pub fn to_chern_basis(&self) -> ChernPolynomial {
        ChernPolynomial::from_series(self)
    }

    /// Integrates the degree-2 part over a surface: with the degree-2 piece
    /// written as `α e₁² + β e₂`, returns `α K² + β e` (`c₁² = K²`, `c₂ = e`).
    pub fn evaluate_surface(&self, k2: i64, c2: i64) -> Result<Rational> {
        if self.num_roots != 2 {
            return Err(Error::NotASurface(self.num_roots));
        }
        let top = self.homogeneous_part(2)?.to_chern_basis();
        Ok(top.coeff(&[2, 0]) * exact::int(k2) + top.coeff(&[0, 1]) * exact::int(c2))
    }
}

impl fmt::Display for SymSeries {
    /// Root-basis rendering, `m[λ]` standing for the monomial symmetric
    /// function of `λ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O({})", self.trunc_degree + 1);
        }
        let mut keys: Vec<_> = self.terms.keys().collect();
        keys.sort_by_key(|k| degree_of(k));
        for (i, k) in keys.into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let parts: Vec<String> = k
                .iter()
                .filter(|&&e| e > 0)
                .map(|e| e.to_string())
                .collect();
            write!(f, "({})*m[{}]", self.terms[k], parts.join(","))?;
        }
        write!(f, " + O({})", self.trunc_degree + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn e(k: usize, m: usize, d: usize) -> SymSeries {
        SymSeries::elementary(k, m, d).unwrap()
    }

    /// Product computed monomial by monomial over every exponent vector,
    /// without orbit bookkeeping.
    fn naive_mul(a: &SymSeries, b: &SymSeries) -> SymSeries {
        let m = a.num_roots();
        let d = a.trunc_degree().min(b.trunc_degree());
        let mut terms = Vec::new();
        for nu in partitions(m, d) {
            let mut c = Rational::zero();
            let mut alpha = vec![0u32; m];
            loop {
                let beta: Vec<u32> = nu.iter().zip(&alpha).map(|(n, a)| n - a).collect();
                c += a.coeff(&alpha) * b.coeff(&beta);
                let mut i = 0;
                while i < m {
                    if alpha[i] < nu[i] {
                        alpha[i] += 1;
                        break;
                    }
                    alpha[i] = 0;
                    i += 1;
                }
                if i == m {
                    break;
                }
            }
            terms.push((nu, c));
        }
        SymSeries::from_terms(m, d, terms).unwrap()
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[0, 0, 0]), 1);
        assert_eq!(orbit_size(&[1, 0, 0]), 3);
        assert_eq!(orbit_size(&[2, 1, 0]), 6);
        assert_eq!(orbit_size(&[1, 1, 0, 0]), 6);
    }

    #[test]
    fn permutations_of_multiset() {
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 1, 0]).len(), 12);
    }

    #[test]
    fn partition_count() {
        // partitions of n <= 4 with at most 2 parts: 1+1+2+2+3
        assert_eq!(partitions(2, 4).len(), 9);
    }

    #[test]
    fn constant_per_root_product_is_one() {
        let s = SymSeries::per_root_product(&UniSeries::one(4), 3, 4).unwrap();
        assert_eq!(s, SymSeries::one(3, 4).unwrap());
    }

    #[test]
    fn linear_factor_gives_chern_polynomial() {
        let f = &UniSeries::one(2) + &UniSeries::x(2);
        let s = SymSeries::per_root_product(&f, 2, 2).unwrap();
        let expected = e(0, 2, 2)
            .add(&e(1, 2, 2))
            .unwrap()
            .add(&e(2, 2, 2))
            .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn per_root_product_rejects_short_factor() {
        let err = SymSeries::per_root_product(&UniSeries::one(1), 2, 3).unwrap_err();
        assert_eq!(
            err,
            Error::InsufficientDegree {
                given: 1,
                needed: 3
            }
        );
    }

    #[test]
    fn difference_of_squares() {
        let one = SymSeries::one(2, 2).unwrap();
        let p = one.add(&e(1, 2, 2)).unwrap();
        let q = one.sub(&e(1, 2, 2)).unwrap();
        let e1sq = e(1, 2, 2).mul(&e(1, 2, 2)).unwrap();
        assert_eq!(p.mul(&q).unwrap(), one.sub(&e1sq).unwrap());
    }

    #[test]
    fn scalar_quarter_of_four() {
        let four = SymSeries::constant(int(4), 2, 3).unwrap();
        assert_eq!(four.scalar_mul(&ratio(1, 4)), SymSeries::one(2, 3).unwrap());
    }

    #[test]
    fn mismatched_roots_rejected() {
        let a = SymSeries::one(2, 2).unwrap();
        let b = SymSeries::one(3, 2).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::RootCountMismatch { .. })));
        assert!(matches!(a.add(&b), Err(Error::RootCountMismatch { .. })));
    }

    #[test]
    fn product_truncation_is_minimum() {
        let a = SymSeries::one(2, 5).unwrap();
        let b = SymSeries::one(2, 3).unwrap();
        assert_eq!(a.mul(&b).unwrap().trunc_degree(), 3);
    }

    #[test]
    fn zero_roots_rejected() {
        assert_eq!(SymSeries::one(0, 2), Err(Error::NoRoots));
    }

    #[test]
    fn reciprocal_basics() {
        let one = SymSeries::one(2, 4).unwrap();
        assert_eq!(one.reciprocal().unwrap(), one);
        let two = SymSeries::constant(int(2), 2, 4).unwrap();
        assert_eq!(
            two.reciprocal().unwrap(),
            SymSeries::constant(ratio(1, 2), 2, 4).unwrap()
        );
        assert_eq!(e(1, 2, 4).reciprocal(), Err(Error::NotAUnit));
    }

    #[test]
    fn reciprocal_of_exterior_character() {
        let f = &UniSeries::one(4) + &UniSeries::exp_scaled(&int(1), 4);
        let ch = SymSeries::per_root_product(&f, 2, 4).unwrap();
        let inv = ch.reciprocal().unwrap();
        assert_eq!(ch.mul(&inv).unwrap(), SymSeries::one(2, 4).unwrap());
        assert_eq!(inv.mul(&ch).unwrap(), SymSeries::one(2, 4).unwrap());
    }

    #[test]
    fn exp_c1_examples() {
        assert_eq!(
            SymSeries::exp_c1_multiple(&int(0), 3, 4).unwrap(),
            SymSeries::one(3, 4).unwrap()
        );
        let s = SymSeries::exp_c1_multiple(&int(-1), 1, 2).unwrap();
        assert_eq!(s.coeff(&[0]), int(1));
        assert_eq!(s.coeff(&[1]), int(-1));
        assert_eq!(s.coeff(&[2]), ratio(1, 2));

        // 1 - e1/2 + e1^2/8
        let s = SymSeries::exp_c1_multiple(&ratio(-1, 2), 2, 2).unwrap();
        let e1 = e(1, 2, 2);
        let expected = SymSeries::one(2, 2)
            .unwrap()
            .add(&e1.scalar_mul(&ratio(-1, 2)))
            .unwrap()
            .add(&e1.mul(&e1).unwrap().scalar_mul(&ratio(1, 8)))
            .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn scale_roots_edges() {
        let todd = SymSeries::per_root_product(&UniSeries::todd_factor(3), 2, 3).unwrap();
        assert_eq!(todd.scale_roots(&int(1)), todd);
        assert_eq!(todd.scale_roots(&int(0)), SymSeries::one(2, 3).unwrap());
        let lin = todd.scale_roots(&int(2)).homogeneous_part(1).unwrap();
        assert_eq!(lin, e(1, 2, 3));
    }

    #[test]
    fn homogeneous_parts() {
        let a = SymSeries::one(2, 3).unwrap().add(&e(1, 2, 3)).unwrap();
        assert_eq!(
            a.homogeneous_part(0).unwrap(),
            SymSeries::one(2, 3).unwrap()
        );
        assert!(matches!(
            a.homogeneous_part(4),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn evaluate_surface_guards() {
        assert_eq!(
            SymSeries::one(2, 2)
                .unwrap()
                .evaluate_surface(5, 7)
                .unwrap(),
            int(0)
        );
        assert_eq!(
            SymSeries::one(3, 2).unwrap().evaluate_surface(5, 7),
            Err(Error::NotASurface(3))
        );
        assert!(SymSeries::one(2, 1)
            .unwrap()
            .evaluate_surface(0, 0)
            .is_err());
    }

    #[test]
    fn todd_on_k3_data() {
        let todd = SymSeries::per_root_product(&UniSeries::todd_factor(2), 2, 2).unwrap();
        assert_eq!(todd.evaluate_surface(0, 24).unwrap(), int(2));
    }

    #[test]
    fn orbit_mul_matches_naive() {
        for m in 1..=4 {
            let d = 6;
            let f = UniSeries::todd_factor(d);
            let g = &UniSeries::one(d) + &UniSeries::exp_scaled(&ratio(-2, 3), d);
            let a = SymSeries::per_root_product(&f, m, d)
                .unwrap()
                .add(&e(2.min(m), m, d))
                .unwrap();
            let b = SymSeries::per_root_product(&g, m, d).unwrap();
            assert_eq!(a.mul(&b).unwrap(), naive_mul(&a, &b), "m = {m}");
        }
    }
}
