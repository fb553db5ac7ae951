use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{degree_of, SymSeries};
use crate::exact::Rational;

/// A symmetric polynomial written in the elementary symmetric generators
/// `e₁, …, e_m` (the Chern classes of the bundle with those roots).
///
/// Keys are exponent vectors `(a₁, …, a_m)` standing for `e₁^a₁ ⋯ e_m^a_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernPolynomial {
    num_roots: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Weighted degree of an `e`-monomial: `e_k` has degree `k`.
pub fn weighted_degree(exps: &[u32]) -> usize {
    exps.iter()
        .enumerate()
        .map(|(i, &a)| (i + 1) * a as usize)
        .sum()
}

/// Canonical term order: weighted degree, then exponent vectors descending,
/// so that `e₁²` precedes `e₂`.
pub fn canonical_order(a: &[u32], b: &[u32]) -> Ordering {
    weighted_degree(a)
        .cmp(&weighted_degree(b))
        .then_with(|| b.cmp(a))
}

/// `1`, `e1`, `e1^2*e3`, …
pub fn monomial_label(exps: &[u32]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| {
            if a == 1 {
                format!("e{}", i + 1)
            } else {
                format!("e{}^{}", i + 1, a)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_owned()
    } else {
        factors.join("*")
    }
}

impl ChernPolynomial {
    pub fn new<I>(num_roots: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut out = ChernPolynomial {
            num_roots,
            terms: BTreeMap::new(),
        };
        for (mut exps, c) in terms {
            exps.resize(num_roots, 0);
            out.accumulate(exps, c);
        }
        out
    }

    fn accumulate(&mut self, key: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn num_roots(&self) -> usize {
        self.num_roots
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        let mut key = exps.to_vec();
        key.resize(self.num_roots, 0);
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_order(a.0, b.0));
        v
    }

    /// The series `e₁^a₁ ⋯ e_m^a_m` in the root basis.
    fn expand_monomial(exps: &[u32], num_roots: usize, trunc: usize) -> SymSeries {
        let mut acc = SymSeries::one(num_roots, trunc).expect("num_roots >= 1");
        for (i, &a) in exps.iter().enumerate() {
            let ek = SymSeries::elementary(i + 1, num_roots, trunc).expect("num_roots >= 1");
            for _ in 0..a {
                acc = acc.mul(&ek).expect("same root count");
            }
        }
        acc
    }

    /// Expands back into the root basis, truncated at `trunc`.
    pub fn to_series(&self, trunc: usize) -> SymSeries {
        let mut acc = SymSeries::zero(self.num_roots.max(1), trunc).expect("num_roots >= 1");
        for (exps, c) in &self.terms {
            if weighted_degree(exps) > trunc {
                continue;
            }
            let term = Self::expand_monomial(exps, self.num_roots, trunc).scalar_mul(c);
            acc = acc.add(&term).expect("same root count");
        }
        acc
    }

    /// Reduction of a symmetric series to the elementary basis.
    ///
    /// Repeatedly takes the lexicographically largest orbit `λ` still present.
    /// The monomial `e₁^(λ₁-λ₂) e₂^(λ₂-λ₃) ⋯ e_m^λ_m` has `γ^λ` as its
    /// lexicographic leading term with coefficient 1, and every other term it
    /// contributes has the same degree and a smaller exponent vector, so
    /// subtracting it strictly lowers the leading orbit.
    pub(super) fn from_series(series: &SymSeries) -> Self {
        let m = series.num_roots();
        let trunc = series.trunc_degree();
        let mut rest = series.clone();
        let mut out = ChernPolynomial {
            num_roots: m,
            terms: BTreeMap::new(),
        };
        while let Some((lead, c)) = rest
            .terms
            .iter()
            .next_back()
            .map(|(k, v)| (k.clone(), v.clone()))
        {
            let exps: Vec<u32> = (0..m)
                .map(|i| lead[i] - lead.get(i + 1).copied().unwrap_or(0))
                .collect();
            debug_assert_eq!(weighted_degree(&exps), degree_of(&lead));
            let sub = Self::expand_monomial(&exps, m, trunc).scalar_mul(&c);
            rest = rest.sub(&sub).expect("same root count");
            out.accumulate(exps, c);
        }
        out
    }
}

impl fmt::Display for ChernPolynomial {
    /// Canonical text form, e.g. `1 + 1/2*e1 + 1/12*e1^2 + 1/12*e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exps, c)) in terms.into_iter().enumerate() {
            let label = monomial_label(exps);
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if label == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&label)?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for ChernPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::symseries::UniSeries;

    fn series(m: usize, d: usize, terms: &[(&[u32], i64)]) -> SymSeries {
        SymSeries::from_terms(m, d, terms.iter().map(|(k, c)| (k.to_vec(), int(*c)))).unwrap()
    }

    #[test]
    fn e1_from_roots() {
        let p = series(2, 3, &[(&[1, 0], 1)]).to_chern_basis();
        assert_eq!(p, ChernPolynomial::new(2, [(vec![1, 0], int(1))]));
    }

    #[test]
    fn newton_p2() {
        let p = series(2, 3, &[(&[2, 0], 1)]).to_chern_basis();
        assert_eq!(
            p,
            ChernPolynomial::new(2, [(vec![2, 0], int(1)), (vec![0, 1], int(-2))])
        );
        assert_eq!(p.to_string(), "e1^2 - 2*e2");
    }

    #[test]
    fn e1_e2_from_roots() {
        // γ1γ2(γ1+γ2) = γ1²γ2 + γ1γ2², a single orbit m[2,1]
        let p = series(2, 3, &[(&[2, 1], 1)]).to_chern_basis();
        assert_eq!(p, ChernPolynomial::new(2, [(vec![1, 1], int(1))]));
        assert_eq!(p.to_string(), "e1*e2");
    }

    #[test]
    fn todd_two_roots_in_chern_basis() {
        let todd = SymSeries::per_root_product(&UniSeries::todd_factor(2), 2, 2).unwrap();
        let p = todd.to_chern_basis();
        assert_eq!(p.to_string(), "1 + 1/2*e1 + 1/12*e1^2 + 1/12*e2");
        assert_eq!(p.coeff(&[0, 1]), ratio(1, 12));
    }

    #[test]
    fn zero_renders() {
        assert_eq!(ChernPolynomial::new(3, []).to_string(), "0");
    }

    #[test]
    fn labels_and_order() {
        assert_eq!(monomial_label(&[0, 0, 0]), "1");
        assert_eq!(monomial_label(&[2, 0, 1]), "e1^2*e3");
        assert_eq!(canonical_order(&[2, 0], &[0, 1]), Ordering::Less);
        assert_eq!(canonical_order(&[1, 0], &[0, 1]), Ordering::Less);
    }

    #[test]
    fn round_trip_three_roots() {
        let s = series(
            3,
            5,
            &[
                (&[3, 1, 0], 2),
                (&[1, 1, 1], -1),
                (&[2, 2, 1], 5),
                (&[0, 0, 0], 7),
            ],
        );
        assert_eq!(s.to_chern_basis().to_series(5), s);
    }
}
