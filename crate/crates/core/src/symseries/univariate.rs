//! Truncated power series in a single variable, used to build per-root factors.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};

/// `coeffs[k]` is the coefficient of `x^k`; the series is known through
/// degree `coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniSeries {
    coeffs: Vec<Rational>,
}

impl UniSeries {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        UniSeries { coeffs }
    }

    pub fn constant(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[0] = c;
        UniSeries { coeffs }
    }

    pub fn one(degree: usize) -> Self {
        Self::constant(Rational::one(), degree)
    }

    /// The variable `x` itself, known to `degree`.
    pub fn x(degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree.max(1) + 1];
        coeffs[1] = Rational::one();
        coeffs.truncate(degree + 1);
        UniSeries::new(coeffs)
    }

    /// `exp(c x)` through `degree`.
    pub fn exp_scaled(c: &Rational, degree: usize) -> Self {
        let coeffs = (0..=degree)
            .map(|k| exact::pow(c, k) / Rational::from_integer(exact::factorial(k)))
            .collect();
        UniSeries { coeffs }
    }

    /// `(1 - exp(-c x)) / (c x)`, the unit series whose reciprocal is the Todd factor
    /// `c x / (1 - exp(-c x))`.
    pub fn todd_denominator(c: &Rational, degree: usize) -> Self {
        // (1 - e^{-cx})/(cx) = sum_n (-c)^n x^n / (n+1)!
        let minus_c = -c.clone();
        let coeffs = (0..=degree)
            .map(|n| exact::pow(&minus_c, n) / Rational::from_integer(exact::factorial(n + 1)))
            .collect();
        UniSeries { coeffs }
    }

    /// `x / (1 - exp(-x))` through `degree`.
    pub fn todd_factor(degree: usize) -> Self {
        Self::todd_denominator(&Rational::one(), degree)
            .reciprocal()
            .expect("todd denominator has constant term 1")
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(mut self, degree: usize) -> Self {
        self.coeffs.truncate(degree + 1);
        self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-acc * &inv0);
        }
        Ok(UniSeries { coeffs: out })
    }
}

impl Add for &UniSeries {
    type Output = UniSeries;
    fn add(self, rhs: &UniSeries) -> UniSeries {
        let d = self.degree().min(rhs.degree());
        UniSeries {
            coeffs: (0..=d).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &UniSeries {
    type Output = UniSeries;
    fn sub(self, rhs: &UniSeries) -> UniSeries {
        self + &(-rhs)
    }
}

impl Neg for &UniSeries {
    type Output = UniSeries;
    fn neg(self) -> UniSeries {
        UniSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &UniSeries {
    type Output = UniSeries;
    fn mul(self, rhs: &UniSeries) -> UniSeries {
        let d = self.degree().min(rhs.degree());
        let coeffs = (0..=d)
            .map(|n| {
                (0..=n).fold(Rational::zero(), |acc, k| {
                    acc + &self.coeffs[k] * &rhs.coeffs[n - k]
                })
            })
            .collect();
        UniSeries { coeffs }
    }
}
