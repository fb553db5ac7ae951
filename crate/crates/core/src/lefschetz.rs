//! The two Lefschetz formulas for an antisymplectic involution.
//!
//! On the holomorphic side, the involution acts on `H^{2i}(X, O_X)` by
//! `(-1)^i`, and the fixed locus is Lagrangian so its conormal bundle is
//! identified with its tangent bundle; the integrand over the fixed locus is
//! then `Td(F) · ch(∧T_F)^{-1}`.
//!
//! On the topological side, for a symplectic fourfold with `b₂ = 23` the
//! cohomology is concentrated in even degrees and `H⁴ ≅ Sym² H²`, so the
//! whole trace is controlled by the eigenvalue split `(a, b)` on `H²`. The
//! symplectic form and its conjugate span a 2-dimensional piece of `H²` on
//! which the involution acts by `-1`, hence `Tr σ*|H² = t - 2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::genera::{ch_exterior, todd_class};

/// Second Betti number of the fourfolds handled here.
pub const B2: i64 = 23;
pub const MIN_TRACE: i64 = -19;
pub const MAX_TRACE: i64 = 21;

/// Alternating trace `Σ_j (-1)^j` over `H^{2j}(X, O_X)`, `0 ≤ j ≤ dim/2`.
pub fn holomorphic_source_sum(dim_x: u32) -> Result<i64> {
    if dim_x == 0 || !dim_x.is_multiple_of(2) {
        return Err(Error::OddDimension(dim_x));
    }
    Ok((0..=dim_x / 2)
        .map(|j| if j % 2 == 0 { 1 } else { -1 })
        .sum())
}

/// `∫_F Td(F) · ch(∧T_F)^{-1}` over a surface with Chern numbers `(K², e)`.
pub fn holomorphic_target_surface(k2: i64, euler: i64) -> Rational {
    let integrand = todd_class(2, 2)
        .and_then(|td| ch_exterior(2, 2)?.reciprocal().and_then(|inv| td.mul(&inv)))
        .expect("two-root series of degree 2");
    integrand
        .evaluate_surface(k2, euler)
        .expect("two-root integrand of degree 2")
}

/// Trace of the involution induced on `Sym²` of a space with `a` eigenvalues
/// `+1` and `b` eigenvalues `-1`.
pub fn sym2_trace(a: i64, b: i64) -> i64 {
    a * (a + 1) / 2 + b * (b + 1) / 2 - a * b
}

/// Trace `t` on `H^{1,1}` together with the eigenspace dimensions on `H²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvolutionTrace {
    pub t: i64,
    pub a: i64,
    pub b: i64,
}

/// Checks parity before range, so an even out-of-range trace reports parity.
pub fn check_trace(t: i64) -> Result<()> {
    if t.rem_euclid(2) == 0 {
        return Err(Error::TraceParity(t));
    }
    if !(MIN_TRACE..=MAX_TRACE).contains(&t) {
        return Err(Error::TraceRange(t));
    }
    Ok(())
}

/// Solves `a + b = 23`, `a - b = t - 2`.
pub fn eigen_split(t: i64) -> Result<InvolutionTrace> {
    check_trace(t)?;
    let a = (B2 + t - 2) / 2;
    let b = B2 - a;
    debug_assert!(a >= 1 && b >= 2);
    Ok(InvolutionTrace { t, a, b })
}

/// Euler number of the fixed surface by the topological Lefschetz formula,
/// `e(F) = 2 + 2 Tr σ*|H² + Tr σ*|H⁴`.
pub fn euler_fixed(t: i64) -> Result<i64> {
    let split = eigen_split(t)?;
    let h2 = split.a - split.b;
    Ok(2 + 2 * h2 + sym2_trace(split.a, split.b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::genera::ahat_surface;

    #[test]
    fn source_sums() {
        assert_eq!(holomorphic_source_sum(4), Ok(1));
        assert_eq!(holomorphic_source_sum(2), Ok(0));
        assert_eq!(holomorphic_source_sum(8), Ok(1));
        assert_eq!(holomorphic_source_sum(3), Err(Error::OddDimension(3)));
        assert_eq!(holomorphic_source_sum(0), Err(Error::OddDimension(0)));
    }

    #[test]
    fn target_surface_examples() {
        assert_eq!(holomorphic_target_surface(360, 192), int(1));
        assert_eq!(holomorphic_target_surface(0, 0), int(0));
        assert_eq!(holomorphic_target_surface(7, -3), ahat_surface(7, -3));
    }

    #[test]
    fn sym2_examples() {
        assert_eq!(sym2_trace(1, 22), 232);
        assert_eq!(sym2_trace(1, 0), 1);
        assert_eq!(sym2_trace(21, 2), 192);
    }

    #[test]
    fn splits() {
        assert_eq!(
            eigen_split(-19),
            Ok(InvolutionTrace {
                t: -19,
                a: 1,
                b: 22
            })
        );
        assert_eq!(eigen_split(21), Ok(InvolutionTrace { t: 21, a: 21, b: 2 }));
        assert_eq!(eigen_split(0), Err(Error::TraceParity(0)));
        assert_eq!(eigen_split(23), Err(Error::TraceRange(23)));
        assert_eq!(eigen_split(-21), Err(Error::TraceRange(-21)));
        assert_eq!(eigen_split(22), Err(Error::TraceParity(22)));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_fixed(-19), Ok(192));
        assert_eq!(euler_fixed(1), Ok(12));
        assert_eq!(euler_fixed(-7), Ok(36));
        assert_eq!(euler_fixed(2), Err(Error::TraceParity(2)));
    }

    #[test]
    fn euler_closed_form() {
        for t in (MIN_TRACE..=MAX_TRACE).step_by(2) {
            assert_eq!(euler_fixed(t).unwrap() * 2, t * t + 23, "t = {t}");
        }
    }
}
