//! Exact characteristic-class calculus in formal Chern roots.
//!
//! The crate builds the Todd class, the Chern character of the exterior
//! algebra and the Â-integrand as truncated symmetric series with rational
//! coefficients, checks the series identities relating the holomorphic
//! Lefschetz integrand of an antisymplectic involution to the Â-genus of its
//! fixed locus, and tabulates the fixed-surface invariants for symplectic
//! fourfolds with `b₂ = 23`.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod fourfold;
pub mod genera;
pub mod identity;
pub mod lefschetz;
pub mod symseries;

pub use catalog::{CatalogEntry, Component, CoverageReport, Family};
pub use error::{Error, Result};
pub use exact::Rational;
pub use fourfold::{FourfoldFixedInvariants, TableRow};
pub use genera::{KnownInvariants, SurfaceInvariants};
pub use identity::{Discrepancy, Perturbation, VerificationReport};
pub use lefschetz::InvolutionTrace;
pub use symseries::{ChernPolynomial, SymSeries, UniSeries};
