//! Exact higher torsion classes of sphere bundles.
//!
//! The pipeline runs from torus weight data ([`reps`]) through the invariant
//! power series of a representation sphere ([`torsion`]) to characteristic
//! class expressions ([`chernweil`]) and their values in the cohomology of
//! complex projective space ([`cpn`]). All coefficients are exact: rationals
//! times monomials in formal odd zeta values ([`coeff`]), with numeric
//! substitution available at output time ([`zeta`]).
//!
//! Polynomial variables are normalized weights `v = α / (4π²)`, so every
//! stored coefficient is rational in the zeta symbols.

pub mod chernweil;
pub mod coeff;
pub mod cpn;
pub mod decimal;
mod error;
pub mod reps;
pub mod sympoly;
pub mod torsion;
pub mod zeta;

pub use coeff::{Rational, ZetaMonomial, ZetaPoly};
pub use decimal::Decimal;
pub use error::{Error, Result};

/// Truncation degree used when callers do not choose one.
pub const DEFAULT_MAX_DEGREE: u32 = 16;
