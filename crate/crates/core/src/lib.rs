//! Exact Hilbert–Mumford weight calculus for decorated vector bundles over curves.
//!
//! A decorated vector bundle is a rank `r` bundle `E` together with a nonzero map
//! `E_ρ → M` for some representation `ρ` of `GL(r)`. Its (semi)stability is tested
//! against weighted filtrations via the quantity `M(E•, α) + δ·μ`, where `μ` is a
//! Hilbert–Mumford weight that only depends on the torus states of `ρ` on which the
//! decoration is nonzero.
//!
//! The crate is split along that calculus:
//!
//! * [`rep`] builds representations from the standard one and enumerates their torus states.
//! * [`weights`] handles weight vectors of one-parameter subgroups and evaluates `μ`.
//! * [`cones`] decomposes the dominant weight cone into state cells and finds their
//!   minimal integral generators.
//! * [`stability`] evaluates the (semi)stability inequality and the worked example profiles.
//! * [`json`] holds the document formats shared with the command line front end.
//!
//! All arithmetic is exact.

pub mod cones;
pub mod error;
pub mod json;
pub mod rep;
pub mod stability;
pub mod weights;

pub use cones::{
    critical_weight_vectors, is_critical, rays, state_cell, state_fan, weight_cone, Cone, StateFan,
    DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use rep::{
    enumerate_states, homogeneity_degree, homogenize, state_containment, RepExpr, StateSet,
    TorusWeight,
};
pub use stability::{
    bound_c1, check, check_subbundle, combine_direct_sum, delta_threshold, gieseker_epsilon,
    m_value, sectional_check, simplify, FiltrationData, SimplifiedConditions, StabilityParams,
    SupportSpec, Verdict,
};
pub use weights::{
    corner_basis, decompose, mu, mu_filtration, pairing, CornerCoefficients, WeightVector,
};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number used throughout the crate.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
