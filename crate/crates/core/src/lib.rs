//! Exact Ritt reduction theory for ordinary differential polynomials.
//!
//! The crate works in `K{u₁,…,uₘ}` for a characteristic-zero field `K` and a
//! single derivation `δ`. One indeterminate is singled out as the *main*
//! indeterminate `y`; polynomials free of it form the coefficient ring `R`.
//!
//! * [`diffpoly`]: sparse differential polynomials, `δ`, evaluation and
//!   differential substitution.
//! * [`ranking`]: order, degree, leader, initial, separant and the rank
//!   comparison.
//! * [`reduction`]: full and weak Ritt division with checkable certificates.
//! * [`elimination`]: resultants and discriminants in a leader.
//! * [`chevalley`]: homomorphism-extension witnesses and the order-zero
//!   degree bound.
//! * [`parser`] and [`document`]: text formats.
//!
//! All algorithms are generic over the coefficient field ([`Scalar`]);
//! [`DiffPoly`] fixes it to arbitrary-precision rationals.

pub mod chevalley;
pub mod diffpoly;
pub mod document;
pub mod elimination;
mod error;
pub mod parser;
pub mod ranking;
pub mod reduction;
mod scalar;

pub use chevalley::{chevalley_witness, degree_bound, DegreeBound, Witness};
pub use diffpoly::{Context, DerivVar, Monomial, Poly, Var};
pub use elimination::{determinant, discriminant, resultant, LeaderPoly};
pub use error::{Error, Result};
pub use parser::{format, parse};
pub use ranking::{initial, rank_compare, rank_profile, separant, RankOrdering, RankProfile};
pub use reduction::{
    ritt_reduce, saturation_membership, verify_certificate, Certificate, InvalidClause, Membership, Mode, Verdict,
};
pub use scalar::Scalar;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

/// Differential polynomial over the rationals.
pub type DiffPoly = Poly<Rational>;

/// Reduction certificate over the rationals.
pub type RationalCertificate = Certificate<Rational>;

/// Chevalley witness over the rationals.
pub type RationalWitness = Witness<Rational>;
