//! Exact sparse differential polynomials in finitely many indeterminates with
//! a single derivation `δ`, where `δ(y^(k)) = y^(k+1)` and scalars are
//! constants.

mod context;
mod monomial;
mod poly;

pub use context::{Context, DerivVar, Var};
pub use monomial::Monomial;
pub use poly::Poly;
