//! Rank data of a differential polynomial relative to a main indeterminate.
//!
//! For `A` mentioning the main indeterminate `y`, write `r` for the largest
//! derivative order present (the order) and `d` for the degree of `A` in its
//! leader `y^(r)`. Then `A = I_A·(y^(r))^d + …`, with initial `I_A` and
//! separant `S_A = ∂A/∂y^(r)`.

use std::cmp::Ordering;

use crate::diffpoly::{DerivVar, Poly, Var};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankProfile {
    /// Free of the main indeterminate (an element of the coefficient ring).
    Constant,
    Proper {
        order: u32,
        degree: u32,
        leader: DerivVar,
    },
}

impl RankProfile {
    pub fn is_proper(&self) -> bool {
        matches!(self, RankProfile::Proper { .. })
    }

    pub fn order(&self) -> Option<u32> {
        match *self {
            RankProfile::Proper { order, .. } => Some(order),
            RankProfile::Constant => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        match *self {
            RankProfile::Proper { degree, .. } => Some(degree),
            RankProfile::Constant => None,
        }
    }

    pub fn leader(&self) -> Option<DerivVar> {
        match *self {
            RankProfile::Proper { leader, .. } => Some(leader),
            RankProfile::Constant => None,
        }
    }
}

/// Outcome of [`rank_compare`]. The ranking is only a preorder, so ties are
/// reported as `Equivalent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankOrdering {
    Less,
    Equivalent,
    Greater,
}

pub fn rank_profile<C: Scalar>(a: &Poly<C>, main: Var) -> Result<RankProfile> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(match a.order_in(main) {
        None => RankProfile::Constant,
        Some(order) => {
            let leader = DerivVar::new(main, order);
            RankProfile::Proper {
                order,
                degree: a.degree_in(leader),
                leader,
            }
        }
    })
}

fn proper_profile<C: Scalar>(a: &Poly<C>, main: Var) -> Result<(DerivVar, u32)> {
    match rank_profile(a, main)? {
        RankProfile::Proper { leader, degree, .. } => Ok((leader, degree)),
        RankProfile::Constant => Err(Error::ConstantPolynomial),
    }
}

/// Coefficient of the top power of the leader.
pub fn initial<C: Scalar>(a: &Poly<C>, main: Var) -> Result<Poly<C>> {
    let (leader, degree) = proper_profile(a, main)?;
    Ok(a.coefficient_of_power(leader, degree))
}

/// Partial derivative with respect to the leader.
pub fn separant<C: Scalar>(a: &Poly<C>, main: Var) -> Result<Poly<C>> {
    let (leader, _) = proper_profile(a, main)?;
    Ok(a.partial(leader))
}

/// Lower order first, then lower degree; anything free of `main` ranks below
/// anything that is not.
pub fn rank_compare<C: Scalar>(a: &Poly<C>, b: &Poly<C>, main: Var) -> Result<RankOrdering> {
    let key = |p: &Poly<C>| -> Result<Option<(u32, u32)>> {
        Ok(match rank_profile(p, main)? {
            RankProfile::Constant => None,
            RankProfile::Proper { order, degree, .. } => Some((order, degree)),
        })
    };
    // `None < Some(_)` encodes the constant-below-proper rule.
    Ok(match key(a)?.cmp(&key(b)?) {
        Ordering::Less => RankOrdering::Less,
        Ordering::Equal => RankOrdering::Equivalent,
        Ordering::Greater => RankOrdering::Greater,
    })
}
