//! Ritt division by a single differential polynomial, with certificates.
//!
//! Given a divisor `A` of order `r` and degree `d` in the main indeterminate,
//! [`ritt_reduce`] rewrites a dividend `F` as
//!
//! ```text
//! I_A^m · S_A^n · F = G + Σ_k C_k · δᵏ(A)
//! ```
//!
//! and returns every piece of that identity in a [`Certificate`], which
//! [`verify_certificate`] re-checks by exact expansion.
//!
//! The procedure first removes derivatives of order above `r`, highest
//! first: `δᵏ(A) = S_A·y^(r+k) + (lower order)`, so each step is a
//! pseudo-division by a polynomial linear in its leader with initial `S_A`.
//! In full mode it then pseudo-divides by `A` itself in `y^(r)` using `I_A`
//! until the degree drops below `d`. Weak mode never multiplies by `I_A`; at
//! order `r` it only performs the steps that need no multiplier, plus, when
//! `d = 1`, steps multiplied by `S_A` (which then equals `I_A`).
//!
//! A step that can cancel the leading coefficient by exact division skips the
//! multiplier altogether; `m` and `n` are not claimed to be minimal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::diffpoly::{DerivVar, Monomial, Poly, Var};
use crate::error::{Error, Result};
use crate::ranking::{initial, rank_compare, rank_profile, separant, RankOrdering, RankProfile};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Remainder ranks strictly below the divisor.
    Full,
    /// No initial multiplier; remainder order at most the divisor's.
    Weak,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Full => "full",
            Mode::Weak => "weak",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Witness of `I_A^m · S_A^n · F = G + Σ_k C_k · δᵏ(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<C> {
    pub mode: Mode,
    pub main: Var,
    pub dividend: Poly<C>,
    pub divisor: Poly<C>,
    /// Power of the initial.
    pub m: u32,
    /// Power of the separant.
    pub n: u32,
    pub remainder: Poly<C>,
    /// `k ↦ C_k`; zero cofactors are omitted.
    pub cofactors: BTreeMap<u32, Poly<C>>,
}

impl<C: Scalar> Certificate<C> {
    fn trivial(dividend: &Poly<C>, divisor: &Poly<C>, main: Var, mode: Mode) -> Self {
        Certificate {
            mode,
            main,
            dividend: dividend.clone(),
            divisor: divisor.clone(),
            m: 0,
            n: 0,
            remainder: dividend.clone(),
            cofactors: BTreeMap::new(),
        }
    }
}

pub fn ritt_reduce<C: Scalar>(f: &Poly<C>, a: &Poly<C>, main: Var, mode: Mode) -> Result<Certificate<C>> {
    let (order, degree, leader) = match rank_profile(a, main)? {
        RankProfile::Proper { order, degree, leader } => (order, degree, leader),
        RankProfile::Constant => return Err(Error::ConstantDivisor),
    };
    let mut cert = Certificate::trivial(f, a, main, mode);
    if f.is_zero() {
        return Ok(cert);
    }
    let init = initial(a, main)?;
    let sep = separant(a, main)?;
    let mut derivatives = vec![a.clone()];
    let mut measure = descent_measure(&cert.remainder, main);

    // Orders above r, highest first.
    while let Some(top) = cert.remainder.order_in(main).filter(|&q| q > order) {
        let k = top - order;
        while derivatives.len() <= k as usize {
            let next = derivatives.last().expect("non-empty").delta();
            derivatives.push(next);
        }
        let v = DerivVar::new(main, top);
        let e = cert.remainder.degree_in(v);
        let lc = cert.remainder.coefficient_of_power(v, e);
        let shift = Monomial::power(v, e - 1);
        match lc.div_exact(&sep) {
            Some(q) => cert.cancel(k, &q, &shift, &derivatives[k as usize]),
            None => {
                cert.multiply_through(&sep);
                cert.n += 1;
                cert.cancel(k, &lc, &shift, &derivatives[k as usize]);
            }
        }
        cert.remainder.truncate_degree(v, e);
        check_descent(&mut measure, &cert.remainder, main);
    }

    // Degree in the leader.
    loop {
        let e = cert.remainder.degree_in(leader);
        if e < degree {
            break;
        }
        let lc = cert.remainder.coefficient_of_power(leader, e);
        let shift = Monomial::power(leader, e - degree);
        if let Some(q) = lc.div_exact(&init) {
            cert.cancel(0, &q, &shift, a);
        } else {
            match mode {
                Mode::Full => {
                    cert.multiply_through(&init);
                    cert.m += 1;
                }
                Mode::Weak if degree == 1 => {
                    cert.multiply_through(&sep);
                    cert.n += 1;
                }
                Mode::Weak => break,
            }
            cert.cancel(0, &lc, &shift, a);
        }
        cert.remainder.truncate_degree(leader, e);
        check_descent(&mut measure, &cert.remainder, main);
    }
    Ok(cert)
}

impl<C: Scalar> Certificate<C> {
    /// `G ← G − q·shift·δᵏ(A)`, `C_k ← C_k + q·shift`.
    fn cancel(&mut self, k: u32, q: &Poly<C>, shift: &Monomial, derivative: &Poly<C>) {
        let multiplier = q.mul_term(shift, &C::one());
        self.remainder -= &(&multiplier * derivative);
        let entry = self.cofactors.entry(k).or_default();
        *entry += &multiplier;
        if entry.is_zero() {
            self.cofactors.remove(&k);
        }
    }

    /// Multiplies both sides of the identity by `factor`.
    fn multiply_through(&mut self, factor: &Poly<C>) {
        self.remainder = &self.remainder * factor;
        for c in self.cofactors.values_mut() {
            *c = &*c * factor;
        }
    }
}

/// Lexicographic (order, degree in leader) of the working polynomial.
fn descent_measure<C: Scalar>(g: &Poly<C>, main: Var) -> Option<(u32, u32)> {
    g.order_in(main).map(|r| (r, g.degree_in(DerivVar::new(main, r))))
}

fn check_descent<C: Scalar>(measure: &mut Option<(u32, u32)>, g: &Poly<C>, main: Var) {
    let next = descent_measure(g, main);
    debug_assert!(
        next < *measure,
        "reduction step did not descend: {measure:?} -> {next:?}"
    );
    *measure = next;
}

/// Why a certificate was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvalidClause {
    /// The divisor is zero or free of the main indeterminate.
    Divisor,
    /// The division identity does not hold.
    Identity,
    /// The remainder violates the mode's rank condition.
    Rank,
    /// A weak certificate carries a power of the initial.
    Multiplier,
}

impl InvalidClause {
    pub fn as_str(self) -> &'static str {
        match self {
            InvalidClause::Divisor => "divisor",
            InvalidClause::Identity => "identity",
            InvalidClause::Rank => "rank",
            InvalidClause::Multiplier => "multiplier",
        }
    }
}

impl fmt::Display for InvalidClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Valid,
    Invalid(InvalidClause),
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        self == Verdict::Valid
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => f.write_str("valid"),
            Verdict::Invalid(clause) => write!(f, "invalid: {clause}"),
        }
    }
}

/// Re-checks a certificate by exact expansion.
///
/// A numeric spot check at a fixed point runs first so that most broken
/// identities are rejected without expanding anything.
pub fn verify_certificate<C: Scalar>(cert: &Certificate<C>) -> Verdict {
    let main = cert.main;
    let (order, _) = match rank_profile(&cert.divisor, main) {
        Ok(RankProfile::Proper { order, degree, .. }) => (order, degree),
        _ => return Verdict::Invalid(InvalidClause::Divisor),
    };
    let init = initial(&cert.divisor, main).expect("proper divisor");
    let sep = separant(&cert.divisor, main).expect("proper divisor");
    let max_k = cert.cofactors.keys().next_back().copied().unwrap_or(0);
    let derivatives: Vec<Poly<C>> = std::iter::successors(Some(cert.divisor.clone()), |p| Some(p.delta()))
        .take(max_k as usize + 1)
        .collect();

    if !spot_check(cert, &init, &sep, &derivatives) {
        return Verdict::Invalid(InvalidClause::Identity);
    }
    let lhs = &(&init.pow(cert.m) * &sep.pow(cert.n)) * &cert.dividend;
    let mut rhs = cert.remainder.clone();
    for (&k, c) in &cert.cofactors {
        rhs += &(c * &derivatives[k as usize]);
    }
    if lhs != rhs {
        return Verdict::Invalid(InvalidClause::Identity);
    }

    let g = &cert.remainder;
    match cert.mode {
        Mode::Full => {
            if !g.is_zero() && rank_compare(g, &cert.divisor, main) != Ok(RankOrdering::Less) {
                return Verdict::Invalid(InvalidClause::Rank);
            }
        }
        Mode::Weak => {
            if cert.m != 0 {
                return Verdict::Invalid(InvalidClause::Multiplier);
            }
            if g.order_in(main).is_some_and(|o| o > order) {
                return Verdict::Invalid(InvalidClause::Rank);
            }
        }
    }
    Verdict::Valid
}

fn spot_check<C: Scalar>(cert: &Certificate<C>, init: &Poly<C>, sep: &Poly<C>, derivatives: &[Poly<C>]) -> bool {
    let mut assignment = HashMap::new();
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut polys: Vec<&Poly<C>> = vec![&cert.dividend, &cert.remainder];
    polys.extend(derivatives);
    polys.extend(cert.cofactors.values());
    for p in polys {
        for v in p.variables() {
            assignment.entry(v).or_insert_with(|| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                C::from_count(2 + (state >> 33) as u32 % 61)
            });
        }
    }
    let eval = |p: &Poly<C>| p.evaluate(&assignment).expect("all variables assigned");
    let lhs = eval(init)
        .pow_ref(cert.m)
        .mul_ref(&eval(sep).pow_ref(cert.n))
        .mul_ref(&eval(&cert.dividend));
    let rhs = cert.cofactors.iter().fold(eval(&cert.remainder), |acc, (&k, c)| {
        acc.add_ref(&eval(c).mul_ref(&eval(&derivatives[k as usize])))
    });
    lhs == rhs
}

/// Outcome of the saturation membership test. For irreducible `A`, a zero
/// full remainder means `F` lies in `[A] : S_A^∞`; irreducibility is the
/// caller's assertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership<C> {
    ReducesToZero(Certificate<C>),
    Remainder(Certificate<C>),
}

impl<C> Membership<C> {
    pub fn certificate(&self) -> &Certificate<C> {
        match self {
            Membership::ReducesToZero(c) | Membership::Remainder(c) => c,
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self, Membership::ReducesToZero(_))
    }
}

pub fn saturation_membership<C: Scalar>(f: &Poly<C>, a: &Poly<C>, main: Var) -> Result<Membership<C>> {
    let cert = ritt_reduce(f, a, main, Mode::Full)?;
    Ok(if cert.remainder.is_zero() {
        Membership::ReducesToZero(cert)
    } else {
        Membership::Remainder(cert)
    })
}
