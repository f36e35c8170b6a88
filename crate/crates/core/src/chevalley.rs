//! Witnesses for extending homomorphisms of differential algebras.
//!
//! Let `S = R{x}` with `b = B(x) ≠ 0`. If `x` is differentially transcendental
//! over `R`, any non-zero coefficient `a` of `B` works. Otherwise let `A` be
//! an irreducible differential polynomial of least rank with `A(x) = 0`, and
//! build
//!
//! * `a₁`, a coefficient of the initial `I_A`;
//! * `a₂`, a coefficient of the discriminant `D` of `A` in its leader;
//! * `B₁` with `S_A^n·B ≡ B₁ mod [A]` and `ord B₁ ≤ ord A` (weak division);
//! * `a₃`, a coefficient of `r = Res(B₁, A)` in the leader of `A`.
//!
//! Then `a = a₁a₂a₃`: any homomorphism into a differentially closed field
//! that does not kill `a` extends to `S` without killing `b`.
//!
//! "Coefficient" is taken over the coefficient ring, i.e. polynomials free
//! of the main indeterminate; see [`select_coefficient`].

use std::fmt;

use crate::diffpoly::{Monomial, Poly, Var};
use crate::elimination::{discriminant, resultant, LeaderPoly};
use crate::error::{Error, Result};
use crate::ranking::{initial, rank_profile, RankProfile};
use crate::reduction::{ritt_reduce, Certificate, Mode};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessCase {
    Transcendental,
    Algebraic,
}

impl WitnessCase {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessCase::Transcendental => "transcendental",
            WitnessCase::Algebraic => "algebraic",
        }
    }
}

impl fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<C> {
    Transcendental { a: Poly<C> },
    Algebraic(Box<AlgebraicWitness<C>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicWitness<C> {
    pub a1: Poly<C>,
    pub a2: Poly<C>,
    pub a3: Poly<C>,
    /// `a1·a2·a3`.
    pub a: Poly<C>,
    pub discriminant: Poly<C>,
    pub resultant: Poly<C>,
    pub b1: Poly<C>,
    pub n: u32,
    /// Weak division of the target by the minimal polynomial.
    pub certificate: Certificate<C>,
}

impl<C> Witness<C> {
    pub fn case(&self) -> WitnessCase {
        match self {
            Witness::Transcendental { .. } => WitnessCase::Transcendental,
            Witness::Algebraic(_) => WitnessCase::Algebraic,
        }
    }

    pub fn a(&self) -> &Poly<C> {
        match self {
            Witness::Transcendental { a } => a,
            Witness::Algebraic(w) => &w.a,
        }
    }

    pub fn algebraic(&self) -> Option<&AlgebraicWitness<C>> {
        match self {
            Witness::Algebraic(w) => Some(w),
            Witness::Transcendental { .. } => None,
        }
    }
}

/// Deterministic choice of a non-zero coefficient over the coefficient ring.
///
/// `p` is written as `Σ c_M·M` with `M` ranging over power products of
/// derivatives of `main` and `c_M` free of `main`; the coefficient of the
/// smallest `M` in the canonical monomial order is returned. Zero for zero.
pub fn select_coefficient<C: Scalar>(p: &Poly<C>, main: Var) -> Poly<C> {
    let mut best: Option<Monomial> = None;
    for (m, _) in p.terms() {
        let (main_part, _) = m.split_by_var(main);
        if best.as_ref().is_none_or(|b| main_part < *b) {
            best = Some(main_part);
        }
    }
    let Some(best) = best else {
        return Poly::zero();
    };
    Poly::from_terms(p.terms().filter_map(|(m, c)| {
        let (main_part, rest) = m.split_by_var(main);
        (main_part == best).then(|| (rest, c.clone()))
    }))
}

/// Builds the witness for target `b`. With `minimal = None` the generator is
/// treated as differentially transcendental; otherwise `minimal` must be an
/// irreducible polynomial annihilating it, which is not checked beyond the
/// non-vanishing tests below.
pub fn chevalley_witness<C: Scalar>(b: &Poly<C>, minimal: Option<&Poly<C>>, main: Var) -> Result<Witness<C>> {
    if b.is_zero() {
        return Err(Error::ZeroTarget);
    }
    let Some(a_poly) = minimal else {
        return Ok(Witness::Transcendental {
            a: select_coefficient(b, main),
        });
    };
    let leader = match rank_profile(a_poly, main)? {
        RankProfile::Proper { leader, .. } => leader,
        RankProfile::Constant => return Err(Error::ConstantPolynomial),
    };

    let a1 = select_coefficient(&initial(a_poly, main)?, main);

    let disc = discriminant(a_poly, main)?;
    if disc.is_zero() {
        return Err(Error::VanishingDiscriminant);
    }
    let a2 = select_coefficient(&disc, main);

    let certificate = ritt_reduce(b, a_poly, main, Mode::Weak)?;
    let b1 = certificate.remainder.clone();
    if b1.is_zero() {
        return Err(Error::ReducesIntoIdeal);
    }

    let res = resultant(&LeaderPoly::new(&b1, leader)?, &LeaderPoly::new(a_poly, leader)?)?;
    if res.is_zero() {
        return Err(Error::VanishingResultant);
    }
    let a3 = select_coefficient(&res, main);

    let a = &(&a1 * &a2) * &a3;
    Ok(Witness::Algebraic(Box::new(AlgebraicWitness {
        a1,
        a2,
        a3,
        a,
        discriminant: disc,
        resultant: res,
        b1,
        n: certificate.n,
        certificate,
    })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeBound {
    /// The extension has degree at most this.
    Finite(u32),
    NoBound,
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeBound::Finite(d) => write!(f, "{d}"),
            DegreeBound::NoBound => f.write_str("none"),
        }
    }
}

/// An order-zero minimal polynomial is an ordinary algebraic relation, so
/// the generated field extension has degree at most `deg A`.
pub fn degree_bound<C: Scalar>(a: &Poly<C>, main: Var) -> Result<DegreeBound> {
    match rank_profile(a, main)? {
        RankProfile::Constant => Err(Error::ConstantPolynomial),
        RankProfile::Proper { order: 0, degree, .. } => Ok(DegreeBound::Finite(degree)),
        RankProfile::Proper { .. } => Ok(DegreeBound::NoBound),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffpoly::Context;
    use crate::reduction::verify_certificate;
    use crate::{parse, DiffPoly};

    const Y: Var = Var(1);

    fn ctx() -> Context {
        Context::from_list("u,y").unwrap()
    }
    fn p(s: &str) -> DiffPoly {
        parse(s, &ctx()).unwrap()
    }

    #[test]
    fn transcendental_case() {
        let w = chevalley_witness(&p("u*y''"), None, Y).unwrap();
        assert_eq!(w.case(), WitnessCase::Transcendental);
        assert_eq!(w.a(), &p("u"));
        assert!(w.algebraic().is_none());
        assert_eq!(chevalley_witness(&p("u^2 + 1"), None, Y).unwrap().a(), &p("u^2 + 1"));
    }

    #[test]
    fn linear_minimal_polynomial() {
        let w = chevalley_witness(&p("y'"), Some(&p("u*y' - 1")), Y).unwrap();
        let alg = w.algebraic().unwrap();
        assert_eq!(alg.a1, p("u"));
        assert_eq!(alg.discriminant, p("u"));
        assert_eq!(alg.a2, p("u"));
        assert_eq!(alg.n, 1);
        assert_eq!(alg.b1, p("1"));
        assert_eq!(alg.resultant, p("1"));
        assert_eq!(alg.a3, p("1"));
        assert_eq!(alg.a, p("u^2"));
        assert!(verify_certificate(&alg.certificate).is_valid());
    }

    #[test]
    fn quadratic_minimal_polynomial() {
        let w = chevalley_witness(&p("y"), Some(&p("(y')^2 - 4*y")), Y).unwrap();
        let alg = w.algebraic().unwrap();
        assert_eq!(alg.a1, p("1"));
        assert_eq!(alg.discriminant, p("-16*y"));
        assert_eq!(alg.a2, p("-16"));
        assert_eq!(alg.n, 0);
        assert_eq!(alg.b1, p("y"));
        assert_eq!(alg.resultant, p("y^2"));
        assert_eq!(alg.a3, p("1"));
        assert_eq!(alg.a, p("-16"));
    }

    #[test]
    fn witness_errors() {
        assert_eq!(chevalley_witness(&DiffPoly::zero(), None, Y), Err(Error::ZeroTarget));
        let a = p("u*y' - 1");
        assert_eq!(chevalley_witness(&a, Some(&a), Y), Err(Error::ReducesIntoIdeal));
        assert_eq!(
            chevalley_witness(&p("y"), Some(&p("u")), Y),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(
            chevalley_witness(&p("y"), Some(&p("(y' - u)^2")), Y),
            Err(Error::VanishingDiscriminant)
        );
        // Reducible A = (y' - 1)(y' + 1) and B₁ = y' - 1 share a root.
        assert_eq!(
            chevalley_witness(&p("y' - 1"), Some(&p("(y')^2 - 1")), Y),
            Err(Error::VanishingResultant)
        );
    }

    #[test]
    fn coefficient_selection() {
        assert_eq!(select_coefficient(&p("u*y'' + u'^2*y + 3*y"), Y), p("u'^2 + 3"));
        assert_eq!(select_coefficient(&p("u*y + u' + 5"), Y), p("u' + 5"));
        assert!(select_coefficient(&DiffPoly::zero(), Y).is_zero());
    }

    #[test]
    fn degree_bounds() {
        assert_eq!(degree_bound(&p("y^3 - u"), Y).unwrap(), DegreeBound::Finite(3));
        assert_eq!(degree_bound(&p("y' - y"), Y).unwrap(), DegreeBound::NoBound);
        assert_eq!(degree_bound(&p("y - u^2"), Y).unwrap(), DegreeBound::Finite(1));
        assert_eq!(degree_bound(&p("u"), Y), Err(Error::ConstantPolynomial));
    }
}
