//! Resultants and discriminants of differential polynomials regarded as
//! univariate polynomials in one derivative variable.

use crate::diffpoly::{DerivVar, Poly, Var};
use crate::error::{Error, Result};
use crate::ranking::{rank_profile, separant, RankProfile};
use crate::scalar::Scalar;

/// A polynomial regrouped by powers of `variable`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeaderPoly<C> {
    variable: DerivVar,
    /// Highest power first; the first entry is non-zero and no entry mentions
    /// `variable`.
    coefficients: Vec<Poly<C>>,
}

impl<C: Scalar> LeaderPoly<C> {
    pub fn new(a: &Poly<C>, variable: DerivVar) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coefficients = a.coefficients_in(variable);
        coefficients.reverse();
        Ok(LeaderPoly { variable, coefficients })
    }

    pub fn variable(&self) -> DerivVar {
        self.variable
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Poly<C>] {
        &self.coefficients
    }

    pub fn leading_coefficient(&self) -> &Poly<C> {
        &self.coefficients[0]
    }

    /// Reassembles the polynomial.
    pub fn to_poly(&self) -> Poly<C> {
        let x = Poly::var(self.variable);
        self.coefficients.iter().fold(Poly::zero(), |acc, c| &(&acc * &x) + c)
    }
}

pub fn as_leader_poly<C: Scalar>(a: &Poly<C>, variable: DerivVar) -> Result<LeaderPoly<C>> {
    LeaderPoly::new(a, variable)
}

/// Sylvester matrix of `p` (degree m) and `q` (degree n): n shifted rows of
/// `p` followed by m shifted rows of `q`.
pub fn sylvester_matrix<C: Scalar>(p: &LeaderPoly<C>, q: &LeaderPoly<C>) -> Vec<Vec<Poly<C>>> {
    let (m, n) = (p.degree(), q.degree());
    let size = m + n;
    let mut rows = vec![vec![Poly::zero(); size]; size];
    for i in 0..n {
        for (j, c) in p.coefficients.iter().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in q.coefficients.iter().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    rows
}

/// `Res(p, q)`, with `Res(c, q) = c^deg q` and `Res(p, c) = c^deg p` for
/// constants `c` (so two constants have resultant 1).
pub fn resultant<C: Scalar>(p: &LeaderPoly<C>, q: &LeaderPoly<C>) -> Result<Poly<C>> {
    match (p.degree(), q.degree()) {
        (0, n) => Ok(p.leading_coefficient().pow(n as u32)),
        (m, 0) => Ok(q.leading_coefficient().pow(m as u32)),
        _ if p.variable != q.variable => Err(Error::LeaderMismatch),
        _ => Ok(determinant(&sylvester_matrix(p, q))),
    }
}

/// `Res(A, S_A)` in the leader of `A`: the classical discriminant up to the
/// factor `±I_A`.
pub fn discriminant<C: Scalar>(a: &Poly<C>, main: Var) -> Result<Poly<C>> {
    let leader = match rank_profile(a, main)? {
        RankProfile::Proper { leader, .. } => leader,
        RankProfile::Constant => return Err(Error::ConstantPolynomial),
    };
    let sep = separant(a, main)?;
    resultant(&LeaderPoly::new(a, leader)?, &LeaderPoly::new(&sep, leader)?)
}

/// Determinant of a square matrix of polynomials by fraction-free (Bareiss)
/// elimination. Every division is exact.
///
/// Panics if a row length differs from the number of rows.
pub fn determinant<C: Scalar>(matrix: &[Vec<Poly<C>>]) -> Poly<C> {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "determinant of a non-square matrix"
    );
    if n == 0 {
        return Poly::one();
    }
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut previous = Poly::one();
    for k in 0..n - 1 {
        // Sparsest non-zero pivot in column k.
        let Some(pivot) = (k..n).filter(|&i| !m[i][k].is_zero()).min_by_key(|&i| m[i][k].len()) else {
            return Poly::zero();
        };
        if pivot != k {
            m.swap(pivot, k);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let cross = &(&pivot_row[k] * &row[j]) - &(&row[k] * &pivot_row[j]);
                row[j] = cross
                    .div_exact(&previous)
                    .expect("Bareiss step divides exactly by the previous pivot");
            }
            row[k] = Poly::zero();
        }
        previous = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffpoly::{Context, Monomial};
    use crate::{parse, DiffPoly, Rational};
    use proptest::prelude::*;

    const Y: Var = Var(1);

    fn ctx() -> Context {
        Context::from_list("u,y").unwrap()
    }
    fn p(s: &str) -> DiffPoly {
        parse(s, &ctx()).unwrap()
    }
    fn yv(k: u32) -> DerivVar {
        DerivVar::new(Y, k)
    }
    fn lp(s: &str, v: DerivVar) -> LeaderPoly<Rational> {
        LeaderPoly::new(&p(s), v).unwrap()
    }

    /// Cofactor expansion along the first row; the independent oracle.
    fn laplace(m: &[Vec<DiffPoly>]) -> DiffPoly {
        let n = m.len();
        if n == 0 {
            return DiffPoly::one();
        }
        let mut total = DiffPoly::zero();
        for (j, entry) in m[0].iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let minor: Vec<Vec<DiffPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let term = entry * &laplace(&minor);
            if j % 2 == 0 {
                total += &term;
            } else {
                total -= &term;
            }
        }
        total
    }

    #[test]
    fn regrouping() {
        let a = lp("(y')^2 - 4*y", yv(1));
        assert_eq!(a.coefficients(), &[p("1"), p("0"), p("-4*y")]);
        assert_eq!(lp("u*y' - 1", yv(1)).coefficients(), &[p("u"), p("-1")]);
        let c = lp("y^3 + u", yv(1));
        assert_eq!(c.degree(), 0);
        assert_eq!(c.coefficients(), &[p("y^3 + u")]);
        assert_eq!(a.to_poly(), p("(y')^2 - 4*y"));
        assert_eq!(LeaderPoly::new(&DiffPoly::zero(), yv(1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn resultant_examples() {
        let a = lp("(y')^2 - 4*y", yv(1));
        let b = lp("y'", yv(1));
        assert_eq!(laplace(&sylvester_matrix(&a, &b)), p("-4*y"));
        assert_eq!(resultant(&a, &b).unwrap(), p("-4*y"));
        assert_eq!(resultant(&lp("1", yv(1)), &lp("u*y' - 1", yv(1))).unwrap(), p("1"));
        assert_eq!(resultant(&lp("u*y' - 1", yv(1)), &lp("u", yv(1))).unwrap(), p("u"));
        assert_eq!(resultant(&lp("3", yv(1)), &lp("u", yv(1))).unwrap(), p("1"));
        assert_eq!(
            resultant(&lp("y'", yv(1)), &lp("y''", yv(2))),
            Err(Error::LeaderMismatch)
        );
    }

    #[test]
    fn discriminant_examples() {
        // Oracle values: cofactor expansion of the Sylvester matrix of (A, S_A).
        for (a, expected) in [("(y')^2 - 4*y", "-16*y"), ("u*y' - 1", "u"), ("(y')^2 - y'", "-1")] {
            let poly = p(a);
            let leader = rank_profile(&poly, Y).unwrap().leader().unwrap();
            let s = separant(&poly, Y).unwrap();
            let (pa, ps) = (
                LeaderPoly::new(&poly, leader).unwrap(),
                LeaderPoly::new(&s, leader).unwrap(),
            );
            let oracle = if ps.degree() == 0 {
                ps.leading_coefficient().pow(pa.degree() as u32)
            } else {
                laplace(&sylvester_matrix(&pa, &ps))
            };
            assert_eq!(oracle, p(expected), "oracle for {a}");
            assert_eq!(discriminant(&poly, Y).unwrap(), p(expected), "{a}");
        }
        assert_eq!(discriminant(&p("u^2"), Y), Err(Error::ConstantPolynomial));
        // Repeated root: (y' - y)^2.
        assert!(discriminant(&p("(y' - y)^2"), Y).unwrap().is_zero());
    }

    #[test]
    fn determinant_edge_cases() {
        assert_eq!(determinant::<Rational>(&[]), p("1"));
        assert_eq!(determinant(&[vec![p("u")]]), p("u"));
        let singular = vec![vec![p("u"), p("y")], vec![p("u^2"), p("u*y")]];
        assert!(determinant(&singular).is_zero());
        // Zero leading pivot forces a row swap.
        let swap = vec![vec![p("0"), p("1")], vec![p("1"), p("0")]];
        assert_eq!(determinant(&swap), p("-1"));
    }

    fn arb_entry() -> impl Strategy<Value = DiffPoly> {
        let term = (0u32..3, 0u32..3, -3i64..=3);
        prop::collection::vec(term, 0..3).prop_map(|ts| {
            DiffPoly::from_terms(ts.into_iter().map(|(a, b, c)| {
                let m = Monomial::from_factors([(DerivVar::new(Var(0), 0), a), (DerivVar::new(Y, 1), b)]);
                (m, Rational::from_integer(c.into()))
            }))
        })
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<DiffPoly>>> {
        (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(arb_entry(), n), n))
    }

    fn arb_leader(max_deg: usize) -> impl Strategy<Value = LeaderPoly<Rational>> {
        prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|cs| {
            let x = DiffPoly::var(DerivVar::new(Y, 1));
            let mut poly = DiffPoly::zero();
            for c in cs {
                poly = &(&poly * &x) + &DiffPoly::constant(Rational::from_integer(c.into()));
            }
            if poly.is_zero() {
                poly = DiffPoly::one();
            }
            LeaderPoly::new(&poly, DerivVar::new(Y, 1)).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bareiss_matches_cofactor_expansion(m in arb_matrix()) {
            prop_assert_eq!(determinant(&m), laplace(&m));
        }

        #[test]
        fn swap_sign(a in arb_leader(3), b in arb_leader(3)) {
            let sign = if a.degree() * b.degree() % 2 == 1 { -resultant(&b, &a).unwrap() } else { resultant(&b, &a).unwrap() };
            prop_assert_eq!(resultant(&a, &b).unwrap(), sign);
        }

        #[test]
        fn multiplicative(a in arb_leader(2), b in arb_leader(2), c in arb_leader(2)) {
            let ab = LeaderPoly::new(&(&a.to_poly() * &b.to_poly()), DerivVar::new(Y, 1)).unwrap();
            prop_assert_eq!(resultant(&ab, &c).unwrap(), &resultant(&a, &c).unwrap() * &resultant(&b, &c).unwrap());
        }

        #[test]
        fn common_factor_vanishes(h in arb_leader(2), a in arb_leader(2), b in arb_leader(2)) {
            prop_assume!(h.degree() >= 1);
            let v = DerivVar::new(Y, 1);
            let p = LeaderPoly::new(&(&h.to_poly() * &a.to_poly()), v).unwrap();
            let q = LeaderPoly::new(&(&h.to_poly() * &b.to_poly()), v).unwrap();
            prop_assert!(resultant(&p, &q).unwrap().is_zero());
        }

        #[test]
        fn order_drops_below_leader(m in arb_matrix()) {
            // Entries mention y' only; a Sylvester matrix in y'' never introduces it.
            let a = LeaderPoly::new(&(&DiffPoly::var(yv(2)).pow(2) + &m[0][0]), yv(2)).unwrap();
            let b = LeaderPoly::new(&(&DiffPoly::var(yv(2)) * &(&m[0][0] + &DiffPoly::one())), yv(2));
            if let Ok(b) = b {
                let r = resultant(&a, &b).unwrap();
                prop_assert!(r.order_in(Y).is_none_or(|o| o < 2));
            }
        }
    }
}
