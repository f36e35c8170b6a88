//! Random corpora and independent oracles shared by the integration tests.
#![allow(dead_code)]

use diffalg::{DerivVar, DiffPoly, Monomial, Rational, Var};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub const U: Var = Var(0);
pub const Y: Var = Var(1);

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn nonzero_coefficient(rng: &mut StdRng) -> Rational {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-9..=9);
    }
    int(c)
}

/// A monomial in derivatives of `vars` up to `max_order`, every variable of
/// degree at most `max_degree`, at most three distinct factors.
fn random_monomial(rng: &mut StdRng, vars: &[Var], max_order: u32, max_degree: u32) -> Monomial {
    let mut pool: Vec<DerivVar> = vars
        .iter()
        .flat_map(|&v| (0..=max_order).map(move |k| DerivVar::new(v, k)))
        .collect();
    pool.shuffle(rng);
    let count = rng.gen_range(0..=3.min(pool.len()));
    Monomial::from_factors(pool[..count].iter().map(|&v| (v, rng.gen_range(1..=max_degree))))
}

/// Up to `max_terms` terms over {u, y}, order ≤ 3, degree ≤ 3, integer
/// coefficients in [−9, 9].
pub fn random_poly(rng: &mut StdRng, max_terms: usize) -> DiffPoly {
    let terms = rng.gen_range(1..=max_terms);
    DiffPoly::from_terms((0..terms).map(|_| (random_monomial(rng, &[U, Y], 3, 3), nonzero_coefficient(rng))))
}

/// Like [`random_poly`] but guaranteed to mention `y`.
pub fn random_proper(rng: &mut StdRng, max_terms: usize) -> DiffPoly {
    loop {
        let p = random_poly(rng, max_terms);
        if p.mentions(Y) {
            return p;
        }
    }
}

/// A random polynomial with y-order strictly below `bound` (no `y` at all
/// when `bound == 0`).
pub fn random_below(rng: &mut StdRng, bound: u32, max_terms: usize) -> DiffPoly {
    let vars: &[Var] = if bound == 0 { &[U] } else { &[U, Y] };
    let terms = rng.gen_range(1..=max_terms);
    DiffPoly::from_terms((0..terms).map(|_| {
        let mut m = random_monomial(rng, vars, 3, 2);
        // Clamp y-orders into range by dropping offending factors.
        m = Monomial::from_factors(
            m.factors()
                .iter()
                .copied()
                .filter(|(v, _)| v.var != Y || v.order < bound),
        );
        (m, nonzero_coefficient(rng))
    }))
}

/// A polynomial entry for determinant tests: at most two terms in u, y'.
pub fn random_entry(rng: &mut StdRng) -> DiffPoly {
    if rng.gen_bool(0.2) {
        return DiffPoly::zero();
    }
    DiffPoly::from_terms((0..rng.gen_range(1..=2)).map(|_| {
        let m = Monomial::from_factors([
            (DerivVar::new(U, 0), rng.gen_range(0..=1)),
            (DerivVar::new(Y, 1), rng.gen_range(0..=1)),
        ]);
        (m, int(rng.gen_range(-3..=3)))
    }))
}

/// Cofactor expansion along the first row.
pub fn laplace_determinant(m: &[Vec<DiffPoly>]) -> DiffPoly {
    if m.is_empty() {
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
        let term = entry * &laplace_determinant(&minor);
        if j % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}
