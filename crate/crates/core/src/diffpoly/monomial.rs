use std::cmp::Ordering;

use super::{DerivVar, Var};

/// A power product of derivative variables.
///
/// Stored as `(variable, exponent)` pairs sorted by variable, exponents
/// strictly positive. The empty product is the unit monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(DerivVar, u32)>,
    degree: u64,
}

impl Monomial {
    fn from_sorted(factors: Vec<(DerivVar, u32)>) -> Self {
        let degree = factors.iter().map(|&(_, e)| e as u64).sum();
        Monomial { factors, degree }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: DerivVar) -> Self {
        Monomial::power(v, 1)
    }

    pub fn power(v: DerivVar, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial {
                factors: vec![(v, exp)],
                degree: exp as u64,
            }
        }
    }

    /// Builds a monomial from arbitrary factors, merging repeats and dropping
    /// zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (DerivVar, u32)>>(factors: I) -> Self {
        let mut out = Monomial::one();
        for (v, e) in factors {
            out = out.mul(&Monomial::power(v, e));
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(DerivVar, u32)] {
        &self.factors
    }

    pub fn total_degree(&self) -> u64 {
        self.degree
    }

    pub fn exponent(&self, v: DerivVar) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            factors: out,
            degree: self.degree + other.degree,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut rest = other.factors.iter().peekable();
        for &(v, e) in &self.factors {
            match rest.peek() {
                Some(&&(w, f)) if w == v => {
                    rest.next();
                    match e.cmp(&f) {
                        Ordering::Less => return None,
                        Ordering::Equal => {}
                        Ordering::Greater => out.push((v, e - f)),
                    }
                }
                Some(&&(w, _)) if w < v => return None,
                _ => out.push((v, e)),
            }
        }
        if rest.next().is_some() {
            return None;
        }
        Some(Monomial::from_sorted(out))
    }

    /// Removes every power of `v`, returning the exponent that was removed.
    pub fn without(&self, v: DerivVar) -> (Monomial, u32) {
        let exp = self.exponent(v);
        let factors = self.factors.iter().copied().filter(|&(w, _)| w != v).collect();
        (Monomial::from_sorted(factors), exp)
    }

    /// Splits into the part built from derivatives of `var` and the rest.
    pub fn split_by_var(&self, var: Var) -> (Monomial, Monomial) {
        let (main, rest): (Vec<_>, Vec<_>) = self.factors.iter().partition(|(v, _)| v.var == var);
        (Monomial::from_sorted(main), Monomial::from_sorted(rest))
    }

    /// Highest derivative order of `var` present, if any.
    pub fn order_in(&self, var: Var) -> Option<u32> {
        self.factors
            .iter()
            .filter(|(v, _)| v.var == var)
            .map(|(v, _)| v.order)
            .max()
    }

    pub fn mentions(&self, var: Var) -> bool {
        self.factors.iter().any(|(v, _)| v.var == var)
    }
}

/// Graded lexicographic: total degree first, then the exponent of the
/// largest variable, and so on downwards.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let mut a = self.factors.iter().rev();
            let mut b = other.factors.iter().rev();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(v, e)), Some(&(w, f))) => {
                        let ord = v.cmp(&w).then(e.cmp(&f));
                        if ord != Ordering::Equal {
                            return ord;
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
