use std::cmp::{Ordering, Reverse};
use std::collections::btree_map::Entry;
use std::collections::hash_map::Entry as HashEntry;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{DerivVar, Monomial, Var};

/// A sparse differential polynomial with coefficients in `C`.
///
/// Terms are kept in canonical monomial order with no zero coefficients, so
/// structural equality is mathematical equality (for exact `C`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C> Default for Poly<C> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<C: Scalar> Poly<C> {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(v: DerivVar) -> Self {
        Poly::term(Monomial::var(v), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// Sums the given terms; repeated monomials are merged.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Drops the term at `m`. Used after cancellation steps so that inexact
    /// scalar types cannot leave a residue behind.
    pub(crate) fn remove_term(&mut self, m: &Monomial) {
        self.terms.remove(m);
    }

    /// Drops every term whose degree in `v` is at least `bound`.
    pub(crate) fn truncate_degree(&mut self, v: DerivVar, bound: u32) {
        self.terms.retain(|m, _| m.exponent(v) < bound);
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_terms(self.terms.iter().map(|(m, d)| (m.clone(), d.mul_ref(c))))
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        // Multiplication by a monomial is injective on monomials: no merging needed.
        let terms = self
            .terms
            .iter()
            .map(|(n, d)| (n.mul(m), d.mul_ref(c)))
            .filter(|(_, d)| !d.is_zero())
            .collect();
        Poly { terms }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn variables(&self) -> BTreeSet<DerivVar> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn mentions(&self, var: Var) -> bool {
        self.terms.keys().any(|m| m.mentions(var))
    }

    /// Highest derivative order of `var` occurring, `None` when `var` is absent.
    pub fn order_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().filter_map(|m| m.order_in(var)).max()
    }

    pub fn degree_in(&self, v: DerivVar) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Coefficients of `self` as a univariate polynomial in `v`, indexed by
    /// power (ascending). Empty for the zero polynomial.
    pub fn coefficients_in(&self, v: DerivVar) -> Vec<Poly<C>> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut coeffs = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            coeffs[e as usize].add_term(rest, c.clone());
        }
        coeffs
    }

    /// The coefficient of `v^exp` (free of `v`).
    pub fn coefficient_of_power(&self, v: DerivVar, exp: u32) -> Poly<C> {
        Poly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (rest, e) = m.without(v);
            (e == exp).then(|| (rest, c.clone()))
        }))
    }

    /// Formal partial derivative with respect to a single derivative variable.
    pub fn partial(&self, v: DerivVar) -> Self {
        Poly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (rest, e) = m.without(v);
            (e > 0).then(|| {
                let m = rest.mul(&Monomial::power(v, e - 1));
                (m, c.mul_ref(&C::from_count(e)))
            })
        }))
    }

    /// One application of the derivation: constants go to zero and every
    /// derivative variable is shifted up by one order.
    pub fn delta(&self) -> Self {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for &(v, e) in m.factors() {
                let (rest, _) = m.without(v);
                let next = rest.mul(&Monomial::power(v, e - 1)).mul(&Monomial::var(v.shifted(1)));
                out.add_term(next, c.mul_ref(&C::from_count(e)));
            }
        }
        out
    }

    /// `k`-fold derivative.
    pub fn delta_n(&self, k: u32) -> Self {
        (0..k).fold(self.clone(), |p, _| p.delta())
    }

    pub fn evaluate(&self, assignment: &HashMap<DerivVar, C>) -> Result<C> {
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for &(v, e) in m.factors() {
                let x = assignment.get(&v).ok_or(Error::MissingAssignment(v))?;
                value = value.mul_ref(&x.pow_ref(e));
            }
            total = total.add_ref(&value);
        }
        Ok(total)
    }

    /// Differential substitution `target^(k) ↦ δᵏ(image)`.
    pub fn diff_substitute(&self, target: Var, image: &Poly<C>) -> Result<Self> {
        if image.mentions(target) {
            return Err(Error::RecursiveSubstitution);
        }
        let mut derivatives: Vec<Poly<C>> = vec![image.clone()];
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut rest = Vec::new();
            let mut value = Poly::constant(c.clone());
            for &(v, e) in m.factors() {
                if v.var == target {
                    while derivatives.len() <= v.order as usize {
                        let next = derivatives.last().expect("non-empty").delta();
                        derivatives.push(next);
                    }
                    value = &value * &derivatives[v.order as usize].pow(e);
                } else {
                    rest.push((v, e));
                }
            }
            out += &value.mul_term(&Monomial::from_factors(rest), &C::one());
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, or `None` when `divisor` does not
    /// divide `self` (or is zero).
    pub fn div_exact(&self, divisor: &Poly<C>) -> Option<Self> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&(C::one() / c)));
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m)?;
            let qc = c.clone() / lead_c.clone();
            let top = m.clone();
            rem -= &divisor.mul_term(&qm, &qc);
            rem.remove_term(&top);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

impl<C: Scalar> From<DerivVar> for Poly<C> {
    fn from(v: DerivVar) -> Self {
        Poly::var(v)
    }
}

/// Merges two term sequences sorted by monomial, summing shared monomials.
fn merge_terms<C: Scalar>(a: Vec<(Monomial, C)>, b: Vec<(Monomial, C)>) -> Vec<(Monomial, C)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut a, mut b) = (a.into_iter().peekable(), b.into_iter().peekable());
    loop {
        let ord = match (a.peek(), b.peek()) {
            (Some((m, _)), Some((n, _))) => m.cmp(n),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => return out,
        };
        match ord {
            Ordering::Less => out.extend(a.next()),
            Ordering::Greater => out.extend(b.next()),
            Ordering::Equal => {
                let ((m, c), (_, d)) = (a.next().unwrap(), b.next().unwrap());
                let sum = c.add_ref(&d);
                if !sum.is_zero() {
                    out.push((m, sum));
                }
            }
        }
    }
}

impl<C: Scalar> Poly<C> {
    // Small right-hand sides are cheaper to insert than to merge.
    fn accumulate(&mut self, rhs: &Poly<C>, negate: bool) {
        let sign = |c: &C| if negate { -c.clone() } else { c.clone() };
        if rhs.len().saturating_mul(16) < self.len() {
            for (m, c) in &rhs.terms {
                self.add_term(m.clone(), sign(c));
            }
        } else {
            let lhs = std::mem::take(&mut self.terms).into_iter().collect();
            let rhs = rhs.terms.iter().map(|(m, c)| (m.clone(), sign(c))).collect();
            self.terms = merge_terms(lhs, rhs).into_iter().collect();
        }
    }
}

impl<C: Scalar> Poly<C> {
    /// Product as a k-way merge over the rows `t · large`, one per term `t`
    /// of `self`. Multiplying by a monomial preserves the order, so every
    /// row is already sorted.
    fn mul_by_merging(&self, large: &Poly<C>) -> Poly<C> {
        let rows: Vec<(&Monomial, &C)> = self.terms.iter().collect();
        let columns: Vec<(&Monomial, &C)> = large.terms.iter().collect();
        if rows.is_empty() || columns.is_empty() {
            return Poly::zero();
        }
        let mut heap: BinaryHeap<Reverse<(Monomial, usize, usize)>> = rows
            .iter()
            .enumerate()
            .map(|(i, (m, _))| Reverse((m.mul(columns[0].0), i, 0)))
            .collect();
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(columns.len());
        while let Some(Reverse((m, i, j))) = heap.pop() {
            let c = rows[i].1.mul_ref(columns[j].1);
            if let Some(next) = columns.get(j + 1) {
                heap.push(Reverse((rows[i].0.mul(next.0), i, j + 1)));
            }
            match out.last_mut() {
                Some((last, sum)) if *last == m => *sum = sum.add_ref(&c),
                _ => out.push((m, c)),
            }
        }
        Poly {
            terms: out.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<C: Scalar> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        self.accumulate(rhs, false);
    }
}

impl<C: Scalar> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        self.accumulate(rhs, true);
    }
}

impl<C: Scalar> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Scalar> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Scalar> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.len() <= MERGE_LIMIT {
            return small.mul_by_merging(large);
        }
        let mut acc: HashMap<Monomial, C> =
            HashMap::with_capacity(small.len().saturating_mul(large.len()).min(1 << 16));
        for (m, c) in &small.terms {
            for (n, d) in &large.terms {
                let product = c.mul_ref(d);
                match acc.entry(m.mul(n)) {
                    HashEntry::Vacant(e) => {
                        e.insert(product);
                    }
                    HashEntry::Occupied(mut e) => {
                        let sum = e.get().add_ref(&product);
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Largest factor length for which [`Mul`] merges rows instead of hashing.
const MERGE_LIMIT: usize = 64;

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($trait:ident :: $method:ident),*) => {$(
        impl<C: Scalar> $trait for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Scalar> $trait<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Scalar> num_traits::Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> num_traits::One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}
