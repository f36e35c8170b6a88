//! Coefficient field abstraction.
//!
//! Every algorithm in this crate is written against [`Scalar`], so the same
//! code runs over exact rationals (the default, see [`crate::Rational`]),
//! machine rationals such as `Ratio<i64>`, or `f64` for quick numeric
//! experiments. Only exact fields give exact certificates.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};

/// A coefficient field of characteristic zero.
///
/// The by-reference operations exist so that implementations can skip work
/// the owned operators would do; rationals use them to avoid normalising
/// integral values.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static {
    /// `n` as a field element.
    fn from_count(n: u32) -> Self {
        Self::from_u32(n).expect("characteristic-zero field contains the integers")
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn pow_ref(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        result
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Debug + Integer + Neg<Output = T> + Send + Sync + 'static,
    Ratio<T>: FromPrimitive,
{
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_integer() && rhs.is_integer() {
            Ratio::from_integer(self.numer().clone() + rhs.numer().clone())
        } else {
            self.clone() + rhs.clone()
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_integer() && rhs.is_integer() {
            Ratio::from_integer(self.numer().clone() * rhs.numer().clone())
        } else {
            self.clone() * rhs.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn reference_operations_match_operators() {
        let values = [(0, 1), (3, 1), (-7, 1), (1, 2), (-5, 6), (4, 3)].map(|(n, d)| Rational::new(n.into(), d.into()));
        for a in &values {
            for b in &values {
                assert_eq!(a.add_ref(b), a + b);
                assert_eq!(a.mul_ref(b), a * b);
            }
            assert_eq!(a.pow_ref(5), num_traits::pow(a.clone(), 5));
        }
        assert_eq!(Ratio::new(3i64, 4).mul_ref(&Ratio::new(2, 3)), Ratio::new(1, 2));
        assert_eq!(2.5f64.pow_ref(2), 6.25);
    }
}
