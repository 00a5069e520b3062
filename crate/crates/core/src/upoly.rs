//! Dense univariate polynomials in `n`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::monomial::{Monomial, VarId};
use crate::mpoly::{MultiPoly, Rational};

/// `coeffs[k]` is the coefficient of `n^k`; the last entry is nonzero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(alloc::vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `P(n + j)`, expanded with binomial coefficients.
    pub fn compose_shift(&self, j: u64) -> UniPoly {
        if j == 0 || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let shift = BigInt::from(j);
        let d = self.coeffs.len();
        let mut out = alloc::vec![Rational::zero(); d];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // (n + j)^k = sum_i binom(k, i) j^(k-i) n^i
            let mut binom = BigInt::one();
            for i in (0..=k).rev() {
                let jpow = num_traits::pow::pow(shift.clone(), k - i);
                out[i] += c * Rational::from_integer(&binom * jpow);
                binom = binom * BigInt::from(i) / BigInt::from(k - i + 1);
            }
        }
        UniPoly::new(out)
    }

    /// The same polynomial as a `MultiPoly` in `n`.
    pub fn to_mpoly(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var_pow(VarId::N, k as u16), c.clone())),
        )
    }

    /// Reads back a polynomial in `n` alone; `None` if any shift occurs.
    pub fn from_mpoly(p: &MultiPoly) -> Option<UniPoly> {
        if p.max_shift().is_some() {
            return None;
        }
        let mut coeffs = alloc::vec![Rational::zero(); p.degree_in(VarId::N) as usize + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponent(VarId::N) as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn shift_examples() {
        assert_eq!(UniPoly::from_ints(&[0, 1]).compose_shift(1), UniPoly::from_ints(&[1, 1]));
        assert_eq!(UniPoly::from_ints(&[0, 0, 1]).compose_shift(2), UniPoly::from_ints(&[4, 4, 1]));
        // coefficient of s(n+1) in p2 shifted once gives that of s(n+2) up to sign
        assert_eq!(UniPoly::from_ints(&[5, 4, 2]).compose_shift(1), UniPoly::from_ints(&[11, 8, 2]));
    }

    #[test]
    fn shift_preserves_degree_and_values() {
        let p = UniPoly::from_ints(&[3, -1, 0, 2]);
        let q = p.compose_shift(4);
        assert_eq!(q.degree(), 3);
        for x in -3i64..5 {
            let xr = Rational::from_integer(BigInt::from(x));
            let xs = Rational::from_integer(BigInt::from(x + 4));
            assert_eq!(q.eval(&xr), p.eval(&xs));
        }
    }

    proptest! {
        #[test]
        fn shifts_compose(coeffs in proptest::collection::vec(-9i64..10, 0..6), i in 0u64..6, j in 0u64..6) {
            let p = UniPoly::from_ints(&coeffs);
            prop_assert_eq!(p.compose_shift(i).compose_shift(j), p.compose_shift(i + j));
        }
    }
}
