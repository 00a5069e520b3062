//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::{Monomial, VarId};

pub type Rational = num_rational::BigRational;

/// A polynomial in `n` and the shift variables. Zero coefficients are never
/// stored, so two equal polynomials always have identical term maps.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    pub fn n() -> Self {
        Self::var(VarId::N)
    }

    pub fn s(i: u32) -> Self {
        Self::var(VarId::Shift(i))
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v) as u32).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Total degree over the shift variables only.
    pub fn shift_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::shift_degree).max().unwrap_or(0)
    }

    pub fn max_shift(&self) -> Option<u32> {
        self.terms.keys().filter_map(Monomial::max_shift).max()
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// Every variable occurring in the polynomial, ascending.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.keys().flat_map(|m| m.pairs().map(|(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// The coefficient of `v^k` when the polynomial is viewed in `v`.
    pub fn coeff_in_var(&self, v: VarId, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) as u32 == k {
                out.terms.insert(m.without(v), c.clone());
            }
        }
        out
    }

    /// Coefficients in `v`, indexed by power.
    pub fn as_univariate(&self, v: VarId) -> Vec<MultiPoly> {
        let deg = self.degree_in(v) as usize;
        let mut out = alloc::vec![MultiPoly::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            out[m.exponent(v) as usize].terms.insert(m.without(v), c.clone());
        }
        out
    }

    pub fn from_univariate(v: VarId, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let vk = Monomial::var_pow(v, k as u16);
            for (m, a) in &c.terms {
                out.add_term(m.mul(&vk), a.clone());
            }
        }
        out
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: VarId, value: &MultiPoly) -> MultiPoly {
        let coeffs = self.as_univariate(v);
        let mut out = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            out = &(&out * value) + c;
        }
        out
    }

    /// Applies `m ↦ f(m)` to every monomial, merging collisions.
    pub fn map_monomials<F: FnMut(&Monomial) -> Monomial>(&self, mut f: F) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Renames `s(n+i)` to `s(n+i+j)` without touching `n`.
    pub fn shift_indices(&self, j: u32) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.shift_indices(j), c.clone())).collect(),
        }
    }

    /// Evaluates with every variable assigned; `value` is queried once per
    /// variable that occurs.
    ///
    /// Works over the integers after bringing the values and coefficients to
    /// common denominators, so only the final result is reduced.
    pub fn eval<F: FnMut(VarId) -> Rational>(&self, mut value: F) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let vals: BTreeMap<VarId, Rational> = self.variables().into_iter().map(|v| (v, value(v))).collect();
        let den = vals.values().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let cden = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        // powers of the scaled numerators x·den
        let pows: BTreeMap<VarId, Vec<BigInt>> = vals
            .iter()
            .map(|(&v, x)| {
                let a = x.numer() * (&den / x.denom());
                let mut p = alloc::vec![BigInt::one()];
                for _ in 0..self.degree_in(v) {
                    let next = p.last().unwrap() * &a;
                    p.push(next);
                }
                (v, p)
            })
            .collect();
        let top = self.total_degree() as usize;
        let mut den_pows = alloc::vec![BigInt::one()];
        for _ in 0..top {
            let next = den_pows.last().unwrap() * &den;
            den_pows.push(next);
        }
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.numer() * (&cden / c.denom());
            for (v, e) in m.pairs() {
                t *= &pows[&v][e as usize];
            }
            t *= &den_pows[top - m.total_degree() as usize];
            acc += t;
        }
        Rational::new(acc, cden * &den_pows[top])
    }

    /// Substitutes numbers for a subset of the variables.
    pub fn eval_partial<F: FnMut(VarId) -> Option<Rational>>(&self, mut value: F) -> MultiPoly {
        let mut cache: BTreeMap<VarId, Option<Rational>> = BTreeMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            let mut rest = Monomial::one();
            for (v, e) in m.pairs() {
                match cache.entry(v).or_insert_with(|| value(v)) {
                    Some(x) => t *= pow_rational(x, e as u32),
                    None => rest = rest.mul(&Monomial::var_pow(v, e)),
                }
            }
            out.add_term(rest, t);
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Multivariate division by a single divisor under lex; the remainder
    /// has no term divisible by the leading monomial of `d`.
    pub fn div_rem(&self, d: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let (dm, dc) = match d.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => panic!("division by the zero polynomial"),
        };
        let mut q = MultiPoly::zero();
        let mut r = MultiPoly::zero();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.pop_last() {
            match m.div(&dm) {
                Some(t) => {
                    let f = &c / &dc;
                    for (bm, bc) in d.terms.iter().rev().skip(1) {
                        p.add_term(bm.mul(&t), -(bc * &f));
                    }
                    q.terms.insert(t, f);
                }
                None => {
                    r.terms.insert(m, c);
                }
            }
        }
        (q, r)
    }

    /// Positive rational `c` with `self / c` having coprime integer
    /// coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            Rational::zero()
        } else {
            Rational::new(num, den)
        }
    }

    /// Integer primitive part with positive leading coefficient.
    pub fn normalize(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().map_or(false, |lc| lc.is_negative()) {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Coefficients as integers, valid only when all denominators are 1.
    pub fn integer_terms(&self) -> Option<Vec<(Monomial, BigInt)>> {
        self.terms()
            .map(|(m, c)| if c.is_integer() { Some((m.clone(), c.to_integer())) } else { None })
            .collect()
    }

    /// Largest coefficient bit length (numerator or denominator).
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    /// Total order used for deterministic tie-breaking: compares term by
    /// term from the leading one, monomial first, then coefficient.
    pub fn lex_cmp(&self, other: &MultiPoly) -> Ordering {
        let mut a = self.terms();
        let mut b = other.terms();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let ord = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
            }
        }
    }
}

pub(crate) fn pow_rational(x: &Rational, e: u32) -> Rational {
    num_traits::pow::pow(x.clone(), e as usize)
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut out, other) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Plain-text rendering in descending lex order, e.g. `-3/32*s(n) + 1`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
