//! Difference polynomials, holonomic equations and simple ratrec equations.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::gcd::cancel;
use crate::monomial::{Monomial, VarId};
use crate::mpoly::{MultiPoly, Rational};
use crate::upoly::UniPoly;

/// An element of the difference ring: a polynomial in `n` and the shifts
/// `s(n+i)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DiffPoly(pub MultiPoly);

/// `(order, total degree in the shifts, degree in n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderDegree {
    pub order: u32,
    pub total_degree: u32,
    pub n_degree: u32,
}

impl DiffPoly {
    pub fn new(body: MultiPoly) -> Self {
        DiffPoly(body)
    }

    pub fn body(&self) -> &MultiPoly {
        &self.0
    }

    pub fn into_body(self) -> MultiPoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Largest shift index present, 0 when no shift occurs.
    pub fn order(&self) -> u32 {
        self.0.max_shift().unwrap_or(0)
    }

    /// `σ^j`: sends `n ↦ n + j` and `s(n+i) ↦ s(n+i+j)`.
    pub fn shift(&self, j: u32) -> DiffPoly {
        DiffPoly(shift_poly(&self.0, j))
    }

    pub fn order_and_degree(&self) -> Result<OrderDegree> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(OrderDegree {
            order: self.order(),
            total_degree: self.0.shift_degree(),
            n_degree: self.0.degree_in(VarId::N),
        })
    }

    /// Free of `n` and of degree exactly one in its highest shift.
    pub fn is_simple_ratrec(&self) -> bool {
        if self.is_zero() || self.0.contains_var(VarId::N) {
            return false;
        }
        match self.0.max_shift() {
            Some(m) => self.0.degree_in(VarId::Shift(m)) == 1,
            None => false,
        }
    }

    /// Rearranges a quasi-linear polynomial into `s(n+m) = num / den`.
    pub fn to_ratrec_form(&self) -> Result<RatRecEq> {
        if !self.is_simple_ratrec() {
            return Err(Error::NotQuasiLinear);
        }
        let m = self.order();
        let top = VarId::Shift(m);
        let den = self.0.coeff_in_var(top, 1);
        let num = -self.0.coeff_in_var(top, 0);
        Ok(RatRecEq::from_parts(m, num, den))
    }
}

/// `σ^j` on a bare polynomial.
pub fn shift_poly(p: &MultiPoly, j: u32) -> MultiPoly {
    if j == 0 {
        return p.clone();
    }
    let renamed = p.shift_indices(j);
    if !renamed.contains_var(VarId::N) {
        return renamed;
    }
    let n_plus_j = &MultiPoly::n() + &MultiPoly::int(j as i64);
    renamed.substitute(VarId::N, &n_plus_j)
}

impl fmt::Debug for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `Σ P_i(n) s(n+i) + inhom(n) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HolonomicEq {
    coeffs: Vec<UniPoly>,
    inhom: Option<UniPoly>,
}

impl HolonomicEq {
    /// Strips vanishing top coefficients so that the order is the true one.
    pub fn new(mut coeffs: Vec<UniPoly>, inhom: Option<UniPoly>) -> Result<Self> {
        while coeffs.last().map_or(false, UniPoly::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::NotHolonomic("no nonzero shift coefficient".into()));
        }
        let inhom = inhom.filter(|q| !q.is_zero());
        Ok(HolonomicEq { coeffs, inhom })
    }

    pub fn homogeneous(coeffs: Vec<UniPoly>) -> Result<Self> {
        Self::new(coeffs, None)
    }

    /// Convenience constructor from integer coefficient lists, lowest power
    /// first.
    pub fn from_int_coeffs(coeffs: &[&[i64]]) -> Result<Self> {
        Self::homogeneous(coeffs.iter().map(|c| UniPoly::from_ints(c)).collect())
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn inhom(&self) -> Option<&UniPoly> {
        self.inhom.as_ref()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inhom.is_none()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest degree among the coefficients and the inhomogeneous part.
    pub fn degree(&self) -> usize {
        let d = self.coeffs.iter().filter(|c| !c.is_zero()).map(UniPoly::degree).max().unwrap_or(0);
        match &self.inhom {
            Some(q) => d.max(q.degree()),
            None => d,
        }
    }

    /// Rejects homogeneous order-0 equations, whose only zero is the zero
    /// sequence.
    pub fn check_nontrivial(&self) -> Result<()> {
        if self.order() == 0 && self.is_homogeneous() {
            return Err(Error::Unsupported("order-0 homogeneous equation has only the zero solution".into()));
        }
        Ok(())
    }

    pub fn leading(&self) -> &UniPoly {
        self.coeffs.last().expect("nonempty by construction")
    }

    pub fn to_diffpoly(&self) -> DiffPoly {
        let mut p = MultiPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            p = &p + &(&c.to_mpoly() * &MultiPoly::s(i as u32));
        }
        if let Some(q) = &self.inhom {
            p = &p + &q.to_mpoly();
        }
        DiffPoly(p)
    }

    /// Recognizes `Σ P_i(n) s(n+i) + q(n)`: every term has at most one shift
    /// variable, to the first power.
    pub fn from_diffpoly(p: &DiffPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let order = p.0.max_shift().ok_or_else(|| Error::NotHolonomic("no shift variable".into()))?;
        let mut coeffs = alloc::vec![alloc::vec![Rational::zero(); 1]; order as usize + 1];
        let mut inhom: Vec<Rational> = Vec::new();
        for (m, c) in p.0.terms() {
            let mut shift = None;
            for (v, e) in m.pairs() {
                if let VarId::Shift(i) = v {
                    if e != 1 || shift.is_some() {
                        return Err(Error::NotHolonomic(format!("nonlinear term {}", m)));
                    }
                    shift = Some(i);
                }
            }
            let k = m.exponent(VarId::N) as usize;
            let slot = match shift {
                Some(i) => &mut coeffs[i as usize],
                None => &mut inhom,
            };
            if slot.len() <= k {
                slot.resize(k + 1, Rational::zero());
            }
            slot[k] = c.clone();
        }
        let coeffs = coeffs.into_iter().map(UniPoly::new).collect();
        let inhom = if inhom.is_empty() { None } else { Some(UniPoly::new(inhom)) };
        Self::new(coeffs, inhom)
    }
}

/// A simple ratrec equation `s(n+m) = num / den` with `num`, `den` free of
/// `n` and of `s(n+m)` and above.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatRecEq {
    pub order: u32,
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RatRecEq {
    /// Applies joint normalization: common integer content removed and the
    /// denominator's leading coefficient made positive.
    pub fn from_parts(order: u32, num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "ratrec denominator must be nonzero");
        let mut eq = RatRecEq { order, num, den };
        eq.normalize_jointly();
        eq
    }

    fn normalize_jointly(&mut self) {
        let c = self.to_diffpoly().0.content();
        let mut scale = c.recip();
        if self.den.leading_coeff().map_or(false, |lc| lc.is_negative()) {
            scale = -scale;
        }
        self.num = self.num.scale(&scale);
        self.den = self.den.scale(&scale);
    }

    /// Cancels the polynomial gcd of numerator and denominator.
    pub fn reduced(&self) -> RatRecEq {
        let (num, den) = cancel(&self.num, &self.den);
        RatRecEq::from_parts(self.order, num, den)
    }

    /// Cleared form `den · s(n+m) − num`.
    pub fn to_diffpoly(&self) -> DiffPoly {
        let top = MultiPoly::s(self.order);
        DiffPoly(&(&self.den * &top) - &self.num)
    }

    /// Total degree of the cleared form.
    pub fn degree(&self) -> u32 {
        self.to_diffpoly().0.total_degree()
    }

    pub fn is_n_free(&self) -> bool {
        !self.num.contains_var(VarId::N) && !self.den.contains_var(VarId::N)
    }

    /// Same rational map, compared after reducing both sides.
    pub fn equivalent(&self, other: &RatRecEq) -> bool {
        if self.order != other.order {
            return false;
        }
        let a = self.reduced();
        let b = other.reduced();
        a.to_diffpoly().0.normalize() == b.to_diffpoly().0.normalize()
    }

    /// `num / den` on the window `s(n), …, s(n+m−1)`; `None` when the
    /// denominator vanishes.
    pub fn apply(&self, window: &[Rational]) -> Option<Rational> {
        let value = |v: VarId| match v {
            VarId::Shift(i) => window[i as usize].clone(),
            VarId::N => panic!("ratrec equation must be free of n"),
        };
        let d = self.den.eval(value);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(value) / d)
    }

    /// Monomials of the numerator followed by those of the denominator.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.num.terms().map(|(m, _)| m).chain(self.den.terms().map(|(m, _)| m))
    }
}
