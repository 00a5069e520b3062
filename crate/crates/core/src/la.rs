//! The linear-algebra conversion.
//!
//! Writing `σ^j(p) = Σ_k γ_{j,k} n^k`, the rows `j = 0..d−1` form a linear
//! system in the unknowns `n, n², …, n^d` over the rational functions in
//! the shifts. Solving it and substituting into `σ^d(p)` removes `n` and
//! leaves an equation linear in `s(n+l+d)`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diffpoly::{DiffPoly, HolonomicEq, RatRecEq};
use crate::error::{Error, Result};
use crate::linalg::cramer_solve;
use crate::monomial::VarId;
use crate::mpoly::{MultiPoly, Rational};

/// `entries[j][k] = γ_{j,k}` for `j, k = 0..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTable {
    pub order: usize,
    pub degree: usize,
    pub entries: Vec<Vec<MultiPoly>>,
}

impl GammaTable {
    pub fn get(&self, j: usize, k: usize) -> &MultiPoly {
        &self.entries[j][k]
    }

    /// `Σ_k γ_{j,k} n^k`.
    pub fn row_poly(&self, j: usize) -> MultiPoly {
        MultiPoly::from_univariate(VarId::N, &self.entries[j])
    }
}

/// A solved power `n^k = num / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSolution {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

pub fn gamma_decompose(h: &HolonomicEq) -> GammaTable {
    let d = h.degree();
    let p = h.to_diffpoly();
    let entries = (0..=d)
        .map(|j| {
            let sj = p.shift(j as u32);
            (0..=d).map(|k| sj.body().coeff_in_var(VarId::N, k as u32)).collect()
        })
        .collect();
    GammaTable { order: h.order(), degree: d, entries }
}

/// Rows `j = 0..d−1`: `Σ_{k≥1} γ_{j,k} n^k = −γ_{j,0}`.
pub fn build_power_system(g: &GammaTable) -> (Vec<Vec<MultiPoly>>, Vec<MultiPoly>) {
    let d = g.degree;
    let m = (0..d).map(|j| (1..=d).map(|k| g.get(j, k).clone()).collect()).collect();
    let b = (0..d).map(|j| -g.get(j, 0)).collect();
    (m, b)
}

/// Cramer's rule rather than elimination: the system is small but its
/// entries are wide, and exact multivariate division dominates Bareiss.
pub fn solve_powers(m: &[Vec<MultiPoly>], b: &[MultiPoly]) -> Result<Vec<PowerSolution>> {
    Ok(cramer_solve(m, b)?
        .into_iter()
        .map(|(num, den)| PowerSolution { num, den })
        .collect())
}

/// Composes with the forward-difference power `Δ^{r+1}`, which kills the
/// inhomogeneous part of degree `r`.
pub fn homogenize(h: &HolonomicEq) -> HolonomicEq {
    let q = match h.inhom() {
        Some(q) => q,
        None => return h.clone(),
    };
    let r = q.degree();
    let homogeneous = HolonomicEq::homogeneous(h.coeffs().to_vec())
        .expect("nonzero coefficients")
        .to_diffpoly();
    let mut acc = MultiPoly::zero();
    let mut binom = BigInt::one();
    let top = r + 1;
    for t in 0..=top {
        // coefficient of σ^t in Δ^{r+1} is (−1)^{r+1−t} C(r+1, t)
        let mut c = Rational::from_integer(binom.clone());
        if (top - t) % 2 == 1 {
            c = -c;
        }
        acc = &acc + &homogeneous.shift(t as u32).body().scale(&c);
        binom = binom * BigInt::from(top - t) / BigInt::from(t + 1);
    }
    HolonomicEq::from_diffpoly(&DiffPoly::new(acc)).expect("a combination of shifts stays holonomic")
}

/// Simple ratrec equation of order `l + d` for a holonomic input.
pub fn convert_la(h: &HolonomicEq) -> Result<RatRecEq> {
    h.check_nontrivial()?;
    let d = h.degree();
    if d == 0 {
        return Ok(h.to_diffpoly().to_ratrec_form()?.reduced());
    }
    match convert_generic(h) {
        Err(Error::SingularSystem) if !h.is_homogeneous() => convert_generic(&homogenize(h)),
        other => other,
    }
}

fn convert_generic(h: &HolonomicEq) -> Result<RatRecEq> {
    let d = h.degree();
    if d == 0 {
        return Ok(h.to_diffpoly().to_ratrec_form()?.reduced());
    }
    let gamma = gamma_decompose(h);
    let (m, b) = build_power_system(&gamma);
    let powers = solve_powers(&m, &b)?;
    let den = powers[0].den.clone();
    // den · σ^d(p) with n^k replaced by num_k / den
    let mut cleared = &gamma.entries[d][0] * &den;
    for (k, sol) in powers.iter().enumerate() {
        cleared = &cleared + &(&gamma.entries[d][k + 1] * &sol.num);
    }
    debug_assert!(!cleared.contains_var(VarId::N));
    let top = (h.order() + d) as u32;
    if cleared.coeff_in_var(VarId::Shift(top), 1).is_zero() {
        return Err(Error::InternalContradiction(format!(
            "coefficient of s(n+{}) vanished after substitution",
            top
        )));
    }
    Ok(DiffPoly::new(cleared).to_ratrec_form()?.reduced())
}

/// Evaluates each solved power on a window of sequence values.
pub fn eval_powers(powers: &[PowerSolution], window: &[Rational]) -> Option<Vec<Rational>> {
    let value = |v: VarId| match v {
        VarId::Shift(i) => window[i as usize].clone(),
        VarId::N => panic!("solved powers are free of n"),
    };
    let den = powers.first()?.den.eval(value);
    if den.is_zero() {
        return None;
    }
    Some(powers.iter().map(|p| p.num.eval(value) / &den).collect())
}
