#![allow(dead_code)]

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratrec_core::mpoly::{int_rat, rat};
use ratrec_core::{HolonomicEq, MultiPoly, Rational, UniPoly};

pub fn s(i: u32) -> MultiPoly {
    MultiPoly::s(i)
}

pub fn c(k: i64) -> MultiPoly {
    MultiPoly::int(k)
}

pub fn q(n: i64, d: i64) -> MultiPoly {
    MultiPoly::constant(rat(n, d))
}

pub fn holo(coeffs: &[&[i64]]) -> HolonomicEq {
    HolonomicEq::from_int_coeffs(coeffs).unwrap()
}

pub fn catalan() -> HolonomicEq {
    holo(&[&[-2, -4], &[2, 1]])
}

pub fn alternating_plus_n() -> HolonomicEq {
    holo(&[&[-3, -2], &[-2], &[1, 2]])
}

/// `s(n+1) − (n+1)^k s(n)`, annihilating `n!^k`.
pub fn factorial_power(k: u32) -> HolonomicEq {
    let mut lower = UniPoly::from_ints(&[1]);
    for _ in 0..k {
        let mut next = vec![int_rat(0); lower.coeffs().len() + 1];
        for (i, a) in lower.coeffs().iter().enumerate() {
            next[i] += a;
            next[i + 1] += a;
        }
        lower = UniPoly::new(next);
    }
    HolonomicEq::homogeneous(vec![lower.scale(&int_rat(-1)), UniPoly::from_ints(&[1])]).unwrap()
}

pub fn p2() -> HolonomicEq {
    holo(&[&[-11, -8, -2], &[5, 4, 2], &[-11, -8, -2], &[5, 4, 2]])
}

pub fn p3() -> HolonomicEq {
    holo(&[&[-6, -27, -27], &[1, 2, 1]])
}

pub fn p4() -> HolonomicEq {
    holo(&[&[-30, -24, 36, 48, 15], &[16, 32, 24, 8, -35], &[-2, -8, -12, -8, 10]])
}

pub fn p5() -> HolonomicEq {
    HolonomicEq::new(vec![UniPoly::from_ints(&[1])], Some(UniPoly::from_ints(&[86, 16, 81, 93, 9, -96]))).unwrap()
}

/// Smallest `k` such that the leading coefficient has no root in `k, k+1, …`.
pub fn regular_start(h: &HolonomicEq) -> u64 {
    let lead = h.leading();
    // integer roots are bounded by the Cauchy bound
    let lc = lead.leading_coeff().unwrap().abs();
    let bound: Rational = lead.coeffs().iter().map(|a| a.abs() / &lc).sum();
    let bound = bound.to_integer().try_into().unwrap_or(u64::MAX - 1) + 1;
    (0..=bound).rev().find(|&n| lead.eval(&int_rat(n as i64)) == int_rat(0)).map_or(0, |n| n + 1)
}

/// `Σ P_i(n+k) s(n+i)`.
pub fn shifted(h: &HolonomicEq, k: u64) -> HolonomicEq {
    HolonomicEq::new(
        h.coeffs().iter().map(|p| p.compose_shift(k)).collect(),
        h.inhom().map(|p| p.compose_shift(k)),
    )
    .unwrap()
}

/// Homogeneous equation with order in `1..=max_order`, degree exactly
/// `degree` and coefficients in `[-bound, bound]`.
pub fn random_holonomic(rng: &mut ChaCha8Rng, max_order: usize, degree: usize, bound: i64) -> HolonomicEq {
    let l = rng.gen_range(1..=max_order);
    let values: Vec<i64> = (-bound..=bound).collect();
    loop {
        let polys: Vec<UniPoly> = (0..=l)
            .map(|_| UniPoly::from_ints(&(0..=degree).map(|_| *values.choose(rng).unwrap()).collect::<Vec<_>>()))
            .collect();
        if polys[0].is_zero() || polys[l].is_zero() {
            continue;
        }
        let h = HolonomicEq::homogeneous(polys).unwrap();
        if h.degree() == degree {
            return h;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_inits(l: usize) -> Vec<Rational> {
    (0..l).map(|i| int_rat(i as i64 + 1)).collect()
}
