//! Multivariate gcd over ℚ and cancellation of rational functions.
//!
//! Coprimality is settled first by univariate specialization, which is
//! cheap and covers almost every call; only when a variable survives that
//! test do we fall back to recursive primitive remainder sequences.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::monomial::{Monomial, VarId};
use crate::mpoly::{MultiPoly, Rational};

/// Normalized gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.normalize();
    }
    if b.is_zero() {
        return a.normalize();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if certainly_coprime(a, b) {
        return MultiPoly::one();
    }
    let bound = gcd_degree_bound(a, b);
    if bound == 0 {
        return MultiPoly::one();
    }
    let (small, big) = if a.total_degree() <= b.total_degree() { (a, b) } else { (b, a) };
    if bound == small.total_degree() && big.div_exact(small).is_some() {
        return small.normalize();
    }
    gcd_rec(&a.normalize(), &b.normalize()).normalize()
}

/// Upper bound on the total degree of `gcd(a, b)`, from the univariate gcd
/// of both restricted to a random line `x_i = c_i t + d_i`. The bound holds
/// whenever the restriction keeps both total degrees, since the top-degree
/// part of the gcd then cannot vanish on the line either.
pub fn gcd_degree_bound(a: &MultiPoly, b: &MultiPoly) -> u32 {
    if a.is_zero() || b.is_zero() {
        return a.total_degree().max(b.total_degree());
    }
    let mut vars = a.variables();
    vars.extend(b.variables());
    vars.sort();
    vars.dedup();
    let fresh = vars
        .iter()
        .filter_map(|v| match v {
            VarId::Shift(i) => Some(*i + 1),
            VarId::N => None,
        })
        .max()
        .unwrap_or(0);
    let t = VarId::Shift(fresh);
    let tpoly = MultiPoly::var(t);
    let mut sampler = Sampler(0x2545_f491_4f6c_dd1d);
    for _attempt in 0..4 {
        let line: BTreeMap<VarId, MultiPoly> = vars
            .iter()
            .map(|&v| {
                let c = MultiPoly::int(sampler.next());
                (v, &(&c * &tpoly) + &MultiPoly::int(sampler.next()))
            })
            .collect();
        let restrict = |p: &MultiPoly| {
            let mut out = MultiPoly::zero();
            for (m, c) in p.terms() {
                let mut term = MultiPoly::constant(c.clone());
                for (v, e) in m.pairs() {
                    term = &term * &line[&v].pow(e as u32);
                }
                out = &out + &term;
            }
            out
        };
        let (ua, ub) = (restrict(a), restrict(b));
        if ua.degree_in(t) != a.total_degree() || ub.degree_in(t) != b.total_degree() {
            continue;
        }
        return uni_gcd_degree(to_dense(&ua, t), to_dense(&ub, t)) as u32;
    }
    a.total_degree().min(b.total_degree())
}

/// Divides `num` and `den` by their polynomial gcd.
pub fn cancel(num: &MultiPoly, den: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let g = gcd(num, den);
    if g.is_zero() || g.is_constant() {
        return (num.clone(), den.clone());
    }
    (
        num.div_exact(&g).expect("gcd divides numerator"),
        den.div_exact(&g).expect("gcd divides denominator"),
    )
}

/// Deterministic sample points for the specialization test.
struct Sampler(u64);

impl Sampler {
    fn next(&mut self) -> i64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let r = (self.0 >> 33) % 1999;
        r as i64 - 999
    }
}

/// `true` when specialization proves the gcd is a constant. A variable `y`
/// is ruled out when, for some point fixing the other variables that keeps
/// both leading coefficients in `y` nonzero, the specialized univariate gcd
/// is constant: the true gcd's degree in `y` cannot exceed it.
fn certainly_coprime(a: &MultiPoly, b: &MultiPoly) -> bool {
    let va = a.variables();
    let vb = b.variables();
    let shared: Vec<VarId> = va.iter().copied().filter(|v| vb.contains(v)).collect();
    if shared.is_empty() {
        // gcd can only be constant when there is no shared variable
        return true;
    }
    let mut sampler = Sampler(0x9e37_79b9_7f4a_7c15);
    'vars: for &y in &shared {
        for _attempt in 0..4 {
            let assignment: BTreeMap<VarId, Rational> = va
                .iter()
                .chain(vb.iter())
                .filter(|&&v| v != y)
                .map(|&v| (v, Rational::from_integer(BigInt::from(sampler_value(&mut sampler, v)))))
                .collect();
            let point = |v: VarId| assignment.get(&v).cloned();
            let ua = a.eval_partial(point);
            let ub = b.eval_partial(point);
            if ua.degree_in(y) != a.degree_in(y) || ub.degree_in(y) != b.degree_in(y) {
                continue;
            }
            let ga = to_dense(&ua, y);
            let gb = to_dense(&ub, y);
            if uni_gcd_degree(ga, gb) == 0 {
                continue 'vars;
            }
            return false;
        }
        return false;
    }
    true
}

fn sampler_value(s: &mut Sampler, v: VarId) -> i64 {
    let base = s.next();
    match v {
        VarId::N => base,
        VarId::Shift(i) => base ^ (i as i64 * 7919),
    }
}

fn to_dense(p: &MultiPoly, y: VarId) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); p.degree_in(y) as usize + 1];
    for (m, c) in p.terms() {
        out[m.exponent(y) as usize] += c;
    }
    while out.last().map_or(false, Zero::is_zero) {
        out.pop();
    }
    out
}

fn uni_gcd_degree(mut a: Vec<Rational>, mut b: Vec<Rational>) -> usize {
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = uni_rem(a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn uni_rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let lb = b.last().unwrap().clone();
    while a.len() >= b.len() {
        let f = a.last().unwrap() / &lb;
        let off = a.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            a[off + i] -= c * &f;
        }
        a.pop();
        while a.last().map_or(false, Zero::is_zero) {
            a.pop();
        }
    }
    a
}

fn main_variable(a: &MultiPoly, b: &MultiPoly) -> Option<VarId> {
    let va = a.variables();
    let vb = b.variables();
    va.iter().rev().copied().find(|v| vb.contains(v))
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let v = match main_variable(a, b) {
        Some(v) => v,
        None => return MultiPoly::one(),
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = gcd_rec(&ca, &cb).normalize();
    let h = primitive_prs(pa, pb, v);
    (&g * &h).normalize()
}

/// gcd of the coefficients of `p` viewed in `v`, normalized.
fn content_in(p: &MultiPoly, v: VarId) -> MultiPoly {
    let coeffs = p.as_univariate(v);
    let mut g = MultiPoly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() { c.normalize() } else { gcd_rec(&g, c).normalize() };
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g
}

fn primitive_part(p: &MultiPoly, v: VarId) -> MultiPoly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").normalize()
}

fn primitive_prs(a: MultiPoly, b: MultiPoly, v: VarId) -> MultiPoly {
    let (mut r0, mut r1) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        if r1.degree_in(v) == 0 {
            // r1 is a nonzero v-free primitive polynomial: unit
            return MultiPoly::one();
        }
        let r = pseudo_rem(&r0, &r1, v);
        if r.is_zero() {
            return primitive_part(&r1, v);
        }
        r0 = r1;
        r1 = primitive_part(&r, v);
    }
}

fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: VarId) -> MultiPoly {
    let db = b.degree_in(v);
    let lb = b.coeff_in_var(v, db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coeff_in_var(v, dr);
        let shift = MultiPoly::term(Monomial::var_pow(v, (dr - db) as u16), Rational::one());
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::int_rat;

    fn s(i: u32) -> MultiPoly {
        MultiPoly::s(i)
    }

    #[test]
    fn coprime_linear_forms() {
        let a = &s(0) + &s(1);
        let b = &s(2) - &s(0);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn recovers_common_factor() {
        let g = &(&s(1) + &s(2)).scale(&int_rat(3)) - &s(0);
        let a = &g * &(&s(3) - &s(2));
        let b = &g * &(&(&s(0) * &s(0)) + &MultiPoly::int(1));
        assert_eq!(gcd(&a, &b), g.normalize());
    }

    #[test]
    fn squared_factor() {
        let g = &s(0) - &s(1);
        let a = &(&g * &g) * &s(2);
        let b = &g * &(&g * &s(3));
        assert_eq!(gcd(&a, &b), (&g * &g).normalize());
    }

    #[test]
    fn degree_bound_is_tight_on_products() {
        let g = &(&s(0) * &s(1)) - &(&s(2) * &s(2));
        let a = &g * &(&s(3) + &s(0));
        let b = &g * &(&(&s(1) * &s(1)) - &MultiPoly::int(5));
        assert_eq!(gcd_degree_bound(&a, &b), 2);
        assert_eq!(gcd_degree_bound(&(&s(0) + &s(1)), &(&s(0) - &s(1))), 0);
        assert_eq!(gcd(&a, &g), g.normalize());
    }

    #[test]
    fn cancel_to_polynomial() {
        // (s1 + s2)(s3 - s2 - s1 + s0) / (4 (s1 + s2))
        let f = &s(1) + &s(2);
        let c = &(&(&s(3) - &s(2)) - &s(1)) + &s(0);
        let (num, den) = cancel(&(&f * &c), &f.scale(&int_rat(4)));
        assert_eq!(den, MultiPoly::int(4));
        assert_eq!(num, c);
    }
}
