//! Buchberger's algorithm over ℚ with the sugar strategy, in pure lex order
//! (`n` greatest, then `s(n+i)` by descending `i`) or a shift-graded order.
//!
//! Internally every polynomial is kept as a primitive integer polynomial;
//! reductions are fraction-free with periodic content removal.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::budget::Limits;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarId};
use crate::mpoly::{MultiPoly, Rational};

/// Monomial orders for elimination of `n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Pure lex, `n ≻ s(n+J) ≻ … ≻ s(n)`.
    #[default]
    Lex,
    /// Degree in the shifts, then degree in `n`, then reverse lex. Eliminates
    /// `n` only for ideals generated by polynomials homogeneous in the shifts.
    Graded,
}

impl TermOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::Graded => a.cmp_graded(b),
        }
    }

    /// Degree used for the sugar of a term.
    fn degree(self, m: &Monomial) -> u32 {
        match self {
            TermOrder::Graded => m.shift_degree(),
            TermOrder::Lex => m.total_degree(),
        }
    }
}

/// Integer polynomial, terms ascending (leading term last).
#[derive(Clone, Debug, PartialEq, Eq)]
struct IPoly {
    terms: Vec<(Monomial, BigInt)>,
    /// Degree the polynomial would have in the homogenized computation.
    sugar: u32,
}

impl IPoly {
    fn from_mpoly(p: &MultiPoly, order: TermOrder) -> IPoly {
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .rev()
            .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
            .collect();
        if order != TermOrder::Lex {
            terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        }
        terms.shrink_to_fit();
        let sugar = terms.iter().map(|t| order.degree(&t.0)).max().unwrap_or(0);
        let mut out = IPoly { terms, sugar };
        out.make_primitive();
        out
    }

    fn to_mpoly(&self) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()))))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }

    fn lc(&self) -> &BigInt {
        &self.terms.last().expect("nonzero").1
    }

    fn max_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }

    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
}

/// `a·x − b·m·y` over ascending term lists, skipping the leading terms of
/// both inputs when `drop_leading` is set (they are known to cancel).
fn combine(
    order: TermOrder,
    x: &[(Monomial, BigInt)],
    a: &BigInt,
    y: &[(Monomial, BigInt)],
    b: &BigInt,
    m: &Monomial,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let mut i = 0;
    let mut j = 0;
    let scaled = |mono: &Monomial| mono.mul(m);
    let mut ym: Option<Monomial> = y.first().map(|t| scaled(&t.0));
    while i < x.len() || j < y.len() {
        let ord = match (x.get(i), &ym) {
            (Some(xt), Some(yt)) => order.cmp(&xt.0, yt),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => break,
        };
        match ord {
            Ordering::Less => {
                out.push((x[i].0.clone(), a * &x[i].1));
                i += 1;
            }
            Ordering::Greater => {
                out.push((ym.take().unwrap(), -(b * &y[j].1)));
                j += 1;
                ym = y.get(j).map(|t| scaled(&t.0));
            }
            Ordering::Equal => {
                let c = a * &x[i].1 - b * &y[j].1;
                if !c.is_zero() {
                    out.push((x[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                ym = y.get(j).map(|t| scaled(&t.0));
            }
        }
    }
    out
}

struct Engine<'a> {
    order: TermOrder,
    polys: Vec<IPoly>,
    /// Indices of polynomials currently used for reduction.
    active: Vec<usize>,
    pairs: Vec<Pair>,
    limits: Limits<'a>,
    processed: usize,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

impl<'a> Engine<'a> {
    fn new(order: TermOrder, limits: Limits<'a>) -> Self {
        Engine { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new(), limits, processed: 0 }
    }

    fn complete(mut self, order: TermOrder) -> Result<GroebnerBasis> {
        self.run()?;
        let basis = self.finish()?;
        Ok(GroebnerBasis { generators: basis.iter().map(IPoly::to_mpoly).collect(), order })
    }

    fn check(&self) -> Result<()> {
        if self.limits.budget.exhausted() {
            return Err(Error::Timeout("deadline reached during Gröbner basis computation".into()));
        }
        Ok(())
    }

    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        self.active
            .iter()
            .copied()
            .filter(|&k| Some(k) != skip && self.polys[k].lm().divides(m))
            .min_by_key(|&k| self.polys[k].terms.len())
    }

    /// Reduction of `f` modulo the active set, optionally ignoring one
    /// element. Without `full` it stops at the first irreducible leading
    /// term and leaves the tail alone.
    fn reduce(&self, f: IPoly, skip: Option<usize>, full: bool) -> Result<IPoly> {
        let mut sugar = f.sugar;
        let mut p = f.terms;
        let mut done: Vec<(Monomial, BigInt)> = Vec::new(); // descending
        let mut steps = 0usize;
        while let Some((m, c)) = p.last().cloned() {
            match self.find_reducer(&m, skip) {
                Some(k) => {
                    let g = &self.polys[k];
                    let gl = g.lc();
                    let common = c.gcd(gl);
                    let a = gl / &common;
                    let b = &c / &common;
                    let mono = m.div(g.lm()).expect("divisor");
                    sugar = sugar.max(g.sugar + self.order.degree(&mono));
                    let plen = p.len();
                    let glen = g.terms.len();
                    p = combine(self.order, &p[..plen - 1], &a, &g.terms[..glen - 1], &b, &mono);
                    if !a.is_one() {
                        for t in done.iter_mut() {
                            t.1 *= &a;
                        }
                    }
                    steps += 1;
                    if steps % 32 == 0 {
                        self.check()?;
                        shrink_content(&mut p, &mut done);
                        let bits = p.iter().chain(done.iter()).map(|t| t.1.bits()).max().unwrap_or(0);
                        if bits > self.limits.max_coeff_bits {
                            return Err(Error::Timeout("coefficient size cap exceeded".into()));
                        }
                    }
                }
                None if !full => break,
                None => {
                    let t = p.pop().unwrap();
                    done.push(t);
                }
            }
        }
        done.reverse();
        p.extend(done);
        let mut out = IPoly { terms: p, sugar };
        out.make_primitive();
        Ok(out)
    }

    fn s_poly(&self, i: usize, j: usize, lcm: &Monomial) -> IPoly {
        let f = &self.polys[i];
        let g = &self.polys[j];
        let common = f.lc().gcd(g.lc());
        let a = g.lc() / &common;
        let b = f.lc() / &common;
        let mf = lcm.div(f.lm()).unwrap();
        let mg = lcm.div(g.lm()).unwrap();
        let fl = f.terms.len();
        let gl = g.terms.len();
        let fx: Vec<(Monomial, BigInt)> = f.terms[..fl - 1].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
        let sugar = (f.sugar + self.order.degree(&mf)).max(g.sugar + self.order.degree(&mg));
        let mut out = IPoly { terms: combine(self.order, &fx, &a, &g.terms[..gl - 1], &b, &mg), sugar };
        out.make_primitive();
        out
    }

    /// Gebauer–Möller update after adding polynomial `h`.
    fn update(&mut self, h: usize) {
        let hm = self.polys[h].lm().clone();
        let mut cands: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let gm = self.polys[g].lm();
                (g, hm.lcm(gm), hm.is_coprime(gm))
            })
            .collect();
        // chain criterion among new pairs
        let mut keep = alloc::vec![true; cands.len()];
        for a in 0..cands.len() {
            if cands[a].2 {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cands[b].1.divides(&cands[a].1) && (cands[b].1 != cands[a].1 || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut fresh = Vec::new();
        for (idx, (g, lcm, coprime)) in cands.drain(..).enumerate() {
            if keep[idx] && !coprime {
                let sugar_of = |k: usize| {
                    let q = &self.polys[k];
                    q.sugar + self.order.degree(&lcm) - self.order.degree(q.lm())
                };
                let sugar = sugar_of(g).max(sugar_of(h));
                fresh.push(Pair { i: g, j: h, lcm, sugar });
            }
        }
        // prune old pairs whose lcm is strictly divisible through h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !hm.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].lm().lcm(&hm);
            let lj = polys[p.j].lm().lcm(&hm);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(fresh);
        let polys = &self.polys;
        self.active.retain(|&g| !hm.divides(polys[g].lm()));
        self.active.push(h);
    }

    fn add(&mut self, p: IPoly) -> Result<()> {
        if p.max_bits() > self.limits.max_coeff_bits {
            return Err(Error::Timeout("coefficient size cap exceeded".into()));
        }
        self.polys.push(p);
        let h = self.polys.len() - 1;
        self.update(h);
        Ok(())
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.sugar.cmp(&b.sugar).then_with(|| self.order.cmp(&a.lcm, &b.lcm)))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) -> Result<()> {
        while let Some(pair) = self.next_pair() {
            self.check()?;
            self.processed += 1;
            if self.processed > self.limits.max_pairs {
                return Err(Error::Timeout("S-pair cap exceeded".into()));
            }
            let s = self.s_poly(pair.i, pair.j, &pair.lcm);
            if s.is_zero() {
                continue;
            }
            let r = self.reduce(s, None, false)?;
            if !r.is_zero() {
                self.add(r)?;
            }
        }
        Ok(())
    }

    /// Reduced basis from the active set, ascending by leading monomial.
    fn finish(mut self) -> Result<Vec<IPoly>> {
        let mut idx = self.active.clone();
        idx.sort_by(|&a, &b| self.order.cmp(self.polys[a].lm(), self.polys[b].lm()));
        // minimal basis: drop leading monomials divisible by another one
        let mut minimal: Vec<usize> = Vec::new();
        for &k in &idx {
            let m = self.polys[k].lm();
            if !minimal.iter().any(|&o| self.polys[o].lm().divides(m)) {
                minimal.push(k);
            }
        }
        self.active = minimal.clone();
        let mut out = Vec::with_capacity(minimal.len());
        for &k in &minimal {
            self.check()?;
            let r = self.reduce(self.polys[k].clone(), Some(k), true)?;
            out.push(r);
        }
        Ok(out)
    }
}

fn shrink_content(p: &mut [(Monomial, BigInt)], done: &mut [(Monomial, BigInt)]) {
    let mut g = BigInt::zero();
    for t in p.iter().chain(done.iter()) {
        g = g.gcd(&t.1);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for t in p.iter_mut().chain(done.iter_mut()) {
        t.1 = &t.1 / &g;
    }
}

/// A reduced lex Gröbner basis; generators are normalized (primitive
/// integer coefficients, positive leading coefficient) and sorted by
/// ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<MultiPoly>,
    order: TermOrder,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    fn engine(&self) -> Engine<'static> {
        Engine {
            order: self.order,
            polys: self.generators.iter().map(|g| IPoly::from_mpoly(g, self.order)).collect(),
            active: (0..self.generators.len()).collect(),
            pairs: Vec::new(),
            limits: Limits::unlimited(),
            processed: 0,
        }
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &MultiPoly) -> MultiPoly {
        if f.is_zero() {
            return MultiPoly::zero();
        }
        self.engine()
            .reduce(IPoly::from_mpoly(f, self.order), None, true)
            .expect("unlimited budget")
            .to_mpoly()
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Every S-polynomial of basis pairs reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let engine = self.engine();
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                let lcm = engine.polys[i].lm().lcm(engine.polys[j].lm());
                let s = engine.s_poly(i, j, &lcm);
                if !s.is_zero() && !engine.reduce(s, None, true).expect("unlimited budget").is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// No generator's leading monomial divides a term of another generator.
    pub fn is_reduced(&self) -> bool {
        let engine = self.engine();
        self.generators.iter().enumerate().all(|(i, _)| {
            let lm = engine.polys[i].lm();
            self.generators
                .iter()
                .enumerate()
                .all(|(j, h)| i == j || h.terms().all(|(m, _)| !lm.divides(m)))
        })
    }
}

/// Reduced lex Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[MultiPoly], limits: Limits<'_>) -> Result<GroebnerBasis> {
    buchberger_with(gens, TermOrder::Lex, limits)
}

pub fn buchberger_with(gens: &[MultiPoly], order: TermOrder, limits: Limits<'_>) -> Result<GroebnerBasis> {
    let mut engine = Engine::new(order, limits);
    let mut inputs: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IPoly::from_mpoly(g, order))
        .collect();
    if inputs.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for f in inputs {
        let r = engine.reduce(f, None, true)?;
        if !r.is_zero() {
            engine.add(r)?;
        }
    }
    engine.complete(order)
}

/// Generators of the basis that do not involve `n`; under either order
/// they generate the elimination ideal.
pub fn eliminate_n(basis: &GroebnerBasis) -> Vec<MultiPoly> {
    basis
        .generators
        .iter()
        .filter(|g| !g.contains_var(VarId::N))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::int_rat;

    fn s(i: u32) -> MultiPoly {
        MultiPoly::s(i)
    }

    fn catalan() -> MultiPoly {
        let n = MultiPoly::n();
        &(&n + &MultiPoly::int(2)) * &s(1) - &(&n.scale(&int_rat(4)) + &MultiPoly::int(2)) * &s(0)
    }

    #[test]
    fn single_generator() {
        let b = buchberger(&[s(0).scale(&int_rat(3))], Limits::unlimited()).unwrap();
        assert_eq!(b.generators(), &[s(0)]);
    }

    #[test]
    fn linear_elimination() {
        let n = MultiPoly::n();
        let b = buchberger(&[&n - &s(0), &n - &s(1)], Limits::unlimited()).unwrap();
        let elim = eliminate_n(&b);
        assert_eq!(elim, alloc::vec![(&s(1) - &s(0)).normalize()]);
        assert!(b.is_groebner());
        assert!(b.is_reduced());
    }

    #[test]
    fn nothing_to_eliminate() {
        let n = MultiPoly::n();
        let b = buchberger(&[&n - &s(0)], Limits::unlimited()).unwrap();
        assert!(eliminate_n(&b).is_empty());
    }

    #[test]
    fn catalan_elimination() {
        let p = catalan();
        let sp = crate::diffpoly::shift_poly(&p, 1);
        let b = buchberger(&[p.clone(), sp.clone()], Limits::unlimited()).unwrap();
        assert!(b.is_groebner());
        assert!(b.contains(&p) && b.contains(&sp));
        let elim = eliminate_n(&b);
        let den = &s(0).scale(&int_rat(10)) - &s(1);
        let num = (&s(1) * &(&s(0).scale(&int_rat(8)) + &s(1))).scale(&int_rat(2));
        let eq18 = (&(&den * &s(2)) - &num).normalize();
        assert_eq!(elim, alloc::vec![eq18]);
    }

    #[test]
    fn budget_is_polled() {
        let stop = core::sync::atomic::AtomicBool::new(true);
        let p = catalan();
        let sp = crate::diffpoly::shift_poly(&p, 1);
        let r = buchberger(&[p, sp], Limits::with_budget(&stop));
        assert!(matches!(r, Err(Error::Timeout(_))));
    }
}
