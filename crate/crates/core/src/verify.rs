//! Exact sequence oracles: unrolling, annihilation checks, C-finite
//! recognition and integer-sequence generation.

use alloc::format;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::budget::Limits;
use crate::diffpoly::{DiffPoly, HolonomicEq, RatRecEq};
use crate::error::{Error, Result};
use crate::gb::convert_gb;
use crate::la::convert_la;
use crate::monomial::VarId;
use crate::mpoly::{int_rat, MultiPoly, Rational};
use crate::sequence::{SequenceTable, Singularity};

/// Conversion algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Linear algebra: order `l + d`, fast.
    La,
    /// Gröbner elimination: minimal order among the two, may time out.
    Gb,
}

pub fn convert(h: &HolonomicEq, method: Method, userbound: Option<u32>, limits: Limits<'_>) -> Result<RatRecEq> {
    match method {
        Method::La => convert_la(h),
        Method::Gb => convert_gb(h, userbound, limits),
    }
}

/// Forward recursion dividing by `P_l(n)`. Inhomogeneous equations are
/// unrolled as well.
pub fn unroll_holonomic(h: &HolonomicEq, inits: &[Rational], last: usize) -> Result<SequenceTable> {
    let l = h.order();
    if inits.len() != l {
        return Err(Error::ArityError { expected: l, got: inits.len() });
    }
    let mut terms: Vec<Option<Rational>> = inits.iter().take(last + 1).cloned().map(Some).collect();
    let coeffs = h.coeffs();
    let mut n = 0usize;
    while terms.len() <= last {
        let x = int_rat(n as i64);
        let lead = coeffs[l].eval(&x);
        if lead.is_zero() {
            let sing = Singularity {
                at: n,
                first_undefined: n + l,
                reason: format!("leading coefficient vanishes at n = {}", n),
            };
            terms.resize(last + 1, None);
            return Ok(SequenceTable::new(terms, Some(sing)));
        }
        let mut acc = h.inhom().map_or_else(Rational::zero, |q| q.eval(&x));
        for (i, c) in coeffs[..l].iter().enumerate() {
            if let Some(Some(u)) = terms.get(n + i) {
                acc += c.eval(&x) * u;
            }
        }
        terms.push(Some(-acc / lead));
        n += 1;
    }
    Ok(SequenceTable::new(terms, None))
}

/// Something that should vanish along a sequence.
#[derive(Clone, Debug)]
pub enum Annihilator<'a> {
    RatRec(&'a RatRecEq),
    Poly(&'a DiffPoly),
}

impl<'a> From<&'a RatRecEq> for Annihilator<'a> {
    fn from(r: &'a RatRecEq) -> Self {
        Annihilator::RatRec(r)
    }
}

impl<'a> From<&'a DiffPoly> for Annihilator<'a> {
    fn from(p: &'a DiffPoly) -> Self {
        Annihilator::Poly(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Outcome of checking an equation at every index of a range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub range: Range<usize>,
    pub hold_count: usize,
    /// Indices where the denominator vanished or the window ran past the
    /// defined part of the table.
    pub singular_indices: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_annihilates<'a, A: Into<Annihilator<'a>>>(eq: A, seq: &SequenceTable, range: Range<usize>) -> VerificationReport {
    let eq = eq.into();
    let mut report = VerificationReport {
        range: range.clone(),
        hold_count: 0,
        singular_indices: Vec::new(),
        violations: Vec::new(),
    };
    for n in range {
        match &eq {
            Annihilator::RatRec(r) => {
                let m = r.order as usize;
                let window = match seq.window(n, m + 1) {
                    Some(w) => w,
                    None => {
                        report.singular_indices.push(n);
                        continue;
                    }
                };
                match r.apply(&window[..m]) {
                    None => report.singular_indices.push(n),
                    Some(rhs) if rhs == window[m] => report.hold_count += 1,
                    Some(rhs) => report.violations.push(Violation { index: n, lhs: window[m].clone(), rhs }),
                }
            }
            Annihilator::Poly(p) => {
                let m = p.order() as usize;
                let window = match seq.window(n, m + 1) {
                    Some(w) => w,
                    None => {
                        report.singular_indices.push(n);
                        continue;
                    }
                };
                let value = p.body().eval(|v| match v {
                    VarId::N => int_rat(n as i64),
                    VarId::Shift(i) => window[i as usize].clone(),
                });
                if value.is_zero() {
                    report.hold_count += 1;
                } else {
                    report.violations.push(Violation { index: n, lhs: value, rhs: Rational::zero() });
                }
            }
        }
    }
    report
}

/// `s(n+m) = constant + Σ coefficients[i] · s(n+i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFinite {
    pub constant: Rational,
    pub coefficients: Vec<Rational>,
}

impl CFinite {
    pub fn to_ratrec(&self) -> RatRecEq {
        let mut num = MultiPoly::constant(self.constant.clone());
        for (i, c) in self.coefficients.iter().enumerate() {
            num = &num + &MultiPoly::s(i as u32).scale(c);
        }
        RatRecEq::from_parts(self.coefficients.len() as u32, num, MultiPoly::one())
    }
}

/// Present iff the denominator is constant and the numerator affine in the
/// shifts.
pub fn classify_cfinite(r: &RatRecEq) -> Option<CFinite> {
    if !r.den.is_constant() || r.den.is_zero() || r.num.total_degree() > 1 || !r.is_n_free() {
        return None;
    }
    let inv = r.den.constant_term().recip();
    let num = r.num.scale(&inv);
    let coefficients = (0..r.order)
        .map(|i| num.coeff(&crate::monomial::Monomial::var(VarId::Shift(i))))
        .collect();
    Some(CFinite { constant: num.constant_term(), coefficients })
}

/// Integer sequence from a monic integer holonomic equation together with
/// the rational recursion it satisfies.
pub fn somos_generate(
    h: &HolonomicEq,
    inits: &[BigInt],
    last: usize,
    method: Method,
    limits: Limits<'_>,
) -> Result<(SequenceTable, RatRecEq)> {
    let lead = h.leading();
    if !(lead.degree() == 0 && lead.coeff(0).is_one()) {
        return Err(Error::NotSomosEligible("leading coefficient is not 1".into()));
    }
    let integral = |p: &crate::upoly::UniPoly| p.coeffs().iter().all(|c| c.is_integer());
    if !h.coeffs().iter().all(integral) || !h.inhom().map_or(true, integral) {
        return Err(Error::NotSomosEligible("coefficients must be integers".into()));
    }
    let inits: Vec<Rational> = inits.iter().cloned().map(Rational::from_integer).collect();
    let table = unroll_holonomic(h, &inits, last)?;
    if let Some(bad) = table.defined().position(|t| !t.is_integer()) {
        return Err(Error::InternalContradiction(format!("term {} is not an integer", bad)));
    }
    let eq = convert(h, method, None, limits)?;
    Ok((table, eq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::rat;
    use crate::upoly::UniPoly;

    fn ints(v: &[i64]) -> Vec<Option<Rational>> {
        v.iter().map(|&x| Some(int_rat(x))).collect()
    }

    fn catalan() -> HolonomicEq {
        HolonomicEq::from_int_coeffs(&[&[-2, -4], &[2, 1]]).unwrap()
    }

    fn s(i: u32) -> MultiPoly {
        MultiPoly::s(i)
    }

    fn eq18() -> RatRecEq {
        let den = &s(0).scale(&int_rat(10)) - &s(1);
        let num = (&s(1) * &(&s(0).scale(&int_rat(8)) + &s(1))).scale(&int_rat(2));
        RatRecEq::from_parts(2, num, den)
    }

    #[test]
    fn unroll_examples() {
        let t = unroll_holonomic(&catalan(), &[int_rat(1)], 6).unwrap();
        assert_eq!(t.terms(), &ints(&[1, 1, 2, 5, 14, 42, 132])[..]);
        let sq = HolonomicEq::from_int_coeffs(&[&[-1, -2, -1], &[1]]).unwrap();
        let t = unroll_holonomic(&sq, &[int_rat(1)], 4).unwrap();
        assert_eq!(t.terms(), &ints(&[1, 1, 4, 36, 576])[..]);
    }

    #[test]
    fn unroll_singular_leading_coefficient() {
        // (n-2) s(n+1) - s(n)
        let h = HolonomicEq::from_int_coeffs(&[&[-1], &[-2, 1]]).unwrap();
        let t = unroll_holonomic(&h, &[int_rat(1)], 6).unwrap();
        let sing = t.singularity().unwrap();
        assert_eq!(sing.at, 2);
        assert_eq!(sing.first_undefined, 3);
        assert_eq!(t.defined_len(), 3);
        assert_eq!(unroll_holonomic(&h, &[], 4).unwrap_err(), Error::ArityError { expected: 1, got: 0 });
    }

    #[test]
    fn annihilation_reports() {
        let t = unroll_holonomic(&catalan(), &[int_rat(1)], 102).unwrap();
        let r = check_annihilates(&eq18(), &t, 0..101);
        assert_eq!(r.hold_count, 101);
        assert!(r.passed());
        let bad = RatRecEq::from_parts(2, &eq18().num + &s(0), eq18().den);
        let r = check_annihilates(&bad, &t, 0..101);
        assert!(!r.passed());
        assert_eq!(r.hold_count + r.singular_indices.len() + r.violations.len(), 101);
        let p = catalan().to_diffpoly();
        assert!(check_annihilates(&p, &t, 0..100).passed());
    }

    #[test]
    fn minus_one_power_plus_n() {
        let values: Vec<Rational> = (0..40).map(|n: i64| int_rat(if n % 2 == 0 { 1 } else { -1 } + n)).collect();
        let t = SequenceTable::from_values(values);
        let r = RatRecEq::from_parts(3, &(&s(2) + &s(1)) - &s(0), MultiPoly::one());
        assert!(check_annihilates(&r, &t, 0..37).passed());
    }

    #[test]
    fn cfinite_classification() {
        let num = &(&(&(&s(0) - &s(1).scale(&int_rat(3))) + &s(2).scale(&int_rat(4))) - &s(3).scale(&int_rat(4))) + &s(4).scale(&int_rat(3));
        let r = RatRecEq::from_parts(5, num, MultiPoly::one());
        let c = classify_cfinite(&r).unwrap();
        assert_eq!(c.constant, int_rat(0));
        assert_eq!(c.coefficients, [1, -3, 4, -4, 3].iter().map(|&x| int_rat(x)).collect::<Vec<_>>());
        assert_eq!(c.to_ratrec(), r);
        assert_eq!(classify_cfinite(&eq18()), None);
        let half = RatRecEq::from_parts(1, &s(0) + &MultiPoly::one(), MultiPoly::int(2));
        assert_eq!(classify_cfinite(&half).unwrap().coefficients, alloc::vec![rat(1, 2)]);
    }

    #[test]
    fn somos_factorial() {
        let h = HolonomicEq::from_int_coeffs(&[&[-1, -1], &[1]]).unwrap();
        let (t, eq) = somos_generate(&h, &[BigInt::one()], 8, Method::La, Limits::unlimited()).unwrap();
        assert_eq!(t.terms(), &ints(&[1, 1, 2, 6, 24, 120, 720, 5040, 40320])[..]);
        let expected = RatRecEq::from_parts(2, &s(1) * &(&s(1) + &s(0)), s(0));
        assert!(eq.equivalent(&expected));
        let non_monic = HolonomicEq::homogeneous(alloc::vec![UniPoly::from_ints(&[-1]), UniPoly::from_ints(&[2])]).unwrap();
        assert!(matches!(
            somos_generate(&non_monic, &[BigInt::one()], 4, Method::La, Limits::unlimited()),
            Err(Error::NotSomosEligible(_))
        ));
    }
}
