mod common;

use std::cmp::Ordering;

use num_traits::Zero;
use proptest::prelude::*;
use ratrec_core::diffpoly::shift_poly;
use ratrec_core::linalg::{bareiss_solve, cramer_solve};
use ratrec_core::mpoly::{int_rat, rat};
use ratrec_core::{resultant_in_n, Monomial, MultiPoly, Rational, VarId};

const VARS: [VarId; 4] = [VarId::N, VarId::Shift(0), VarId::Shift(1), VarId::Shift(2)];

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..3, 4).prop_map(|e| Monomial::from_pairs(VARS.iter().copied().zip(e)))
}

fn poly_in(vars: &'static [VarId], max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (prop::collection::vec(0u16..3, vars.len()), -5i64..=5, 1i64..=3);
    prop::collection::vec(term, 0..max_terms).prop_map(move |terms| {
        MultiPoly::from_terms(
            terms.into_iter().map(|(e, a, b)| (Monomial::from_pairs(vars.iter().copied().zip(e)), rat(a, b))),
        )
    })
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    poly_in(&VARS, 6)
}

const STATE: [VarId; 2] = [VarId::Shift(0), VarId::Shift(1)];

fn eval_at(p: &MultiPoly, point: &[Rational]) -> Rational {
    p.eval(|v| match v {
        VarId::Shift(i) => point[i as usize].clone(),
        VarId::N => point[2].clone(),
    })
}

/// Gaussian elimination over ℚ with row pivoting; `None` when singular.
fn naive_solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let d = a.len();
    for k in 0..d {
        let p = (k..d).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        b.swap(k, p);
        for i in 0..d {
            if i != k && !a[i][k].is_zero() {
                let f = &a[i][k] / &a[k][k];
                for j in k..d {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
                let t = &f * &b[k];
                b[i] -= t;
            }
        }
    }
    Some((0..d).map(|i| &b[i] / &a[i][i]).collect())
}

fn system() -> impl Strategy<Value = (Vec<Vec<MultiPoly>>, Vec<MultiPoly>, Vec<Rational>)> {
    (2usize..=3).prop_flat_map(|d| {
        (
            prop::collection::vec(prop::collection::vec(poly_in(&STATE, 3), d), d),
            prop::collection::vec(poly_in(&STATE, 3), d),
            prop::collection::vec((-7i64..=7, 1i64..=4).prop_map(|(a, b)| rat(a, b)), 3),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn shift_is_a_ring_homomorphism(a in poly(), b in poly(), i in 0u32..3, j in 0u32..3) {
        prop_assert_eq!(shift_poly(&(&a + &b), 1), &shift_poly(&a, 1) + &shift_poly(&b, 1));
        prop_assert_eq!(shift_poly(&(&a * &b), 1), &shift_poly(&a, 1) * &shift_poly(&b, 1));
        prop_assert_eq!(shift_poly(&shift_poly(&a, i), j), shift_poly(&a, i + j));
        prop_assert_eq!(shift_poly(&MultiPoly::one(), 1), MultiPoly::one());
    }

    #[test]
    fn shift_matches_evaluation(a in poly(), x in prop::collection::vec(-6i64..=6, 4)) {
        // σa at (n, s0, s1, s2) equals a at (n+1, s1, s2, s3)
        let at = |p: &MultiPoly, n: i64, off: usize| p.eval(|v| match v {
            VarId::N => int_rat(n),
            VarId::Shift(i) => int_rat(*x.get(i as usize + off).unwrap_or(&0)),
        });
        let a = a.eval_partial(|v| if v == VarId::Shift(2) { Some(int_rat(0)) } else { None });
        prop_assert_eq!(at(&shift_poly(&a, 1), 3, 0), at(&a, 4, 1));
    }

    #[test]
    fn normalize_is_idempotent(a in poly()) {
        let n = a.normalize();
        prop_assert_eq!(n.normalize(), n.clone());
        if !a.is_zero() {
            prop_assert!(n.leading_coeff().unwrap() > &int_rat(0));
            prop_assert!(n.integer_terms().is_some());
            prop_assert_eq!(a.scale(&rat(-7, 3)).normalize(), n);
        }
    }

    #[test]
    fn solvers_agree_with_naive_elimination((m, b, point) in system()) {
        let am: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|e| eval_at(e, &point)).collect()).collect();
        let bm: Vec<Rational> = b.iter().map(|e| eval_at(e, &point)).collect();
        let expected = naive_solve(am, bm);
        let bareiss = bareiss_solve(&m, &b);
        let cramer = cramer_solve(&m, &b);
        match (&bareiss, &cramer) {
            (Ok(x), Ok(y)) => {
                for ((xn, xd), (yn, yd)) in x.iter().zip(y) {
                    prop_assert_eq!(xn * yd, yn * xd);
                }
                let den = eval_at(&x[0].1, &point);
                if let Some(expected) = expected {
                    prop_assert!(!den.is_zero());
                    for ((num, _), e) in x.iter().zip(&expected) {
                        prop_assert_eq!(&eval_at(num, &point) / &den, e.clone());
                    }
                } else {
                    prop_assert!(den.is_zero());
                }
            }
            (Err(_), Err(_)) => prop_assert!(expected.is_none()),
            _ => prop_assert!(false, "solvers disagree on singularity"),
        }
    }

    #[test]
    fn resultant_of_linear_forms(a in poly_in(&STATE, 3), b in poly_in(&STATE, 3), c in poly_in(&STATE, 3), e in poly_in(&STATE, 3)) {
        prop_assume!(!a.is_zero() && !c.is_zero());
        let n = MultiPoly::n();
        let p = &(&a * &n) + &b;
        let q = &(&c * &n) + &e;
        let r = resultant_in_n(&p, &q).unwrap();
        prop_assert!(!r.contains_var(VarId::N));
        prop_assert_eq!(r.clone(), &(&a * &e) - &(&b * &c));
        prop_assert_eq!(resultant_in_n(&q, &p).unwrap(), -r);
    }

    #[test]
    fn resultant_is_symmetric_up_to_sign(p in poly(), q in poly()) {
        prop_assume!(p.degree_in(VarId::N) > 0 && q.degree_in(VarId::N) > 0);
        let sign = if p.degree_in(VarId::N) * q.degree_in(VarId::N) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(resultant_in_n(&q, &p).unwrap(), resultant_in_n(&p, &q).unwrap().scale(&int_rat(sign)));
    }

    #[test]
    fn graded_is_a_monomial_order(a in monomial(), b in monomial(), c in monomial()) {
        for cmp in [Monomial::cmp_graded as fn(&Monomial, &Monomial) -> Ordering, Monomial::cmp] {
            prop_assert_eq!(cmp(&a, &b), cmp(&b, &a).reverse());
            prop_assert_eq!(cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_ne!(cmp(&Monomial::one(), &a), Ordering::Greater);
            prop_assert_eq!(cmp(&a.mul(&c), &b.mul(&c)), cmp(&a, &b));
            if cmp(&a, &b) != Ordering::Greater && cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(cmp(&a, &c), Ordering::Greater);
            }
        }
    }
}
