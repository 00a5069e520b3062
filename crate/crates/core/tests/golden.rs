mod common;

use common::*;
use ratrec_core::gb::{convert_gb_detailed, elimination_generators};
use ratrec_core::groebner::{buchberger_with, TermOrder};
use ratrec_core::mpoly::int_rat;
use ratrec_core::{
    buchberger, check_annihilates, classify_cfinite, convert_gb, convert_la, unroll_holonomic, DiffPoly,
    HolonomicEq, Limits, MultiPoly, RatRecEq,
};

fn assert_same(got: &RatRecEq, order: u32, num: MultiPoly, den: MultiPoly) {
    let want = RatRecEq::from_parts(order, num, den);
    assert_eq!(got.order, order, "got {:?}", got);
    assert_eq!(got.to_diffpoly().0.normalize(), want.to_diffpoly().0.normalize(), "got {:?}", got);
}

fn gb(h: &HolonomicEq) -> RatRecEq {
    convert_gb(h, None, Limits::unlimited()).unwrap()
}

#[test]
fn catalan_gb() {
    let num = &c(2) * &(&s(1) * &(&(&c(8) * &s(0)) + &s(1)));
    let den = &(&c(10) * &s(0)) - &s(1);
    assert_same(&gb(&catalan()), 2, num, den);
}

#[test]
fn alternating_plus_n_gb_is_c_finite() {
    let r = gb(&alternating_plus_n());
    assert_same(&r, 3, &(&s(2) + &s(1)) - &s(0), c(1));
    assert_eq!(classify_cfinite(&r).unwrap().coefficients, vec![int_rat(-1), int_rat(1), int_rat(1)]);
}

#[test]
fn factorial_squared_gb() {
    let inner = &(&(&c(2) * &(&s(0) * &s(1))) + &(&c(2) * &(&s(0) * &s(2)))) - &(&s(1) * &s(1));
    assert_same(&gb(&factorial_power(2)), 3, &s(2) * &inner, &s(0) * &s(1));
}

#[test]
fn factorial_cubed_gb() {
    let inner = &(&(&(&c(4) * &(&s(0) * &s(1).pow(2))) - &(&c(4) * &(&s(0) * &s(2).pow(2)))) + &s(1).pow(3))
        + &(&s(1).pow(2) * &s(2));
    let den_inner = &(&(&s(0) * &s(1)) - &(&s(0) * &s(2))) - &(&c(2) * &s(1).pow(2));
    assert_same(&gb(&factorial_power(3)), 3, &s(2) * &inner, &s(1) * &den_inner);
}

#[test]
fn factorial_fourth_power_order_gap() {
    let h = factorial_power(4);
    let g = gb(&h);
    let l = convert_la(&h).unwrap();
    assert_eq!(g.order, 3);
    assert_eq!(l.order, 5);
    let seq = unroll_holonomic(&h, &[int_rat(1)], 60).unwrap();
    for r in [&g, &l] {
        let rep = check_annihilates(r, &seq, 0..51);
        assert!(rep.passed(), "{:?}", rep.violations);
        assert!(rep.hold_count > 40);
    }
}

#[test]
fn p2_is_c_finite_under_both_methods() {
    let num = &(&(&(&s(0) - &(&c(3) * &s(1))) + &(&c(4) * &s(2))) - &(&c(4) * &s(3))) + &(&c(3) * &s(4));
    assert_same(&gb(&p2()), 5, num.clone(), c(1));
    assert_same(&convert_la(&p2()).unwrap(), 5, num, c(1));
}

#[test]
fn p3_la() {
    let num = &c(3)
        * &(&s(2)
            * &(&(&(&(&c(26244) * &(&s(0) * &s(1))) - &(&c(702) * &(&s(0) * &s(2)))) - &(&c(378) * &s(1).pow(2)))
                + &(&c(13) * &(&s(1) * &s(2)))));
    let den = &(&(&(&c(5508) * &(&s(0) * &s(1))) - &(&c(201) * &(&s(0) * &s(2)))) - &(&c(84) * &s(1).pow(2)))
        + &(&c(4) * &(&s(1) * &s(2)));
    assert_same(&convert_la(&p3()).unwrap(), 3, num, den);
}

#[test]
fn p4_la_has_fractional_coefficients() {
    let num = [
        (&q(-3, 32), 0),
        (&q(31, 32), 1),
        (&q(-65, 16), 2),
        (&q(35, 4), 3),
        (&c(-10), 4),
        (&q(11, 2), 5),
    ]
    .into_iter()
    .fold(MultiPoly::zero(), |acc, (k, i)| &acc + &(k * &s(i)));
    let r = convert_la(&p4()).unwrap();
    assert_same(&r, 6, num, c(1));
    let cf = classify_cfinite(&r).unwrap();
    assert_eq!(cf.coefficients[0], ratrec_core::mpoly::rat(-3, 32));
    assert_eq!(cf.coefficients[2], ratrec_core::mpoly::rat(-65, 16));
}

#[test]
fn p5_la_polynomial_sequence() {
    let r = convert_la(&p5()).unwrap();
    let cf = classify_cfinite(&r).unwrap();
    assert_eq!(r.order, 5);
    assert_eq!(cf.constant, int_rat(11520));
    let binom = [1, -5, 10, -10, 5];
    assert_eq!(cf.coefficients, binom.iter().map(|&b| int_rat(b)).collect::<Vec<_>>());
}

#[test]
fn factorial_la() {
    let h = factorial_power(1);
    assert_same(&convert_la(&h).unwrap(), 2, &s(1) * &(&s(1) + &s(0)), s(0));
}

fn golden_homogeneous() -> Vec<HolonomicEq> {
    vec![
        catalan(),
        alternating_plus_n(),
        factorial_power(1),
        factorial_power(2),
        factorial_power(3),
        p2(),
        p3(),
        p4(),
    ]
}

#[test]
fn first_block_bases_are_reduced_groebner_bases() {
    for h in golden_homogeneous().into_iter().filter(|h| h.degree() <= 2) {
        let p = h.to_diffpoly();
        let gens = vec![p.body().clone(), p.shift(1).into_body()];
        for order in [TermOrder::Lex, TermOrder::Graded] {
            let g = buchberger_with(&gens, order, Limits::unlimited()).unwrap();
            assert!(g.is_groebner() && g.is_reduced(), "{:?}", h);
            assert!(gens.iter().all(|f| g.contains(f)));
        }
    }
}

#[test]
fn random_bases_are_reduced_groebner_bases() {
    let mut rng = rng(11);
    for _ in 0..20 {
        let h = random_holonomic(&mut rng, 2, 2, 2);
        let p = h.to_diffpoly();
        let gens = vec![p.body().clone(), p.shift(1).into_body()];
        let g = buchberger(&gens, Limits::unlimited()).unwrap();
        assert!(g.is_groebner() && g.is_reduced(), "{:?}", h);
        assert!(gens.iter().all(|f| g.contains(f)));
        let reduced_again = buchberger(g.generators(), Limits::unlimited()).unwrap();
        assert_eq!(reduced_again.generators(), g.generators());
    }
}

#[test]
fn elimination_generators_vanish_on_solutions() {
    let mut cases = golden_homogeneous();
    cases.retain(|h| h.degree() <= 3 && h.order() <= 2);
    let mut rng = rng(5);
    cases.extend((0..6).map(|_| random_holonomic(&mut rng, 2, 1, 3)));
    for h in cases {
        let k = regular_start(&h);
        let seq = unroll_holonomic(&shifted(&h, k), &small_inits(h.order()), 60).unwrap();
        // evaluate the shifted generators at n + k
        let p = shifted(&h, k).to_diffpoly();
        for f in elimination_generators(&p, 1, Limits::unlimited()).unwrap() {
            let rep = check_annihilates(&DiffPoly::new(f), &seq, 0..51);
            assert!(rep.passed(), "{:?}", h);
        }
    }
}

#[test]
fn gb_order_never_exceeds_la_order() {
    for h in golden_homogeneous() {
        let g = gb(&h);
        let l = convert_la(&h).unwrap();
        assert!(g.order <= l.order, "{:?}: {} > {}", h, g.order, l.order);
    }
}

#[test]
fn detailed_outcome_reports_path() {
    let out = convert_gb_detailed(&catalan(), None, Limits::unlimited()).unwrap();
    assert!(out.via_resultant);
    assert_eq!(out.iteration, 1);
    let out = convert_gb_detailed(&factorial_power(2), None, Limits::unlimited()).unwrap();
    assert!(!out.via_resultant);
    assert_eq!(out.iteration, 2);
}
