//! Conversion by iterated elimination of `n` from `<p, σp, …, σ^j p>`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::budget::{Budget, Limits, Unlimited};
use crate::diffpoly::{DiffPoly, HolonomicEq, RatRecEq};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, eliminate_n, TermOrder};
use crate::la::homogenize;
use crate::gcd::{cancel, gcd_degree_bound};
use crate::monomial::VarId;
use crate::mpoly::MultiPoly;
use crate::resultant::resultant_in_n;

/// Among the quasi-linear generators, the one minimizing (order, total
/// degree, term count, coefficient size) once the common factor of its
/// initial and the rest is cancelled. Ties are broken by lex comparison of
/// normalized forms.
///
/// Candidates are visited in their uncancelled order; a gcd is computed only
/// when a degree bound says cancelling could still beat the current best.
pub fn pick_simple_ratrec(gens: &[MultiPoly]) -> Option<DiffPoly> {
    pick_within(gens, &Unlimited).expect("unlimited budget never runs out")
}

fn pick_within(gens: &[MultiPoly], budget: &dyn Budget) -> Result<Option<DiffPoly>> {
    let key = |p: &DiffPoly| (p.order(), p.body().total_degree(), p.body().len(), p.body().max_coeff_bits());
    let rank = |a: &DiffPoly, b: &DiffPoly| key(a).cmp(&key(b)).then_with(|| a.body().lex_cmp(b.body()));
    let mut cands: Vec<DiffPoly> =
        gens.iter().map(|g| DiffPoly::new(g.normalize())).filter(DiffPoly::is_simple_ratrec).collect();
    cands.sort_by(rank);
    let mut best: Option<DiffPoly> = None;
    for g in cands {
        if budget.exhausted() {
            return Err(Error::Timeout("deadline reached while selecting a generator".into()));
        }
        let top = VarId::Shift(g.order());
        let (init, rest) = (g.body().coeff_in_var(top, 1), g.body().coeff_in_var(top, 0));
        if let Some(b) = &best {
            if g.order() > b.order() {
                break;
            }
            let floor = g.body().total_degree() - gcd_degree_bound(&init, &rest);
            if floor > b.body().total_degree() {
                continue;
            }
        }
        let (init, rest) = cancel(&init, &rest);
        let reduced = DiffPoly::new((&(&init * &MultiPoly::s(g.order())) + &rest).normalize());
        if best.as_ref().map_or(true, |b| rank(&reduced, b) == Ordering::Less) {
            best = Some(reduced);
        }
    }
    Ok(best)
}

/// What [`convert_gb`] found and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbOutcome {
    pub equation: RatRecEq,
    /// Number of shifts used, 0 when the input was already simple ratrec.
    pub iteration: u32,
    /// Whether the resultant shortcut produced the answer.
    pub via_resultant: bool,
}

/// Reduced lex basis of `<p, σp, …, σ^j p> ∩ ℚ[s(n), …, s(n+l+j)]`, in
/// exact arithmetic.
///
/// These are exactly the `n`-free elements of the reduced lex basis of the
/// whole ideal. `p` is linear in the shifts, so the ideal is homogeneous in
/// them and a shift-graded order already eliminates `n`; lex is only run on
/// the small `n`-free part, which avoids the swell lex suffers while `n` is
/// still present.
pub fn elimination_generators(p: &DiffPoly, j: u32, limits: Limits<'_>) -> Result<Vec<MultiPoly>> {
    let gens: Vec<MultiPoly> = (0..=j).map(|t| p.shift(t).into_body()).collect();
    let block = buchberger_with(&gens, TermOrder::Graded, limits)?;
    let ideal = eliminate_n(&block);
    if ideal.is_empty() {
        return Ok(ideal);
    }
    Ok(buchberger_with(&ideal, TermOrder::Lex, limits)?.generators().to_vec())
}

pub fn convert_gb(h: &HolonomicEq, userbound: Option<u32>, limits: Limits<'_>) -> Result<RatRecEq> {
    convert_gb_detailed(h, userbound, limits).map(|o| o.equation)
}

pub fn convert_gb_detailed(h: &HolonomicEq, userbound: Option<u32>, limits: Limits<'_>) -> Result<GbOutcome> {
    h.check_nontrivial()?;
    let h = if h.is_homogeneous() { h.clone() } else { homogenize(h) };
    let p = h.to_diffpoly();
    let d = h.degree() as u32;
    if p.is_simple_ratrec() {
        return Ok(GbOutcome { equation: p.to_ratrec_form()?.reduced(), iteration: 0, via_resultant: false });
    }
    let bound = userbound.unwrap_or(d).max(1);
    for j in 1..=bound {
        if limits.budget.exhausted() {
            return Err(Error::Timeout("deadline reached before iteration".into()));
        }
        if d == 1 && j == 1 {
            let res = resultant_in_n(p.body(), p.shift(1).body())?;
            let res = DiffPoly::new(res.normalize());
            if res.is_simple_ratrec() {
                return Ok(GbOutcome { equation: res.to_ratrec_form()?.reduced(), iteration: 1, via_resultant: true });
            }
        }
        if let Some(pick) = pick_within(&elimination_generators(&p, j, limits)?, limits.budget)? {
            return Ok(GbOutcome { equation: pick.to_ratrec_form()?.reduced(), iteration: j, via_resultant: false });
        }
    }
    Err(Error::NotFoundWithinBound { reached: bound })
}
