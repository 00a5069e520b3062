//! Rational dynamical systems and the companion embedding of holonomic
//! equations.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::diffpoly::HolonomicEq;
use crate::error::{Error, Result};
use crate::monomial::VarId;
use crate::mpoly::{MultiPoly, Rational};
use crate::sequence::{SequenceTable, Singularity};

/// `x_i(t+1) = numerators[i](x(t)) / denominator(x(t))`, output `x_out(t)`.
///
/// State variable `x_i` is represented by `VarId::Shift(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalDynSystem {
    numerators: Vec<MultiPoly>,
    denominator: MultiPoly,
    output: usize,
    initial: Vec<Rational>,
}

impl RationalDynSystem {
    /// `output` is 0-based.
    pub fn new(numerators: Vec<MultiPoly>, denominator: MultiPoly, output: usize, initial: Vec<Rational>) -> Result<Self> {
        let k = numerators.len();
        if k == 0 || output >= k || initial.len() != k {
            return Err(Error::Unsupported(format!(
                "system of dimension {} with output {} and {} initial values",
                k,
                output,
                initial.len()
            )));
        }
        if denominator.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let in_range = |p: &MultiPoly| {
            !p.contains_var(VarId::N) && p.max_shift().map_or(true, |m| (m as usize) < k)
        };
        if !numerators.iter().all(in_range) || !in_range(&denominator) {
            return Err(Error::Unsupported("update uses variables outside the state".into()));
        }
        Ok(RationalDynSystem { numerators, denominator, output, initial })
    }

    pub fn dimension(&self) -> usize {
        self.numerators.len()
    }

    pub fn output_index(&self) -> usize {
        self.output
    }

    pub fn numerators(&self) -> &[MultiPoly] {
        &self.numerators
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.denominator
    }

    pub fn initial_state(&self) -> &[Rational] {
        &self.initial
    }

    /// Iterates `N` times; outputs `N + 1` terms unless the shared
    /// denominator vanishes first.
    pub fn simulate(&self, steps: usize) -> SequenceTable {
        let mut state = self.initial.clone();
        let mut terms = Vec::with_capacity(steps + 1);
        for t in 0..=steps {
            terms.push(Some(state[self.output].clone()));
            if t == steps {
                break;
            }
            let value = |v: VarId| match v {
                VarId::Shift(i) => state[i as usize].clone(),
                VarId::N => unreachable!("checked at construction"),
            };
            let q = self.denominator.eval(value);
            if q.is_zero() {
                terms.resize(steps + 1, None);
                let sing = Singularity {
                    at: t,
                    first_undefined: t + 1,
                    reason: format!("update denominator vanishes at state {}", t),
                };
                return SequenceTable::new(terms, Some(sing));
            }
            state = self.numerators.iter().map(|r| r.eval(value) / &q).collect();
        }
        SequenceTable::new(terms, None)
    }
}

pub fn simulate_system(sys: &RationalDynSystem, steps: usize) -> SequenceTable {
    sys.simulate(steps)
}

/// Companion embedding of a homogeneous equation of order `l ≥ 1`: states
/// `u(t), …, u(t+l−1)` followed by a counter holding `t`; the output is
/// `u(t)`. All updates share the denominator `P_l(t)`.
pub fn holo_to_system(h: &HolonomicEq, inits: &[Rational]) -> Result<RationalDynSystem> {
    if !h.is_homogeneous() {
        return Err(Error::Unsupported("inhomogeneous equation; homogenize first".into()));
    }
    let l = h.order();
    if l == 0 {
        return Err(Error::Unsupported("order-0 equation has only the zero solution".into()));
    }
    if inits.len() != l {
        return Err(Error::ArityError { expected: l, got: inits.len() });
    }
    let counter = VarId::Shift(l as u32);
    let counter_poly = MultiPoly::var(counter);
    let at_counter = |p: &crate::upoly::UniPoly| p.to_mpoly().substitute(VarId::N, &counter_poly);
    let q = at_counter(h.leading());
    let mut numerators = Vec::with_capacity(l + 1);
    for i in 0..l - 1 {
        numerators.push(&q * &MultiPoly::s(i as u32 + 1));
    }
    let mut last = MultiPoly::zero();
    for (i, c) in h.coeffs()[..l].iter().enumerate() {
        last = &last - &(&at_counter(c) * &MultiPoly::s(i as u32));
    }
    numerators.push(last);
    numerators.push(&q * &(&counter_poly + &MultiPoly::one()));
    let mut initial = inits.to_vec();
    initial.push(Rational::zero());
    RationalDynSystem::new(numerators, q, 0, initial)
}
