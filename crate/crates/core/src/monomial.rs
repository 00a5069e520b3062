//! Variables and monomials over `{n} ∪ {s(n+i)}`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// An indeterminate: the index variable `n` or a shift `s(n+i)`.
///
/// The derived order puts every shift below `n`, and `Shift(i) < Shift(j)`
/// iff `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Shift(u32),
    N,
}

impl VarId {
    fn slot(self) -> usize {
        match self {
            VarId::N => 0,
            VarId::Shift(i) => i as usize + 1,
        }
    }

    fn from_slot(slot: usize) -> VarId {
        if slot == 0 {
            VarId::N
        } else {
            VarId::Shift((slot - 1) as u32)
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::N => f.write_str("n"),
            VarId::Shift(0) => f.write_str("s(n)"),
            VarId::Shift(i) => write!(f, "s(n+{})", i),
        }
    }
}

/// A power product. Slot 0 holds the exponent of `n`, slot `i + 1` the
/// exponent of `s(n+i)`; trailing zero slots are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u16) -> Self {
        let mut m = Monomial(Vec::new());
        m.set(v, e);
        m
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated
    /// variables accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u16)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            let cur = m.exponent(v);
            m.set(v, cur + e);
        }
        m
    }

    fn set(&mut self, v: VarId, e: u16) {
        let slot = v.slot();
        if slot >= self.0.len() {
            if e == 0 {
                return;
            }
            self.0.resize(slot + 1, 0);
        }
        self.0[slot] = e;
        self.trim();
    }

    fn trim(&mut self) {
        while let Some(&0) = self.0.last() {
            self.0.pop();
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> u16 {
        self.0.get(v.slot()).copied().unwrap_or(0)
    }

    /// Nonzero `(variable, exponent)` pairs, `n` first then shifts ascending.
    pub fn pairs(&self) -> impl Iterator<Item = (VarId, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(slot, &e)| (VarId::from_slot(slot), e))
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Total degree counting shift variables only.
    pub fn shift_degree(&self) -> u32 {
        self.0.iter().skip(1).map(|&e| e as u32).sum()
    }

    pub fn max_shift(&self) -> Option<u32> {
        if self.0.len() > 1 {
            Some((self.0.len() - 2) as u32)
        } else {
            None
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (o, &e) in out.iter_mut().zip(short.0.iter()) {
            *o += e;
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`-style quotient: returns `self / divisor` when exact.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let mut out = self.0.clone();
        for (o, &e) in out.iter_mut().zip(divisor.0.iter()) {
            *o -= e;
        }
        let mut m = Monomial(out);
        m.trim();
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let out = (0..len)
            .map(|i| {
                let a = self.0.get(i).copied().unwrap_or(0);
                let b = other.0.get(i).copied().unwrap_or(0);
                a.max(b)
            })
            .collect();
        Monomial(out)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Drops variable `v` from the monomial.
    pub fn without(&self, v: VarId) -> Monomial {
        let mut m = self.clone();
        m.set(v, 0);
        m
    }

    /// Renames every `s(n+i)` to `s(n+i+j)`; the `n` exponent is untouched.
    pub fn shift_indices(&self, j: u32) -> Monomial {
        if j == 0 || self.0.len() <= 1 {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + j as usize);
        out.push(self.0[0]);
        out.extend(core::iter::repeat(0).take(j as usize));
        out.extend_from_slice(&self.0[1..]);
        Monomial(out)
    }
}

impl Ord for Monomial {
    /// Pure lex with `n` greatest, then `s(n+i)` by descending `i`.
    fn cmp(&self, other: &Self) -> Ordering {
        let a0 = self.0.first().copied().unwrap_or(0);
        let b0 = other.0.first().copied().unwrap_or(0);
        match a0.cmp(&b0) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let len = self.0.len().max(other.0.len());
        for slot in (1..len).rev() {
            let a = self.0.get(slot).copied().unwrap_or(0);
            let b = other.0.get(slot).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl Monomial {
    /// Degree in the shifts, then degree in `n`, then reverse lex on the
    /// shifts.
    pub fn cmp_graded(&self, other: &Self) -> Ordering {
        let a0 = self.0.first().copied().unwrap_or(0);
        let b0 = other.0.first().copied().unwrap_or(0);
        self.shift_degree()
            .cmp(&other.shift_degree())
            .then_with(|| a0.cmp(&b0))
            .then_with(|| self.cmp_revlex_shifts(other))
    }

    fn cmp_revlex_shifts(&self, other: &Self) -> Ordering {
        let len = self.0.len().max(other.0.len());
        for slot in 1..len {
            let a = self.0.get(slot).copied().unwrap_or(0);
            let b = other.0.get(slot).copied().unwrap_or(0);
            if a != b {
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.pairs() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: u32) -> VarId {
        VarId::Shift(i)
    }

    #[test]
    fn var_order_puts_n_on_top() {
        assert!(VarId::N > s(100));
        assert!(s(3) > s(2));
    }

    #[test]
    fn lex_order() {
        let n = Monomial::var(VarId::N);
        let s5 = Monomial::var_pow(s(5), 7);
        assert!(n > s5);
        let a = Monomial::from_pairs([(s(2), 1)]);
        let b = Monomial::from_pairs([(s(1), 3), (s(0), 9)]);
        assert!(a > b);
        let c = Monomial::from_pairs([(s(2), 1), (s(0), 1)]);
        assert!(c > a);
        assert!(Monomial::one() < b);
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_pairs([(VarId::N, 2), (s(1), 1)]);
        let b = Monomial::from_pairs([(VarId::N, 1)]);
        assert!(b.divides(&a));
        assert_eq!(a.div(&b).unwrap(), Monomial::from_pairs([(VarId::N, 1), (s(1), 1)]));
        assert_eq!(b.div(&a), None);
        let c = Monomial::from_pairs([(s(3), 2)]);
        assert_eq!(a.lcm(&c), Monomial::from_pairs([(VarId::N, 2), (s(1), 1), (s(3), 2)]));
        assert!(a.is_coprime(&c));
        assert!(!a.is_coprime(&b));
        assert_eq!(a.div(&a).unwrap(), Monomial::one());
    }

    #[test]
    fn shifting_indices() {
        let a = Monomial::from_pairs([(VarId::N, 1), (s(0), 2)]);
        assert_eq!(a.shift_indices(2), Monomial::from_pairs([(VarId::N, 1), (s(2), 2)]));
        assert_eq!(a.shift_indices(2).max_shift(), Some(2));
        assert_eq!(Monomial::var(VarId::N).max_shift(), None);
    }
}
