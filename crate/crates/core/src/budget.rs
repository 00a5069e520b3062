//! Cancellation hooks for long-running eliminations.
//!
//! The core crate has no clock; callers hand in a [`Budget`] that the
//! Gröbner loop polls between S-pair reductions.

use core::sync::atomic::{AtomicBool, Ordering};

pub trait Budget: Sync {
    /// Returns `true` once the computation should stop.
    fn exhausted(&self) -> bool;
}

/// Never runs out.
#[derive(Debug, Default, Clone, Copy)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&self) -> bool {
        false
    }
}

impl Budget for AtomicBool {
    fn exhausted(&self) -> bool {
        self.load(Ordering::Relaxed)
    }
}

impl<F: Fn() -> bool + Sync> Budget for F {
    fn exhausted(&self) -> bool {
        self()
    }
}

/// Limits for a single Gröbner computation.
#[derive(Clone, Copy)]
pub struct Limits<'a> {
    pub budget: &'a dyn Budget,
    /// Abort when any coefficient grows beyond this many bits.
    pub max_coeff_bits: u64,
    /// Abort after this many S-pairs have been processed.
    pub max_pairs: usize,
}

impl Limits<'static> {
    pub fn unlimited() -> Self {
        Limits {
            budget: &Unlimited,
            max_coeff_bits: 1_000_000,
            max_pairs: usize::MAX,
        }
    }
}

impl<'a> Limits<'a> {
    pub fn with_budget(budget: &'a dyn Budget) -> Self {
        Limits {
            budget,
            max_coeff_bits: 1_000_000,
            max_pairs: usize::MAX,
        }
    }
}
