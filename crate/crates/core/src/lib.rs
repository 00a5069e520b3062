//! Conversion of holonomic (P-recursive) recurrences into simple rational
//! recursions `s(n+m) = r(s(n), …, s(n+m−1))` with `r` free of `n`.
//!
//! Everything here is exact arithmetic over ℚ and needs only `alloc`.
//! Two conversions are provided: [`la::convert_la`] solves a linear system
//! for the powers of `n` and always yields order `l + d`;
//! [`gb::convert_gb`] eliminates `n` with lex Gröbner bases and finds
//! shorter equations when it finishes.
#![no_std]

extern crate alloc;

pub mod budget;
pub mod diffpoly;
pub mod error;
pub mod gb;
pub mod gcd;
pub mod groebner;
pub mod la;
pub mod linalg;
pub mod monomial;
pub mod mpoly;
pub mod resultant;
pub mod sequence;
pub mod system;
pub mod upoly;
pub mod verify;

pub use budget::{Budget, Limits, Unlimited};
pub use diffpoly::{DiffPoly, HolonomicEq, OrderDegree, RatRecEq};
pub use error::{Error, Result};
pub use gb::{convert_gb, pick_simple_ratrec};
pub use groebner::{buchberger, eliminate_n, GroebnerBasis};
pub use la::{convert_la, homogenize};
pub use monomial::{Monomial, VarId};
pub use mpoly::{MultiPoly, Rational};
pub use resultant::resultant_in_n;
pub use sequence::{SequenceTable, Singularity};
pub use system::{holo_to_system, simulate_system, RationalDynSystem};
pub use upoly::UniPoly;
pub use verify::{check_annihilates, classify_cfinite, convert, somos_generate, unroll_holonomic, Method};
