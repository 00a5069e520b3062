//! Std companion to `ratrec-core`: equation syntax, printing, JSON records,
//! random inputs, timing and the command-line front end.

pub mod bench;
pub mod cli;
pub mod json;
pub mod parse;
pub mod print;
pub mod random;

pub use ratrec_core as core;
