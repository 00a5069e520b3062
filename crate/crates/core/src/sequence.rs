//! Exact sequence tables with singularity annotations.

use alloc::string::String;
use alloc::vec::Vec;

use crate::mpoly::Rational;

/// Where a recursion could not continue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Singularity {
    /// Recursion step (equation index or state index) at which a division
    /// by zero was required.
    pub at: usize,
    /// First term index left undefined because of it.
    pub first_undefined: usize,
    pub reason: String,
}

/// Terms `u(0..=N)`; once a term is undefined every later one is too.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SequenceTable {
    terms: Vec<Option<Rational>>,
    singularity: Option<Singularity>,
}

impl SequenceTable {
    pub fn new(terms: Vec<Option<Rational>>, singularity: Option<Singularity>) -> Self {
        debug_assert!(
            terms.windows(2).all(|w| w[0].is_some() || w[1].is_none()),
            "undefined terms must form a suffix"
        );
        SequenceTable { terms, singularity }
    }

    pub fn from_values(values: Vec<Rational>) -> Self {
        SequenceTable { terms: values.into_iter().map(Some).collect(), singularity: None }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.terms.get(i).and_then(Option::as_ref)
    }

    pub fn terms(&self) -> &[Option<Rational>] {
        &self.terms
    }

    /// Length of the defined prefix.
    pub fn defined_len(&self) -> usize {
        self.terms.iter().take_while(|t| t.is_some()).count()
    }

    pub fn defined(&self) -> impl Iterator<Item = &Rational> {
        self.terms.iter().map_while(Option::as_ref)
    }

    pub fn singularity(&self) -> Option<&Singularity> {
        self.singularity.as_ref()
    }

    /// `terms[start..start+len]` when all are defined.
    pub fn window(&self, start: usize, len: usize) -> Option<Vec<Rational>> {
        (start..start + len).map(|i| self.get(i).cloned()).collect()
    }
}
