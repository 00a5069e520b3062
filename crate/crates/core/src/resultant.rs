//! Resultants with respect to `n`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::monomial::VarId;
use crate::mpoly::MultiPoly;

/// Sylvester matrix of `p` and `q` viewed as polynomials in `v`.
pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, v: VarId) -> Vec<Vec<MultiPoly>> {
    let a = p.as_univariate(v);
    let b = q.as_univariate(v);
    let (da, db) = (a.len() - 1, b.len() - 1);
    let size = da + db;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..db {
        let mut row = alloc::vec![MultiPoly::zero(); size];
        for (k, c) in a.iter().enumerate() {
            row[shift + da - k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..da {
        let mut row = alloc::vec![MultiPoly::zero(); size];
        for (k, c) in b.iter().enumerate() {
            row[shift + db - k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `Res_n(p, q)`, evaluated as a Bareiss determinant of the Sylvester
/// matrix. The result is free of `n` and lies in the ideal `<p, q>`.
pub fn resultant_in_n(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    if p.degree_in(VarId::N) == 0 || q.degree_in(VarId::N) == 0 {
        return Err(Error::NoEliminationNeeded);
    }
    Ok(determinant(&sylvester_matrix(p, q, VarId::N)))
}
