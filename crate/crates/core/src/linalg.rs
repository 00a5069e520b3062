//! Fraction-free (Bareiss) elimination over polynomial matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mpoly::MultiPoly;

fn pick_pivot(a: &[Vec<MultiPoly>], k: usize) -> Option<usize> {
    (k..a.len())
        .filter(|&i| !a[i][k].is_zero())
        .min_by_key(|&i| a[i][k].len())
}

fn exact(p: MultiPoly, d: &MultiPoly) -> MultiPoly {
    if d.is_one() {
        return p;
    }
    p.div_exact(d).expect("Bareiss step must divide exactly")
}

/// Solves `M x = b` with one-step fraction-free Gauss-Jordan elimination.
///
/// Each solution component comes back as `(numerator, denominator)`; the
/// denominator is the same for every component and equals `±det(M)`.
pub fn bareiss_solve(m: &[Vec<MultiPoly>], b: &[MultiPoly]) -> Result<Vec<(MultiPoly, MultiPoly)>> {
    let d = m.len();
    assert_eq!(b.len(), d, "right-hand side length must match");
    assert!(m.iter().all(|row| row.len() == d), "matrix must be square");
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut a: Vec<Vec<MultiPoly>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut prev = MultiPoly::one();
    for k in 0..d {
        let piv = pick_pivot(&a, k).ok_or(Error::SingularSystem)?;
        a.swap(k, piv);
        let pivot_row = a[k].clone();
        let akk = pivot_row[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let aik = row[k].clone();
            for j in 0..=d {
                if j == k {
                    continue;
                }
                let val = &(&akk * &row[j]) - &(&aik * &pivot_row[j]);
                row[j] = exact(val, &prev);
            }
            row[k] = MultiPoly::zero();
        }
        // rows other than k already had their diagonal rescaled above
        prev = akk;
    }
    Ok(a.into_iter().map(|row| (row[d].clone(), prev.clone())).collect())
}

/// Solves `M x = b` by Cramer's rule, every maximal minor of `[M | b]`
/// built row by row from the minors above it. Division free; the shared
/// denominator is `det(M)`.
pub fn cramer_solve(m: &[Vec<MultiPoly>], b: &[MultiPoly]) -> Result<Vec<(MultiPoly, MultiPoly)>> {
    let d = m.len();
    assert_eq!(b.len(), d, "right-hand side length must match");
    assert!(m.iter().all(|row| row.len() == d), "matrix must be square");
    assert!(d < 31, "system too large for subset indexing");
    if d == 0 {
        return Ok(Vec::new());
    }
    let entry = |r: usize, c: usize| if c == d { &b[r] } else { &m[r][c] };
    let width = d + 1;
    // minors[mask] for the first r rows and the columns in mask
    let mut minors: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    minors.insert(0, MultiPoly::one());
    for r in 0..d {
        let mut next = BTreeMap::new();
        for (&mask, below) in &minors {
            if below.is_zero() {
                continue;
            }
            for c in (0..width).filter(|c| mask & (1 << c) == 0) {
                let e = entry(r, c);
                if e.is_zero() {
                    continue;
                }
                // column c lands after the columns of mask smaller than it
                let after = (mask >> c).count_ones();
                let term = e * below;
                let slot = next.entry(mask | (1 << c)).or_insert_with(MultiPoly::zero);
                *slot = if after % 2 == 1 { &*slot - &term } else { &*slot + &term };
            }
        }
        minors = next;
    }
    let full = (1u32 << width) - 1;
    let det = minors.get(&(full & !(1 << d))).cloned().unwrap_or_default();
    if det.is_zero() {
        return Err(Error::SingularSystem);
    }
    Ok((0..d)
        .map(|k| {
            // b sits last in this minor; moving it to column k takes d-1-k swaps
            let minor = minors.get(&(full & !(1 << k))).cloned().unwrap_or_default();
            let num = if (d - 1 - k) % 2 == 1 { -minor } else { minor };
            (num, det.clone())
        })
        .collect())
}

/// Determinant by Bareiss forward elimination.
pub fn determinant(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let d = m.len();
    if d == 0 {
        return MultiPoly::one();
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut prev = MultiPoly::one();
    let mut negate = false;
    for k in 0..d {
        let piv = match pick_pivot(&a, k) {
            Some(p) => p,
            None => return MultiPoly::zero(),
        };
        if piv != k {
            a.swap(k, piv);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let aik = row[k].clone();
            for j in k + 1..d {
                let val = &(&pivot_row[k] * &row[j]) - &(&aik * &pivot_row[j]);
                row[j] = exact(val, &prev);
            }
            row[k] = MultiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    if negate {
        -prev
    } else {
        prev
    }
}
