//! Exact integer linear algebra on small dense matrices.
//!
//! All arithmetic is checked `i128`; any overflow surfaces as [`Error::Overflow`].

use crate::error::{Error, Result};

fn mul(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

fn sub(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow(what))
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Every intermediate entry is itself a minor of the input, so exact division
/// is guaranteed at each step. The empty matrix has determinant 1.
pub fn determinant(matrix: &[Vec<i128>]) -> Result<i128> {
    let n = matrix.len();
    let mut a: Vec<Vec<i128>> = matrix.to_vec();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument(
            "determinant of a non-square matrix".into(),
        ));
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = sub(
                    mul(a[i][j], a[k][k], "determinant")?,
                    mul(a[i][k], a[k][j], "determinant")?,
                    "determinant",
                )?;
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(if n == 0 { 1 } else { sign * a[n - 1][n - 1] })
}

/// Signed cofactor `(-1)^(i+j) det(M with row i and column j removed)`.
pub fn cofactor(matrix: &[Vec<i128>], i: usize, j: usize) -> Result<i128> {
    let minor: Vec<Vec<i128>> = matrix
        .iter()
        .enumerate()
        .filter(|&(r, _)| r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(c, _)| c != j)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    let det = determinant(&minor)?;
    Ok(if (i + j).is_multiple_of(2) { det } else { -det })
}

/// Nonzero diagonal of the Smith normal form: `d1 | d2 | ... | dr`, all positive.
///
/// Pivots are chosen as the nonzero entry of least absolute value in the
/// remaining block, which keeps coefficient growth small.
pub fn smith_diagonal(matrix: &[Vec<i128>]) -> Result<Vec<i128>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = matrix.to_vec();
    let mut diag = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            // Locate the smallest nonzero entry of the trailing block.
            let mut pivot: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &v) in row.iter().enumerate().skip(t) {
                    if v != 0 && pivot.is_none_or(|(pi, pj)| v.abs() < a[pi][pj].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(diag);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];

            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] = sub(a[i][j], mul(q, a[t][j], "smith form")?, "smith form")?;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] = sub(row[j], mul(q, row[t], "smith form")?, "smith form")?;
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Enforce divisibility: fold any offending row into the pivot row.
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] = a[t][j]
                            .checked_add(a[i][j])
                            .ok_or(Error::Overflow("smith form"))?;
                    }
                }
                None => {
                    diag.push(p.abs());
                    break;
                }
            }
        }
    }
    finish(diag)
}

fn finish(diag: Vec<i128>) -> Result<Vec<i128>> {
    debug_assert!(diag.windows(2).all(|w| w[1] % w[0] == 0));
    Ok(diag)
}
