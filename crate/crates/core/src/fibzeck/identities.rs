use serde::Serialize;

use super::zeckendorf::{zeckendorf_encode, ZeckendorfForm};
use super::{f, MAX_FIB_INDEX};
use crate::error::{Error, Result};

/// Literal evaluation of `F_{n-k} F_{n+k} - F_n^2` against two sign conventions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalanReport {
    pub n: u32,
    pub k: u32,
    pub lhs: i128,
    /// `(-1)^(k+1) F_k^2`
    pub printed_rhs: i128,
    /// `(-1)^(n-k+1) F_k^2`
    pub corrected_rhs: i128,
    pub printed_holds: bool,
    pub corrected_holds: bool,
}

fn sign(e: u32) -> i128 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn catalan_check(n: u32, k: u32) -> Result<CatalanReport> {
    if n < 2 || k > n || n + k > MAX_FIB_INDEX / 2 {
        return Err(Error::InvalidArgument(format!(
            "catalan check needs 0 <= k <= n, got n={n}, k={k}"
        )));
    }
    let lhs = f(n - k) * f(n + k) - f(n) * f(n);
    let sq = f(k) * f(k);
    let printed_rhs = sign(k + 1) * sq;
    let corrected_rhs = sign(n - k + 1) * sq;
    Ok(CatalanReport {
        n,
        k,
        lhs,
        printed_rhs,
        corrected_rhs,
        printed_holds: lhs == printed_rhs,
        corrected_holds: lhs == corrected_rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub lhs: i128,
    pub rhs: i128,
    pub holds: bool,
}

/// `F_{2n} + 2F_{2n-1} - F_k F_{2n-k} = F_{k-2} F_{2n-k+2} + 3 F_{k-1} F_{2n-k+1}`.
pub fn upper_bound_identity_check(n: u32, k: u32) -> Result<IdentityCheck> {
    if k < 3 || k > n || 2 * n > MAX_FIB_INDEX / 2 {
        return Err(Error::InvalidArgument(format!(
            "need 3 <= k <= n, got n={n}, k={k}"
        )));
    }
    let lhs = f(2 * n) + 2 * f(2 * n - 1) - f(k) * f(2 * n - k);
    let rhs = f(k - 2) * f(2 * n - k + 2) + 3 * f(k - 1) * f(2 * n - k + 1);
    Ok(IdentityCheck {
        lhs,
        rhs,
        holds: lhs == rhs,
    })
}

/// One row: `D = F_k F_{2n-k}` and the Zeckendorf form of `-D mod F_{2n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegationRow {
    pub label: String,
    pub element: u64,
    pub negation: u64,
    pub zeckendorf: ZeckendorfForm,
    /// Offsets `j` of `F_{2n-j}` in the tabulated form.
    pub expected_offsets: Vec<i64>,
    pub matches: bool,
}

const NEGATION_ROWS: [(u32, &[i64]); 7] = [
    (1, &[2]),
    (2, &[1]),
    (3, &[2, 4]),
    (4, &[2, 4, 7]),
    (5, &[2, 4, 8]),
    (6, &[2, 4, 8, 11]),
    (7, &[2, 4, 8, 12]),
];

/// Negations of `F_k F_{2n-k}`, `k = 1..7`, against their tabulated forms.
pub fn negation_table(n: u32) -> Result<Vec<NegationRow>> {
    if n < 7 {
        return Err(Error::Precondition(format!(
            "negation table needs n >= 7, got {n}"
        )));
    }
    if 2 * n > MAX_FIB_INDEX / 2 {
        return Err(Error::Overflow("negation table"));
    }
    let m = f(2 * n);
    NEGATION_ROWS
        .iter()
        .map(|&(k, expected)| {
            let element = f(k) * f(2 * n - k);
            let negation = (-element).rem_euclid(m);
            let zeckendorf = zeckendorf_encode(negation)?;
            let label = if k == 1 {
                format!("F_{{2n-{k}}}")
            } else {
                format!("{}F_{{2n-{k}}}", f(k))
            };
            Ok(NegationRow {
                label,
                element: element as u64,
                negation: negation as u64,
                matches: zeckendorf.offsets_from(2 * n) == expected,
                expected_offsets: expected.to_vec(),
                zeckendorf,
            })
        })
        .collect()
}
