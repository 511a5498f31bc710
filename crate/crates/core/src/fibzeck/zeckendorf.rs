use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{f, fib, MAX_FIB_INDEX};
use crate::error::{Error, Result};

/// A sum of non-consecutive Fibonacci numbers, indices strictly decreasing and at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct ZeckendorfForm {
    indices: Vec<u32>,
}

impl ZeckendorfForm {
    /// Validates canonical form.
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.iter().any(|&i| !(2..=MAX_FIB_INDEX).contains(&i)) {
            return Err(Error::InvalidArgument(format!(
                "Zeckendorf indices must lie in [2, {MAX_FIB_INDEX}]: {indices:?}"
            )));
        }
        if indices.windows(2).any(|w| w[0] < w[1] + 2) {
            return Err(Error::InvalidArgument(format!(
                "Zeckendorf indices must decrease by at least 2: {indices:?}"
            )));
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn is_zero(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn leading_index(&self) -> Option<u32> {
        self.indices.first().copied()
    }

    /// `top - index` for each term; with `top = 2n` these are the offsets `j`
    /// in `F_{2n-j}`.
    pub fn offsets_from(&self, top: u32) -> Vec<i64> {
        self.indices
            .iter()
            .map(|&i| i64::from(top) - i64::from(i))
            .collect()
    }

    pub fn value(&self) -> Result<i128> {
        self.indices.iter().try_fold(0i128, |acc, &i| {
            acc.checked_add(fib(i)?)
                .ok_or(Error::Overflow("zeckendorf value"))
        })
    }
}

impl fmt::Display for ZeckendorfForm {
    /// `F11+F6+F4`; zero prints as `0`.
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(fm, "0");
        }
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(fm, "+")?;
            }
            write!(fm, "F{i}")?;
        }
        Ok(())
    }
}

impl FromStr for ZeckendorfForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::default());
        }
        let indices = s
            .split('+')
            .map(|t| {
                t.trim()
                    .strip_prefix('F')
                    .and_then(|k| k.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad Zeckendorf term `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(indices)
    }
}

/// Greedy largest-first decomposition of `x >= 0`.
pub fn zeckendorf_encode(x: i128) -> Result<ZeckendorfForm> {
    if x < 0 {
        return Err(Error::InvalidArgument(format!(
            "cannot encode negative {x}"
        )));
    }
    let mut k = 2;
    while k < MAX_FIB_INDEX && f(k + 1) <= x {
        k += 1;
    }
    let mut rest = x;
    let mut indices = Vec::new();
    while rest > 0 {
        while f(k) > rest {
            k -= 1;
        }
        indices.push(k);
        rest -= f(k);
        k = k.saturating_sub(2).max(2);
    }
    Ok(ZeckendorfForm { indices })
}

/// Closed-form Zeckendorf form of `F_m F_n` for `m >= n >= 1`.
///
/// The odd case contributes `F_{m-n+1}`, which is `F_1` when `m = n`; it is
/// rewritten as `F_2` to keep the form canonical.
pub fn zeck_product(m: u32, n: u32) -> Result<ZeckendorfForm> {
    if n < 1 || m < n {
        return Err(Error::InvalidArgument(format!(
            "need m >= n >= 1, got m={m}, n={n}"
        )));
    }
    fib(m)?
        .checked_mul(fib(n)?)
        .ok_or(Error::Overflow("fibonacci product"))?;
    let mut indices: Vec<u32> = (1..=n / 2).map(|r| m + n + 2 - 4 * r).collect();
    if n % 2 == 1 {
        indices.push((m - n + 1).max(2));
    }
    ZeckendorfForm::new(indices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn encode_examples() {
        assert!(zeckendorf_encode(0).unwrap().is_zero());
        assert_eq!(zeckendorf_encode(100).unwrap().indices(), &[11, 6, 4]);
        assert_eq!(zeckendorf_encode(6).unwrap().indices(), &[5, 2]);
        assert_eq!(zeckendorf_encode(1).unwrap().indices(), &[2]);
        assert!(zeckendorf_encode(-1).is_err());
    }

    #[test]
    fn text_form() {
        let z = zeckendorf_encode(100).unwrap();
        assert_eq!(z.to_string(), "F11+F6+F4");
        assert_eq!("F11+F6+F4".parse::<ZeckendorfForm>().unwrap(), z);
        assert_eq!(ZeckendorfForm::default().to_string(), "0");
        assert!("F5+F4".parse::<ZeckendorfForm>().is_err());
        assert!("F1".parse::<ZeckendorfForm>().is_err());
    }

    #[test]
    fn product_examples() {
        assert_eq!(zeck_product(4, 3).unwrap().indices(), &[5, 2]);
        assert_eq!(zeck_product(5, 5).unwrap().indices(), &[8, 4, 2]);
        assert_eq!(zeck_product(10, 2).unwrap().indices(), &[10]);
        assert_eq!(zeck_product(1, 1).unwrap().indices(), &[2]);
        assert!(zeck_product(3, 4).is_err());
        assert!(zeck_product(180, 180).is_err());
    }

    #[test]
    fn product_matches_greedy_up_to_forty() {
        for m in 1..=40 {
            for n in 1..=m {
                let greedy = zeckendorf_encode(f(m) * f(n)).unwrap();
                assert_eq!(zeck_product(m, n).unwrap(), greedy, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn round_trip_first_million() {
        for x in 0..=1_000_000i128 {
            let z = zeckendorf_encode(x).unwrap();
            assert_eq!(z.value().unwrap(), x);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn encode_is_canonical_and_inverts(x in 0i128..i128::MAX / 2) {
            let z = zeckendorf_encode(x).unwrap();
            prop_assert_eq!(z.value().unwrap(), x);
            prop_assert!(ZeckendorfForm::new(z.indices().to_vec()).is_ok());
        }
    }
}
