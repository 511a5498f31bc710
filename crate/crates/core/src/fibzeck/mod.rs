//! Fibonacci numbers, Zeckendorf forms, the closed-form additive sets of the
//! fan and strip families, and leading-term classification of small sumsets.

mod classify;
mod families;
mod identities;
mod zeckendorf;

pub use classify::{
    classify_sumset, Classification, ClassifiedElement, LeadingTermClass, Violation,
};
pub use families::{family_additive_set, fan_involution, strip_involution, SetFamily};
pub use identities::{
    catalan_check, negation_table, upper_bound_identity_check, CatalanReport, IdentityCheck,
    NegationRow,
};
pub use zeckendorf::{zeck_product, zeckendorf_encode, ZeckendorfForm};

use crate::error::{Error, Result};

/// Largest `k` with `F_k` representable as `i128`.
pub const MAX_FIB_INDEX: u32 = 184;

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
pub fn fib(k: u32) -> Result<i128> {
    if k > MAX_FIB_INDEX {
        return Err(Error::Overflow("fibonacci number"));
    }
    if k == 0 {
        return Ok(0);
    }
    // stop at F_k: F_{k+1} overflows for the largest k
    let (mut a, mut b) = (0i128, 1i128);
    for _ in 1..k {
        (a, b) = (b, a + b);
    }
    Ok(b)
}

/// `F_k` for indices the caller has already bounded.
pub(crate) fn f(k: u32) -> i128 {
    fib(k).expect("fibonacci index within range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(fib(0).unwrap(), 0);
        assert_eq!(fib(1).unwrap(), 1);
        assert_eq!(fib(2).unwrap(), 1);
        assert_eq!(fib(16).unwrap(), 987);
    }

    #[test]
    fn capacity() {
        assert!(fib(MAX_FIB_INDEX).is_ok());
        assert_eq!(
            fib(MAX_FIB_INDEX + 1),
            Err(Error::Overflow("fibonacci number"))
        );
        // F_184 + F_183 would not fit
        assert!(fib(MAX_FIB_INDEX)
            .unwrap()
            .checked_add(fib(183).unwrap())
            .is_none());
    }

    #[test]
    fn recurrence() {
        for k in 2..=MAX_FIB_INDEX {
            assert_eq!(fib(k).unwrap(), fib(k - 1).unwrap() + fib(k - 2).unwrap());
        }
    }
}
