//! Leading-term classification of `2A` and `3A ∖ 2A` for the strip set.
//!
//! Everything works on offsets: a term `F_{2n-j}` is recorded as `j`, so the
//! case tables are independent of `n`.

use serde::Serialize;

use super::families::{family_additive_set, SetFamily};
use super::zeckendorf::{zeckendorf_encode, ZeckendorfForm};
use super::{f, MAX_FIB_INDEX};
use crate::error::{Error, Result};

/// One matched case; `matched_prefix` holds the Zeckendorf indices that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingTermClass {
    pub class_id: &'static str,
    pub matched_prefix: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedElement {
    pub element: u64,
    pub zeckendorf: ZeckendorfForm,
    pub class: LeadingTermClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub element: u64,
    pub zeckendorf: ZeckendorfForm,
    pub rule: String,
    /// Case ids that matched; empty when nothing matched.
    pub matched: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: u32,
    pub m: u32,
    pub elements: Vec<ClassifiedElement>,
    pub violations: Vec<Violation>,
    /// Elements of `3A ∖ 2A` equal to `F_{2n-3} + F_{2n-5} + (smaller terms)`.
    /// The corollary lists only the bare two-term value; the lemma it
    /// summarises only fixes the leading terms.
    pub narrowings: Vec<u64>,
    /// Number of auxiliary lemma instances checked (m = 2 only).
    pub lemma_instances: usize,
}

impl Classification {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn prefix(o: &[i64], p: &[i64]) -> bool {
    o.starts_with(p)
}

/// The term after `p`, if `o` starts with `p`; `Some(None)` if nothing follows.
fn after(o: &[i64], p: &[i64]) -> Option<Option<i64>> {
    prefix(o, p).then(|| o.get(p.len()).copied())
}

fn next_in(o: &[i64], p: &[i64], allowed: &[i64]) -> bool {
    matches!(after(o, p), Some(Some(x)) if allowed.contains(&x))
}

fn next_optional(o: &[i64], p: &[i64], ok: impl Fn(i64) -> bool) -> bool {
    match after(o, p) {
        Some(None) => true,
        Some(Some(x)) => ok(x),
        None => false,
    }
}

/// Cases for `D ∈ 2A ∖ A`: returns (id, prefix length) for each satisfied case.
fn cases_2a(o: &[i64]) -> Vec<(&'static str, usize)> {
    let mut hits = Vec::new();
    if o == [3] {
        hits.push(("2", 1));
    }
    if o == [5] {
        hits.push(("3", 1));
    }
    if next_optional(o, &[6], |x| x == 9 || x == 10) {
        hits.push(("4", 2.min(o.len())));
    }
    if o.len() >= 2 && o[0] == 1 && (o[1] == 3 || o[1] == 4) {
        // sub-constraints on the longer leading terms
        let (id, ok, len) = if prefix(o, &[1, 3, 5]) {
            ("5a", o == [1, 3, 5], 3)
        } else if prefix(o, &[1, 4]) {
            let ok = o == [1, 4] || (o.get(2) == Some(&6) && o.get(3).is_none_or(|&x| x >= 9));
            ("5b", ok, o.len().min(4))
        } else if prefix(o, &[1, 3, 6]) {
            (
                "5c",
                next_optional(o, &[1, 3, 6], |x| x >= 9),
                o.len().min(4),
            )
        } else if prefix(o, &[1, 3, 8]) {
            (
                "5-sp",
                next_optional(o, &[1, 3, 8], |x| x >= 10),
                o.len().min(4),
            )
        } else {
            ("5", true, 2)
        };
        if ok {
            hits.push((id, len));
        }
    }
    hits
}

/// Cases for `D ∈ 3A ∖ 2A`.
fn cases_3a(o: &[i64]) -> Vec<(&'static str, usize)> {
    let mut hits = Vec::new();
    let mut hit = |id, ok: bool, len: usize| {
        if ok {
            hits.push((id, len));
        }
    };
    hit("1a", o == [4], 1);
    // "followed by" read as: the next term, if any, is one of these
    hit(
        "1b",
        next_optional(o, &[4, 6], |x| x == 9 || x == 10),
        3.min(o.len()),
    );

    hit("2a", prefix(o, &[3, 8]), 2);
    hit("2b", prefix(o, &[3, 7]), 2);
    hit("2c", prefix(o, &[3, 6]), 2);
    // the bare value, or [3, 5] continued by something other than 7 or 8
    hit("2d", next_optional(o, &[3, 5], |x| x != 7 && x != 8), 2);
    hit("2e", prefix(o, &[3, 5, 8]), 3);
    hit("2f", prefix(o, &[3, 5, 7]), 3);

    hit("3a", prefix(o, &[2, 10]), 2);
    hit("3b", o == [2, 9], 2);
    hit("3c", o == [2, 7], 2);
    hit("3d", o == [2, 5], 2);
    hit("3e", next_optional(o, &[2, 5, 8], |x| x >= 10), 3);
    hit("3f", prefix(o, &[2, 5, 7]), 3);
    hit("3g", o == [2, 4], 2);
    hit(
        "3h",
        next_in(o, &[2, 4], &[7]) || matches!(after(o, &[2, 4]), Some(Some(x)) if x >= 9),
        3,
    );

    hit("4a", next_in(o, &[1, 6], &[9, 10]), 3);
    hit("4b", o == [1, 6], 2);
    hit("4c", o == [1, 5], 2);
    hits
}

fn check_n(n: u32, m: u32) -> Result<()> {
    match m {
        2 if n < 7 => Err(Error::Precondition(format!(
            "2A classification needs n >= 7, got {n}"
        ))),
        3 if n < 8 => Err(Error::Precondition(format!(
            "3A classification needs n >= 8, got {n}"
        ))),
        2 | 3 => {
            if 2 * n > MAX_FIB_INDEX / 2 {
                Err(Error::Overflow("classification modulus"))
            } else {
                Ok(())
            }
        }
        _ => Err(Error::InvalidArgument(format!(
            "classification supports m = 2 or 3, got {m}"
        ))),
    }
}

fn residue(x: i128, n: u32) -> i128 {
    x.rem_euclid(f(2 * n))
}

fn encode(x: i128) -> ZeckendorfForm {
    zeckendorf_encode(x).expect("residues are nonnegative")
}

/// Classifies every element of `mA(G_n)` (for `m = 3`, of `3A ∖ 2A`).
pub fn classify_sumset(n: u32, m: u32) -> Result<Classification> {
    check_n(n, m)?;
    let top = 2 * n;
    let a = family_additive_set(SetFamily::Strip, n)?;
    let two = a.sum(&a)?;
    let (domain, excluded) = if m == 2 {
        (two.clone(), a.clone())
    } else {
        (two.sum(&a)?, two.clone())
    };

    let mut out = Classification {
        n,
        m,
        elements: Vec::new(),
        violations: Vec::new(),
        narrowings: Vec::new(),
        lemma_instances: 0,
    };

    for x in domain.iter() {
        let z = encode(i128::from(x));
        let o = z.offsets_from(top);
        let hits = if excluded.contains(x) {
            if m == 3 {
                continue;
            }
            vec![("1", z.indices().len().min(2))]
        } else if m == 2 {
            cases_2a(&o)
        } else {
            cases_3a(&o)
        };
        if hits.len() != 1 {
            out.violations.push(Violation {
                element: x,
                zeckendorf: z,
                rule: if m == 2 {
                    "2A case table"
                } else {
                    "3A case table"
                }
                .to_string(),
                matched: hits.iter().map(|h| h.0).collect(),
            });
            continue;
        }
        let (class_id, len) = hits[0];
        if class_id == "2d" && o.len() > 2 {
            out.narrowings.push(x);
        }
        out.elements.push(ClassifiedElement {
            element: x,
            class: LeadingTermClass {
                class_id,
                matched_prefix: z.indices()[..len.min(z.indices().len())].to_vec(),
            },
            zeckendorf: z,
        });
    }

    if m == 2 {
        lemma_checks(n, &mut out);
    }
    Ok(out)
}

/// Pairwise sums, `F_{2n-1}` shifts and the three small identities behind the
/// 2A table.
fn lemma_checks(n: u32, out: &mut Classification) {
    let top = 2 * n;
    let mut fail = |x: i128, rule: String| {
        let z = encode(x);
        out.violations.push(Violation {
            element: x as u64,
            zeckendorf: z,
            rule,
            matched: Vec::new(),
        });
    };
    let mut count = 0;

    for a in 2..=n {
        for b in a..=n {
            count += 1;
            let x = residue(f(a) * f(top - a) + f(b) * f(top - b), n);
            let o = encode(x).offsets_from(top);
            let ok = o.len() >= 2
                && o[0] == 1
                && (o[1] == 3 || o[1] == 4)
                && (!prefix(&o, &[1, 3, 5]) || (a == 3 && b == 3))
                && (!prefix(&o, &[1, 4])
                    || ((a == 2 && b == 2) || o.get(2) == Some(&6))
                        && o.get(3).is_none_or(|&t| t >= 9))
                && (!prefix(&o, &[1, 3, 6])
                    || (a == 3 && b > 3 && o.get(3).is_none_or(|&t| t >= 9)));
            if !ok {
                fail(x, format!("pair sum a={a}, b={b}"));
            }
        }
    }

    for a in 4..=n {
        count += 1;
        let x = residue(f(top - 1) + f(a) * f(top - a), n);
        let o = encode(x).offsets_from(top);
        if !next_optional(&o, &[6], |t| t == 9 || t == 10) {
            fail(x, format!("F_(2n-1) shift, a={a}"));
        }
    }

    let identities = [
        ("2F_(2n-1) = F_(2n-3)", 2 * f(top - 1), f(top - 3)),
        ("F_(2n-1) + F_(2n-2) = 0", f(top - 1) + f(top - 2), 0),
        (
            "F_(2n-1) + 2F_(2n-3) = F_(2n-5)",
            f(top - 1) + 2 * f(top - 3),
            f(top - 5),
        ),
    ];
    for (rule, lhs, rhs) in identities {
        count += 1;
        if residue(lhs, n) != residue(rhs, n) {
            fail(residue(lhs, n), rule.to_string());
        }
    }
    out.lemma_instances = count;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_for_n_eight() {
        let c = classify_sumset(8, 2).unwrap();
        let find = |x: u64| c.elements.iter().find(|e| e.element == x).unwrap();
        assert_eq!(find(233).class.class_id, "2");
        assert_eq!(find(0).class.class_id, "1");
        assert!(c.passed(), "{:?}", c.violations);

        let c = classify_sumset(8, 3).unwrap();
        assert!(c.passed(), "{:?}", c.violations);
        assert!(c
            .elements
            .iter()
            .all(|e| e.zeckendorf.leading_index().unwrap() >= 16 - 4));
    }

    #[test]
    fn zero_violations_through_fourteen() {
        for n in 7..=14 {
            let c = classify_sumset(n, 2).unwrap();
            assert!(c.passed(), "n={n}: {:?}", c.violations);
            assert!(c.narrowings.is_empty());
        }
        for n in 8..=12 {
            let c = classify_sumset(n, 3).unwrap();
            assert!(c.passed(), "n={n}: {:?}", c.violations);
            for &x in &c.narrowings {
                let o = encode(i128::from(x)).offsets_from(2 * n);
                assert!(o[..2] == [3, 5] && o[2] >= 9, "n={n}: {o:?}");
            }
        }
    }

    #[test]
    fn preconditions() {
        assert!(classify_sumset(6, 2).is_err());
        assert!(classify_sumset(7, 3).is_err());
        assert!(classify_sumset(9, 4).is_err());
    }
}
