//! Subsets of `Z/MZ` stored as bit vectors, with sumsets, covering numbers,
//! the sumset gonality criterion and Freiman-isomorphism checking.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default cap on the modulus, in bits of set storage.
pub const DEFAULT_MAX_MODULUS: u64 = 1 << 30;

/// Default cap on the number of `m`-multisets `freiman_check` will enumerate.
pub const DEFAULT_FREIMAN_BUDGET: u64 = 50_000_000;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdditiveSet {
    modulus: u64,
    words: Vec<u64>,
}

impl AdditiveSet {
    /// The empty subset of `Z/MZ`, subject to the default modulus cap.
    pub fn empty(modulus: u64) -> Result<Self> {
        Self::empty_capped(modulus, DEFAULT_MAX_MODULUS)
    }

    pub fn empty_capped(modulus: u64, max_modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        if modulus > max_modulus {
            return Err(Error::CapExceeded(format!(
                "modulus {modulus} exceeds the set-size cap {max_modulus}"
            )));
        }
        let len = (modulus as usize).div_ceil(WORD);
        Ok(Self {
            modulus,
            words: vec![0; len],
        })
    }

    /// Builds a set from arbitrary integers, reducing each into `[0, M)`.
    pub fn from_residues<I: IntoIterator<Item = i128>>(modulus: u64, residues: I) -> Result<Self> {
        let mut set = Self::empty(modulus)?;
        for r in residues {
            set.insert(r.rem_euclid(i128::from(modulus)) as u64);
        }
        Ok(set)
    }

    /// The whole group `Z/MZ`.
    pub fn full(modulus: u64) -> Result<Self> {
        let mut set = Self::empty(modulus)?;
        set.words.iter_mut().for_each(|w| *w = u64::MAX);
        set.clear_tail();
        Ok(set)
    }

    /// `{0}`, the zero-fold sumset.
    pub fn zero(modulus: u64) -> Result<Self> {
        let mut set = Self::empty(modulus)?;
        set.insert(0);
        Ok(set)
    }

    fn clear_tail(&mut self) {
        let rem = (self.modulus as usize) % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    fn insert(&mut self, x: u64) {
        debug_assert!(x < self.modulus);
        self.words[x as usize / WORD] |= 1 << (x as usize % WORD);
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn contains(&self, x: u64) -> bool {
        x < self.modulus && self.words[x as usize / WORD] >> (x as usize % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() as u64 == self.modulus
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.modulus == other.modulus
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                Some(wi as u64 * WORD as u64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<u64> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi as u64 * WORD as u64 + u64::from(w.trailing_zeros()))
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "sets live in Z/{}Z and Z/{}Z",
                self.modulus, other.modulus
            )))
        }
    }

    /// ORs `self + shift` into `out`.
    fn or_shifted_into(&self, shift: u64, out: &mut [u64]) {
        let m = self.modulus as usize;
        let s = (shift % self.modulus) as usize;
        // bits [0, m - s) land at [s, m); bits [m - s, m) wrap to [0, s).
        or_bits(out, s, &self.words, 0, m - s);
        or_bits(out, 0, &self.words, m - s, s);
    }

    /// `A + B = {a + b}`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = vec![0u64; self.words.len()];
        for b in small.iter() {
            large.or_shifted_into(b, &mut out);
        }
        Ok(Self {
            modulus: self.modulus,
            words: out,
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        Ok(Self {
            modulus: self.modulus,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        })
    }

    /// `x + A`.
    pub fn translate(&self, x: i128) -> Self {
        let shift = x.rem_euclid(i128::from(self.modulus)) as u64;
        let mut out = vec![0u64; self.words.len()];
        self.or_shifted_into(shift, &mut out);
        Self {
            modulus: self.modulus,
            words: out,
        }
    }

    /// `-A`.
    pub fn negate(&self) -> Self {
        let mut out = Self {
            modulus: self.modulus,
            words: vec![0; self.words.len()],
        };
        for a in self.iter() {
            out.insert((self.modulus - a) % self.modulus);
        }
        out
    }

    /// `{±a + translate : a ∈ A}`.
    pub fn affine_image(&self, translate: i128, negate: bool) -> Self {
        if negate {
            self.negate().translate(translate)
        } else {
            self.translate(translate)
        }
    }

    /// `mA = {a1 + ... + am}` for `m >= 1`; `0A = {0}`.
    pub fn iterated_sumset(&self, m: u32) -> Result<Self> {
        let mut acc = Self::zero(self.modulus)?;
        for _ in 0..m {
            acc = acc.sum(self)?;
        }
        Ok(acc)
    }

    /// Least `m` with `mA = Z/MZ`, or `None` when `A` only generates a proper subgroup.
    pub fn covering_number(&self) -> Result<Option<u32>> {
        self.require_zero()?;
        let mut acc = self.clone();
        let mut m = 1;
        loop {
            if acc.is_full() {
                return Ok(Some(m));
            }
            let next = acc.sum(self)?;
            if next == acc {
                return Ok(None);
            }
            acc = next;
            m += 1;
        }
    }

    fn require_zero(&self) -> Result<()> {
        if self.contains(0) {
            Ok(())
        } else {
            Err(Error::Precondition("additive set must contain 0".into()))
        }
    }

    /// Least `d >= r` for which some `D` satisfies `D - rA ⊆ (d - r)A`,
    /// together with the least such `D`.
    ///
    /// For each `d` the admissible `D` form `∩_{x ∈ rA} ((d - r)A + x)`, so the
    /// scan over all residues is done as one bitwise intersection.
    pub fn gonality(&self, r: u32) -> Result<SumsetGonality> {
        self.require_zero()?;
        if r == 0 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        let r_fold = self.iterated_sumset(r)?;
        let mut target = Self::zero(self.modulus)?;
        let mut d = r;
        loop {
            if let Some(witness) = self.first_witness(&r_fold, &target) {
                return Ok(SumsetGonality { degree: d, witness });
            }
            target = target.sum(self)?;
            d += 1;
        }
    }

    /// Least `D` with `D - shifts ⊆ target`, if any.
    fn first_witness(&self, shifts: &Self, target: &Self) -> Option<u64> {
        let mut acc = Self::full(self.modulus).ok()?;
        for x in shifts.iter() {
            acc = acc.intersection(&target.translate(i128::from(x))).ok()?;
            if acc.is_empty() {
                return None;
            }
        }
        acc.min()
    }

    /// Does `D` satisfy `D - shifts ⊆ target`?
    pub fn difference_contained(d: u64, shifts: &Self, target: &Self) -> bool {
        let m = target.modulus;
        shifts.iter().all(|x| target.contains((d + m - x % m) % m))
    }
}

/// Result of [`AdditiveSet::gonality`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SumsetGonality {
    pub degree: u32,
    pub witness: u64,
}

impl fmt::Debug for AdditiveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AdditiveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}} mod {}", self.modulus)
    }
}

/// Reads up to 64 bits starting at bit `pos`.
fn get_bits(src: &[u64], pos: usize, count: usize) -> u64 {
    let w = pos / WORD;
    let sh = pos % WORD;
    let mut v = src[w] >> sh;
    if sh > 0 && w + 1 < src.len() {
        v |= src[w + 1] << (WORD - sh);
    }
    if count < WORD {
        v &= (1u64 << count) - 1;
    }
    v
}

fn or_bits(dst: &mut [u64], dst_off: usize, src: &[u64], src_off: usize, len: usize) {
    let mut k = 0;
    while k < len {
        let count = (len - k).min(WORD);
        let v = get_bits(src, src_off + k, count);
        let pos = dst_off + k;
        let w = pos / WORD;
        let sh = pos % WORD;
        dst[w] |= v << sh;
        if sh > 0 && count > WORD - sh {
            dst[w + 1] |= v >> (WORD - sh);
        }
        k += count;
    }
}

/// A bijection from the members of a source set into `Z/M'Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreimanMap {
    target_modulus: u64,
    images: HashMap<u64, u64>,
}

impl FreimanMap {
    /// Validates that `pairs` is a bijection defined on exactly the members of `source`.
    pub fn new(source: &AdditiveSet, target_modulus: u64, pairs: &[(u64, u64)]) -> Result<Self> {
        if target_modulus == 0 {
            return Err(Error::InvalidArgument(
                "target modulus must be positive".into(),
            ));
        }
        let mut images = HashMap::new();
        for &(a, b) in pairs {
            if !source.contains(a) {
                return Err(Error::InvalidArgument(format!(
                    "{a} is not in the source set"
                )));
            }
            let b = b % target_modulus;
            if let Some(old) = images.insert(a, b) {
                if old != b {
                    return Err(Error::InvalidArgument(format!(
                        "{a} has two images {old}, {b}"
                    )));
                }
            }
        }
        if images.len() != source.len() {
            return Err(Error::InvalidArgument(
                "map is not defined on every member".into(),
            ));
        }
        let mut targets: Vec<u64> = images.values().copied().collect();
        targets.sort_unstable();
        targets.dedup();
        if targets.len() != images.len() {
            return Err(Error::InvalidArgument("map is not injective".into()));
        }
        Ok(Self {
            target_modulus,
            images,
        })
    }

    pub fn image(&self, a: u64) -> Option<u64> {
        self.images.get(&a).copied()
    }
}

/// Outcome of an exhaustive Freiman check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum FreimanOutcome {
    Pass {
        multisets: u64,
    },
    /// Two `m`-multisets of source elements on which the map fails to preserve
    /// (or reflect) equality of sums.
    Violation {
        left: Vec<u64>,
        right: Vec<u64>,
    },
}

impl FreimanOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, FreimanOutcome::Pass { .. })
    }
}

fn multiset_count(k: u64, m: u32) -> Option<u64> {
    // C(k + m - 1, m)
    let mut acc: u128 = 1;
    for t in 0..u64::from(m) {
        acc = acc * u128::from(k + t) / u128::from(t + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// Checks that `map` is a Freiman isomorphism of order `m` on `set` by
/// enumerating all `m`-multisets in lexicographic order.
pub fn freiman_check(
    set: &AdditiveSet,
    map: &FreimanMap,
    m: u32,
    budget: u64,
) -> Result<FreimanOutcome> {
    if m == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let elems = set.to_vec();
    let total = multiset_count(elems.len() as u64, m).unwrap_or(u64::MAX);
    if total > budget {
        return Err(Error::CapExceeded(format!(
            "{total} multisets of order {m} exceed the budget {budget}"
        )));
    }
    let images: Vec<u64> = elems
        .iter()
        .map(|&a| {
            map.image(a)
                .ok_or_else(|| Error::InvalidArgument(format!("{a} has no image")))
        })
        .collect::<Result<_>>()?;
    let (ms, mt) = (set.modulus(), map.target_modulus);

    let mut by_sum: HashMap<u64, (u64, Vec<usize>)> = HashMap::new();
    let mut by_image: HashMap<u64, (u64, Vec<usize>)> = HashMap::new();
    let mut idx = vec![0usize; m as usize];
    let mut seen = 0u64;
    loop {
        let s = idx.iter().fold(0u64, |acc, &i| (acc + elems[i]) % ms);
        let t = idx.iter().fold(0u64, |acc, &i| (acc + images[i]) % mt);
        seen += 1;
        let clash = match by_sum.get(&s) {
            Some((t0, other)) if *t0 != t => Some(other.clone()),
            _ => None,
        }
        .or_else(|| match by_image.get(&t) {
            Some((s0, other)) if *s0 != s => Some(other.clone()),
            _ => None,
        });
        if let Some(other) = clash {
            let pick = |v: &[usize]| v.iter().map(|&i| elems[i]).collect();
            return Ok(FreimanOutcome::Violation {
                left: pick(&other),
                right: pick(&idx),
            });
        }
        by_sum.entry(s).or_insert_with(|| (t, idx.clone()));
        by_image.entry(t).or_insert_with(|| (s, idx.clone()));

        // next non-decreasing index tuple
        let k = elems.len();
        let Some(pos) = (0..idx.len()).rev().find(|&p| idx[p] + 1 < k) else {
            break;
        };
        let v = idx[pos] + 1;
        idx[pos..].iter_mut().for_each(|x| *x = v);
    }
    Ok(FreimanOutcome::Pass { multisets: seen })
}
