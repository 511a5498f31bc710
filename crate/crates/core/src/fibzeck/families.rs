use std::str::FromStr;

use super::{f, MAX_FIB_INDEX};
use crate::error::{Error, Result};
use crate::sumset::AdditiveSet;

/// The closed-form subsets of `Z/F_{2n}Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetFamily {
    /// `{0} ∪ {F_{2k-1} : 1 <= k <= n}`
    Fan,
    /// `{F_k F_{2n-k} : 0 <= k <= n}`
    Strip,
    /// `{(-1)^(k+1) F_k^2 : 0 <= k <= n}`
    StripB,
}

impl FromStr for SetFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fan" => Ok(Self::Fan),
            "strip" => Ok(Self::Strip),
            "stripB" | "strip-b" => Ok(Self::StripB),
            other => Err(Error::Parse(format!("unknown set family `{other}`"))),
        }
    }
}

fn modulus_for(n: u32) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "family sets need n >= 2, got {n}"
        )));
    }
    if 2 * n > MAX_FIB_INDEX / 2 {
        // F_k F_{2n-k} and F_k^2 must fit comfortably in i128
        return Err(Error::Overflow("family additive set"));
    }
    u64::try_from(f(2 * n)).map_err(|_| Error::Overflow("family modulus"))
}

pub fn family_additive_set(family: SetFamily, n: u32) -> Result<AdditiveSet> {
    let modulus = modulus_for(n)?;
    match family {
        SetFamily::Fan => AdditiveSet::from_residues(
            modulus,
            std::iter::once(0).chain((1..=n).map(|k| f(2 * k - 1))),
        ),
        SetFamily::Strip => {
            AdditiveSet::from_residues(modulus, (0..=n).map(|k| f(k) * f(2 * n - k)))
        }
        SetFamily::StripB => AdditiveSet::from_residues(
            modulus,
            (0..=n).map(|k| {
                if k % 2 == 1 {
                    f(k) * f(k)
                } else {
                    -f(k) * f(k)
                }
            }),
        ),
    }
}

/// The map induced by the strip reflection `vk ↦ v_{n-k}`:
/// `F_k F_{2n-k} ↦ F_{n-k} F_{n+k}`, as residue pairs.
pub fn strip_involution(n: u32) -> Result<Vec<(u64, u64)>> {
    let m = i128::from(modulus_for(n)?);
    Ok((0..=n)
        .map(|k| {
            let a = (f(k) * f(2 * n - k)).rem_euclid(m) as u64;
            let b = (f(n - k) * f(n + k)).rem_euclid(m) as u64;
            (a, b)
        })
        .collect())
}

/// The map induced by the fan reflection `vk ↦ v_{n+1-k}`:
/// `0 ↦ 0`, `F_{2k-1} ↦ F_{2n-2k+1}`.
pub fn fan_involution(n: u32) -> Result<Vec<(u64, u64)>> {
    let m = i128::from(modulus_for(n)?);
    let mut pairs = vec![(0, 0)];
    pairs.extend((1..=n).map(|k| {
        (
            f(2 * k - 1).rem_euclid(m) as u64,
            f(2 * n - 2 * k + 1).rem_euclid(m) as u64,
        )
    }));
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            family_additive_set(SetFamily::Strip, 3).unwrap().to_vec(),
            vec![0, 3, 4, 5]
        );
        assert_eq!(
            family_additive_set(SetFamily::Fan, 4).unwrap().to_vec(),
            vec![0, 1, 2, 5, 13]
        );
        assert_eq!(
            family_additive_set(SetFamily::StripB, 3).unwrap().to_vec(),
            vec![0, 1, 4, 7]
        );
        assert!(family_additive_set(SetFamily::Strip, 1).is_err());
    }

    #[test]
    fn involutions_are_bijections_of_the_set() {
        for n in 2..=14 {
            let a = family_additive_set(SetFamily::Strip, n).unwrap();
            let pairs = strip_involution(n).unwrap();
            let image =
                AdditiveSet::from_residues(a.modulus(), pairs.iter().map(|p| i128::from(p.1)))
                    .unwrap();
            assert_eq!(image, a);
            let a = family_additive_set(SetFamily::Fan, n).unwrap();
            let image = AdditiveSet::from_residues(
                a.modulus(),
                fan_involution(n).unwrap().iter().map(|p| i128::from(p.1)),
            )
            .unwrap();
            assert_eq!(image, a);
        }
    }
}
