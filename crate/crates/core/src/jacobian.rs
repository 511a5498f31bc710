//! Jacobian structure: Smith invariants, the monodromy pairing in terms of
//! forest counts, and the cyclic model `vj - v0 ↦ κ(1,j) mod κ`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{linalg, Multigraph};
use crate::sumset::AdditiveSet;

/// Invariant factors `d1 | d2 | ... | dn` of the reduced Laplacian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithInvariants {
    pub factors: Vec<i128>,
}

impl SmithInvariants {
    /// Factors greater than one.
    pub fn nontrivial(&self) -> Vec<i128> {
        self.factors.iter().copied().filter(|&d| d > 1).collect()
    }

    pub fn order(&self) -> Result<i128> {
        self.factors.iter().try_fold(1i128, |acc, &d| {
            acc.checked_mul(d).ok_or(Error::Overflow("jacobian order"))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.nontrivial().len() <= 1
    }
}

pub fn smith_invariants(g: &Multigraph) -> Result<SmithInvariants> {
    g.require_connected()?;
    let reduced = g.laplacian().reduced();
    let mut factors = linalg::smith_diagonal(&reduced)?;
    if factors.len() != reduced.len() {
        // connected graphs have a nonsingular reduced Laplacian
        return Err(Error::InvalidGraph("reduced Laplacian is singular".into()));
    }
    factors.sort_unstable();
    Ok(SmithInvariants { factors })
}

/// `Jac(G) ≅ Z/MZ` via `D ↦ ⟨D, v1 - v0⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicJacobian {
    modulus: u64,
    generator_images: Vec<u64>,
}

impl CyclicJacobian {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Entry `j` is the image of `vj - v0`.
    pub fn generator_images(&self) -> &[u64] {
        &self.generator_images
    }

    /// Image of the degree-zero part `D - deg(D) v0` of a coefficient vector.
    pub fn image_of(&self, coefficients: &[i64]) -> u64 {
        let m = i128::from(self.modulus);
        coefficients
            .iter()
            .zip(&self.generator_images)
            .map(|(&c, &g)| i128::from(c) * i128::from(g))
            .sum::<i128>()
            .rem_euclid(m) as u64
    }

    /// `A(G)` as a subset of `Z/MZ`.
    pub fn additive_set(&self) -> AdditiveSet {
        AdditiveSet::from_residues(
            self.modulus,
            self.generator_images.iter().map(|&x| i128::from(x)),
        )
        .expect("modulus already validated")
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Builds the cyclic model, provided `κ(1,1)` is a unit modulo `κ`.
pub fn cyclic_model(g: &Multigraph) -> Result<CyclicJacobian> {
    if g.vertex_count() < 2 {
        return Err(Error::Precondition("cyclic model needs a vertex v1".into()));
    }
    let kappa = g.spanning_tree_count()?;
    let row = g.two_forest_row(1)?;
    let d = gcd(row[1], kappa);
    if d != 1 {
        return Err(Error::NonCyclicModel {
            kappa_11: row[1],
            kappa,
            gcd: d,
        });
    }
    let modulus = u64::try_from(kappa).map_err(|_| Error::Overflow("cyclic model modulus"))?;
    Ok(CyclicJacobian {
        modulus,
        generator_images: row.iter().map(|&k| k.rem_euclid(kappa) as u64).collect(),
    })
}

/// An element of `Q/Z` with denominator fixed to `κ(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PairingValue {
    pub numerator: i128,
    pub denominator: i128,
}

impl fmt::Display for PairingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// `⟨vi - v0, vj - v0⟩ = κ(i,j) / κ mod Z`.
pub fn pairing(g: &Multigraph, i: usize, j: usize) -> Result<PairingValue> {
    let kappa = g.spanning_tree_count()?;
    let k = g.two_forest_count(i, j)?;
    Ok(PairingValue {
        numerator: k.rem_euclid(kappa),
        denominator: kappa,
    })
}

/// The image of `A(G)` under `⟨·, vi - v0⟩`, as a subset of `Z/κZ`.
pub fn pairing_projection(g: &Multigraph, i: usize) -> Result<AdditiveSet> {
    g.check_vertex(i)?;
    if i == 0 {
        return Err(Error::InvalidArgument(
            "projection index must be at least 1".into(),
        ));
    }
    let kappa = g.spanning_tree_count()?;
    let modulus = u64::try_from(kappa).map_err(|_| Error::Overflow("projection modulus"))?;
    AdditiveSet::from_residues(modulus, g.two_forest_row(i)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_examples() {
        assert_eq!(
            smith_invariants(&Multigraph::strip(2)).unwrap().factors,
            vec![1, 3]
        );
        assert_eq!(
            smith_invariants(&Multigraph::strip(3)).unwrap().factors,
            vec![1, 1, 8]
        );
        assert_eq!(
            smith_invariants(&Multigraph::fan(5).unwrap())
                .unwrap()
                .factors,
            vec![1, 1, 1, 1, 55]
        );
    }

    #[test]
    fn non_cyclic_jacobian() {
        // K4 has Jacobian Z/4 x Z/4.
        let edges: Vec<_> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j, 1)))
            .collect();
        let k4 = Multigraph::from_edges(4, &edges).unwrap();
        let s = smith_invariants(&k4).unwrap();
        assert_eq!(s.factors, vec![1, 4, 4]);
        assert!(!s.is_cyclic());
        assert!(matches!(
            cyclic_model(&k4),
            Err(Error::NonCyclicModel { .. })
        ));
    }

    #[test]
    fn cyclic_model_examples() {
        let m = cyclic_model(&Multigraph::strip(3)).unwrap();
        assert_eq!((m.modulus(), m.generator_images()), (8, &[0, 5, 3, 4][..]));
        let m = cyclic_model(&Multigraph::fan(4).unwrap()).unwrap();
        assert_eq!(
            (m.modulus(), m.generator_images()),
            (21, &[0, 13, 5, 2, 1][..])
        );
        // on the triangle κ(1,2) = 1: the only separating forest is the edge v1v2
        let m = cyclic_model(&Multigraph::strip(2)).unwrap();
        assert_eq!((m.modulus(), m.generator_images()), (3, &[0, 2, 1][..]));
        assert!(cyclic_model(&Multigraph::strip(0)).is_err());
    }

    #[test]
    fn additive_set_examples() {
        let a = cyclic_model(&Multigraph::strip(3)).unwrap().additive_set();
        assert_eq!(a.to_vec(), vec![0, 3, 4, 5]);
        let a = cyclic_model(&Multigraph::fan(4).unwrap())
            .unwrap()
            .additive_set();
        assert_eq!(a.to_vec(), vec![0, 1, 2, 5, 13]);
    }

    #[test]
    fn pairing_examples() {
        let p = pairing(&Multigraph::strip(2), 1, 1).unwrap();
        assert_eq!(p.to_string(), "2/3");
        let p = pairing(&Multigraph::strip(5), 0, 3).unwrap();
        assert_eq!((p.numerator, p.denominator), (0, 55));
    }

    #[test]
    fn projection_examples() {
        let g = Multigraph::strip(3);
        assert_eq!(
            pairing_projection(&g, 1).unwrap().to_vec(),
            vec![0, 3, 4, 5]
        );
        let row = g.two_forest_row(2).unwrap();
        assert_eq!(row, vec![0, 3, 5, 4]);
        for (j, &k) in row.iter().enumerate() {
            assert_eq!(
                crate::graph::forest_count_oracle(&g, 2, j).unwrap() as i128,
                k
            );
        }
        assert_eq!(
            pairing_projection(&g, 2).unwrap().to_vec(),
            vec![0, 3, 4, 5]
        );
        assert!(pairing_projection(&g, 0).is_err());
    }

    #[test]
    fn image_of_divisor() {
        let m = cyclic_model(&Multigraph::strip(8)).unwrap();
        // 2v1 - 2v0 maps to 2 F_15
        assert_eq!(m.image_of(&[-2, 2, 0, 0, 0, 0, 0, 0, 0]), (2 * 610) % 987);
    }
}
