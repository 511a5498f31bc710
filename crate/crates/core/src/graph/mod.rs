//! Loopless undirected multigraphs with an ordered vertex set `v0, ..., vn`.
//!
//! Vertex `0` is always the base vertex. The ordering is part of the graph's
//! identity: forest counts, the pairing and the cyclic model all depend on it.

mod forest;
mod io;
mod laplacian;
pub mod linalg;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use forest::{forest_count_oracle, independence_number, ORACLE_MAX_VERTICES};
pub use io::GraphFile;
pub use laplacian::LaplacianMatrix;

/// Largest vertex count accepted by exhaustive independent-set search.
pub const INDEPENDENCE_MAX_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    /// Row-major symmetric multiplicity table with zero diagonal.
    multiplicity: Vec<u32>,
    connected: bool,
}

impl Multigraph {
    /// Builds a graph from an edge list of `(i, j, multiplicity)` triples.
    ///
    /// Repeated pairs accumulate. Loops and zero multiplicities are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut multiplicity = vec![0u32; vertex_count * vertex_count];
        for &(i, j, m) in edges {
            for v in [i, j] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        index: v,
                        vertices: vertex_count,
                    });
                }
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            if m == 0 {
                return Err(Error::InvalidGraph(format!(
                    "edge {i}-{j} has multiplicity 0"
                )));
            }
            let slot = &mut multiplicity[i * vertex_count + j];
            *slot = slot
                .checked_add(m)
                .ok_or_else(|| Error::InvalidGraph(format!("multiplicity overflow on {i}-{j}")))?;
            multiplicity[j * vertex_count + i] = *slot;
        }
        Ok(Self::from_table_unchecked(vertex_count, multiplicity))
    }

    /// Builds a graph from a full multiplicity table, validating symmetry and the zero diagonal.
    pub fn from_table(table: &[Vec<u32>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            if row[i] != 0 {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            flat.extend_from_slice(row);
        }
        for i in 0..n {
            for j in 0..i {
                if flat[i * n + j] != flat[j * n + i] {
                    return Err(Error::InvalidGraph(format!("asymmetric entry ({i},{j})")));
                }
            }
        }
        Ok(Self::from_table_unchecked(n, flat))
    }

    fn from_table_unchecked(vertex_count: usize, multiplicity: Vec<u32>) -> Self {
        let mut g = Self {
            vertex_count,
            multiplicity,
            connected: false,
        };
        g.connected = g.compute_connected();
        g
    }

    fn compute_connected(&self) -> bool {
        let n = self.vertex_count;
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// The strip graph on `n + 1` vertices: `vi ~ vj` iff `|i - j|` is 1 or 2.
    pub fn strip(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..=n {
            for d in [1, 2] {
                if i + d <= n {
                    edges.push((i, i + d, 1));
                }
            }
        }
        Self::from_edges(n + 1, &edges).expect("strip edges are valid")
    }

    /// The fan graph on `n + 1` vertices: hub `v0` joined to the path `v1 - ... - vn`.
    pub fn fan(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("fan graph needs n >= 1".into()));
        }
        let mut edges: Vec<_> = (1..=n).map(|i| (0, i, 1)).collect();
        edges.extend((1..n).map(|i| (i, i + 1, 1)));
        Self::from_edges(n + 1, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.multiplicity[i * self.vertex_count + j]
    }

    pub fn valence(&self, v: usize) -> u32 {
        self.row(v).iter().sum()
    }

    fn row(&self, v: usize) -> &[u32] {
        &self.multiplicity[v * self.vertex_count..(v + 1) * self.vertex_count]
    }

    /// Distinct neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(w, _)| w)
    }

    /// Total number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges().map(|(_, _, m)| u64::from(m)).sum()
    }

    /// Edge classes `(i, j, multiplicity)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.vertex_count;
        (0..n).flat_map(move |i| {
            (i + 1..n).filter_map(move |j| {
                let m = self.multiplicity(i, j);
                (m > 0).then_some((i, j, m))
            })
        })
    }

    /// First Betti number `|E| - |V| + 1`.
    pub fn genus(&self) -> i64 {
        self.edge_count() as i64 - self.vertex_count as i64 + 1
    }

    pub fn laplacian(&self) -> LaplacianMatrix {
        LaplacianMatrix::of(self)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                vertices: self.vertex_count,
            })
        }
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Number of spanning trees, the determinant of the reduced Laplacian.
    pub fn spanning_tree_count(&self) -> Result<i128> {
        self.require_connected()?;
        linalg::determinant(&self.laplacian().reduced())
    }

    /// Number of 2-component spanning forests with `v0` in one component and
    /// both `vi`, `vj` in the other. Computed as the `(i, j)` cofactor of the
    /// reduced Laplacian.
    pub fn two_forest_count(&self, i: usize, j: usize) -> Result<i128> {
        self.require_connected()?;
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == 0 || j == 0 {
            return Ok(0);
        }
        linalg::cofactor(&self.laplacian().reduced(), i - 1, j - 1)
    }

    /// All `(i, j)` forest counts for a fixed `i`, indexed by `j = 0..=n`.
    pub fn two_forest_row(&self, i: usize) -> Result<Vec<i128>> {
        self.require_connected()?;
        self.check_vertex(i)?;
        if i == 0 {
            return Ok(vec![0; self.vertex_count]);
        }
        let reduced = self.laplacian().reduced();
        let mut row = Vec::with_capacity(self.vertex_count);
        row.push(0);
        for j in 1..self.vertex_count {
            row.push(linalg::cofactor(&reduced, i - 1, j - 1)?);
        }
        Ok(row)
    }

    pub fn independence_number(&self) -> Result<usize> {
        independence_number(self)
    }

    /// Every vertex permutation `p` with `mult(p(i), p(j)) = mult(i, j)`,
    /// in lexicographic order of `p`.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let valence: Vec<u32> = (0..n).map(|v| self.valence(v)).collect();
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_automorphism(0, &valence, &mut image, &mut used, &mut out);
        out
    }

    fn extend_automorphism(
        &self,
        v: usize,
        valence: &[u32],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = self.vertex_count;
        if v == n {
            out.push(image.clone());
            return;
        }
        for w in 0..n {
            if used[w] || valence[w] != valence[v] {
                continue;
            }
            if (0..v).any(|u| self.multiplicity(u, v) != self.multiplicity(image[u], w)) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            self.extend_automorphism(v + 1, valence, image, used, out);
            used[w] = false;
        }
        image[v] = usize::MAX;
    }
}

/// Graph families with closed-form Jacobians.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Strip,
    Fan,
}

impl Family {
    pub fn build(self, n: usize) -> Result<Multigraph> {
        match self {
            Family::Strip => Ok(Multigraph::strip(n)),
            Family::Fan => Multigraph::fan(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Strip => "strip",
            Family::Fan => "fan",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strip" => Ok(Family::Strip),
            "fan" => Ok(Family::Fan),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(g: &Multigraph) -> Vec<(usize, usize)> {
        g.edges().map(|(i, j, _)| (i, j)).collect()
    }

    #[test]
    fn strip_small_members() {
        let g0 = Multigraph::strip(0);
        assert_eq!(g0.vertex_count(), 1);
        assert_eq!(g0.edge_count(), 0);

        let g3 = Multigraph::strip(3);
        assert_eq!(edge_set(&g3), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        for n in 2..20 {
            assert_eq!(Multigraph::strip(n).edge_count(), 2 * n as u64 - 1);
        }
    }

    #[test]
    fn strip_six_valences() {
        let g = Multigraph::strip(6);
        let val: Vec<u32> = (0..7).map(|v| g.valence(v)).collect();
        assert_eq!(val, vec![2, 3, 4, 4, 4, 3, 2]);
    }

    #[test]
    fn fan_small_members() {
        assert!(Multigraph::fan(0).is_err());
        assert_eq!(edge_set(&Multigraph::fan(1).unwrap()), vec![(0, 1)]);
        assert_eq!(
            edge_set(&Multigraph::fan(3).unwrap()),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]
        );
        let f6 = Multigraph::fan(6).unwrap();
        assert_eq!(f6.valence(0), 6);
        assert_eq!(f6.edge_count(), 11);
    }

    #[test]
    fn rejects_loops_and_asymmetry() {
        assert!(Multigraph::from_edges(2, &[(1, 1, 1)]).is_err());
        assert!(Multigraph::from_edges(2, &[(0, 2, 1)]).is_err());
        assert!(Multigraph::from_table(&[vec![0, 1], vec![2, 0]]).is_err());
    }

    #[test]
    fn disconnected_graph_is_rejected_for_counting() {
        let g = Multigraph::from_edges(4, &[(0, 1, 1), (2, 3, 1)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.spanning_tree_count(), Err(Error::Disconnected));
        assert_eq!(g.two_forest_count(1, 1), Err(Error::Disconnected));
    }

    #[test]
    fn tree_counts() {
        assert_eq!(Multigraph::strip(2).spanning_tree_count().unwrap(), 3);
        assert_eq!(Multigraph::strip(3).spanning_tree_count().unwrap(), 8);
        assert_eq!(
            Multigraph::fan(8).unwrap().spanning_tree_count().unwrap(),
            987
        );
        assert_eq!(Multigraph::strip(0).spanning_tree_count().unwrap(), 1);
        // a doubled edge has two spanning trees
        let g = Multigraph::from_edges(2, &[(0, 1, 2)]).unwrap();
        assert_eq!(g.spanning_tree_count().unwrap(), 2);
    }

    #[test]
    fn forest_counts_on_strip_three() {
        let g = Multigraph::strip(3);
        assert_eq!(g.two_forest_count(1, 0).unwrap(), 0);
        assert_eq!(g.two_forest_count(1, 1).unwrap(), 5);
        assert_eq!(g.two_forest_count(1, 2).unwrap(), 3);
        assert_eq!(g.two_forest_row(1).unwrap(), vec![0, 5, 3, 4]);
    }

    #[test]
    fn strip_involution_is_an_automorphism() {
        let autos = Multigraph::strip(5).automorphisms();
        assert_eq!(autos.len(), 2);
        assert_eq!(autos[1], vec![5, 4, 3, 2, 1, 0]);
        let fan_autos = Multigraph::fan(4).unwrap().automorphisms();
        assert_eq!(fan_autos, vec![vec![0, 1, 2, 3, 4], vec![0, 4, 3, 2, 1]]);
    }
}
