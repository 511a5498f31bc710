use super::Multigraph;

/// Valency matrix minus adjacency matrix, with the row/column used for reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    size: usize,
    entries: Vec<i128>,
    base_index: usize,
}

impl LaplacianMatrix {
    pub(super) fn of(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut entries = vec![0i128; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    entries[i * n + j] = -i128::from(g.multiplicity(i, j));
                }
            }
            entries[i * n + i] = i128::from(g.valence(i));
        }
        Self {
            size: n,
            entries,
            base_index: 0,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn base_index(&self) -> usize {
        self.base_index
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i128>> {
        self.entries
            .chunks(self.size)
            .map(<[i128]>::to_vec)
            .collect()
    }

    /// The matrix with the base row and column deleted.
    pub fn reduced(&self) -> Vec<Vec<i128>> {
        (0..self.size)
            .filter(|&i| i != self.base_index)
            .map(|i| {
                (0..self.size)
                    .filter(|&j| j != self.base_index)
                    .map(|j| self.get(i, j))
                    .collect()
            })
            .collect()
    }

    /// `L x` for an integer vector `x`.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j) as i64 * x[j]).sum())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagonal(l: &LaplacianMatrix) -> Vec<i128> {
        (0..l.size()).map(|i| l.get(i, i)).collect()
    }

    #[test]
    fn triangle() {
        let l = Multigraph::strip(2).laplacian();
        assert_eq!(
            l.rows(),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
    }

    #[test]
    fn diagonals_match_valence() {
        assert_eq!(
            diagonal(&Multigraph::strip(3).laplacian()),
            vec![2, 3, 3, 2]
        );
        assert_eq!(
            diagonal(&Multigraph::fan(3).unwrap().laplacian()),
            vec![3, 2, 3, 2]
        );
    }

    #[test]
    fn rows_sum_to_zero_and_symmetric() {
        for g in [Multigraph::strip(7), Multigraph::fan(6).unwrap()] {
            let l = g.laplacian();
            for i in 0..l.size() {
                assert_eq!((0..l.size()).map(|j| l.get(i, j)).sum::<i128>(), 0);
                for j in 0..l.size() {
                    assert_eq!(l.get(i, j), l.get(j, i));
                }
            }
        }
    }

    #[test]
    fn reduced_drops_base() {
        let r = Multigraph::strip(2).laplacian().reduced();
        assert_eq!(r, vec![vec![2, -1], vec![-1, 2]]);
    }
}
