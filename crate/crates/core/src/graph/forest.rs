use super::{Multigraph, INDEPENDENCE_MAX_VERTICES};
use crate::error::{Error, Result};

/// Largest graph the brute-force forest enumeration accepts.
pub const ORACLE_MAX_VERTICES: usize = 12;

/// Counts 2-component spanning forests separating `v0` from `{vi, vj}` by
/// enumerating every acyclic edge subset of size `|V| - 2`.
///
/// Parallel edges are distinct edges here. Independent of the cofactor route.
pub fn forest_count_oracle(g: &Multigraph, i: usize, j: usize) -> Result<u64> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "forest enumeration",
            limit: ORACLE_MAX_VERTICES,
            got: n,
        });
    }
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    g.require_connected()?;
    if i == 0 || j == 0 || n < 2 {
        return Ok(0);
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .flat_map(|(a, b, m)| std::iter::repeat_n((a, b), m as usize))
        .collect();
    let mut search = ForestSearch {
        edges: &edges,
        target: n - 2,
        i,
        j,
        count: 0,
    };
    search.run(0, 0, &mut (0..n).collect());
    Ok(search.count)
}

struct ForestSearch<'a> {
    edges: &'a [(usize, usize)],
    target: usize,
    i: usize,
    j: usize,
    count: u64,
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

impl ForestSearch<'_> {
    fn run(&mut self, next: usize, chosen: usize, parent: &mut Vec<usize>) {
        if chosen == self.target {
            let root0 = find(parent, 0);
            let root_i = find(parent, self.i);
            if root0 != root_i && root_i == find(parent, self.j) {
                self.count += 1;
            }
            return;
        }
        if self.edges.len() - next < self.target - chosen {
            return;
        }
        let (a, b) = self.edges[next];
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
            self.run(next + 1, chosen + 1, parent);
            parent[ra] = ra;
        }
        self.run(next + 1, chosen, parent);
    }
}

/// Exact independence number by branch and bound over vertices.
pub fn independence_number(g: &Multigraph) -> Result<usize> {
    let n = g.vertex_count();
    if n > INDEPENDENCE_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "independence number search",
            limit: INDEPENDENCE_MAX_VERTICES,
            got: n,
        });
    }
    let adjacency: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |acc, w| acc | (1 << w)))
        .collect();
    let mut best = 0;
    grow_independent(&adjacency, (1u32 << n) - 1, 0, &mut best);
    Ok(best)
}

fn grow_independent(adjacency: &[u32], candidates: u32, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << v);
    grow_independent(adjacency, rest & !adjacency[v], size + 1, best);
    grow_independent(adjacency, rest, size, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        assert_eq!(forest_count_oracle(&Multigraph::strip(3), 1, 2).unwrap(), 3);
        assert_eq!(forest_count_oracle(&Multigraph::strip(2), 1, 1).unwrap(), 2);
        assert_eq!(forest_count_oracle(&Multigraph::strip(2), 1, 2).unwrap(), 1);
        for j in 0..4 {
            assert_eq!(forest_count_oracle(&Multigraph::strip(3), 0, j).unwrap(), 0);
        }
    }

    #[test]
    fn oracle_counts_parallel_edges_separately() {
        // v0 =2= v1 -- v2: separating v0 from {v1,v2} keeps edge 12 and drops both 01 copies.
        let g = Multigraph::from_edges(3, &[(0, 1, 2), (1, 2, 1)]).unwrap();
        assert_eq!(forest_count_oracle(&g, 1, 2).unwrap(), 1);
        assert_eq!(forest_count_oracle(&g, 1, 1).unwrap(), 1);
        assert_eq!(g.two_forest_count(1, 1).unwrap(), 1);
    }

    #[test]
    fn oracle_size_limit() {
        let err = forest_count_oracle(&Multigraph::strip(12), 1, 1).unwrap_err();
        assert!(matches!(
            err,
            Error::SizeLimit {
                limit: 12,
                got: 13,
                ..
            }
        ));
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&Multigraph::strip(2)).unwrap(), 1);
        assert_eq!(independence_number(&Multigraph::strip(6)).unwrap(), 3);
        assert_eq!(
            independence_number(&Multigraph::fan(6).unwrap()).unwrap(),
            3
        );
        assert_eq!(independence_number(&Multigraph::strip(0)).unwrap(), 1);
        assert!(independence_number(&Multigraph::strip(24)).is_err());
    }
}
