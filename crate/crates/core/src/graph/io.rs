use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::error::{Error, Result};

/// On-disk graph form: `{"vertices": n+1, "edges": [[i, j, multiplicity], ...]}`.
///
/// The canonical encoding has `i < j`, multiplicity at least 1, and edges in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[u64; 3]>,
}

impl GraphFile {
    pub fn from_graph(g: &Multigraph) -> Self {
        Self {
            vertices: g.vertex_count(),
            edges: g
                .edges()
                .map(|(i, j, m)| [i as u64, j as u64, u64::from(m)])
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Multigraph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[i, j, m] in &self.edges {
            if i >= j {
                return Err(Error::Parse(format!(
                    "edge [{i}, {j}, {m}] must have i < j"
                )));
            }
            let m = u32::try_from(m).ok().filter(|&m| m >= 1).ok_or_else(|| {
                Error::Parse(format!("edge [{i}, {j}, {m}] has bad multiplicity"))
            })?;
            edges.push((i as usize, j as usize, m));
        }
        Multigraph::from_edges(self.vertices, &edges)
    }
}

impl Multigraph {
    /// Canonical JSON text, terminated by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&GraphFile::from_graph(self))
            .expect("graph file serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)?;
        file.to_graph()
    }
}
