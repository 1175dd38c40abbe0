use crate::graph::{GraphError, Node};

/// Edge list allowing self-loops, used for the derived graphs whose vertex
/// covers are (total) dominating sets of the source graph.
///
/// Construction normalizes: endpoints are stored as `(min, max)`, the list is
/// sorted, and duplicate unordered pairs are collapsed, so a pair shared by
/// several source vertices is kept once and the edge count never exceeds the
/// number of contributing vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopMultigraph {
    n: usize,
    edges: Vec<(Node, Node)>,
}

impl LoopMultigraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Node, Node)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut list: Vec<(Node, Node)> = Vec::new();
        for (u, v) in edges {
            if u as usize >= n {
                return Err(GraphError::IdOutOfRange { id: u as u64, n });
            }
            if v as usize >= n {
                return Err(GraphError::IdOutOfRange { id: v as u64, n });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(LoopMultigraph { n, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Deduplicated edges in sorted `(min, max)` order; a pair `(v, v)`
    /// encodes a loop.
    pub fn edges(&self) -> &[(Node, Node)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_loop(&self, v: Node) -> bool {
        self.edges.binary_search(&(v, v)).is_ok()
    }

    pub fn loop_vertices(&self) -> impl Iterator<Item = Node> + '_ {
        self.edges
            .iter()
            .filter(|&&(u, v)| u == v)
            .map(|&(u, _)| u)
    }

    /// Per-vertex lists of distinct neighbors, excluding the vertex itself.
    /// Loops contribute no entry here; query them via [`Self::has_loop`].
    pub fn neighbor_lists(&self) -> Vec<Vec<Node>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            if u != v {
                adj[u as usize].push(v);
                adj[v as usize].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Number of distinct non-self neighbors per vertex (the degree used by
    /// the independent-set expectation formula).
    pub fn distinct_degrees(&self) -> Vec<usize> {
        self.neighbor_lists().iter().map(|l| l.len()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedups_and_normalizes() {
        let h = LoopMultigraph::new(4, vec![(2, 1), (1, 2), (3, 3), (0, 0), (3, 3)]).unwrap();
        assert_eq!(h.edges(), &[(0, 0), (1, 2), (3, 3)]);
        assert!(h.has_loop(3));
        assert!(!h.has_loop(1));
        assert_eq!(h.loop_vertices().collect::<Vec<_>>(), vec![0, 3]);
    }

    #[test]
    fn distinct_degrees_ignore_loops() {
        let h = LoopMultigraph::new(3, vec![(0, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(h.distinct_degrees(), vec![1, 2, 1]);
    }

    #[test]
    fn rejects_bad_ids() {
        assert!(LoopMultigraph::new(2, vec![(0, 5)]).is_err());
        assert!(LoopMultigraph::new(0, Vec::new()).is_err());
    }
}
