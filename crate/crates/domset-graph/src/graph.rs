use thiserror::Error;

/// Vertex identifier. Ids are dense in `[0, n)`.
pub type Node = u32;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex id {id} out of range for a graph with {n} vertices")]
    IdOutOfRange { id: u64, n: usize },
}

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending, contain no duplicates and no
/// self-loops, and are symmetric (`u ∈ N(v)` iff `v ∈ N(u)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<Node>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Self-loops are dropped, duplicate edges (in either orientation) are
    /// collapsed, and the adjacency is symmetrized.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Node, Node)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut pairs: Vec<(Node, Node)> = Vec::new();
        for (u, v) in edges {
            if u as usize >= n {
                return Err(GraphError::IdOutOfRange { id: u as u64, n });
            }
            if v as usize >= n {
                return Err(GraphError::IdOutOfRange { id: v as u64, n });
            }
            if u == v {
                continue;
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut degrees = vec![0usize; n];
        for &(u, v) in &pairs {
            degrees[u as usize] += 1;
            degrees[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degrees {
            acc += d;
            offsets.push(acc);
        }
        let mut fill = offsets.clone();
        let mut neighbors = vec![0 as Node; acc];
        // Iterating the sorted pair list keeps every per-vertex list sorted:
        // a vertex first receives all smaller endpoints in ascending order,
        // then all larger ones.
        for &(u, v) in &pairs {
            neighbors[fill[u as usize]] = v;
            fill[u as usize] += 1;
            neighbors[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        let g = Graph {
            offsets,
            neighbors,
            edge_count: pairs.len(),
        };
        debug_assert!(g.is_well_formed());
        Ok(g)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Node) -> &[Node] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn degree(&self, v: Node) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Node, v: Node) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Node> + '_ {
        (0..self.vertex_count() as Node).into_iter()
    }

    /// Iterator over all undirected edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Node, Node)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors(u).iter().copied().map(move |v| (u, v)))
            .filter(|&(u, v)| u < v)
    }

    pub fn isolated_vertices(&self) -> Vec<Node> {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.vertices().any(|v| self.degree(v) == 0)
    }

    /// Full-scan structural check: sorted, duplicate-free, loop-free,
    /// symmetric adjacency with a consistent edge count.
    pub fn is_well_formed(&self) -> bool {
        let n = self.vertex_count();
        let mut directed = 0usize;
        for v in self.vertices() {
            let list = self.neighbors(v);
            directed += list.len();
            for (i, &u) in list.iter().enumerate() {
                if u as usize >= n || u == v {
                    return false;
                }
                if i > 0 && list[i - 1] >= u {
                    return false;
                }
                if !self.neighbors(u).binary_search(&v).is_ok() {
                    return false;
                }
            }
        }
        directed == 2 * self.edge_count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_normalizes() {
        let g = Graph::from_edges(3, vec![(0, 1), (1, 0), (2, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(0, 2));
        assert!(g.is_well_formed());
    }

    #[test]
    fn rejects_empty_and_out_of_range() {
        assert!(matches!(
            Graph::from_edges(0, Vec::new()),
            Err(GraphError::Empty)
        ));
        assert!(matches!(
            Graph::from_edges(2, vec![(0, 2)]),
            Err(GraphError::IdOutOfRange { id: 2, .. })
        ));
    }

    #[test]
    fn isolated_vertex_detection() {
        let g = Graph::from_edges(4, vec![(0, 1)]).unwrap();
        assert_eq!(g.isolated_vertices(), vec![2, 3]);
        assert!(g.has_isolated_vertex());
        assert_eq!(g.max_degree(), 1);
    }

    #[test]
    fn edge_iterator_matches_count() {
        let g = Graph::from_edges(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges.len(), g.edge_count());
        assert!(edges.iter().all(|&(u, v)| u < v));
    }
}
