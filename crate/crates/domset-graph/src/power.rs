use std::collections::VecDeque;

use crate::graph::{Graph, Node};

/// `k`-th power of `g`: an edge joins `u, v` iff `1 <= dist_g(u, v) <= k`.
///
/// Computed by a depth-limited BFS from every vertex. `k` must be >= 1;
/// `k = 1` reproduces `g` exactly.
pub fn power_graph(g: &Graph, k: usize) -> Graph {
    assert!(k >= 1, "power_graph requires k >= 1");
    if k == 1 {
        return g.clone();
    }
    let n = g.vertex_count();
    let mut edges: Vec<(Node, Node)> = Vec::new();
    let mut dist = vec![usize::MAX; n];
    let mut touched: Vec<Node> = Vec::new();
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        dist[s as usize] = 0;
        touched.push(s);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize];
            if d == k {
                continue;
            }
            for &u in g.neighbors(v) {
                if dist[u as usize] == usize::MAX {
                    dist[u as usize] = d + 1;
                    touched.push(u);
                    queue.push_back(u);
                }
            }
        }
        for &u in &touched {
            if u > s {
                edges.push((s, u));
            }
            dist[u as usize] = usize::MAX;
        }
        touched.clear();
    }
    Graph::from_edges(n, edges).expect("power graph shares the vertex set of g")
}
