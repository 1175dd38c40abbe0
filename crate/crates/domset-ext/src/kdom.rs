//! k-distance domination: a k-distance dominating set of `g` is exactly a
//! dominating set of the power graph `g^k`, so the marking pipeline runs on
//! the materialized power graph. Materialization is capped because powers of
//! dense graphs explode quadratically.

use std::collections::VecDeque;

use domset_algos::{alg2, RngPolicy, Scope};
use domset_graph::{Graph, Node, VertexSet};
use domset_vc::CoverSolver;

use crate::error::ExtError;

/// Default cap on materialized power-graph edges.
pub const DEFAULT_MAX_POWER_EDGES: usize = 50_000_000;

/// [`k_dominating_with_limit`] at the default materialization cap.
pub fn k_dominating(
    g: &Graph,
    k: usize,
    m: usize,
    policy: &RngPolicy,
    solver: CoverSolver,
    scope: Scope,
) -> Result<VertexSet, ExtError> {
    k_dominating_with_limit(g, k, m, policy, solver, scope, DEFAULT_MAX_POWER_EDGES)
}

/// Runs the refined marking algorithm on `g^k` and re-verifies the result
/// against `g` by breadth-first search from the returned set.
pub fn k_dominating_with_limit(
    g: &Graph,
    k: usize,
    m: usize,
    policy: &RngPolicy,
    solver: CoverSolver,
    scope: Scope,
    max_power_edges: usize,
) -> Result<VertexSet, ExtError> {
    assert!(k >= 1, "k-distance domination requires k >= 1");
    let power = bounded_power_graph(g, k, max_power_edges)?;
    let result = alg2(&power, m, policy, scope, solver)?;
    assert!(
        is_k_dominating(g, &result, k),
        "power-graph solution must dominate within distance k"
    );
    Ok(result)
}

/// Depth-limited BFS power graph, refusing once the edge budget is passed.
fn bounded_power_graph(g: &Graph, k: usize, max_edges: usize) -> Result<Graph, ExtError> {
    if k == 1 {
        return Ok(g.clone());
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
            if dist[v as usize] == k {
                continue;
            }
            for &u in g.neighbors(v) {
                if dist[u as usize] == usize::MAX {
                    dist[u as usize] = dist[v as usize] + 1;
                    touched.push(u);
                    queue.push_back(u);
                }
            }
        }
        for &u in &touched {
            if u > s {
                edges.push((s, u));
                if edges.len() > max_edges {
                    return Err(ExtError::PowerGraphTooDense { limit: max_edges });
                }
            }
            dist[u as usize] = usize::MAX;
        }
        touched.clear();
    }
    Ok(Graph::from_edges(n, edges).expect("same vertex set as g"))
}

/// Multi-source BFS check: every vertex within distance `k` of `s`.
pub fn is_k_dominating(g: &Graph, s: &VertexSet, k: usize) -> bool {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in s.iter() {
        dist[v as usize] = 0;
        queue.push_back(v);
    }
    let mut reached = s.len();
    while let Some(v) = queue.pop_front() {
        if dist[v as usize] == k {
            continue;
        }
        for &u in g.neighbors(v) {
            if dist[u as usize] == usize::MAX {
                dist[u as usize] = dist[v as usize] + 1;
                reached += 1;
                queue.push_back(u);
            }
        }
    }
    reached == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use domset_graph::power_graph;
    use domset_testkit::{cycle, gnp, path};

    #[test]
    fn p5_with_k2_needs_one_vertex() {
        let g = path(5);
        let s = k_dominating(
            &g,
            2,
            5,
            &RngPolicy::new(0),
            CoverSolver::exact(),
            Scope::Closed,
        )
        .unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn k1_equals_plain_refined_run() {
        let g = cycle(7);
        let policy = RngPolicy::new(3);
        let via_k = k_dominating(&g, 1, 5, &policy, CoverSolver::exact(), Scope::Closed).unwrap();
        let direct = alg2(&g, 5, &policy, Scope::Closed, CoverSolver::exact()).unwrap();
        assert_eq!(via_k, direct);
    }

    #[test]
    fn bounded_power_matches_unbounded() {
        for seed in 0..10 {
            let g = gnp(25, 0.1, seed);
            for k in 1..=3 {
                let bounded = bounded_power_graph(&g, k, usize::MAX).unwrap();
                assert_eq!(bounded, power_graph(&g, k), "seed {seed} k {k}");
            }
        }
    }

    #[test]
    fn edge_cap_refuses_dense_powers() {
        let g = cycle(50);
        let err = k_dominating_with_limit(
            &g,
            5,
            2,
            &RngPolicy::new(0),
            CoverSolver::Matching2Approx,
            Scope::Closed,
            10,
        )
        .unwrap_err();
        assert!(matches!(err, ExtError::PowerGraphTooDense { limit: 10 }));
    }
}
