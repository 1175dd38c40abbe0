//! Test support: seeded random instances and small named graphs.
//!
//! Everything here is deterministic in the seed, so suites that sweep
//! hundreds of instances stay reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use domset_graph::{Graph, LoopMultigraph, Node};

mod enumerate;

pub use enumerate::connected_graphs_up_to;

/// Erdős–Rényi G(n, p).
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as Node {
        for v in u + 1..n as Node {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("n >= 1")
}

/// G(n, p) patched so no vertex is isolated: each isolated vertex gets one
/// edge to a uniformly random other vertex.
pub fn gnp_without_isolated(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 2);
    let g = gnp(n, p, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges: Vec<(Node, Node)> = g.edges().collect();
    for v in g.isolated_vertices() {
        let mut other = rng.gen_range(0..n as Node - 1);
        if other >= v {
            other += 1;
        }
        edges.push((v, other));
    }
    Graph::from_edges(n, edges).expect("n >= 1")
}

/// Random loop multigraph with roughly `edges` distinct non-loop edges and
/// `loops` loops.
pub fn random_multigraph(n: usize, edges: usize, loops: usize, seed: u64) -> LoopMultigraph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut list = Vec::new();
    for _ in 0..edges {
        let u = rng.gen_range(0..n as Node);
        let v = rng.gen_range(0..n as Node);
        if u != v {
            list.push((u, v));
        }
    }
    for _ in 0..loops {
        let v = rng.gen_range(0..n as Node);
        list.push((v, v));
    }
    LoopMultigraph::new(n, list).expect("ids in range")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i as Node, i as Node + 1))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i as Node, ((i + 1) % n) as Node))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as Node {
        for v in u + 1..n as Node {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Star K_{1,leaves}; the center is vertex 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves as Node).map(|v| (0, v))).unwrap()
}

pub fn petersen() -> Graph {
    let outer = (0..5u32).map(|i| (i, (i + 1) % 5));
    let inner = (0..5u32).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5u32).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).unwrap()
}
