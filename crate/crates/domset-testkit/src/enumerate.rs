//! Exhaustive enumeration of small connected graphs up to isomorphism.
//!
//! Graphs on `k` vertices are encoded as bitmasks over the `k*(k-1)/2`
//! vertex pairs. Level `k` is grown from level `k-1` by attaching a new
//! vertex with every non-empty neighborhood (every connected graph arises
//! this way because some vertex is not a cut vertex), and candidates are
//! deduplicated by the minimum mask over all vertex permutations.

use std::collections::HashSet;

use domset_graph::{Graph, Node};

const MAX_N: usize = 7;

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    // Row-major upper triangle.
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = vec![Vec::new()];
    for i in 0..n {
        let mut next = Vec::new();
        for p in perms {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, i);
                next.push(q);
            }
        }
        perms = next;
    }
    perms
}

/// For each permutation, the induced mapping of pair indices.
fn pair_maps(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
        .into_iter()
        .map(|perm| {
            let mut map = vec![0usize; n * (n - 1) / 2];
            for u in 0..n {
                for v in u + 1..n {
                    let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                    map[pair_index(n, u, v)] = pair_index(n, a, b);
                }
            }
            map
        })
        .collect()
}

fn canonical(mask: u32, maps: &[Vec<usize>]) -> u32 {
    let mut best = u32::MAX;
    for map in maps {
        let mut image = 0u32;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            image |= 1 << map[i];
            bits &= bits - 1;
        }
        best = best.min(image);
    }
    best
}

fn mask_to_graph(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << pair_index(n, u, v)) != 0 {
                edges.push((u as Node, v as Node));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// All connected graphs with `1..=max_n` vertices, one representative per
/// isomorphism class. `max_n` must be at most 7.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    assert!(max_n >= 1 && max_n <= MAX_N, "supported range is 1..=7");
    let mut out = vec![mask_to_graph(1, 0)];
    let mut level: Vec<u32> = vec![0]; // connected graphs on k-1 vertices
    for n in 2..=max_n {
        let maps = pair_maps(n);
        let mut seen: HashSet<u32> = HashSet::new();
        let mut next_level = Vec::new();
        for &parent in &level {
            // Re-encode the parent's pairs in the n-vertex index space.
            let mut base = 0u32;
            for u in 0..n - 1 {
                for v in u + 1..n - 1 {
                    if parent & (1 << pair_index(n - 1, u, v)) != 0 {
                        base |= 1 << pair_index(n, u, v);
                    }
                }
            }
            for nb in 1u32..(1 << (n - 1)) {
                let mut mask = base;
                for u in 0..n - 1 {
                    if nb & (1 << u) != 0 {
                        mask |= 1 << pair_index(n, u, n - 1);
                    }
                }
                let canon = canonical(mask, &maps);
                if seen.insert(canon) {
                    next_level.push(canon);
                }
            }
        }
        next_level.sort_unstable();
        out.extend(next_level.iter().map(|&m| mask_to_graph(n, m)));
        level = next_level;
    }
    out
}
