//! Constrained domination: each vertex must be dominated by a vertex from
//! its own allowed list `A_v ⊆ N(v)`, so the marking pool of `v` is `A_v`
//! instead of a neighborhood.

use domset_algos::rng::beats;
use domset_algos::{mark_r_values, RngPolicy};
use domset_graph::{Graph, Node, SetKind, VertexSet};

use crate::error::ExtError;

/// Per-vertex allowed dominator lists.
#[derive(Clone, Debug)]
pub struct ConstraintMap {
    allowed: Vec<Vec<Node>>,
}

impl ConstraintMap {
    /// Validates that every listed candidate is a neighbor of its vertex.
    /// Emptiness is checked by the solver, which names the vertex.
    pub fn new(g: &Graph, allowed: Vec<Vec<Node>>) -> Result<Self, ExtError> {
        if allowed.len() != g.vertex_count() {
            return Err(ExtError::StateMismatch);
        }
        let mut normalized = Vec::with_capacity(allowed.len());
        for (v, mut list) in allowed.into_iter().enumerate() {
            list.sort_unstable();
            list.dedup();
            for &candidate in &list {
                if !g.has_edge(v as Node, candidate) {
                    return Err(ExtError::ConstraintNotNeighbor {
                        vertex: v as Node,
                        candidate,
                    });
                }
            }
            normalized.push(list);
        }
        Ok(ConstraintMap { allowed: normalized })
    }

    /// The unconstrained case: `A_v = N(v)` for every vertex.
    pub fn open_neighborhoods(g: &Graph) -> Self {
        ConstraintMap {
            allowed: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }

    pub fn allowed(&self, v: Node) -> &[Node] {
        &self.allowed[v as usize]
    }
}

/// Marking with per-vertex pools restricted to the allowed lists. Every
/// vertex ends up with a dominator inside its own list.
pub fn constrained_alg1(
    g: &Graph,
    constraints: &ConstraintMap,
    m: usize,
    policy: &RngPolicy,
) -> Result<VertexSet, ExtError> {
    let n = g.vertex_count();
    if constraints.allowed.len() != n {
        return Err(ExtError::StateMismatch);
    }
    if let Some(v) = constraints.allowed.iter().position(|a| a.is_empty()) {
        return Err(ExtError::EmptyConstraint { vertex: v as Node });
    }
    let r = mark_r_values(policy, n);
    let mut counts: Vec<u32> = g.vertices().map(|v| g.degree(v) as u32).collect();
    let pick = |v: Node, counts: &[u32]| -> Node {
        let mut best: Option<Node> = None;
        for &u in constraints.allowed(v) {
            let better = match best {
                None => true,
                Some(b) => match counts[u as usize].cmp(&counts[b as usize]) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => beats(r[u as usize], u, r[b as usize], b),
                },
            };
            if better {
                best = Some(u);
            }
        }
        best.expect("emptiness checked above")
    };

    let mut targets: Vec<Node> = g.vertices().map(|v| pick(v, &counts)).collect();
    let mut x = tally(&targets, n);
    for _ in 0..m {
        counts.copy_from_slice(&x);
        for v in g.vertices() {
            targets[v as usize] = pick(v, &counts);
        }
        x = tally(&targets, n);
    }
    let members: Vec<Node> = (0..n as Node).filter(|&v| x[v as usize] > 0).collect();
    let result = VertexSet::new(SetKind::TotalDominating, members);
    debug_assert!(g
        .vertices()
        .all(|v| constraints.allowed(v).iter().any(|&u| result.contains(u))));
    Ok(result)
}

fn tally(targets: &[Node], n: usize) -> Vec<u32> {
    let mut x = vec![0u32; n];
    for &t in targets {
        x[t as usize] += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use domset_algos::{alg1, Scope};
    use domset_testkit::{gnp_without_isolated, star};

    #[test]
    fn unconstrained_equals_open_scope_marking() {
        for seed in 0..20 {
            let g = gnp_without_isolated(30, 0.15, seed);
            let policy = RngPolicy::new(seed);
            let constrained =
                constrained_alg1(&g, &ConstraintMap::open_neighborhoods(&g), 5, &policy).unwrap();
            let (open, _) = alg1(&g, 5, &policy, Scope::Open).unwrap();
            assert_eq!(constrained.members(), open.members(), "seed {seed}");
        }
    }

    #[test]
    fn star_leaves_constrained_to_center() {
        let g = star(5);
        // Leaves may only be dominated by the center; the center may use
        // any leaf.
        let mut allowed = vec![vec![0 as Node]; 6];
        allowed[0] = (1..=5).collect();
        let constraints = ConstraintMap::new(&g, allowed).unwrap();
        let result = constrained_alg1(&g, &constraints, 5, &RngPolicy::new(9)).unwrap();
        assert!(result.contains(0));
        assert_eq!(result.len(), 2);
        assert!(result.iter().skip(1).all(|v| (1..=5).contains(&v)));
    }

    #[test]
    fn empty_constraint_names_the_vertex() {
        let g = star(3);
        let mut allowed = vec![vec![0 as Node]; 4];
        allowed[0] = Vec::new();
        let constraints = ConstraintMap::new(&g, allowed).unwrap();
        let err = constrained_alg1(&g, &constraints, 5, &RngPolicy::new(0)).unwrap_err();
        assert!(matches!(err, ExtError::EmptyConstraint { vertex: 0 }));
    }

    #[test]
    fn non_neighbor_constraint_rejected() {
        let g = star(3);
        let allowed = vec![vec![1], vec![0], vec![0], vec![1]];
        let err = ConstraintMap::new(&g, allowed).unwrap_err();
        assert!(matches!(
            err,
            ExtError::ConstraintNotNeighbor { vertex: 3, candidate: 1 }
        ));
    }

    #[test]
    fn every_vertex_gets_an_allowed_dominator() {
        for seed in 0..30 {
            let g = gnp_without_isolated(25, 0.2, 100 + seed);
            // Constrain each vertex to its first two neighbors.
            let allowed: Vec<Vec<Node>> = g
                .vertices()
                .map(|v| g.neighbors(v).iter().copied().take(2).collect())
                .collect();
            let constraints = ConstraintMap::new(&g, allowed).unwrap();
            let result = constrained_alg1(&g, &constraints, 5, &RngPolicy::new(seed)).unwrap();
            for v in g.vertices() {
                assert!(
                    constraints.allowed(v).iter().any(|&u| result.contains(u)),
                    "seed {seed} vertex {v}"
                );
            }
        }
    }
}
