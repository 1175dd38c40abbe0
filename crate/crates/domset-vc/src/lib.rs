//! Vertex-cover backends.
//!
//! Derived-graph covers are what turn the marking algorithms' output into
//! dominating sets, so the cover solver is pluggable: a maximal-matching
//! 2-approximation (the default), a max-degree greedy heuristic with no
//! approximation promise, and an exact solver for small instances that
//! delegates to the brute-force oracle.
//!
//! All backends honor the loop rule (a loop forces its vertex into the
//! cover) and are deterministic: the matching scans edges in normalized
//! input order, the greedy breaks degree ties by smaller vertex id.

use thiserror::Error;

use domset_graph::oracle::{self, OracleError, ORACLE_VERTEX_LIMIT};
use domset_graph::{is_vertex_cover, LoopMultigraph, Node, SetKind, VertexSet};

#[derive(Debug, Error)]
pub enum CoverError {
    #[error("instance has {n} vertices, exact cover cap is {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// Selects a vertex-cover backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverSolver {
    /// Loops first, then both endpoints of a greedily maximal matching.
    /// Guaranteed within a factor 2 of optimal.
    Matching2Approx,
    /// Loops first, then repeatedly the vertex covering the most remaining
    /// edges. No approximation promise.
    Greedy,
    /// Exact via the brute-force oracle; refuses instances above `cap`.
    ExactSmall { cap: usize },
}

impl CoverSolver {
    /// Exact solver at the oracle's own limit.
    pub fn exact() -> Self {
        CoverSolver::ExactSmall {
            cap: ORACLE_VERTEX_LIMIT,
        }
    }

    pub fn solve(&self, h: &LoopMultigraph) -> Result<VertexSet, CoverError> {
        match *self {
            CoverSolver::Matching2Approx => Ok(vc_matching(h)),
            CoverSolver::Greedy => Ok(vc_greedy(h)),
            CoverSolver::ExactSmall { cap } => vc_exact(h, cap),
        }
    }
}

/// 2-approximate cover: every looped vertex, then both endpoints of each
/// edge not yet covered, scanning in normalized edge order.
pub fn vc_matching(h: &LoopMultigraph) -> VertexSet {
    let mut in_cover = vec![false; h.vertex_count()];
    for v in h.loop_vertices() {
        in_cover[v as usize] = true;
    }
    for &(u, v) in h.edges() {
        if u != v && !in_cover[u as usize] && !in_cover[v as usize] {
            in_cover[u as usize] = true;
            in_cover[v as usize] = true;
        }
    }
    collect(&in_cover)
}

/// Greedy cover: loops first, then a max-remaining-degree vertex per step
/// (ties by smaller id) until every edge is covered.
pub fn vc_greedy(h: &LoopMultigraph) -> VertexSet {
    let n = h.vertex_count();
    let mut in_cover = vec![false; n];
    for v in h.loop_vertices() {
        in_cover[v as usize] = true;
    }
    let adj = h.neighbor_lists();
    let mut remaining: Vec<usize> = (0..n)
        .map(|v| {
            if in_cover[v] {
                return 0;
            }
            adj[v].iter().filter(|&&u| !in_cover[u as usize]).count()
        })
        .collect();
    loop {
        let Some((v, _)) = remaining
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d > 0)
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        else {
            break;
        };
        in_cover[v] = true;
        remaining[v] = 0;
        for &u in &adj[v] {
            if !in_cover[u as usize] && remaining[u as usize] > 0 {
                remaining[u as usize] -= 1;
            }
        }
    }
    collect(&in_cover)
}

/// Exact minimum cover for instances with at most `cap` vertices (further
/// bounded by the oracle's own limit).
pub fn vc_exact(h: &LoopMultigraph, cap: usize) -> Result<VertexSet, CoverError> {
    let cap = cap.min(ORACLE_VERTEX_LIMIT);
    if h.vertex_count() > cap {
        return Err(CoverError::TooLarge {
            n: h.vertex_count(),
            cap,
        });
    }
    match oracle::brute_force_mvc(h) {
        Ok(set) => Ok(set),
        Err(OracleError::TooLarge { n, limit }) => Err(CoverError::TooLarge { n, cap: limit }),
        Err(other) => unreachable!("mvc oracle only fails on size: {other}"),
    }
}

fn collect(in_cover: &[bool]) -> VertexSet {
    let members = in_cover
        .iter()
        .enumerate()
        .filter(|&(_, &b)| b)
        .map(|(v, _)| v as Node)
        .collect();
    VertexSet::new(SetKind::VertexCover, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_loop_and_edge() {
        let h = LoopMultigraph::new(2, vec![(0, 0)]).unwrap();
        assert_eq!(vc_matching(&h).members(), &[0]);

        let h = LoopMultigraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(vc_matching(&h).members(), &[0, 1]);
    }

    #[test]
    fn matching_on_c5_within_factor_two() {
        let h = LoopMultigraph::new(5, (0..5).map(|i| (i as Node, ((i + 1) % 5) as Node)))
            .unwrap();
        let cover = vc_matching(&h);
        assert!(is_vertex_cover(&h, &cover));
        assert!(cover.len() >= 3 && cover.len() <= 6);
    }

    #[test]
    fn greedy_star_and_edgeless() {
        let h = LoopMultigraph::new(5, (1..5).map(|v| (0, v as Node))).unwrap();
        assert_eq!(vc_greedy(&h).members(), &[0]);

        let h = LoopMultigraph::new(3, Vec::new()).unwrap();
        assert!(vc_greedy(&h).is_empty());
    }

    #[test]
    fn exact_delegates_and_refuses() {
        let h = LoopMultigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(vc_exact(&h, 30).unwrap().len(), 2);
        assert!(matches!(
            vc_exact(&h, 2),
            Err(CoverError::TooLarge { n: 3, cap: 2 })
        ));
    }

    #[test]
    fn all_backends_cover_random_instances() {
        for seed in 0..50 {
            let h = domset_testkit::random_multigraph(12, 18, 2, seed);
            let exact = vc_exact(&h, 30).unwrap();
            for solver in [
                CoverSolver::Matching2Approx,
                CoverSolver::Greedy,
                CoverSolver::exact(),
            ] {
                let cover = solver.solve(&h).unwrap();
                assert!(is_vertex_cover(&h, &cover), "{solver:?} seed {seed}");
                assert!(cover.len() >= exact.len());
            }
            let matching = vc_matching(&h);
            assert!(matching.len() <= 2 * exact.len());
        }
    }
}
