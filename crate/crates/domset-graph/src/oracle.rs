//! Exact brute-force solvers for desk-scale instances.
//!
//! These are the reference oracles the rest of the workspace is validated
//! against. Search is ordered by solution size (iterative deepening) and
//! branches on the first unsatisfied vertex or edge, so the worst case stays
//! well under a minute at the enforced vertex cap.

use thiserror::Error;

use crate::graph::{Graph, Node};
use crate::multigraph::LoopMultigraph;
use crate::set::{SetKind, VertexSet};

/// Instances above this vertex count are refused.
pub const ORACLE_VERTEX_LIMIT: usize = 30;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("instance has {n} vertices, oracle limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("total domination is infeasible: vertex {vertex} is isolated")]
    IsolatedVertex { vertex: Node },
}

fn check_size(n: usize) -> Result<(), OracleError> {
    if n > ORACLE_VERTEX_LIMIT {
        return Err(OracleError::TooLarge {
            n,
            limit: ORACLE_VERTEX_LIMIT,
        });
    }
    Ok(())
}

/// Minimum dominating set; `|result| = γ(g)`.
pub fn brute_force_mds(g: &Graph) -> Result<VertexSet, OracleError> {
    check_size(g.vertex_count())?;
    let n = g.vertex_count();
    let mut covered = vec![0u8; n];
    let mut chosen = Vec::new();
    for budget in 1..=n {
        if search_ds(g, budget, &mut covered, n, &mut chosen) {
            return Ok(VertexSet::new(SetKind::Dominating, chosen));
        }
        debug_assert!(chosen.is_empty());
    }
    unreachable!("the full vertex set always dominates");
}

fn search_ds(
    g: &Graph,
    budget: usize,
    covered: &mut [u8],
    uncovered: usize,
    chosen: &mut Vec<Node>,
) -> bool {
    if uncovered == 0 {
        return true;
    }
    if budget == 0 || uncovered > budget * (g.max_degree() + 1) {
        return false;
    }
    // Every dominating set must hit the closed neighborhood of the first
    // uncovered vertex; branching on it keeps the search complete.
    let v = covered.iter().position(|&c| c == 0).unwrap() as Node;
    let mut candidates: Vec<Node> = vec![v];
    candidates.extend_from_slice(g.neighbors(v));
    candidates.sort_unstable();
    for c in candidates {
        let mut newly = 0usize;
        add_closed(g, c, covered, &mut newly);
        chosen.push(c);
        if search_ds(g, budget - 1, covered, uncovered - newly, chosen) {
            return true;
        }
        chosen.pop();
        remove_closed(g, c, covered);
    }
    false
}

fn add_closed(g: &Graph, c: Node, covered: &mut [u8], newly: &mut usize) {
    if covered[c as usize] == 0 {
        *newly += 1;
    }
    covered[c as usize] += 1;
    for &w in g.neighbors(c) {
        if covered[w as usize] == 0 {
            *newly += 1;
        }
        covered[w as usize] += 1;
    }
}

fn remove_closed(g: &Graph, c: Node, covered: &mut [u8]) {
    covered[c as usize] -= 1;
    for &w in g.neighbors(c) {
        covered[w as usize] -= 1;
    }
}

/// Minimum total dominating set; `|result| = γ_t(g)`.
///
/// Refuses graphs with an isolated vertex, where total domination is
/// undefined.
pub fn brute_force_mtds(g: &Graph) -> Result<VertexSet, OracleError> {
    check_size(g.vertex_count())?;
    if let Some(&vertex) = g.isolated_vertices().first() {
        return Err(OracleError::IsolatedVertex { vertex });
    }
    let n = g.vertex_count();
    let mut covered = vec![0u8; n];
    let mut in_set = vec![false; n];
    let mut chosen = Vec::new();
    for budget in 1..=n {
        if search_tds(g, budget, &mut covered, n, &mut in_set, &mut chosen) {
            return Ok(VertexSet::new(SetKind::TotalDominating, chosen));
        }
    }
    unreachable!("the full vertex set totally dominates an isolated-free graph");
}

fn search_tds(
    g: &Graph,
    budget: usize,
    covered: &mut [u8],
    uncovered: usize,
    in_set: &mut [bool],
    chosen: &mut Vec<Node>,
) -> bool {
    if uncovered == 0 {
        return true;
    }
    if budget == 0 || uncovered > budget * g.max_degree() {
        return false;
    }
    let v = covered.iter().position(|&c| c == 0).unwrap() as Node;
    // Only a neighbor of v can cover v in the total-domination sense.
    for &c in g.neighbors(v) {
        if in_set[c as usize] {
            continue;
        }
        in_set[c as usize] = true;
        let mut newly = 0usize;
        for &w in g.neighbors(c) {
            if covered[w as usize] == 0 {
                newly += 1;
            }
            covered[w as usize] += 1;
        }
        chosen.push(c);
        if search_tds(g, budget - 1, covered, uncovered - newly, in_set, chosen) {
            return true;
        }
        chosen.pop();
        for &w in g.neighbors(c) {
            covered[w as usize] -= 1;
        }
        in_set[c as usize] = false;
    }
    false
}

/// Minimum vertex cover of a loop multigraph; `|result| = β(h)`.
/// Loops force their vertex into the cover.
pub fn brute_force_mvc(h: &LoopMultigraph) -> Result<VertexSet, OracleError> {
    check_size(h.vertex_count())?;
    let mut in_cover = vec![false; h.vertex_count()];
    for v in h.loop_vertices() {
        in_cover[v as usize] = true;
    }
    let forced = in_cover.iter().filter(|&&b| b).count();
    let open: Vec<(Node, Node)> = h
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| u != v && !in_cover[u as usize] && !in_cover[v as usize])
        .collect();
    for extra in 0..=h.vertex_count().saturating_sub(forced) {
        if search_vc(&open, extra, &mut in_cover) {
            let members = (0..h.vertex_count() as Node)
                .filter(|&v| in_cover[v as usize])
                .collect();
            return Ok(VertexSet::new(SetKind::VertexCover, members));
        }
    }
    unreachable!("all vertices always cover");
}

fn search_vc(open: &[(Node, Node)], budget: usize, in_cover: &mut [bool]) -> bool {
    let next = open
        .iter()
        .find(|&&(u, v)| !in_cover[u as usize] && !in_cover[v as usize]);
    let Some(&(u, v)) = next else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for pick in [u, v] {
        in_cover[pick as usize] = true;
        if search_vc(open, budget - 1, in_cover) {
            return true;
        }
        in_cover[pick as usize] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_dominating, is_total_dominating, is_vertex_cover};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i as Node, ((i + 1) % n) as Node))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as Node {
            for v in u + 1..n as Node {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn mds_known_values() {
        assert_eq!(brute_force_mds(&complete(6)).unwrap().len(), 1);
        let c6 = cycle(6);
        let s = brute_force_mds(&c6).unwrap();
        assert_eq!(s.len(), 2);
        assert!(is_dominating(&c6, &s));
    }

    #[test]
    fn mds_petersen() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let petersen =
            Graph::from_edges(10, outer.chain(inner).chain(spokes).map(|(u, v)| (u, v))).unwrap();
        let s = brute_force_mds(&petersen).unwrap();
        assert_eq!(s.len(), 3);
        assert!(is_dominating(&petersen, &s));
    }

    #[test]
    fn mtds_known_values() {
        let k2 = complete(2);
        assert_eq!(brute_force_mtds(&k2).unwrap().len(), 2);

        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(brute_force_mtds(&star).unwrap().len(), 2);

        let c6 = cycle(6);
        let s = brute_force_mtds(&c6).unwrap();
        assert_eq!(s.len(), 4);
        assert!(is_total_dominating(&c6, &s));
    }

    #[test]
    fn mtds_rejects_isolated() {
        let g = Graph::from_edges(3, vec![(0, 1)]).unwrap();
        assert!(matches!(
            brute_force_mtds(&g),
            Err(OracleError::IsolatedVertex { vertex: 2 })
        ));
    }

    #[test]
    fn mvc_known_values() {
        let single_loop = LoopMultigraph::new(2, vec![(1, 1)]).unwrap();
        let s = brute_force_mvc(&single_loop).unwrap();
        assert_eq!(s.members(), &[1]);

        let triangle = LoopMultigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(brute_force_mvc(&triangle).unwrap().len(), 2);

        let c5 = LoopMultigraph::new(5, (0..5).map(|i| (i as Node, ((i + 1) % 5) as Node)))
            .unwrap();
        let s = brute_force_mvc(&c5).unwrap();
        assert_eq!(s.len(), 3);
        assert!(is_vertex_cover(&c5, &s));
    }

    #[test]
    fn size_cap_is_enforced() {
        let g = Graph::from_edges(31, vec![(0, 1)]).unwrap();
        assert!(matches!(
            brute_force_mds(&g),
            Err(OracleError::TooLarge { n: 31, .. })
        ));
        let h = LoopMultigraph::new(31, vec![(0, 1)]).unwrap();
        assert!(matches!(brute_force_mvc(&h), Err(OracleError::TooLarge { .. })));
    }
}
