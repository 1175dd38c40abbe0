//! Combining two solutions through a derived graph.
//!
//! Given two (total) dominating sets, build a derived graph whose per-vertex
//! edge joins one candidate from each set; both sets cover that graph, so a
//! minimum cover of it is at most the smaller input. The cap rule keeps the
//! guarantee under approximate covers.

use domset_graph::{is_dominating, is_total_dominating, Graph, LoopMultigraph, SetKind, VertexSet};
use domset_vc::CoverSolver;

use crate::error::AlgoError;
use crate::marking::Scope;

/// Whether the inputs are dominating sets (closed pools) or total
/// dominating sets (open pools).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    Ds,
    Tds,
}

/// Merges two solutions; the result is never larger than the smaller input.
///
/// Per vertex the candidate taken from each set is the smallest id in the
/// set's intersection with the pool; the edge degenerates to a loop when
/// both picks coincide.
pub fn combine_solutions(
    g: &Graph,
    s1: &VertexSet,
    s2: &VertexSet,
    mode: CombineMode,
    solver: CoverSolver,
) -> Result<VertexSet, AlgoError> {
    let (scope, kind) = match mode {
        CombineMode::Ds => (Scope::Closed, SetKind::Dominating),
        CombineMode::Tds => (Scope::Open, SetKind::TotalDominating),
    };
    for s in [s1, s2] {
        let ok = match mode {
            CombineMode::Ds => is_dominating(g, s),
            CombineMode::Tds => is_total_dominating(g, s),
        };
        if !ok {
            return Err(match mode {
                CombineMode::Ds => AlgoError::NotDominating,
                CombineMode::Tds => AlgoError::NotTotalDominating,
            });
        }
    }

    let mut edges = Vec::with_capacity(g.vertex_count());
    let mut pool = Vec::new();
    for v in g.vertices() {
        pool.clear();
        pool.extend_from_slice(g.neighbors(v));
        if scope == Scope::Closed {
            let pos = pool.partition_point(|&u| u < v);
            pool.insert(pos, v);
        }
        let pick1 = pool
            .iter()
            .copied()
            .find(|&u| s1.contains(u))
            .expect("s1 validated against mode");
        let pick2 = pool
            .iter()
            .copied()
            .find(|&u| s2.contains(u))
            .expect("s2 validated against mode");
        edges.push((pick1, pick2));
    }
    let h = LoopMultigraph::new(g.vertex_count(), edges).expect("picks come from pools");
    let cover = solver.solve(&h)?;

    let mut best = cover.with_kind(kind);
    if s1.len() < best.len() {
        best = s1.with_kind(kind);
    }
    if s2.len() < best.len() {
        best = s2.with_kind(kind);
    }
    debug_assert!(match mode {
        CombineMode::Ds => is_dominating(g, &best),
        CombineMode::Tds => is_total_dominating(g, &best),
    });
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use domset_graph::oracle::brute_force_mds;
    use domset_testkit::cycle;

    #[test]
    fn identical_inputs_collapse_to_loops() {
        let g = cycle(6);
        let s = VertexSet::new(SetKind::Dominating, vec![0, 3]);
        let merged =
            combine_solutions(&g, &s, &s, CombineMode::Ds, CoverSolver::exact()).unwrap();
        assert!(merged.len() <= s.len());
        assert!(is_dominating(&g, &merged));
    }

    #[test]
    fn c6_two_optima_merge_to_optimal() {
        let g = cycle(6);
        let s1 = VertexSet::new(SetKind::Dominating, vec![0, 3]);
        let s2 = VertexSet::new(SetKind::Dominating, vec![1, 4]);
        let merged =
            combine_solutions(&g, &s1, &s2, CombineMode::Ds, CoverSolver::exact()).unwrap();
        assert_eq!(merged.len(), 2);
    }

    #[test]
    fn optimal_input_stays_optimal() {
        for seed in 0..20 {
            let g = domset_testkit::gnp_without_isolated(10, 0.3, seed);
            let optimal = brute_force_mds(&g).unwrap();
            let all = VertexSet::new(SetKind::Dominating, g.vertices().collect());
            let merged = combine_solutions(
                &g,
                &optimal.with_kind(SetKind::Dominating),
                &all,
                CombineMode::Ds,
                CoverSolver::exact(),
            )
            .unwrap();
            assert_eq!(merged.len(), optimal.len(), "seed {seed}");
        }
    }

    #[test]
    fn rejects_invalid_inputs() {
        let g = cycle(6);
        let bad = VertexSet::new(SetKind::Dominating, vec![0]);
        let good = VertexSet::new(SetKind::Dominating, vec![0, 3]);
        assert!(matches!(
            combine_solutions(&g, &bad, &good, CombineMode::Ds, CoverSolver::exact()),
            Err(AlgoError::NotDominating)
        ));
    }

    #[test]
    fn tds_mode_produces_total_dominating_sets() {
        let g = cycle(8);
        let s1 = VertexSet::new(SetKind::TotalDominating, vec![0, 1, 4, 5]);
        let s2 = VertexSet::new(SetKind::TotalDominating, vec![2, 3, 6, 7]);
        let merged =
            combine_solutions(&g, &s1, &s2, CombineMode::Tds, CoverSolver::exact()).unwrap();
        assert!(is_total_dominating(&g, &merged));
        assert!(merged.len() <= 4);
    }
}
