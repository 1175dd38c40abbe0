//! Randomized independent sets and the dominating sets they induce.
//!
//! Every vertex draws a uniform value in (0, 1) and joins the independent
//! set iff its value beats every multigraph neighbor; a vertex carrying a
//! loop never joins. On a loop-free vertex of distinct degree `d` this
//! happens with probability `1/(1+d)`, so the expected set size is the
//! classical degree-sum bound. Taking the complement over a derived graph
//! yields a (total) dominating set of that expected size.

use domset_graph::{
    is_dominating, is_total_dominating, Graph, LoopMultigraph, Node, SetKind, VertexSet,
};

use crate::derive::{build_g_dprime, build_g_prime, RandomPair};
use crate::error::AlgoError;
use crate::rng::{beats, stream, RngPolicy};

/// Random-priority independent set of the multigraph: a vertex joins iff
/// its value strictly beats all distinct neighbors and it carries no loop.
pub fn alon_spencer_is(h: &LoopMultigraph, policy: &RngPolicy) -> VertexSet {
    let n = h.vertex_count();
    let values = policy.distinct_unit_values(stream::INDEPENDENT_R, n);
    let adj = h.neighbor_lists();
    let mut members = Vec::new();
    'vertices: for v in 0..n as Node {
        if h.has_loop(v) {
            continue;
        }
        for &u in &adj[v as usize] {
            if !beats(values[v as usize], v, values[u as usize], u) {
                continue 'vertices;
            }
        }
        members.push(v);
    }
    let result = VertexSet::new(SetKind::Independent, members);
    debug_assert!(is_independent(h, &result));
    result
}

/// Expected independent-set size of the random-priority procedure on `h`:
/// the sum of `1/(1+d)` over loop-free vertices, `d` counting distinct
/// non-self neighbors. Loop vertices contribute zero.
pub fn expected_independent_set_size(h: &LoopMultigraph) -> f64 {
    let degrees = h.distinct_degrees();
    (0..h.vertex_count() as Node)
        .filter(|&v| !h.has_loop(v))
        .map(|v| 1.0 / (1.0 + degrees[v as usize] as f64))
        .sum()
}

/// Total dominating set as the complement of a random-priority independent
/// set of the total-domination derived graph. Expected size is `n` minus
/// the degree-sum bound of the realized derived graph.
pub fn carowei_tds(g: &Graph, policy: &RngPolicy) -> Result<VertexSet, AlgoError> {
    let h = build_g_prime(g, &RandomPair::for_g_prime(policy))?;
    let result = complement(g, &alon_spencer_is(&h, policy), SetKind::TotalDominating);
    debug_assert!(is_total_dominating(g, &result));
    Ok(result)
}

/// Dominating set as the complement of a random-priority independent set of
/// the plain derived graph.
pub fn carowei_ds(g: &Graph, policy: &RngPolicy) -> VertexSet {
    let h = build_g_dprime(g, &RandomPair::for_g_dprime(policy));
    let result = complement(g, &alon_spencer_is(&h, policy), SetKind::Dominating);
    debug_assert!(is_dominating(g, &result));
    result
}

fn complement(g: &Graph, s: &VertexSet, kind: SetKind) -> VertexSet {
    let members = g.vertices().filter(|&v| !s.contains(v)).collect();
    VertexSet::new(kind, members)
}

fn is_independent(h: &LoopMultigraph, s: &VertexSet) -> bool {
    h.edges()
        .iter()
        .all(|&(u, v)| !(s.contains(u) && s.contains(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use domset_testkit::{complete, star};

    #[test]
    fn edgeless_multigraph_selects_everyone() {
        let h = LoopMultigraph::new(5, Vec::new()).unwrap();
        let is = alon_spencer_is(&h, &RngPolicy::new(3));
        assert_eq!(is.len(), 5);
    }

    #[test]
    fn loop_vertex_never_selected() {
        let h = LoopMultigraph::new(1, vec![(0, 0)]).unwrap();
        assert!(alon_spencer_is(&h, &RngPolicy::new(3)).is_empty());
    }

    #[test]
    fn triangle_selects_exactly_the_maximum() {
        let h = LoopMultigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        for seed in 0..20 {
            let is = alon_spencer_is(&h, &RngPolicy::new(seed));
            assert_eq!(is.len(), 1, "seed {seed}");
        }
    }

    #[test]
    fn k2_total_domination_needs_both() {
        let k2 = complete(2);
        for seed in 0..10 {
            let s = carowei_tds(&k2, &RngPolicy::new(seed)).unwrap();
            assert_eq!(s.len(), 2);
        }
    }

    #[test]
    fn star_tds_valid_on_every_seed() {
        let g = star(5);
        for seed in 0..100 {
            let s = carowei_tds(&g, &RngPolicy::new(seed)).unwrap();
            assert!(is_total_dominating(&g, &s), "seed {seed}");
        }
    }

    #[test]
    fn lone_vertex_is_its_own_dominating_set() {
        let g = Graph::from_edges(1, Vec::new()).unwrap();
        let s = carowei_ds(&g, &RngPolicy::new(7));
        assert_eq!(s.members(), &[0]);
    }

    #[test]
    fn k4_ds_small_and_valid_over_seeds() {
        let g = complete(4);
        for seed in 0..1000 {
            let s = carowei_ds(&g, &RngPolicy::new(seed));
            assert!(s.len() <= 3, "seed {seed} gave {}", s.len());
            assert!(is_dominating(&g, &s));
        }
    }

    #[test]
    fn expectation_formula_ignores_loops() {
        let h = LoopMultigraph::new(3, vec![(0, 0), (0, 1), (1, 2)]).unwrap();
        // Vertex 0 is looped (0), vertex 1 has two neighbors (1/3),
        // vertex 2 has one (1/2).
        let expected = 1.0 / 3.0 + 0.5;
        assert!((expected_independent_set_size(&h) - expected).abs() < 1e-12);
    }

    #[test]
    fn monte_carlo_matches_expectation_on_fixed_multigraph() {
        // Fixed realized derived graph of a 12-cycle.
        let g = domset_testkit::cycle(12);
        let build_policy = RngPolicy::new(99);
        let h = build_g_prime(&g, &RandomPair::for_g_prime(&build_policy)).unwrap();
        let expected = expected_independent_set_size(&h);
        let trials = 10_000u64;
        let total: usize = (0..trials)
            .map(|seed| alon_spencer_is(&h, &RngPolicy::new(seed)).len())
            .sum();
        let mean = total as f64 / trials as f64;
        let rel = (mean - expected).abs() / expected;
        assert!(rel < 0.02, "mean {mean} vs expected {expected}");
    }
}
