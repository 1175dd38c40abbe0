//! Derived-graph constructions.
//!
//! Every vertex of the source graph contributes one "corresponding edge"
//! between two candidates drawn from its neighborhood: the open neighborhood
//! `N(v)` for the total-domination graph, the closed neighborhood
//! `N(v) ∪ {v}` for the plain one. Any vertex cover of the derived graph is
//! then a (total) dominating set of the source graph, which is what the rest
//! of the crate exploits.

use domset_graph::{is_dominating, is_total_dominating, Graph, LoopMultigraph, Node, VertexSet};

use crate::error::AlgoError;
use crate::rng::{stream, RngPolicy};

/// Picks the two endpoints of a vertex's corresponding edge from its
/// candidate pool. Pools are sorted ascending and hold at least two
/// candidates; smaller pools are resolved by the builders' loop rules
/// before any chooser runs.
pub trait PairChooser {
    fn choose_pair(&self, g: &Graph, v: Node, pool: &[Node]) -> (Node, Node);
}

/// Uniformly random distinct pair, derived from the policy so the whole
/// construction replays under the same seed. This is the documented default
/// reading of "arbitrary".
pub struct RandomPair<'a> {
    policy: &'a RngPolicy,
    tag: u64,
}

impl<'a> RandomPair<'a> {
    pub fn new(policy: &'a RngPolicy, tag: u64) -> Self {
        RandomPair { policy, tag }
    }

    pub fn for_g_prime(policy: &'a RngPolicy) -> Self {
        Self::new(policy, stream::PRIME_PAIR)
    }

    pub fn for_g_dprime(policy: &'a RngPolicy) -> Self {
        Self::new(policy, stream::DPRIME_PAIR)
    }
}

impl PairChooser for RandomPair<'_> {
    fn choose_pair(&self, _g: &Graph, v: Node, pool: &[Node]) -> (Node, Node) {
        self.policy.pick_pair(self.tag, v as u64, pool)
    }
}

/// The two smallest candidate ids.
pub struct FirstTwo;

impl PairChooser for FirstTwo {
    fn choose_pair(&self, _g: &Graph, _v: Node, pool: &[Node]) -> (Node, Node) {
        (pool[0], pool[1])
    }
}

/// The two largest-degree candidates, degree ties broken by smaller id.
pub struct MaxDegreePair;

impl PairChooser for MaxDegreePair {
    fn choose_pair(&self, g: &Graph, _v: Node, pool: &[Node]) -> (Node, Node) {
        let mut ranked: Vec<Node> = pool.to_vec();
        ranked.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
        (ranked[0], ranked[1])
    }
}

/// Total-domination derived graph: for every vertex one edge between two of
/// its neighbors, or a loop on the unique neighbor of a degree-1 vertex.
/// Requires an isolated-free graph.
pub fn build_g_prime<C: PairChooser>(g: &Graph, chooser: &C) -> Result<LoopMultigraph, AlgoError> {
    let mut edges = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let pool = g.neighbors(v);
        match pool.len() {
            0 => return Err(AlgoError::IsolatedVertex { vertex: v }),
            1 => edges.push((pool[0], pool[0])),
            _ => edges.push(chooser.choose_pair(g, v, pool)),
        }
    }
    Ok(LoopMultigraph::new(g.vertex_count(), edges).expect("endpoints come from neighbor lists"))
}

/// Plain-domination derived graph: candidates come from the closed
/// neighborhood, so the only loops are on isolated vertices.
pub fn build_g_dprime<C: PairChooser>(g: &Graph, chooser: &C) -> LoopMultigraph {
    let mut edges = Vec::with_capacity(g.vertex_count());
    let mut pool = Vec::new();
    for v in g.vertices() {
        if g.degree(v) == 0 {
            edges.push((v, v));
            continue;
        }
        pool.clear();
        pool.extend_from_slice(g.neighbors(v));
        let pos = pool.partition_point(|&u| u < v);
        pool.insert(pos, v);
        edges.push(chooser.choose_pair(g, v, &pool));
    }
    LoopMultigraph::new(g.vertex_count(), edges).expect("endpoints come from closed neighborhoods")
}

/// Derived graph witnessing that an optimal total dominating set is also an
/// optimal cover: each vertex's edge joins its dominator in `s` with another
/// neighbor (loop on the dominator for degree-1 vertices). Every edge then
/// touches `s`, so `β` of the result equals `|s|` when `s` is minimum.
pub fn g_prime_from_total_dominating_set(
    g: &Graph,
    s: &VertexSet,
) -> Result<LoopMultigraph, AlgoError> {
    if !is_total_dominating(g, s) {
        return Err(AlgoError::NotTotalDominating);
    }
    let mut edges = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let pool = g.neighbors(v);
        let dominator = pool
            .iter()
            .copied()
            .find(|&u| s.contains(u))
            .expect("s totally dominates v");
        if pool.len() == 1 {
            edges.push((dominator, dominator));
        } else {
            let other = pool
                .iter()
                .copied()
                .find(|&u| u != dominator)
                .expect("degree >= 2");
            edges.push((dominator, other));
        }
    }
    Ok(LoopMultigraph::new(g.vertex_count(), edges).expect("endpoints are neighbors"))
}

/// Plain-domination analogue of [`g_prime_from_total_dominating_set`]: the
/// dominator comes from the closed neighborhood, with a loop only for an
/// isolated vertex (which must itself be in `s`).
pub fn g_dprime_from_dominating_set(
    g: &Graph,
    s: &VertexSet,
) -> Result<LoopMultigraph, AlgoError> {
    if !is_dominating(g, s) {
        return Err(AlgoError::NotDominating);
    }
    let mut edges = Vec::with_capacity(g.vertex_count());
    let mut pool = Vec::new();
    for v in g.vertices() {
        if g.degree(v) == 0 {
            // An isolated vertex dominates only itself, so it is in s.
            edges.push((v, v));
            continue;
        }
        pool.clear();
        pool.extend_from_slice(g.neighbors(v));
        let pos = pool.partition_point(|&u| u < v);
        pool.insert(pos, v);
        let dominator = pool
            .iter()
            .copied()
            .find(|&u| s.contains(u))
            .expect("s dominates v");
        let other = pool
            .iter()
            .copied()
            .find(|&u| u != dominator)
            .expect("closed pool of a non-isolated vertex has two members");
        edges.push((dominator, other));
    }
    Ok(LoopMultigraph::new(g.vertex_count(), edges).expect("endpoints are in closed neighborhoods"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use domset_graph::SetKind;
    use domset_testkit::{cycle, path, star};

    #[test]
    fn k2_gets_loops_on_both() {
        let k2 = domset_testkit::complete(2);
        let policy = RngPolicy::new(1);
        let h = build_g_prime(&k2, &RandomPair::for_g_prime(&policy)).unwrap();
        assert_eq!(h.edges(), &[(0, 0), (1, 1)]);
    }

    #[test]
    fn p3_prime_is_forced() {
        // Degree-1 endpoints both force a loop on the middle vertex; the
        // middle vertex's own edge joins its two neighbors.
        let p3 = path(3);
        let policy = RngPolicy::new(5);
        let h = build_g_prime(&p3, &RandomPair::for_g_prime(&policy)).unwrap();
        assert_eq!(h.edges(), &[(0, 2), (1, 1)]);
    }

    #[test]
    fn c4_with_both_neighbor_chooser_shares_edges() {
        let c4 = cycle(4);
        let h = build_g_prime(&c4, &FirstTwo).unwrap();
        // Each vertex's two neighbors are the diagonal pairs; both
        // diagonals are shared by two vertices.
        assert_eq!(h.edges(), &[(0, 2), (1, 3)]);
        assert!(h.edge_count() <= c4.vertex_count());
    }

    #[test]
    fn prime_rejects_isolated() {
        let g = Graph::from_edges(3, vec![(0, 1)]).unwrap();
        let policy = RngPolicy::new(0);
        assert!(matches!(
            build_g_prime(&g, &RandomPair::for_g_prime(&policy)),
            Err(AlgoError::IsolatedVertex { vertex: 2 })
        ));
    }

    #[test]
    fn dprime_isolated_gets_loop_and_k2_collapses() {
        let single = Graph::from_edges(1, Vec::new()).unwrap();
        let policy = RngPolicy::new(0);
        let h = build_g_dprime(&single, &RandomPair::for_g_dprime(&policy));
        assert_eq!(h.edges(), &[(0, 0)]);

        let k2 = domset_testkit::complete(2);
        let h = build_g_dprime(&k2, &RandomPair::for_g_dprime(&policy));
        assert_eq!(h.edges(), &[(0, 1)]);
    }

    #[test]
    fn dprime_max_degree_chooser_on_p3() {
        let p3 = path(3);
        let h = build_g_dprime(&p3, &MaxDegreePair);
        // Pools: {0,1}, {0,1,2}, {1,2}. Max-degree candidate is always the
        // middle vertex, second pick is the smaller-id tie winner.
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn recipe_graphs_touch_the_source_set() {
        let c6 = cycle(6);
        let tds = VertexSet::new(SetKind::TotalDominating, vec![0, 1, 3, 4]);
        let h = g_prime_from_total_dominating_set(&c6, &tds).unwrap();
        assert!(h
            .edges()
            .iter()
            .all(|&(u, v)| tds.contains(u) || tds.contains(v)));

        let ds = VertexSet::new(SetKind::Dominating, vec![0, 3]);
        let h = g_dprime_from_dominating_set(&c6, &ds).unwrap();
        assert!(h
            .edges()
            .iter()
            .all(|&(u, v)| ds.contains(u) || ds.contains(v)));
    }

    #[test]
    fn recipe_rejects_invalid_input() {
        let s5 = star(5);
        let not_tds = VertexSet::new(SetKind::TotalDominating, vec![0]);
        assert!(matches!(
            g_prime_from_total_dominating_set(&s5, &not_tds),
            Err(AlgoError::NotTotalDominating)
        ));
        let not_ds = VertexSet::new(SetKind::Dominating, vec![1]);
        assert!(matches!(
            g_dprime_from_dominating_set(&s5, &not_ds),
            Err(AlgoError::NotDominating)
        ));
    }

    #[test]
    fn random_chooser_is_reproducible() {
        let g = domset_testkit::gnp_without_isolated(40, 0.2, 3);
        let policy = RngPolicy::new(11);
        let a = build_g_prime(&g, &RandomPair::for_g_prime(&policy)).unwrap();
        let b = build_g_prime(&g, &RandomPair::for_g_prime(&policy)).unwrap();
        assert_eq!(a, b);
        let c = build_g_prime(&g, &RandomPair::for_g_prime(&RngPolicy::new(12))).unwrap();
        assert_ne!(a, c);
    }
}
