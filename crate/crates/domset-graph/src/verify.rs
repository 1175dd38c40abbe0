use crate::graph::Graph;
use crate::multigraph::LoopMultigraph;
use crate::set::VertexSet;

/// True iff every vertex is in `s` or has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    let in_set = s.bitmap(g.vertex_count());
    g.vertices().all(|v| {
        in_set[v as usize] || g.neighbors(v).iter().any(|&u| in_set[u as usize])
    })
}

/// True iff every vertex (members of `s` included) has a neighbor in `s`.
/// A graph with an isolated vertex can never be totally dominated.
pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    let in_set = s.bitmap(g.vertex_count());
    g.vertices()
        .all(|v| g.neighbors(v).iter().any(|&u| in_set[u as usize]))
}

/// True iff every edge of `h` has an endpoint in `s`; a loop `(v, v)`
/// requires `v` itself.
pub fn is_vertex_cover(h: &LoopMultigraph, s: &VertexSet) -> bool {
    let in_set = s.bitmap(h.vertex_count());
    h.edges()
        .iter()
        .all(|&(u, v)| in_set[u as usize] || in_set[v as usize])
}
