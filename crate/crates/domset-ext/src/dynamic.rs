//! Local repair of a converged marking state under vertex edits.
//!
//! An edit only perturbs weights and mark counts inside the 2-hop ball
//! around the edited vertex, so the repair re-runs the marking recurrence
//! for the same number of rounds restricted to that region: vertices
//! outside keep their mark target, and their (fixed) marks enter the
//! region's counters as a frozen base. Every vertex still marks a member of
//! its pool, so the repaired marked set remains a valid (total) dominating
//! set of the edited graph.
//!
//! Removing a vertex compacts the id space: ids above the removed vertex
//! shift down by one. Targets and state arrays are remapped accordingly;
//! "unchanged" for an untouched vertex means unchanged up to that shift.

use std::collections::BTreeSet;

use domset_algos::rng::{beats, stream};
use domset_algos::{MarkState, RngPolicy, Scope};
use domset_graph::{Graph, Node};

use crate::error::ExtError;

/// What a repair touched.
#[derive(Clone, Debug, Default)]
pub struct RepairReport {
    /// Vertices whose marking was recomputed (ids in the new graph).
    pub region: Vec<Node>,
    /// Region vertices left without a candidate pool (isolated under open
    /// scope); they mark nothing and are flagged rather than failing the
    /// whole repair.
    pub infeasible: Vec<Node>,
}

/// Adds a vertex (with its incident edges) and repairs the state in the
/// 2-hop region around it. The new vertex gets id `n` and draws its
/// randomness from the state's original seed.
pub fn dynamic_add_vertex(
    g: &Graph,
    state: &MarkState,
    neighbors: &[Node],
) -> Result<(Graph, MarkState, RepairReport), ExtError> {
    let n = g.vertex_count();
    if state.r.len() != n {
        return Err(ExtError::StateMismatch);
    }
    for &u in neighbors {
        if u as usize >= n {
            return Err(ExtError::UnknownVertex { vertex: u });
        }
    }
    let new_vertex = n as Node;
    let mut edges: Vec<(Node, Node)> = g.edges().collect();
    edges.extend(neighbors.iter().map(|&u| (new_vertex, u)));
    let new_g = Graph::from_edges(n + 1, edges)?;

    let mut r = state.r.clone();
    r.push(fresh_r(state.seed, new_vertex, &r));
    let mut targets: Vec<Node> = state.targets.clone();
    targets.push(new_vertex); // placeholder; the region pass recomputes it

    let region = two_hop_region(&new_g, new_vertex);
    let repaired = repair_region(&new_g, r, targets, &region, state.scope, state.rounds, state.seed);
    Ok((new_g, repaired.0, repaired.1))
}

/// Removes a vertex and repairs the state in the 2-hop region around where
/// it was. Ids above `v` shift down by one.
pub fn dynamic_remove_vertex(
    g: &Graph,
    state: &MarkState,
    v: Node,
) -> Result<(Graph, MarkState, RepairReport), ExtError> {
    let n = g.vertex_count();
    if state.r.len() != n {
        return Err(ExtError::StateMismatch);
    }
    if v as usize >= n {
        return Err(ExtError::UnknownVertex { vertex: v });
    }
    if n == 1 {
        return Err(ExtError::CannotRemoveLast);
    }
    let shift = |u: Node| -> Node {
        if u > v {
            u - 1
        } else {
            u
        }
    };
    let edges = g
        .edges()
        .filter(|&(a, b)| a != v && b != v)
        .map(|(a, b)| (shift(a), shift(b)));
    let new_g = Graph::from_edges(n - 1, edges)?;

    // 2-hop ball around the removed vertex, in old ids, minus the vertex.
    let mut region_old: BTreeSet<Node> = BTreeSet::new();
    for &u in g.neighbors(v) {
        region_old.insert(u);
        for &w in g.neighbors(u) {
            region_old.insert(w);
        }
    }
    region_old.remove(&v);

    let mut r = state.r.clone();
    r.remove(v as usize);
    let mut targets: Vec<Node> = Vec::with_capacity(n - 1);
    for u in g.vertices() {
        if u == v {
            continue;
        }
        // Outside vertices never target v (it is not in their pool);
        // region vertices are recomputed anyway, so the placeholder only
        // needs to stay in range.
        let t = state.targets[u as usize];
        targets.push(if t == v { shift(u) } else { shift(t) });
    }
    let region: BTreeSet<Node> = region_old.iter().map(|&u| shift(u)).collect();
    let repaired = repair_region(&new_g, r, targets, &region, state.scope, state.rounds, state.seed);
    Ok((new_g, repaired.0, repaired.1))
}

/// Re-runs the marking recurrence (initial weights, then the state's round
/// count) for the region only, holding mark targets outside the region
/// fixed and folding their marks into the counters as a frozen base.
pub fn repair_region(
    g: &Graph,
    r: Vec<f64>,
    mut targets: Vec<Node>,
    region: &BTreeSet<Node>,
    scope: Scope,
    rounds: usize,
    seed: u64,
) -> (MarkState, RepairReport) {
    let n = g.vertex_count();
    debug_assert_eq!(r.len(), n);
    debug_assert_eq!(targets.len(), n);

    let mut infeasible = Vec::new();
    let active: Vec<Node> = region
        .iter()
        .copied()
        .filter(|&u| {
            let can_mark = scope == Scope::Closed || g.degree(u) > 0;
            if !can_mark {
                infeasible.push(u);
            }
            can_mark
        })
        .collect();

    // Marks contributed by vertices whose targets stay fixed.
    let mut frozen = vec![0u32; n];
    for u in g.vertices() {
        if !region.contains(&u) {
            frozen[targets[u as usize] as usize] += 1;
        }
    }

    let mut pool = Vec::new();
    let mut counts: Vec<u32> = g.vertices().map(|u| g.degree(u) as u32).collect();
    let pick = |u: Node, counts: &[u32], pool: &mut Vec<Node>| -> Node {
        pool.clear();
        pool.extend_from_slice(g.neighbors(u));
        if scope == Scope::Closed {
            let pos = pool.partition_point(|&w| w < u);
            pool.insert(pos, u);
        }
        let mut best = pool[0];
        for &w in &pool[1..] {
            let better = match counts[w as usize].cmp(&counts[best as usize]) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => beats(r[w as usize], w, r[best as usize], best),
            };
            if better {
                best = w;
            }
        }
        best
    };

    for &u in &active {
        targets[u as usize] = pick(u, &counts, &mut pool);
    }
    let mut x = retally(&frozen, &targets, &active);
    for _ in 0..rounds {
        counts.copy_from_slice(&x);
        for &u in &active {
            targets[u as usize] = pick(u, &counts, &mut pool);
        }
        x = retally(&frozen, &targets, &active);
    }

    let marked: Vec<bool> = x.iter().map(|&c| c > 0).collect();
    let w: Vec<f64> = counts
        .iter()
        .zip(&r)
        .map(|(&c, &rv)| c as f64 + rv)
        .collect();
    let state = MarkState {
        r,
        w,
        x,
        marked,
        targets,
        scope,
        rounds,
        seed,
    };
    let report = RepairReport {
        region: region.iter().copied().collect(),
        infeasible,
    };
    (state, report)
}

fn retally(frozen: &[u32], targets: &[Node], active: &[Node]) -> Vec<u32> {
    let mut x = frozen.to_vec();
    for &u in active {
        x[targets[u as usize] as usize] += 1;
    }
    x
}

/// A value distinct from every existing one, derived from the same stream
/// the original run used.
fn fresh_r(seed: u64, vertex: Node, existing: &[f64]) -> f64 {
    let policy = RngPolicy::new(seed);
    let mut attempt = 0;
    loop {
        let candidate = policy.unit_open_attempt(stream::MARK_R, vertex as u64, attempt);
        if existing.iter().all(|&v| v != candidate) {
            return candidate;
        }
        attempt += 1;
    }
}

fn two_hop_region(g: &Graph, center: Node) -> BTreeSet<Node> {
    let mut region = BTreeSet::new();
    region.insert(center);
    for &u in g.neighbors(center) {
        region.insert(u);
        for &w in g.neighbors(u) {
            region.insert(w);
        }
    }
    region
}
