//! The marking algorithms.
//!
//! Round 1 exchanges weights `w_i = d_i + r_i`; round 2 every vertex marks
//! the maximum-weight candidate in its pool; each of the `m` re-marking
//! rounds recounts the marks `x_i`, resets the flags, and re-marks with
//! `w_i = x_i + r_i`. Since every vertex marks a pool member, the marked set
//! dominates (closed pools) or totally dominates (open pools).
//!
//! The refinement step builds a derived graph on the marked vertices — per
//! vertex an edge between the two pool candidates with maximum `x_j + r_j`
//! among those with `x_j > 0`, a loop when only one qualifies — and covers
//! it. The marked set itself covers that graph, so with the cap rule the
//! refined solution never exceeds the marked set.
//!
//! Weights are compared as `(count, r, id)` triples rather than floating
//! sums, so `d_i + r_i` never loses low bits of `r_i` at high degree and
//! every argmax stays exact and deterministic.

use domset_graph::{
    is_dominating, is_total_dominating, Graph, LoopMultigraph, Node, SetKind, VertexSet,
};
use domset_vc::CoverSolver;

use crate::error::AlgoError;
use crate::rng::{beats, stream, RngPolicy};

/// Candidate pool for marking: the closed neighborhood `N(v) ∪ {v}` yields
/// dominating sets, the open neighborhood `N(v)` total dominating sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Closed,
    Open,
}

/// Per-vertex state after a marking run.
#[derive(Clone, Debug)]
pub struct MarkState {
    /// Random tie-breaker in (0, 1), pairwise distinct.
    pub r: Vec<f64>,
    /// Weights used in the final marking decision (`count + r`).
    pub w: Vec<f64>,
    /// How many vertices marked each vertex in the final round.
    pub x: Vec<u32>,
    /// `x > 0`.
    pub marked: Vec<bool>,
    /// The pool member each vertex marked in the final round.
    pub targets: Vec<Node>,
    /// Pool scope the run used.
    pub scope: Scope,
    /// Number of re-marking rounds (`m`).
    pub rounds: usize,
    /// Seed of the policy that derived `r`, kept so local repairs can draw
    /// randomness for new vertices from the same streams.
    pub seed: u64,
}

impl MarkState {
    pub fn marked_set(&self, kind: SetKind) -> VertexSet {
        let members = self
            .marked
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m)
            .map(|(v, _)| v as Node)
            .collect();
        VertexSet::new(kind, members)
    }
}

/// Per-vertex r values used by the marking algorithms, pairwise distinct.
pub fn mark_r_values(policy: &RngPolicy, n: usize) -> Vec<f64> {
    policy.distinct_unit_values(stream::MARK_R, n)
}

fn pool_of(g: &Graph, v: Node, scope: Scope, buf: &mut Vec<Node>) {
    buf.clear();
    buf.extend_from_slice(g.neighbors(v));
    if scope == Scope::Closed {
        let pos = buf.partition_point(|&u| u < v);
        buf.insert(pos, v);
    }
}

fn argmax_target(pool: &[Node], counts: &[u32], r: &[f64]) -> Node {
    let mut best = pool[0];
    for &u in &pool[1..] {
        // Compare (count, r, id): counts dominate because r is in (0, 1).
        let better = match counts[u as usize].cmp(&counts[best as usize]) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => {
                beats(r[u as usize], u, r[best as usize], best)
            }
        };
        if better {
            best = u;
        }
    }
    best
}

fn tally(targets: &[Node], n: usize) -> Vec<u32> {
    let mut x = vec![0u32; n];
    for &t in targets {
        x[t as usize] += 1;
    }
    x
}

/// Runs the marking algorithm and returns the marked set together with the
/// final per-vertex state.
pub fn alg1(
    g: &Graph,
    m: usize,
    policy: &RngPolicy,
    scope: Scope,
) -> Result<(VertexSet, MarkState), AlgoError> {
    let n = g.vertex_count();
    if scope == Scope::Open {
        if let Some(&vertex) = g.isolated_vertices().first() {
            return Err(AlgoError::IsolatedVertex { vertex });
        }
    }
    let r = mark_r_values(policy, n);
    let mut counts: Vec<u32> = g.vertices().map(|v| g.degree(v) as u32).collect();
    let mut pool = Vec::new();
    let mut targets = vec![0 as Node; n];
    for v in g.vertices() {
        pool_of(g, v, scope, &mut pool);
        targets[v as usize] = argmax_target(&pool, &counts, &r);
    }
    let mut x = tally(&targets, n);
    for _ in 0..m {
        counts.copy_from_slice(&x);
        for v in g.vertices() {
            pool_of(g, v, scope, &mut pool);
            targets[v as usize] = argmax_target(&pool, &counts, &r);
        }
        x = tally(&targets, n);
    }
    debug_assert_eq!(x.iter().map(|&c| c as usize).sum::<usize>(), n);
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
        rounds: m,
        seed: policy.seed(),
    };
    let kind = match scope {
        Scope::Closed => SetKind::Dominating,
        Scope::Open => SetKind::TotalDominating,
    };
    let set = state.marked_set(kind);
    debug_assert!(match scope {
        Scope::Closed => is_dominating(g, &set),
        Scope::Open => is_total_dominating(g, &set),
    });
    Ok((set, state))
}

/// Derived graph over the mark counters: per vertex an edge between the two
/// pool candidates maximizing `x_j + r_j` among those with `x_j > 0`, a loop
/// on the single qualifying candidate otherwise.
///
/// `scope` selects the candidate pool and may differ from the scope the
/// state was produced with (the second experiment variant marks openly but
/// pools closedly).
pub fn build_g1_dprime(
    g: &Graph,
    state: &MarkState,
    scope: Scope,
) -> Result<LoopMultigraph, AlgoError> {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(n);
    let mut pool = Vec::new();
    for v in g.vertices() {
        pool_of(g, v, scope, &mut pool);
        let mut first: Option<Node> = None;
        let mut second: Option<Node> = None;
        for &u in pool.iter() {
            if state.x[u as usize] == 0 {
                continue;
            }
            let beats_slot = |slot: Option<Node>| match slot {
                None => true,
                Some(s) => match state.x[u as usize].cmp(&state.x[s as usize]) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => {
                        beats(state.r[u as usize], u, state.r[s as usize], s)
                    }
                },
            };
            if beats_slot(first) {
                second = first;
                first = Some(u);
            } else if beats_slot(second) {
                second = Some(u);
            }
        }
        match (first, second) {
            (Some(a), Some(b)) => edges.push((a, b)),
            (Some(a), None) => edges.push((a, a)),
            (None, _) => return Err(AlgoError::MarkInvariant { vertex: v }),
        }
    }
    let h = LoopMultigraph::new(n, edges).expect("endpoints come from pools");
    debug_assert!(h
        .edges()
        .iter()
        .all(|&(u, v)| state.marked[u as usize] && state.marked[v as usize]));
    Ok(h)
}

/// Outcome of a refined run, including whether the cap rule had to discard
/// an oversized approximate cover.
#[derive(Clone, Debug)]
pub struct Alg2Outcome {
    pub solution: VertexSet,
    pub marked: VertexSet,
    pub cover_size: usize,
    pub cap_engaged: bool,
}

/// Marking plus derived-graph cover; the result is capped by the marked set,
/// so it never exceeds the plain marking solution.
pub fn alg2(
    g: &Graph,
    m: usize,
    policy: &RngPolicy,
    scope: Scope,
    solver: CoverSolver,
) -> Result<VertexSet, AlgoError> {
    Ok(alg2_outcome(g, m, policy, scope, solver)?.solution)
}

/// Like [`alg2`] but reporting the intermediate sizes and the cap decision.
pub fn alg2_outcome(
    g: &Graph,
    m: usize,
    policy: &RngPolicy,
    scope: Scope,
    solver: CoverSolver,
) -> Result<Alg2Outcome, AlgoError> {
    let (marked, state) = alg1(g, m, policy, scope)?;
    refine(g, &marked, &state, scope, scope, solver)
}

/// First experiment variant: open-scope marking and open-scope candidate
/// pools throughout, so the refined result is a total dominating set.
pub fn mod1(
    g: &Graph,
    m: usize,
    policy: &RngPolicy,
    solver: CoverSolver,
) -> Result<VertexSet, AlgoError> {
    let (marked, state) = alg1(g, m, policy, Scope::Open)?;
    Ok(refine(g, &marked, &state, Scope::Open, Scope::Open, solver)?.solution)
}

/// Second experiment variant: open-scope marking feeding closed-scope
/// candidate pools, yielding a plain dominating set.
pub fn mod2(
    g: &Graph,
    m: usize,
    policy: &RngPolicy,
    solver: CoverSolver,
) -> Result<VertexSet, AlgoError> {
    let (marked, state) = alg1(g, m, policy, Scope::Open)?;
    Ok(refine(g, &marked, &state, Scope::Open, Scope::Closed, solver)?.solution)
}

fn refine(
    g: &Graph,
    marked: &VertexSet,
    state: &MarkState,
    mark_scope: Scope,
    pool_scope: Scope,
    solver: CoverSolver,
) -> Result<Alg2Outcome, AlgoError> {
    let h = build_g1_dprime(g, state, pool_scope)?;
    let cover = solver.solve(&h)?;
    // A minimum cover never beats the marked set's own cover of h, but an
    // approximate one can; fall back to the marked set then.
    let cap_engaged = cover.len() > marked.len();
    let kind = match (mark_scope, pool_scope) {
        (Scope::Open, Scope::Open) => SetKind::TotalDominating,
        _ => SetKind::Dominating,
    };
    let solution = if cap_engaged {
        marked.with_kind(kind)
    } else {
        cover.with_kind(kind)
    };
    debug_assert!(match kind {
        SetKind::TotalDominating => is_total_dominating(g, &solution),
        _ => is_dominating(g, &solution),
    });
    Ok(Alg2Outcome {
        solution,
        marked: marked.clone(),
        cover_size: cover.len(),
        cap_engaged,
    })
}
