//! The two per-node programs shipped with the simulator.

use std::collections::BTreeMap;

use domset_algos::rng::{beats, stream};
use domset_algos::{mark_r_values, RngPolicy, Scope};
use domset_graph::{Graph, Node};

use crate::{Inbound, Message, NodeProgram, Outbox, Step};

/// Distributed marking: weight exchange, initial marking, then `m`
/// re-marking rounds, `m + 2` rounds in total. Round 1 broadcasts
/// `(degree, r)`; every later round announces marks in its first wave...
/// more precisely round 2 announces marks and counts them, and each
/// re-marking round redistributes the counters and re-marks (wave 1), then
/// counts the new marks (wave 2). Per-node output: the final marked flag.
pub fn alg1_program(m: usize, policy: RngPolicy, scope: Scope) -> Alg1Program {
    Alg1Program { m, policy, scope }
}

pub struct Alg1Program {
    m: usize,
    policy: RngPolicy,
    scope: Scope,
}

pub struct Alg1Node {
    r: f64,
    degree: usize,
    /// Cached `(count, r)` key per neighbor, updated from count broadcasts.
    keys: BTreeMap<Node, (u64, f64)>,
    own_count: u64,
    target: Option<Node>,
    x: u64,
    marked: bool,
}

impl Alg1Node {
    fn pick_target(&self, node: Node, closed: bool) -> Node {
        let mut best: Option<(u64, f64, Node)> = if closed {
            Some((self.own_count, self.r, node))
        } else {
            None
        };
        for (&u, &(count, r)) in &self.keys {
            let better = match best {
                None => true,
                Some((bc, br, bid)) => match count.cmp(&bc) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => beats(r, u, br, bid),
                },
            };
            if better {
                best = Some((count, r, u));
            }
        }
        best.expect("pool is never empty").2
    }

    fn count_marks(&self, node: Node, inbox: &[Inbound]) -> u64 {
        let incoming = inbox
            .iter()
            .filter(|i| i.msg.mark == Some(node))
            .count() as u64;
        incoming + u64::from(self.target == Some(node))
    }
}

impl NodeProgram for Alg1Program {
    type State = Alg1Node;
    type Output = bool;

    fn round_budget(&self) -> usize {
        self.m + 2
    }

    fn waves_in_round(&self, round: usize) -> usize {
        if round == 1 {
            1
        } else {
            2
        }
    }

    fn node_r_values(&self, g: &Graph) -> Vec<f64> {
        mark_r_values(&self.policy, g.vertex_count())
    }

    fn init(&self, _node: Node, degree: usize, r: f64) -> Alg1Node {
        Alg1Node {
            r,
            degree,
            keys: BTreeMap::new(),
            own_count: degree as u64,
            target: None,
            x: 0,
            marked: false,
        }
    }

    fn on_round(
        &self,
        node: Node,
        state: &mut Alg1Node,
        step: Step,
        inbox: &[Inbound],
        out: &mut Outbox,
    ) -> Option<bool> {
        let last_round = self.m + 2;
        if step.round > last_round {
            return None;
        }
        let closed = self.scope == Scope::Closed;
        match (step.round, step.wave) {
            (1, 1) => {
                out.broadcast(Message::weight(state.degree as u64, state.r));
                None
            }
            (2, 1) => {
                for inbound in inbox {
                    let (Some(count), Some(r)) = (inbound.msg.count, inbound.msg.r) else {
                        panic!("round 2 expects weight messages");
                    };
                    state.keys.insert(inbound.from, (count, r));
                }
                let target = state.pick_target(node, closed);
                state.target = Some(target);
                out.broadcast(Message::mark(target));
                None
            }
            (round, 1) => {
                debug_assert!(round >= 3);
                for inbound in inbox {
                    let Some(count) = inbound.msg.count else {
                        panic!("re-marking wave expects count messages");
                    };
                    state.keys.get_mut(&inbound.from).expect("known neighbor").0 = count;
                }
                state.own_count = state.x;
                let target = state.pick_target(node, closed);
                state.target = Some(target);
                out.broadcast(Message::mark(target));
                None
            }
            (round, 2) => {
                state.x = state.count_marks(node, inbox);
                state.marked = state.x > 0;
                if round < last_round {
                    out.broadcast(Message::count(state.x));
                    None
                } else {
                    Some(state.marked)
                }
            }
            _ => None,
        }
    }
}

/// Distributed complement-of-independent-set: round 1 broadcasts the random
/// values, round 2 every node picks its derived edge and notifies the chosen
/// endpoints (sending along the opposite endpoint's id and value), round 3
/// every node decides membership from its incident derived edges. Per-node
/// output: whether the node joins the dominating set.
pub fn carowei_program(policy: RngPolicy) -> CaroweiProgram {
    CaroweiProgram { policy }
}

pub struct CaroweiProgram {
    policy: RngPolicy,
}

pub struct CaroweiNode {
    r: f64,
    neighbor_r: BTreeMap<Node, f64>,
    /// Opposite endpoints (and their values) of incident derived edges.
    incident: Vec<(Node, f64)>,
    has_loop: bool,
}

impl NodeProgram for CaroweiProgram {
    type State = CaroweiNode;
    type Output = bool;

    fn round_budget(&self) -> usize {
        3
    }

    fn node_r_values(&self, g: &Graph) -> Vec<f64> {
        self.policy
            .distinct_unit_values(stream::INDEPENDENT_R, g.vertex_count())
    }

    fn init(&self, _node: Node, _degree: usize, r: f64) -> CaroweiNode {
        CaroweiNode {
            r,
            neighbor_r: BTreeMap::new(),
            incident: Vec::new(),
            has_loop: false,
        }
    }

    fn on_round(
        &self,
        node: Node,
        state: &mut CaroweiNode,
        step: Step,
        inbox: &[Inbound],
        out: &mut Outbox,
    ) -> Option<bool> {
        match step.round {
            1 => {
                out.broadcast(Message::real(state.r));
                None
            }
            2 => {
                for inbound in inbox {
                    let r = inbound.msg.r.expect("round 2 expects value broadcasts");
                    state.neighbor_r.insert(inbound.from, r);
                }
                if state.neighbor_r.is_empty() {
                    // Isolated vertex: loop on itself, nothing to send.
                    state.has_loop = true;
                    return None;
                }
                let mut pool: Vec<Node> = state.neighbor_r.keys().copied().collect();
                let pos = pool.partition_point(|&u| u < node);
                pool.insert(pos, node);
                let (a, b) = self.policy.pick_pair(stream::DPRIME_PAIR, node as u64, &pool);
                let r_a = if a == node { state.r } else { state.neighbor_r[&a] };
                let r_b = if b == node { state.r } else { state.neighbor_r[&b] };
                for (endpoint, other, other_r) in [(a, b, r_b), (b, a, r_a)] {
                    if endpoint == node {
                        state.incident.push((other, other_r));
                    } else {
                        out.send(endpoint, Message::endpoint(other, other_r));
                    }
                }
                None
            }
            3 => {
                for inbound in inbox {
                    let other = inbound.msg.mark.expect("round 3 expects edge notifications");
                    let other_r = inbound.msg.r.expect("round 3 expects edge notifications");
                    state.incident.push((other, other_r));
                }
                let in_independent = !state.has_loop
                    && state
                        .incident
                        .iter()
                        .all(|&(u, ru)| beats(state.r, node, ru, u));
                Some(!in_independent)
            }
            _ => None,
        }
    }
}
