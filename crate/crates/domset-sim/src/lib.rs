//! Round-synchronous message-passing executor.
//!
//! The network is the input graph: one processor per vertex, knowing only
//! its id, degree, and private randomness. Communication proceeds in
//! global-lockstep rounds; per round a node may send one bounded message
//! along each incident edge, and messages sent in one delivery step are
//! readable exactly one step later. A node touches nothing but its own
//! state and its inbox — the executor hands it no other handle.
//!
//! A round is one step of the algorithm being simulated. Rounds that both
//! collect marks and redistribute counters need two message deliveries, so a
//! program declares how many delivery waves each round takes
//! ([`NodeProgram::waves_in_round`]); the barrier is per wave, the trace
//! accounts per round.
//!
//! The executor audits message payloads against a configurable bit cap
//! (default 128: an id up to 2^40, a counter, and one 64-bit real fraction).
//! Oversized messages are recorded, not dropped, and the run completes.

mod programs;

pub use programs::{alg1_program, carowei_program, Alg1Program, CaroweiProgram};

use domset_graph::{Graph, Node};

/// Wire message: at most one vertex id, one counter, and one real value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Message {
    pub mark: Option<Node>,
    pub count: Option<u64>,
    pub r: Option<f64>,
}

impl Message {
    pub fn mark(target: Node) -> Self {
        Message { mark: Some(target), count: None, r: None }
    }

    pub fn count(value: u64) -> Self {
        Message { mark: None, count: Some(value), r: None }
    }

    pub fn weight(count: u64, r: f64) -> Self {
        Message { mark: None, count: Some(count), r: Some(r) }
    }

    pub fn real(r: f64) -> Self {
        Message { mark: None, count: None, r: Some(r) }
    }

    pub fn endpoint(id: Node, r: f64) -> Self {
        Message { mark: Some(id), count: None, r: Some(r) }
    }

    /// Schema-based payload size: 40 bits per id, 24 per counter (64 once a
    /// counter outgrows 24 bits), 64 per real.
    pub fn payload_bits(&self) -> u32 {
        let mut bits = 0;
        if self.mark.is_some() {
            bits += 40;
        }
        if let Some(c) = self.count {
            bits += if c < (1 << 24) { 24 } else { 64 };
        }
        if self.r.is_some() {
            bits += 64;
        }
        bits
    }
}

/// A delivered message with its sender.
#[derive(Clone, Debug)]
pub struct Inbound {
    pub from: Node,
    pub msg: Message,
}

/// Outgoing messages of one node for one wave. Sends are restricted to
/// incident edges, at most one message per edge.
pub struct Outbox<'a> {
    neighbors: &'a [Node],
    sends: Vec<(Node, Message)>,
}

impl<'a> Outbox<'a> {
    fn new(neighbors: &'a [Node]) -> Self {
        Outbox { neighbors, sends: Vec::new() }
    }

    pub fn send(&mut self, to: Node, msg: Message) {
        assert!(
            self.neighbors.binary_search(&to).is_ok(),
            "node may only message its neighbors (tried {to})"
        );
        assert!(
            self.sends.iter().all(|&(t, _)| t != to),
            "one message per incident edge per wave (duplicate to {to})"
        );
        self.sends.push((to, msg));
    }

    pub fn broadcast(&mut self, msg: Message) {
        debug_assert!(self.sends.is_empty(), "broadcast mixed with directed sends");
        self.sends.extend(self.neighbors.iter().map(|&u| (u, msg)));
    }
}

/// Identifies the current step: `round` is the algorithm round, `wave` the
/// delivery step within it (both 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub round: usize,
    pub wave: usize,
}

/// A per-node program. The executor instantiates one state per vertex and
/// drives all of them in lockstep; nodes see each other only through
/// messages.
pub trait NodeProgram {
    type State;
    type Output: Clone;

    /// Rounds this program needs to produce all outputs.
    fn round_budget(&self) -> usize;

    /// Message-delivery waves making up the given round.
    fn waves_in_round(&self, round: usize) -> usize {
        let _ = round;
        1
    }

    /// Private randomness handed to each node at init. Defaults to zero for
    /// programs that use none.
    fn node_r_values(&self, g: &Graph) -> Vec<f64> {
        vec![0.0; g.vertex_count()]
    }

    fn init(&self, node: Node, degree: usize, r: f64) -> Self::State;

    /// One step: consume the inbox (messages sent in the previous wave),
    /// update local state, emit messages, optionally declare the node's
    /// part of the output. Output may be declared at most once.
    fn on_round(
        &self,
        node: Node,
        state: &mut Self::State,
        step: Step,
        inbox: &[Inbound],
        out: &mut Outbox,
    ) -> Option<Self::Output>;
}

#[derive(Clone, Copy, Debug)]
pub struct SimConfig {
    pub payload_cap_bits: u32,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig { payload_cap_bits: 128 }
    }
}

/// Execution record of a simulated run.
#[derive(Clone, Debug)]
pub struct RoundTrace<O> {
    pub rounds: usize,
    pub messages_per_round: Vec<u64>,
    pub max_payload_per_round: Vec<u32>,
    pub max_payload_bits: u32,
    /// Messages that exceeded the payload cap; the run still completes.
    pub payload_violations: u64,
    pub outputs: Vec<Option<O>>,
}

impl<O> RoundTrace<O> {
    pub fn audit_ok(&self) -> bool {
        self.payload_violations == 0
    }

    pub fn total_messages(&self) -> u64 {
        self.messages_per_round.iter().sum()
    }

    /// One structured text record per round.
    pub fn round_lines(&self) -> impl Iterator<Item = String> + '_ {
        (0..self.rounds).map(|i| {
            format!(
                "round={} messages={} max_payload_bits={}",
                i + 1,
                self.messages_per_round[i],
                self.max_payload_per_round[i]
            )
        })
    }
}

/// Runs `program` for exactly `budget` rounds under the default 128-bit
/// payload cap.
pub fn run_sync<P: NodeProgram>(g: &Graph, program: &P, budget: usize) -> RoundTrace<P::Output> {
    run_sync_with(g, program, budget, SimConfig::default())
}

pub fn run_sync_with<P: NodeProgram>(
    g: &Graph,
    program: &P,
    budget: usize,
    config: SimConfig,
) -> RoundTrace<P::Output> {
    assert!(budget >= 1, "at least one round");
    let n = g.vertex_count();
    let r = program.node_r_values(g);
    assert_eq!(r.len(), n);
    let mut states: Vec<P::State> = g
        .vertices()
        .map(|v| program.init(v, g.degree(v), r[v as usize]))
        .collect();
    let mut outputs: Vec<Option<P::Output>> = (0..n).map(|_| None).collect();
    let mut inboxes: Vec<Vec<Inbound>> = vec![Vec::new(); n];
    let mut messages_per_round = vec![0u64; budget];
    let mut max_payload_per_round = vec![0u32; budget];
    let mut payload_violations = 0u64;

    for round in 1..=budget {
        for wave in 1..=program.waves_in_round(round) {
            let step = Step { round, wave };
            let mut next: Vec<Vec<Inbound>> = vec![Vec::new(); n];
            for v in g.vertices() {
                let mut out = Outbox::new(g.neighbors(v));
                let output =
                    program.on_round(v, &mut states[v as usize], step, &inboxes[v as usize], &mut out);
                if let Some(o) = output {
                    assert!(
                        outputs[v as usize].is_none(),
                        "node {v} declared its output twice"
                    );
                    outputs[v as usize] = Some(o);
                }
                for (to, msg) in out.sends {
                    let bits = msg.payload_bits();
                    max_payload_per_round[round - 1] = max_payload_per_round[round - 1].max(bits);
                    if bits > config.payload_cap_bits {
                        payload_violations += 1;
                    }
                    messages_per_round[round - 1] += 1;
                    next[to as usize].push(Inbound { from: v, msg });
                }
            }
            inboxes = next;
        }
    }

    let max_payload_bits = max_payload_per_round.iter().copied().max().unwrap_or(0);
    RoundTrace {
        rounds: budget,
        messages_per_round,
        max_payload_per_round,
        max_payload_bits,
        payload_violations,
        outputs,
    }
}
