//! Executor behavior and simulated-vs-direct equivalence.

use domset_algos::{alg1, carowei_ds, RngPolicy, Scope};
use domset_graph::{Graph, Node, SetKind, VertexSet};
use domset_sim::{
    alg1_program, carowei_program, run_sync, run_sync_with, Inbound, Message, NodeProgram, Outbox,
    SimConfig, Step,
};
use domset_testkit::{gnp, gnp_without_isolated, star};

/// Each node forwards its id to every neighbor once.
struct Echo;

impl NodeProgram for Echo {
    type State = ();
    type Output = ();

    fn round_budget(&self) -> usize {
        1
    }

    fn init(&self, _node: Node, _degree: usize, _r: f64) -> () {}

    fn on_round(
        &self,
        node: Node,
        _state: &mut (),
        step: Step,
        inbox: &[Inbound],
        out: &mut Outbox,
    ) -> Option<()> {
        assert!(inbox.is_empty(), "round 1 inbox must be empty");
        assert_eq!(step.round, 1);
        out.broadcast(Message::mark(node));
        Some(())
    }
}

#[test]
fn echo_sends_one_message_per_edge_direction() {
    let g = gnp(25, 0.2, 3);
    let trace = run_sync(&g, &Echo, 1);
    assert_eq!(trace.rounds, 1);
    assert_eq!(trace.total_messages(), 2 * g.edge_count() as u64);
    assert_eq!(trace.max_payload_bits, if g.edge_count() > 0 { 40 } else { 0 });
    assert!(trace.audit_ok());
}

/// Sentinel for the locality contract: records everything a node can see
/// and checks it is confined to its own mailbox and neighbors.
struct Sentinel;

impl NodeProgram for Sentinel {
    type State = Vec<Node>;
    type Output = Vec<Node>;

    fn round_budget(&self) -> usize {
        2
    }

    fn init(&self, _node: Node, _degree: usize, _r: f64) -> Vec<Node> {
        Vec::new()
    }

    fn on_round(
        &self,
        node: Node,
        seen: &mut Vec<Node>,
        step: Step,
        inbox: &[Inbound],
        out: &mut Outbox,
    ) -> Option<Vec<Node>> {
        match step.round {
            1 => {
                out.broadcast(Message::mark(node));
                None
            }
            2 => {
                seen.extend(inbox.iter().map(|i| i.from));
                for inbound in inbox {
                    assert_eq!(inbound.msg.mark, Some(inbound.from), "sender id is intact");
                }
                Some(seen.clone())
            }
            _ => None,
        }
    }
}

#[test]
fn sentinel_sees_only_its_neighbors() {
    let g = gnp(30, 0.15, 11);
    let trace = run_sync(&g, &Sentinel, 2);
    for v in g.vertices() {
        let mut seen = trace.outputs[v as usize].clone().expect("output declared");
        seen.sort_unstable();
        assert_eq!(seen, g.neighbors(v).to_vec(), "vertex {v}");
    }
}

#[test]
fn alg1_round_count_and_star_output() {
    let g = star(5);
    let policy = RngPolicy::new(4);
    for m in [0usize, 1, 5] {
        let program = alg1_program(m, policy, Scope::Closed);
        let trace = run_sync(&g, &program, program.round_budget());
        assert_eq!(trace.rounds, m + 2);
        let marked: Vec<Node> = trace
            .outputs
            .iter()
            .enumerate()
            .filter(|(_, o)| o.unwrap_or(false))
            .map(|(v, _)| v as Node)
            .collect();
        assert_eq!(marked, vec![0], "m={m}");
        assert!(trace.audit_ok());
        assert!(trace.max_payload_bits <= 128);
    }
}

#[test]
fn simulated_alg1_equals_direct_on_random_graphs() {
    for instance in 0..50 {
        let g = gnp_without_isolated(6 + (instance as usize * 7) % 55, 0.15, instance);
        for seed in [1u64, 2, 3] {
            let policy = RngPolicy::new(seed * 1000 + instance);
            for scope in [Scope::Closed, Scope::Open] {
                let (direct, _) = alg1(&g, 5, &policy, scope).unwrap();
                let program = alg1_program(5, policy, scope);
                let trace = run_sync(&g, &program, program.round_budget());
                let simulated: Vec<Node> = trace
                    .outputs
                    .iter()
                    .enumerate()
                    .filter(|(_, o)| o.unwrap_or(false))
                    .map(|(v, _)| v as Node)
                    .collect();
                assert_eq!(
                    simulated,
                    direct.members(),
                    "instance {instance} seed {seed} scope {scope:?}"
                );
            }
        }
    }
}

#[test]
fn simulated_carowei_equals_direct() {
    for instance in 0..50 {
        let g = gnp(5 + (instance as usize * 5) % 45, 0.2, 100 + instance);
        let policy = RngPolicy::new(instance);
        let direct = carowei_ds(&g, &policy);
        let program = carowei_program(policy);
        let trace = run_sync(&g, &program, program.round_budget());
        assert_eq!(trace.rounds, 3);
        let members: Vec<Node> = trace
            .outputs
            .iter()
            .enumerate()
            .filter(|(_, o)| o.unwrap_or(false))
            .map(|(v, _)| v as Node)
            .collect();
        let simulated = VertexSet::new(SetKind::Dominating, members);
        assert_eq!(simulated, direct, "instance {instance}");
        assert!(trace.audit_ok());
    }
}

#[test]
fn carowei_on_edgeless_graph_selects_everyone() {
    let g = Graph::from_edges(4, Vec::new()).unwrap();
    let program = carowei_program(RngPolicy::new(0));
    let trace = run_sync(&g, &program, 3);
    assert!(trace.outputs.iter().all(|o| o == &Some(true)));
    assert_eq!(trace.total_messages(), 0);
}

#[test]
fn payload_audit_flags_lowered_cap() {
    let g = star(4);
    let policy = RngPolicy::new(2);
    let program = alg1_program(1, policy, Scope::Closed);
    let ok = run_sync_with(&g, &program, 3, SimConfig { payload_cap_bits: 128 });
    assert!(ok.audit_ok());
    // The weight broadcast carries a counter and a real: 88 bits.
    let tight = run_sync_with(&g, &program, 3, SimConfig { payload_cap_bits: 64 });
    assert!(!tight.audit_ok());
    assert!(tight.payload_violations >= g.edge_count() as u64 * 2);
    // The run still completes and produces the same outputs.
    assert_eq!(tight.outputs, ok.outputs);
}

#[test]
fn trace_lines_are_one_per_round() {
    let g = star(3);
    let policy = RngPolicy::new(1);
    let program = carowei_program(policy);
    let trace = run_sync(&g, &program, 3);
    let lines: Vec<String> = trace.round_lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("round=1 messages="));
}
