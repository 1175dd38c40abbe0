use domset_graph::{GraphError, Node};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExtError {
    #[error("element {element} belongs to no subset")]
    UncoveredElement { element: u32 },
    #[error("infeasible: allowed-dominator set of vertex {vertex} is empty")]
    EmptyConstraint { vertex: Node },
    #[error("constraint of vertex {vertex} lists {candidate}, which is not a neighbor")]
    ConstraintNotNeighbor { vertex: Node, candidate: Node },
    #[error("power graph exceeds {limit} edges; raise the limit to materialize it")]
    PowerGraphTooDense { limit: usize },
    #[error("vertex {vertex} does not exist")]
    UnknownVertex { vertex: Node },
    #[error("cannot remove the last vertex")]
    CannotRemoveLast,
    #[error("mark state does not match the graph")]
    StateMismatch,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Algo(#[from] domset_algos::AlgoError),
    #[error(transparent)]
    Cover(#[from] domset_vc::CoverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
