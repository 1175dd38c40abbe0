use domset_graph::Node;
use domset_vc::CoverError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgoError {
    #[error("infeasible: vertex {vertex} is isolated")]
    IsolatedVertex { vertex: Node },
    #[error("input set is not a dominating set")]
    NotDominating,
    #[error("input set is not a total dominating set")]
    NotTotalDominating,
    #[error("mark invariant violated: candidate pool of vertex {vertex} holds no marked vertex")]
    MarkInvariant { vertex: Node },
    #[error(transparent)]
    Cover(#[from] CoverError),
}
