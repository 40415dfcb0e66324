use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(usize, usize),
    #[error("graph or complex is not connected")]
    Disconnected,
    #[error("{what} would have {size} elements, over the cap of {cap}")]
    ResourceCap {
        what: &'static str,
        size: u128,
        cap: usize,
    },
    #[error("not a closed walk: {0}")]
    BadWalk(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("check failed: {0}")]
    CheckFailed(String),
}
