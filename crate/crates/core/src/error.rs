use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {pair:?} has an endpoint outside 0..{order}")]
    VertexOutOfRange { pair: (usize, usize), order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} is not in a graph of order {order}")]
    MemberOutOfRange { vertex: usize, order: usize },
    #[error("order {order} exceeds the supported maximum of 64")]
    TooLarge { order: usize },
    #[error("copy count must be at least one")]
    ZeroCopies,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("empty input")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
