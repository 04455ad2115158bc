use thiserror::Error;

/// Errors raised while constructing or decoding graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    EndpointOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("invalid placement: {0}")]
    InvalidAnchor(String),
    #[error("invalid adjacency: {0}")]
    InvalidAdjacency(String),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}
