use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{context} requires an all-positive graph, found {negative} negative edge(s)")]
    ModeMismatch { context: String, negative: usize },

    #[error("labeling has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("oracle search space of {size} assignments exceeds the limit of {limit}")]
    TooLarge { size: u128, limit: u128 },

    #[error("catalog line {line}: {source}")]
    Catalog {
        line: usize,
        #[source]
        source: serde_json::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
