use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graphs are limited to 1..=64 vertices, got {0}")]
    VertexCount(usize),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),

    #[error(
        "partition is not equitable: vertices {u} and {w} of part {part} have \
         {count_u} vs {count_w} neighbours in part {target}"
    )]
    NotEquitable {
        part: usize,
        u: usize,
        w: usize,
        target: usize,
        count_u: usize,
        count_w: usize,
    },

    #[error("power iteration did not reach tolerance after {iterations} iterations (rho ~ {rho}, residual {residual:e})")]
    NotConverged {
        rho: f64,
        residual: f64,
        iterations: usize,
    },

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("outside hypothesis: {0}")]
    OutsideHypothesis(String),

    #[error("infeasible family parameters: {0}")]
    Infeasible(String),

    #[error("{what} {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
