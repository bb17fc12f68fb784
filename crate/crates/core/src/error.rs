use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token `{token}` at position {position}")]
    Parse { token: String, position: usize },

    #[error("invalid normal form: {0}")]
    InvalidNormalForm(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration would have exceeded its element cap. `completed_radius`
    /// is the last radius that was fully enumerated.
    #[error("element cap {cap} exceeded after completing radius {completed_radius}")]
    ResourceCap { cap: usize, completed_radius: usize },

    /// A construction was refused because it would exceed a size limit.
    #[error("{what} exceeds the size limit {limit}")]
    SizeLimit { what: String, limit: usize },

    #[error("element not found within radius {cap}")]
    NotFound { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
