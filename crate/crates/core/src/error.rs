use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input supplied by the caller.
    #[error("input error: {0}")]
    Input(String),

    /// A root set that is not a (recognised) finite root system.
    #[error("classification error: {0}")]
    Classification(String),

    /// The algebra does not have the expected weight structure.
    #[error("structural error: {0}")]
    Structural(String),

    /// The coordinate algebra violates the closure rules the bracket needs.
    #[error("build error: {0}")]
    Build(String),

    /// Matrix brackets admit no consistent coordinate-algebra scalars.
    #[error("convention error: {0}")]
    Convention(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
