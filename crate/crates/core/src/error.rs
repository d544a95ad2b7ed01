use thiserror::Error;

/// Failures raised by the library.
///
/// `Config` covers bad root-system or lattice/prime combinations, `Domain`
/// covers inputs outside an operation's domain (non-dominant weights,
/// characters that are not Weyl-group invariant, ...).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("index {index} out of range (limit {limit})")]
    Index { index: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn config<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Config(msg.into()))
}
