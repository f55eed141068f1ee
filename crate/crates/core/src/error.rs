use thiserror::Error;

/// Errors raised by the toolkit.
///
/// `Input` covers malformed data: dimension mismatches, bad indices,
/// unparsable rationals. `Axiom` covers mathematical refusals: an operation
/// was handed an object that violates one of its preconditions, and the
/// failing axiom is named together with a witness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("{check} failed: {witness}")]
    Axiom {
        check: &'static str,
        witness: String,
    },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn axiom(check: &'static str, witness: impl Into<String>) -> Self {
        Error::Axiom {
            check,
            witness: witness.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
