use thiserror::Error;

/// A failed command, sorted by exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments, unparsable expressions or malformed input files.
    #[error("{0}")]
    Usage(String),
    /// A computation or verification that did not go through.
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<magnitude_core::Error> for CliError {
    fn from(e: magnitude_core::Error) -> Self {
        use magnitude_core::Error as E;
        match e {
            E::VertexOutOfRange { .. }
            | E::SelfLoop(_)
            | E::NotAnEdge(..)
            | E::InvalidParameter(_)
            | E::InvalidSelection(_)
            | E::Parse(_)
            | E::Io(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<magnitude_core::dsl::ParseError> for CliError {
    fn from(e: magnitude_core::dsl::ParseError) -> Self {
        CliError::Usage(format!("parse error {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
