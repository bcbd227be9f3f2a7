use serde::Serialize;

use crate::action::{ActionError, PartitionError};
use crate::corpus::CorpusError;
use crate::function_space::FunctionError;
use crate::group::GroupError;
use crate::res_ind::ResIndError;

/// Any failure surfaced by the command-line layer.
///
/// Serializes to a flat JSON object whose `error` field names the violated
/// invariant and whose other fields carry the witness indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(untagged)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error(transparent)]
    ResInd(#[from] ResIndError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Input(#[from] InputError),
}

/// Input that cannot be read or does not match a schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "error")]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error in {path}: {message}")]
    ParseError { path: String, message: String },
    #[error("invalid input: {message}")]
    Schema { message: String },
}

impl Error {
    /// Process exit code: 3 for unreadable or malformed input, 2 for input
    /// that parses but violates an invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(InputError::Io { .. } | InputError::ParseError { .. }) => 3,
            _ => 2,
        }
    }
}
