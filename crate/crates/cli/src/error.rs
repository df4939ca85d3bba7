use serde_json::{json, Value};
use simpconf_core::Error as CoreError;
use simpconf_core::RegularityWitness;
use thiserror::Error;

/// Failure of a command, carrying its process exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed documents, unknown operations, missing arguments.
    #[error("{0}")]
    Schema(String),
    /// A mathematical precondition failed (non-regular quotient, A not a
    /// subcomplex, a map that is not simplicial, ...).
    #[error("{message}")]
    Precondition { message: String, witness: Option<RegularityWitness> },
    #[error("{0}")]
    Io(String),
    #[error("simplex count {count} exceeds the cap of {cap} (SIMPCONF_MAX_SIMPLICES)")]
    TooLarge { count: u128, cap: u128 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Precondition { .. } => 3,
            CliError::Io(_) => 4,
            CliError::TooLarge { .. } => 5,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Schema(_) => "schema",
            CliError::Precondition { .. } => "precondition",
            CliError::Io(_) => "io",
            CliError::TooLarge { .. } => "too-large",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({ "error": self.kind(), "message": self.to_string(), "exit": self.exit_code() });
        if let CliError::Precondition { witness: Some(w), .. } = self {
            out["witness"] = witness_json(w);
        }
        out
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        CliError::Precondition { message: message.into(), witness: None }
    }
}

pub fn witness_json(w: &RegularityWitness) -> Value {
    let names = |ls: &[simpconf_core::VertexLabel]| ls.iter().map(|l| l.to_string()).collect::<Vec<_>>();
    json!({ "simplex": names(&w.simplex), "elements": w.elements, "image": names(&w.image) })
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let message = e.to_string();
        match e {
            CoreError::NotRegular(w) => CliError::Precondition { message, witness: Some(w) },
            CoreError::TooLarge { count, cap } => CliError::TooLarge { count, cap },
            CoreError::NotSubcomplex(_)
            | CoreError::NotSimplicial { .. }
            | CoreError::NotAGroup(_)
            | CoreError::CoverIncomplete(_) => CliError::precondition(message),
            CoreError::InvalidAtom(_)
            | CoreError::UnknownLabel(_)
            | CoreError::DuplicateVertex(_)
            | CoreError::DuplicateInSimplex(_)
            | CoreError::EmptySimplex
            | CoreError::ZeroPower
            | CoreError::MalformedTuple(..)
            | CoreError::UnknownSimplex(_)
            | CoreError::ActionMismatch(_)
            | CoreError::NotBijective(_)
            | CoreError::Document(_) => CliError::Schema(message),
        }
    }
}
