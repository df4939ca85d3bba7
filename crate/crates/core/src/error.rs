use thiserror::Error;

use crate::label::VertexLabel;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid atom label {0:?}: atoms must be nonempty and avoid the characters (){{}}[],|")]
    InvalidAtom(String),
    #[error("unknown vertex label {0}")]
    UnknownLabel(VertexLabel),
    #[error("vertex {0} listed twice in the vertex order")]
    DuplicateVertex(VertexLabel),
    #[error("vertex {0} occurs twice in one simplex")]
    DuplicateInSimplex(VertexLabel),
    #[error("empty simplex")]
    EmptySimplex,
    #[error("power exponent must be positive")]
    ZeroPower,
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("malformed tuple {0}: expected {1} coordinates")]
    MalformedTuple(VertexLabel, usize),
    #[error("unknown simplex {0}")]
    UnknownSimplex(String),
    #[error("action does not match the complex: {0}")]
    ActionMismatch(String),
    #[error("map {name} is not simplicial: image of {simplex} is not a simplex")]
    NotSimplicial { name: String, simplex: String },
    #[error("map {0} is not a bijection on the vertices")]
    NotBijective(String),
    #[error("element list is not a group: {0}")]
    NotAGroup(String),
    #[error("action is not regular: {0}")]
    NotRegular(crate::actions::RegularityWitness),
    #[error("cover is incomplete: simplex {0} lies in no part")]
    CoverIncomplete(String),
    #[error("simplex count {count} exceeds the cap of {cap}")]
    TooLarge { count: u128, cap: u128 },
    #[error("document error: {0}")]
    Document(String),
}
