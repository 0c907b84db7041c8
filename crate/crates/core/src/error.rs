use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("multiplication table is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: String, y: String, z: String },
    #[error("element index {index} is out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("set over a universe of {found} elements used with a group of order {expected}")]
    GroupMismatch { expected: usize, found: usize },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("set is not normal: {by}^-1 * {element} * {by} = {image} lies outside it")]
    NotNormal {
        element: String,
        by: String,
        image: String,
    },
    #[error("connection set contains the identity (enable allow_identity to permit it)")]
    IdentityInConnectionSet,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("containment violated: {0}")]
    NotContained(String),
    #[error("search bound exceeded: {0}")]
    SearchBound(String),
}
