use crate::family::{Kind, Violation};
use crate::poly::PolyError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid family `{name}`: {}", join(violations))]
    InvalidFamily {
        name: String,
        violations: Vec<Violation>,
    },
    #[error("`{family}` is of {found}, expected {expected}")]
    WrongKind {
        family: String,
        expected: Kind,
        found: Kind,
    },
    #[error("`{0}` and `{1}` are not an equivalent Fibonacci/Lucas pair")]
    NotEquivalent(String, String),
    #[error("no Lucas-type family shares d and g with `{0}`")]
    NoValidEquivalent(String),
    #[error("index precondition violated: {0}")]
    IndexOrder(String),
    #[error("bad divisor: {0}")]
    BadDivisor(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("degenerate instance: {0}")]
    Degenerate(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown table `{0}` (expected 3, 4 or 5)")]
    BadTable(String),
    #[error("index {index} exceeds the cap of {cap}")]
    IndexTooLarge { index: usize, cap: usize },
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
