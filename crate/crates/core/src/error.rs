use thiserror::Error;

use crate::group::ElementId;

/// Which line of a Cayley table failed the Latin-square check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

/// First violated group axiom found while validating a raw table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row},{col}) = {value} is outside [0, {order})")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("element 0 is not a two-sided identity (fails at {0})")]
    NotIdentity(ElementId),
    #[error("{line} {index} repeats element {value}")]
    NotLatin { line: Line, index: usize, value: ElementId },
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(ElementId, ElementId, ElementId),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(ElementId),
    #[error("{got} labels supplied for a group of order {order}")]
    LabelCount { got: usize, order: usize },
}

/// Failure kinds reported by the presentation parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("{0}")]
    Syntax(String),
    #[error("undeclared generator '{0}'")]
    UndeclaredGenerator(char),
}

/// A presentation parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("coset budget of {0} exceeded")]
    CosetBudgetExceeded(usize),
    #[error("enumerated order {found} differs from expected order {expected}")]
    OrderMismatch { found: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("cyclic group order must be at least 1, got {0}")]
    InvalidOrder(usize),
    #[error("map is not an automorphism of the group of order {order}")]
    NotAutomorphism { order: usize },
    #[error("action needs {expected} automorphisms, got {got}")]
    ActionSize { expected: usize, got: usize },
    #[error("action is not a homomorphism: action[{0}*{1}] != action[{0}] o action[{1}]")]
    ActionNotHomomorphism(ElementId, ElementId),
}

/// Every error the library can produce.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("order {0} is outside the supported range")]
    OrderOutOfRange(usize),
    #[error("malformed group file: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
