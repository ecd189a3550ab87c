use thiserror::Error;

use crate::partition::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("cannot parse partition part {0:?}")]
    Parse(String),
    #[error("part {index} is larger than the part before it")]
    NotDecreasing { index: usize },
    #[error("part {index} is not positive")]
    NonPositive { index: usize },
    #[error("cell {0} is not in the extended diagram")]
    CellOutOfRange(Cell),
    #[error("the empty partition has no corners")]
    EmptyPartition,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable name {name:?} is used for both {first} and {second}")]
    NameCollision { name: String, first: Cell, second: Cell },
    #[error("no name for variable {0}")]
    UnnamedVariable(Cell),
    #[error("letter naming supports at most 26 cells, partition has {0}")]
    TooManyVariables(usize),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("index {index} is outside 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SnfError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("corner ({rows},{cols}) of the rectangle is not on the border strip")]
    InvalidRectangle { rows: usize, cols: usize },
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("cofactor expansion limited to side {max}, got {side}")]
    TooLarge { side: usize, max: usize },
    #[error("geometry invariant violated: {0}")]
    Geometry(String),
    #[error("transform certificate failed: {reason}")]
    VerificationFailed {
        reason: String,
        residual: Option<Box<crate::matrix::PolyMatrix>>,
    },
}
