use thiserror::Error;

/// Everything that can go wrong while building or reading loops and triple systems.
///
/// Element, row, column and point numbers carried by the variants are 1-based,
/// the same numbering used in the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is empty")]
    EmptyTable,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at row {row}, column {col} is outside 1..={order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: i64,
        order: usize,
    },
    #[error("row {0} is not a permutation")]
    RowNotPermutation(usize),
    #[error("column {0} is not a permutation")]
    ColumnNotPermutation(usize),
    #[error("element 1 is not a two-sided identity")]
    NoIdentity,
    #[error("element {index} is outside 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("bad block {block:?}: {reason}")]
    BadBlock { block: Vec<usize>, reason: &'static str },
    #[error("pair {{{0}, {1}}} is not covered by any block")]
    PairUncovered(usize, usize),
    #[error("pair {{{0}, {1}}} is covered by more than one block")]
    PairDuplicated(usize, usize),
    #[error("a triple system needs at least one point")]
    NoPoints,
    #[error("loop is not a Steiner loop")]
    NotSteiner,

    #[error("Bose modulus must be odd and at least 3, got {0}")]
    BadModulus(u64),
    #[error("7 is invertible modulo {0}, so no counterexample exists")]
    CriterionHolds(usize),

    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
