use thiserror::Error;

/// Matrix construction and transformation failures.
///
/// Coordinates are stored zero-based and displayed one-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PcmError {
    #[error("row {} has {len} entries, expected {expected}", row + 1)]
    NonSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("order {order} is below the minimum of 3")]
    OrderTooSmall { order: usize },
    #[error("entry ({},{}) = {value} is not positive", row + 1, col + 1)]
    NonPositiveEntry { row: usize, col: usize, value: f64 },
    #[error("entry ({},{}) is not finite", row + 1, col + 1)]
    NonFiniteEntry { row: usize, col: usize },
    #[error("entries ({},{})/({},{}) are not reciprocal: product {product}", row + 1, col + 1, col + 1, row + 1)]
    ReciprocityViolation {
        row: usize,
        col: usize,
        product: f64,
    },
    #[error("permutation of order {found} applied to a matrix of order {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("({},{}) is a diagonal entry", index + 1, index + 1)]
    DiagonalEntry { index: usize },
    #[error("entry ({},{}) equals 1, so its power has no direction", row + 1, col + 1)]
    UnitEntry { row: usize, col: usize },
    #[error("entry ({},{}) is outside a matrix of order {order}", row + 1, col + 1)]
    IndexOutOfRange {
        row: usize,
        col: usize,
        order: usize,
    },
    #[error("exponent {value} must be positive and finite")]
    InvalidExponent { value: f64 },
    #[error("mapping is not a bijection")]
    NotAPermutation,
}

/// An index that has no value at the given matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("undefined: every log-entry is zero, so the normalising denominator vanishes")]
    ZeroDenominator,
}
