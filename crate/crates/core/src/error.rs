use crate::point::{Point, Scalar};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid search interval: p = {dim}, m = {lower}, M = {upper}")]
    InvalidInterval {
        dim: usize,
        lower: Scalar,
        upper: Scalar,
    },

    #[error("point {point} lies outside the open search interval ({lower}, {upper})^p")]
    OutsideInterval {
        point: Point,
        lower: Scalar,
        upper: Scalar,
    },

    #[error("bound {bound} lies outside the closed search interval [{lower}, {upper}]^p")]
    BoundOutsideInterval {
        bound: Point,
        lower: Scalar,
        upper: Scalar,
    },

    #[error("points {first} and {second} are comparable; the set is not stable")]
    NotStable { first: Point, second: Point },

    #[error("point {point} is weakly dominated by generator {by}")]
    Dominated { point: Point, by: Point },

    #[error("point {point} dominates generator {over}")]
    Dominating { point: Point, over: Point },

    #[error("point {point} is dominated by {by} and dominates {over}; the generator set is not stable")]
    Conflict { point: Point, by: Point, over: Point },

    #[error("general position violated: {point} shares coordinate {coord} with an existing generator")]
    GeneralPositionViolated { point: Point, coord: usize },

    #[error("bound {bound} has no defining point for coordinate {coord}")]
    EmptyDefiners { bound: Point, coord: usize },

    #[error("coordinate index {index} out of range for dimension {dim}")]
    CoordinateOutOfRange { index: usize, dim: usize },

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("oracle needs {needed} grid candidates but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("explorer contract violated: {0}")]
    ExplorerContract(String),

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("gave up after {rejections} consecutive rejections with {accepted} of {target} points accepted; try a larger K")]
    RejectionCap {
        rejections: u64,
        accepted: usize,
        target: usize,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
