use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a unit: cannot raise {0} to a negative power")]
    NotAUnit(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("negative exponent in {0}; clear it with normalize_to_poly first")]
    NegativeExponent(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division of {num} by {den}")]
    InexactDivision { num: String, den: String },

    #[error("not symmetric under M -> 1/M: {0}")]
    NotSymmetric(String),

    #[error("variable {0} is not allowed here")]
    UnexpectedVariable(char),

    #[error("singular system: rank {rank} with {unknowns} unknowns")]
    Singular { rank: usize, unknowns: usize },

    #[error("inconsistent overdetermined system at row {row}")]
    Inconsistent { row: usize },

    #[error("table range exceeded: L^{0} is outside [-2, 2]")]
    TableRange(i32),

    #[error("row {row} does not fit at n = {n}; residual {residual}")]
    FitMismatch { row: String, n: i64, residual: String },

    #[error("relation row {0} has no fitted remainder")]
    Unresolved(String),

    #[error("not in the ideal; remainder {0}")]
    NotInIdeal(String),

    #[error("result is not a Laurent polynomial; offending denominator {0}")]
    NonLaurent(String),

    #[error("identity check failed for {name}: {detail}")]
    Identity { name: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
