use thiserror::Error;

use crate::ideal::GbStats;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ring mismatch")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),
    #[error("budget exceeded ({0})")]
    BudgetExceeded(GbStats),
    #[error("minor budget exceeded: {count} minors, limit {limit}")]
    MinorBudget { count: u128, limit: u128 },
    #[error("empty variety")]
    EmptyVariety,
    #[error("invalid chart: {0}")]
    InvalidChart(String),
}
