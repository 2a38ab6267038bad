use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("partition must have at least one part")]
    EmptyPartition,

    #[error("parts must be nonincreasing: part {index} is {next}, after {prev}")]
    NotNonincreasing { index: usize, prev: u32, next: u32 },

    #[error("part {index} must be at least 1")]
    NonPositivePart { index: usize },

    #[error("compact head part {index} is {part}; head parts must be at least 2")]
    HeadPartBelowTwo { index: usize, part: u32 },

    #[error("n = {n} exceeds the formula bound {max}")]
    Overflow { n: u64, max: u64 },

    #[error("tail begins with {first_part}, which exceeds the head {head}")]
    HeadTooSmall { head: u32, first_part: u32 },

    #[error("tail sums to {actual}, expected {expected}")]
    SumMismatch { expected: u64, actual: u64 },

    #[error("inexact integer arithmetic in {context}")]
    ParityViolation { context: &'static str },

    #[error("n = {n} exceeds the oracle limit {limit}")]
    OracleLimitExceeded { n: u32, limit: u32 },

    #[error("n = {n} exceeds the Cayley matrix limit {limit}")]
    SizeLimitExceeded { n: u32, limit: u32 },

    #[error("numeric eigenvalue {value} is {residual:e} away from the nearest integer")]
    RoundingFailure { value: f64, residual: f64 },

    #[error("{family} does not cover n = {n}, lambda = {lam}")]
    OutOfFamilyRange { family: String, n: u32, lam: i64 },

    #[error("{target} is not in {set}(n = {n})")]
    NotInSet { set: &'static str, n: u32, target: i64 },

    #[error("no S1 family covers n = {n}, lambda = {lam}")]
    DispatchGap { n: u32, lam: i64 },

    #[error("theorem {theorem} requires n >= {min}, got {n}")]
    BelowTheoremRange { theorem: u8, n: u32, min: u32 },

    #[error("target {target} lies outside the segment [{lo}, {hi}] for n = {n}")]
    TargetOutOfSegment { n: u32, target: i64, lo: i64, hi: i64 },

    #[error("no head n1 realizes target {target} for n = {n}")]
    NoHeadFits { n: u32, target: i64 },

    #[error("{target} is not an eigenvalue of T_{n}")]
    NotInSpectrum { n: u32, target: i64 },

    #[error("witness for target {target} at n = {n} evaluates to {got}")]
    VerificationFailed { n: u32, target: i64, got: i64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}
