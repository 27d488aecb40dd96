use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term is not invertible")]
    NonInvertibleConstant,
    #[error("logarithm requires constant term 1")]
    LogConstantNotOne,
    #[error("exponential requires zero constant term")]
    ExpConstantNonzero,
    #[error("series order {actual} is too small, need at least {required}")]
    OrderTooSmall { required: usize, actual: usize },
    #[error("series is not divisible by x^{0}")]
    NotDivisibleByX(usize),
    #[error("polynomial of degree {degree} cannot be reflected at degree {bound}")]
    DegreeTooLarge { degree: u32, bound: u32 },
    #[error("formula has grade {formula:?} but Chern numbers have dimension {dimension}")]
    GradeMismatch { formula: Option<u32>, dimension: u32 },
    #[error("depth {depth} out of range for dimension {dimension}")]
    DepthOutOfRange { depth: u32, dimension: u32 },
    #[error("partition {partition} has weight {weight}, expected {expected}")]
    PartitionWeight { partition: String, weight: u32, expected: u32 },
    #[error("malformed partition key {0:?}")]
    MalformedPartition(String),
    #[error("diamond shape must be (n+1)x(n+1): {0}")]
    MalformedDiamond(String),
    #[error("Betti vector has length {actual}, expected {expected}")]
    BettiLength { expected: usize, actual: usize },
    #[error("Betti vector is not Poincare symmetric at index {0}")]
    NotPoincareSymmetric(usize),
    #[error("complex dimension {0} must be even")]
    OddDimension(u32),
    #[error("dimension mismatch: {what} has dimension {found}, expected {expected}")]
    DimensionMismatch { what: &'static str, expected: u32, found: u32 },
    #[error("fixed point {point} has a zero weight at slot {slot}")]
    ZeroWeight { point: usize, slot: usize },
    #[error("fixed point {point} carries {found} weights, expected {expected}")]
    WeightCount { point: usize, expected: u32, found: usize },
    #[error("fixed point {point} has index {index} outside 0..={dimension}")]
    IndexOutOfRange { point: usize, index: u32, dimension: u32 },
    #[error("fixed point {point}: index {given} disagrees with {counted} negative weights")]
    IndexWeightMismatch { point: usize, given: u32, counted: u32 },
    #[error("fixed-point set must be nonempty")]
    NoFixedPoints,
}
